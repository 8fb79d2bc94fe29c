use crossings::graph::{build_elementary, Elementary, Graph};
use crossings::graph6::{encode_graph6, parse_graph6, Graph6Error};
use proptest::prelude::*;

#[test]
fn parses_known_strings() {
    // "@" is the one-vertex graph.
    let k1 = parse_graph6("@").unwrap();
    assert_eq!(k1.order(), 1);
    assert_eq!(k1.edge_count(), 0);
    // "C~" is K4.
    let k4 = parse_graph6("C~").unwrap();
    assert_eq!(k4, build_elementary(Elementary::Complete, 4, 0).unwrap());
    // "D~{" is K5.
    let k5 = parse_graph6("D~{").unwrap();
    assert_eq!(k5, build_elementary(Elementary::Complete, 5, 0).unwrap());
}

#[test]
fn accepts_optional_header() {
    let g = parse_graph6(">>graph6<<C~").unwrap();
    assert_eq!(g.order(), 4);
    assert_eq!(g.edge_count(), 6);
}

#[test]
fn encodes_known_graphs() {
    let k4 = build_elementary(Elementary::Complete, 4, 0).unwrap();
    assert_eq!(encode_graph6(&k4).unwrap(), "C~");
    let k5 = build_elementary(Elementary::Complete, 5, 0).unwrap();
    assert_eq!(encode_graph6(&k5).unwrap(), "D~{");
    assert_eq!(encode_graph6(&Graph::new(1)).unwrap(), "@");
}

#[test]
fn reports_errors_with_offsets() {
    assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
    // Byte 1 is below the printable graph6 range.
    assert_eq!(
        parse_graph6("C 1"),
        Err(Graph6Error::BadCharacter { offset: 1, byte: b' ' })
    );
    // K4 needs one adjacency byte, none given.
    assert!(matches!(parse_graph6("C"), Err(Graph6Error::Truncated { .. })));
    // One byte too many.
    assert_eq!(
        parse_graph6("C~~"),
        Err(Graph6Error::TrailingGarbage { offset: 2 })
    );
    // The offset accounts for a stripped header.
    assert_eq!(
        parse_graph6(">>graph6<<C~~"),
        Err(Graph6Error::TrailingGarbage { offset: 12 })
    );
}

#[test]
fn encoder_rejects_large_graphs() {
    assert_eq!(
        encode_graph6(&Graph::new(63)),
        Err(Graph6Error::OrderTooLarge { order: 63 })
    );
    assert!(encode_graph6(&Graph::new(62)).is_ok());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]
    #[test]
    fn prop_round_trip(order in 0usize..20, edges in proptest::collection::vec((0usize..20, 0usize..20), 0..60)) {
        let mut g = Graph::new(order);
        for (u, v) in edges {
            if u != v && u < order && v < order {
                g.add_edge(u, v).unwrap();
            }
        }
        let encoded = encode_graph6(&g).unwrap();
        let decoded = parse_graph6(&encoded).unwrap();
        prop_assert_eq!(decoded, g);
    }
}
