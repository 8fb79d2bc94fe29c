mod common;

use common::{planar_by_kuratowski, random_graph};
use crossings::graph::{
    build_elementary, cartesian_product, Elementary, Graph,
};
use crossings::planarity::{check_planarity, faces_of, is_planar, EmbeddingError, Planarity};
use proptest::prelude::*;

fn complete(n: usize) -> Graph {
    build_elementary(Elementary::Complete, n, 0).unwrap()
}

#[test]
fn classifies_the_classics() {
    assert!(is_planar(&complete(4)));
    assert!(!is_planar(&complete(5)));
    assert!(!is_planar(&complete(6)));
    let k33 = build_elementary(Elementary::CompleteBipartite, 3, 3).unwrap();
    assert!(!is_planar(&k33));
    let k23 = build_elementary(Elementary::CompleteBipartite, 2, 3).unwrap();
    assert!(is_planar(&k23));
}

#[test]
fn petersen_graph_is_not_planar() {
    let petersen = Graph::from_edges(
        10,
        &[
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
            (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
        ],
    )
    .unwrap();
    assert!(!is_planar(&petersen));
}

#[test]
fn grids_and_prisms_are_planar_with_valid_embeddings() {
    for (g, h) in [
        (build_elementary(Elementary::Path, 3, 0).unwrap(), build_elementary(Elementary::Path, 3, 0).unwrap()),
        (build_elementary(Elementary::Cycle, 4, 0).unwrap(), build_elementary(Elementary::Path, 1, 0).unwrap()),
        (build_elementary(Elementary::Cycle, 5, 0).unwrap(), build_elementary(Elementary::Path, 2, 0).unwrap()),
    ] {
        let p = cartesian_product(&g, &h);
        match check_planarity(&p) {
            Planarity::Planar(emb) => {
                // faces_of validates the rotation against Euler's formula.
                let faces = faces_of(&p, &emb).unwrap();
                assert_eq!(p.order() + faces.len(), p.edge_count() + 2);
            }
            Planarity::NonPlanar => panic!("{} should be planar", p),
        }
    }
}

#[test]
fn cube_embedding_has_six_faces() {
    let k2 = build_elementary(Elementary::Path, 1, 0).unwrap();
    let c4 = build_elementary(Elementary::Cycle, 4, 0).unwrap();
    let cube = cartesian_product(&c4, &k2);
    let Planarity::Planar(emb) = check_planarity(&cube) else {
        panic!("cube is planar");
    };
    let faces = faces_of(&cube, &emb).unwrap();
    assert_eq!(faces.len(), 6);
    // In the cube every face is a quadrilateral.
    assert!(faces.iter().all(|f| f.len() == 4));
}

#[test]
fn trees_and_trivial_graphs_are_planar() {
    assert!(is_planar(&Graph::new(0)));
    assert!(is_planar(&Graph::new(1)));
    assert!(is_planar(&build_elementary(Elementary::Star, 9, 0).unwrap()));
    let Planarity::Planar(emb) = check_planarity(&Graph::new(1)) else {
        panic!();
    };
    assert_eq!(faces_of(&Graph::new(1), &emb).unwrap().len(), 1);
}

#[test]
fn disconnected_graphs_are_tested_per_component() {
    // Two disjoint K4s: planar.
    let mut g = Graph::new(8);
    for base in [0, 4] {
        for u in 0..4 {
            for v in (u + 1)..4 {
                g.add_edge(base + u, base + v).unwrap();
            }
        }
    }
    assert!(is_planar(&g));
    // K4 plus a disjoint K5: not planar.
    let mut h = Graph::new(9);
    for u in 0..4 {
        for v in (u + 1)..4 {
            h.add_edge(u, v).unwrap();
        }
    }
    for u in 4..9 {
        for v in (u + 1)..9 {
            h.add_edge(u, v).unwrap();
        }
    }
    assert!(!is_planar(&h));
    // Face extraction refuses disconnected graphs.
    let Planarity::Planar(emb) = check_planarity(&g) else {
        panic!();
    };
    assert_eq!(faces_of(&g, &emb), Err(EmbeddingError::Disconnected));
}

#[test]
fn dense_graphs_fail_the_edge_bound() {
    // K7 has 21 > 3 * 7 - 6 = 15 edges.
    assert!(!is_planar(&complete(7)));
}

#[test]
fn matches_kuratowski_oracle_on_all_graphs_up_to_order_5() {
    // Exhaustive: every graph on 5 labelled vertices.
    let pairs: Vec<(usize, usize)> = (0..5)
        .flat_map(|u| ((u + 1)..5).map(move |v| (u, v)))
        .collect();
    for mask in 0u32..(1 << pairs.len()) {
        let mut g = Graph::new(5);
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask & (1 << i) != 0 {
                g.add_edge(u, v).unwrap();
            }
        }
        assert_eq!(is_planar(&g), planar_by_kuratowski(&g), "mask {mask}");
    }
}

#[test]
fn matches_kuratowski_oracle_on_random_order_7_graphs() {
    let mut seed = 0xfeed_beef_u64;
    for i in 0..400 {
        let g = random_graph(7, 1, 2, &mut seed);
        assert_eq!(is_planar(&g), planar_by_kuratowski(&g), "case {i}");
    }
}

#[test]
fn planar_embeddings_satisfy_euler_on_random_connected_graphs() {
    let mut seed = 0x1234_5678_u64;
    let mut checked = 0;
    for _ in 0..2000 {
        let g = random_graph(8, 2, 5, &mut seed);
        if !g.is_connected() {
            continue;
        }
        if let Planarity::Planar(emb) = check_planarity(&g) {
            faces_of(&g, &emb).expect("valid embedding");
            checked += 1;
        }
    }
    assert!(checked > 100, "only {checked} planar samples");
}

proptest! {
    #[test]
    fn prop_agrees_with_oracle_on_order_6(edges in proptest::collection::vec((0usize..6, 0usize..6), 0..15)) {
        let mut g = Graph::new(6);
        for (u, v) in edges {
            if u != v {
                g.add_edge(u, v).unwrap();
            }
        }
        prop_assert_eq!(is_planar(&g), planar_by_kuratowski(&g));
    }

    #[test]
    fn prop_planar_embedding_counts_faces_consistently(edges in proptest::collection::vec((0usize..7, 0usize..7), 0..14)) {
        let mut g = Graph::new(7);
        for (u, v) in edges {
            if u != v {
                g.add_edge(u, v).unwrap();
            }
        }
        if g.is_connected() {
            if let Planarity::Planar(emb) = check_planarity(&g) {
                let faces = faces_of(&g, &emb).unwrap();
                prop_assert_eq!(g.order() + faces.len(), g.edge_count() + 2);
            }
        }
    }
}
