use crossings::atlas::{
    bundled_atlas, key_string, load_atlas, parse_key, validate_atlas_relations, AtlasError,
    RelationStatus, REQUIRED_KEYS,
};
use crossings::graph::{build_elementary, is_isomorphic, Elementary};

#[test]
fn bundled_atlas_loads_and_has_required_keys() {
    let atlas = bundled_atlas();
    assert_eq!(atlas.len(), 72);
    for &key in REQUIRED_KEYS {
        assert!(atlas.contains_key(&key), "missing {}", key_string(key));
    }
    // Every entry's declared order matches its graph.
    for (&(order, _), g) in atlas.iter() {
        assert_eq!(g.order(), order as usize);
    }
}

#[test]
fn known_atlas_entries_have_expected_structure() {
    let atlas = bundled_atlas();
    // 4.6 is K4: the unique 4-vertex graph with 6 edges.
    let k4 = build_elementary(Elementary::Complete, 4, 0).unwrap();
    assert!(is_isomorphic(&atlas[&(4, 6)], &k4));
    // 4.2 is the path on 4 vertices; 4.3 is a triangle with a pendant edge.
    let p3 = build_elementary(Elementary::Path, 3, 0).unwrap();
    assert!(is_isomorphic(&atlas[&(4, 2)], &p3));
    assert_eq!(atlas[&(4, 3)].edge_count(), 4);
    assert_eq!(atlas[&(4, 3)].degree_sequence(), vec![3, 2, 2, 1]);
    // Harary indexing sorts by edge count: within order 6 the edge counts
    // are non-decreasing in the index.
    let mut last = 0;
    for (&(order, _), g) in atlas.iter() {
        if order == 6 {
            assert!(g.edge_count() >= last);
            last = g.edge_count();
        }
    }
}

#[test]
fn relations_all_pass_on_bundled_atlas() {
    let report = validate_atlas_relations(bundled_atlas());
    assert_eq!(report.relations.len(), 16);
    for rel in &report.relations {
        assert_eq!(rel.status(), RelationStatus::Pass, "relation {}", rel.name);
    }
    assert!(report.all_pass());
    // The sandwich relation carries eight pairwise checks.
    let sandwich = &report.relations[0];
    assert_eq!(sandwich.pairs.len(), 8);
}

#[test]
fn mutated_atlas_is_detected() {
    // Swap two entries of different structure; some relation must break.
    let mut atlas = bundled_atlas().clone();
    let a = atlas[&(6, 40)].clone();
    let b = atlas[&(6, 113)].clone();
    atlas.insert((6, 40), b);
    atlas.insert((6, 113), a);
    let report = validate_atlas_relations(&atlas);
    assert!(!report.all_pass());
}

#[test]
fn load_atlas_parses_comments_and_rejects_junk() {
    let ok = "# comment\n4.1 Cs # trailing comment\n";
    // Parsing succeeds per line, but required keys are enforced.
    match load_atlas(ok) {
        Err(AtlasError::MissingKey { .. }) => {}
        other => panic!("expected MissingKey, got {other:?}"),
    }
    let dup = "4.1 Cs\n4.1 Cs\n";
    assert_eq!(
        load_atlas(dup),
        Err(AtlasError::DuplicateKey { line: 2, order: 4, index: 1 })
    );
    let malformed = "4-1 Cs\n";
    assert!(matches!(load_atlas(malformed), Err(AtlasError::MalformedLine { line: 1, .. })));
    let bad_g6 = "4.1 C\n";
    assert!(matches!(load_atlas(bad_g6), Err(AtlasError::BadGraph6 { line: 1, .. })));
    let wrong_order = "5.1 Cs\n";
    assert!(matches!(load_atlas(wrong_order), Err(AtlasError::OrderMismatch { .. })));
}

#[test]
fn key_round_trip() {
    assert_eq!(parse_key("6.113"), Some((6, 113)));
    assert_eq!(parse_key(&key_string((4, 3))), Some((4, 3)));
    assert_eq!(parse_key("6113"), None);
}
