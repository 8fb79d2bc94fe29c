use crossings::atlas::bundled_atlas;
use crossings::families::{
    expected_crossings, generate_family_drawing, list_supported_families, FamilyError, Partner,
};
use crossings::geometry::{check_good_drawing, count_crossings, drawing_crossings, planarize_drawing};
use crossings::graph::{build_elementary, cartesian_product, Elementary};
use crossings::planarity::is_planar;

#[test]
fn exactly_ten_supported_families() {
    let families = list_supported_families();
    assert_eq!(families.len(), 10);
    let cycles = families.iter().filter(|f| f.partner == Partner::Cycle).count();
    let paths = families.iter().filter(|f| f.partner == Partner::Path).count();
    let stars = families.iter().filter(|f| f.partner == Partner::Star).count();
    assert_eq!((paths, cycles, stars), (2, 6, 2));
}

#[test]
fn drawing_graph_is_the_cartesian_product() {
    let atlas = bundled_atlas();
    let d = generate_family_drawing(63, Partner::Cycle, 5, atlas).unwrap();
    let g = atlas.get(&(6, 63)).unwrap();
    let c5 = build_elementary(Elementary::Cycle, 5, 0).unwrap();
    assert_eq!(d.graph, cartesian_product(g, &c5));

    let d = generate_family_drawing(62, Partner::Star, 3, atlas).unwrap();
    let s3 = build_elementary(Elementary::Star, 3, 0).unwrap();
    assert_eq!(d.graph, cartesian_product(atlas.get(&(6, 62)).unwrap(), &s3));
}

#[test]
fn crossing_counts_match_the_formulas_for_small_n() {
    let atlas = bundled_atlas();
    for family in list_supported_families() {
        for n in family.min_n..family.min_n + 4 {
            let d = generate_family_drawing(family.atlas_index, family.partner, n, atlas)
                .unwrap_or_else(|e| {
                    panic!("6.{} x {}({n}): {e}", family.atlas_index, family.partner.as_str())
                });
            let count = count_crossings(&d).unwrap() as u64;
            let expected = expected_crossings(family.atlas_index, family.partner, n).unwrap();
            assert_eq!(
                count, expected,
                "6.{} x {}({n})",
                family.atlas_index,
                family.partner.as_str()
            );
            let report = check_good_drawing(&d).unwrap();
            assert!(report.is_good(), "6.{} x {}({n}) is not a good drawing", family.atlas_index, family.partner.as_str());
        }
    }
}

#[test]
fn documented_example_values() {
    let atlas = bundled_atlas();
    let cases = [
        (63, Partner::Cycle, 4, 8),
        (110, Partner::Path, 1, 2),
        (62, Partner::Star, 4, 14),
        (121, Partner::Star, 3, 18),
    ];
    for (index, partner, n, expected) in cases {
        let d = generate_family_drawing(index, partner, n, atlas).unwrap();
        assert_eq!(count_crossings(&d).unwrap(), expected, "6.{index}");
    }
}

#[test]
fn cycle_family_crossings_are_evenly_distributed_over_copies() {
    let atlas = bundled_atlas();
    for (index, per_copy) in [(63, 2), (64, 2), (75, 2), (77, 2), (92, 3), (98, 3)] {
        let n = 5;
        let d = generate_family_drawing(index, Partner::Cycle, n, atlas).unwrap();
        let edge_list = d.graph.edge_list();
        // Each crossing is between a within-copy chord and a between-copy
        // edge; attribute it to the chord's copy.
        let mut per_copy_counts = vec![0usize; n];
        for crossing in drawing_crossings(&d).unwrap() {
            let (e1, e2) = crossing.edges;
            let copy_of = |e: usize| {
                let (u, v) = edge_list[e];
                if u % n == v % n {
                    Some(u % n)
                } else {
                    None
                }
            };
            let copy = copy_of(e1).or_else(|| copy_of(e2)).expect("one edge within a copy");
            per_copy_counts[copy] += 1;
        }
        assert_eq!(per_copy_counts, vec![per_copy; n], "6.{index}");
    }
}

#[test]
fn planarization_of_family_drawings_is_planar() {
    let atlas = bundled_atlas();
    let d = generate_family_drawing(92, Partner::Cycle, 3, atlas).unwrap();
    let (planarized, crossing_vertices) = planarize_drawing(&d).unwrap();
    assert_eq!(crossing_vertices.len(), 9);
    assert_eq!(planarized.order(), d.graph.order() + 9);
    assert!(is_planar(&planarized));

    let d = generate_family_drawing(137, Partner::Path, 2, atlas).unwrap();
    let (planarized, crossing_vertices) = planarize_drawing(&d).unwrap();
    assert_eq!(crossing_vertices.len(), 8);
    assert!(is_planar(&planarized));
}

#[test]
fn rejects_parameters_below_the_family_minimum() {
    let atlas = bundled_atlas();
    assert_eq!(
        generate_family_drawing(63, Partner::Cycle, 2, atlas).unwrap_err(),
        FamilyError::ParameterTooSmall { index: 63, min_n: 3, n: 2 }
    );
    assert_eq!(
        generate_family_drawing(110, Partner::Path, 0, atlas).unwrap_err(),
        FamilyError::ParameterTooSmall { index: 110, min_n: 1, n: 0 }
    );
}

#[test]
fn rejects_unsupported_combinations() {
    let atlas = bundled_atlas();
    assert!(matches!(
        generate_family_drawing(63, Partner::Path, 3, atlas),
        Err(FamilyError::Unsupported { .. })
    ));
    assert!(matches!(
        generate_family_drawing(59, Partner::Cycle, 3, atlas),
        Err(FamilyError::Unsupported { .. })
    ));
}

#[test]
fn larger_parameters_still_match_formulas() {
    let atlas = bundled_atlas();
    for (index, partner, n) in [
        (77, Partner::Cycle, 12),
        (98, Partner::Cycle, 11),
        (110, Partner::Path, 9),
        (137, Partner::Path, 8),
        (62, Partner::Star, 9),
        (121, Partner::Star, 8),
    ] {
        let d = generate_family_drawing(index, partner, n, atlas).unwrap();
        assert_eq!(
            count_crossings(&d).unwrap() as u64,
            expected_crossings(index, partner, n).unwrap(),
            "6.{index} at n = {n}"
        );
        assert!(check_good_drawing(&d).unwrap().is_good());
    }
}
