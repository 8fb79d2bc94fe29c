use crossings::geometry::{
    check_good_drawing, coord, count_crossings, drawing_from_json, drawing_to_json, export_svg,
    frac, planarize_drawing, validate_drawing, GeometryError, Point, PolylineDrawing,
};
use crossings::graph::{build_elementary, Elementary, Graph};
use crossings::planarity::is_planar;
use proptest::prelude::*;

fn pt(x: i128, y: i128) -> Point {
    Point::new(coord(x), coord(y))
}

/// K_n drawn with vertices in convex position on the parabola (2^i, 4^i).
fn convex_complete(n: usize) -> PolylineDrawing {
    let g = build_elementary(Elementary::Complete, n, 0).unwrap();
    let points: Vec<Point> = (0..n as u32).map(|i| pt(2i128.pow(i), 4i128.pow(i))).collect();
    PolylineDrawing::straight_line(g, points).unwrap()
}

fn choose4(n: usize) -> usize {
    if n < 4 {
        0
    } else {
        n * (n - 1) * (n - 2) * (n - 3) / 24
    }
}

#[test]
fn convex_complete_graphs_have_binomial_crossings() {
    // In convex position two chords cross iff their endpoints interleave,
    // so K_n has exactly C(n, 4) crossings.
    for n in 2..=7 {
        let d = convex_complete(n);
        validate_drawing(&d).unwrap();
        assert_eq!(count_crossings(&d).unwrap(), choose4(n), "K{n}");
        let report = check_good_drawing(&d).unwrap();
        assert!(report.is_good(), "K{n} convex drawing is good");
    }
}

#[test]
fn triangle_with_shared_endpoints_is_crossing_free() {
    let g = build_elementary(Elementary::Cycle, 3, 0).unwrap();
    let d = PolylineDrawing::straight_line(g, vec![pt(0, 0), pt(4, 0), pt(0, 3)]).unwrap();
    validate_drawing(&d).unwrap();
    assert_eq!(count_crossings(&d).unwrap(), 0);
}

#[test]
fn planarize_square_with_diagonals() {
    // K4 drawn on a square: the two diagonals cross once.
    let g = build_elementary(Elementary::Complete, 4, 0).unwrap();
    let d = PolylineDrawing::straight_line(g, vec![pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)])
        .unwrap();
    assert_eq!(count_crossings(&d).unwrap(), 1);
    let (planar, dummies) = planarize_drawing(&d).unwrap();
    assert_eq!(planar.order(), 5);
    assert_eq!(dummies.len(), 1);
    assert_eq!(planar.degree(dummies[0].vertex), 4);
    // The crossing pair is the two diagonals 0-2 and 1-3 (edge indices 1, 3
    // in sorted edge order).
    assert_eq!(dummies[0].edges, (1, 4));
    assert!(is_planar(&planar));
    // Edge count grows by two per crossing.
    assert_eq!(planar.edge_count(), d.graph.edge_count() + 2);
}

#[test]
fn planarize_without_crossings_returns_same_graph() {
    let g = build_elementary(Elementary::Cycle, 4, 0).unwrap();
    let d = PolylineDrawing::straight_line(
        g.clone(),
        vec![pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)],
    )
    .unwrap();
    let (planar, dummies) = planarize_drawing(&d).unwrap();
    assert!(dummies.is_empty());
    assert_eq!(planar, g);
}

#[test]
fn planarization_of_convex_k5_is_planar() {
    let d = convex_complete(5);
    let (planar, dummies) = planarize_drawing(&d).unwrap();
    assert_eq!(dummies.len(), 5);
    assert_eq!(planar.order(), 10);
    assert!(is_planar(&planar));
}

#[test]
fn detects_vertex_on_segment() {
    // Vertex 2 sits in the middle of edge 0-1.
    let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
    let d = PolylineDrawing::straight_line(g, vec![pt(0, 0), pt(4, 0), pt(2, 0)]).unwrap();
    assert!(matches!(
        validate_drawing(&d),
        Err(GeometryError::VertexOnSegment { vertex: 2, .. })
    ));
}

#[test]
fn detects_collinear_overlap() {
    let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
    let d = PolylineDrawing::straight_line(
        g,
        vec![pt(0, 0), pt(4, 0), pt(1, 0), pt(3, 0)],
    )
    .unwrap();
    assert!(matches!(
        validate_drawing(&d),
        Err(GeometryError::CollinearOverlap { .. })
            | Err(GeometryError::VertexOnSegment { .. })
    ));
}

#[test]
fn detects_non_transversal_touch() {
    // Edge 2-3 bends so its bend point lands on edge 0-1's interior.
    let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
    let d = PolylineDrawing::new(
        g,
        vec![pt(0, 0), pt(4, 0), pt(1, 2), pt(3, 2)],
        vec![
            vec![pt(0, 0), pt(4, 0)],
            vec![pt(1, 2), pt(2, 0), pt(3, 2)],
        ],
    )
    .unwrap();
    assert!(matches!(
        validate_drawing(&d),
        Err(GeometryError::NonTransversalContact { .. })
    ));
}

#[test]
fn detects_concurrent_crossings() {
    // Three pairwise independent edges through the origin.
    let g = Graph::from_edges(6, &[(0, 1), (2, 3), (4, 5)]).unwrap();
    let d = PolylineDrawing::straight_line(
        g,
        vec![pt(-2, 0), pt(2, 0), pt(0, -2), pt(0, 2), pt(-2, -2), pt(2, 2)],
    )
    .unwrap();
    assert!(matches!(
        validate_drawing(&d),
        Err(GeometryError::ConcurrentCrossings { .. })
    ));
}

#[test]
fn detects_coincident_vertices_and_zero_segments() {
    let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
    let d = PolylineDrawing::straight_line(g.clone(), vec![pt(1, 1), pt(1, 1)]);
    assert!(matches!(d, Err(GeometryError::ZeroLengthSegment { .. })));
    let g2 = Graph::from_edges(3, &[(0, 1)]).unwrap();
    let d2 = PolylineDrawing::straight_line(g2, vec![pt(0, 0), pt(1, 0), pt(0, 0)]).unwrap();
    assert!(matches!(
        validate_drawing(&d2),
        Err(GeometryError::CoincidentVertices { a: 0, b: 2 })
    ));
}

#[test]
fn good_drawing_flags_self_crossing() {
    // A single edge routed so it crosses itself.
    let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
    let d = PolylineDrawing::new(
        g,
        vec![pt(0, 0), pt(4, 1)],
        vec![vec![pt(0, 0), pt(4, 4), pt(2, 4), pt(2, 0), pt(4, 1)]],
    )
    .unwrap();
    let report = check_good_drawing(&d).unwrap();
    assert!(!report.no_self_crossings);
    assert!(matches!(
        planarize_drawing(&d),
        Err(GeometryError::NotGoodDrawing { .. })
    ));
}

#[test]
fn good_drawing_flags_adjacent_crossing() {
    // Edges 0-1 and 0-2 share vertex 0 and are routed to cross.
    let g = Graph::from_edges(3, &[(0, 1), (0, 2)]).unwrap();
    let d = PolylineDrawing::new(
        g,
        vec![pt(0, 0), pt(4, 0), pt(4, 2)],
        vec![
            vec![pt(0, 0), pt(4, 0)],
            vec![pt(0, 0), pt(2, -1), pt(3, 1), pt(4, 2)],
        ],
    )
    .unwrap();
    let report = check_good_drawing(&d).unwrap();
    assert!(!report.no_adjacent_crossings);
    assert!(report.no_self_crossings);
}

#[test]
fn good_drawing_flags_double_crossing() {
    // Edge 2-3 weaves across edge 0-1 twice.
    let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
    let d = PolylineDrawing::new(
        g,
        vec![pt(0, 0), pt(6, 0), pt(1, 1), pt(5, 1)],
        vec![
            vec![pt(0, 0), pt(6, 0)],
            vec![pt(1, 1), pt(2, -1), pt(3, -1), pt(4, 1), pt(5, 1)],
        ],
    )
    .unwrap();
    assert_eq!(count_crossings(&d).unwrap(), 2);
    let report = check_good_drawing(&d).unwrap();
    assert!(!report.pairs_cross_at_most_once);
    assert!(report.no_self_crossings && report.no_adjacent_crossings);
}

#[test]
fn svg_export_is_deterministic() {
    let d = convex_complete(5);
    let a = export_svg(&d);
    let b = export_svg(&d);
    assert_eq!(a, b);
    assert!(a.starts_with("<svg"));
    assert_eq!(a.matches("<polyline").count(), 10);
    assert_eq!(a.matches("<circle").count(), 5);
    // Six fractional digits everywhere.
    assert!(a.contains("1.000000,1.000000"));
}

#[test]
fn json_round_trip_preserves_drawing() {
    let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
    let d = PolylineDrawing::new(
        g,
        vec![pt(0, 0), pt(2, 0), pt(2, 2)],
        vec![
            vec![pt(0, 0), Point::new(frac(1, 3), frac(-5, 7)), pt(2, 0)],
            vec![pt(2, 0), pt(2, 2)],
        ],
    )
    .unwrap();
    let json = drawing_to_json(&d);
    let back = drawing_from_json(&json).unwrap();
    assert_eq!(back, d);
}

proptest! {
    #[test]
    fn prop_translation_and_scaling_preserve_crossings(
        dx in -50i128..50, dy in -50i128..50, scale in 1i128..5,
    ) {
        let d = convex_complete(5);
        let transform = |p: &Point| Point::new(
            (p.x.clone() + coord(dx)) * coord(scale),
            (p.y.clone() + coord(dy)) * coord(scale),
        );
        let moved = PolylineDrawing::new(
            d.graph.clone(),
            d.vertex_points.iter().map(&transform).collect(),
            d.edge_paths
                .iter()
                .map(|path| path.iter().map(&transform).collect())
                .collect(),
        ).unwrap();
        prop_assert_eq!(count_crossings(&moved).unwrap(), 5);
    }

    #[test]
    fn prop_crossing_points_lie_on_both_segments(n in 4usize..7) {
        let d = convex_complete(n);
        for c in crossings::geometry::drawing_crossings(&d).unwrap() {
            for (slot, edge) in [(0, c.edges.0), (1, c.edges.1)] {
                let path = &d.edge_paths[edge];
                let a = &path[c.along[slot].segment];
                let b = &path[c.along[slot].segment + 1];
                let t = c.along[slot].t.clone();
                prop_assert!(t > coord(0) && t < coord(1));
                let x = a.x.clone() + t.clone() * (b.x.clone() - a.x.clone());
                let y = a.y.clone() + t * (b.y.clone() - a.y.clone());
                prop_assert_eq!(Point::new(x, y), c.point.clone());
            }
        }
    }
}
