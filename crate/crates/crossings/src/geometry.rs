//! Exact polyline drawings over rational coordinates.
//!
//! A drawing places every vertex at a rational point and routes every edge
//! as a polyline. All incidence tests are exact (no floating point, no
//! epsilon), so a drawing is either in general position or it is rejected
//! with a degeneracy error naming the offending segments — degeneracies are
//! never silently perturbed.
//!
//! General position here means:
//! - all vertex points are distinct, and no vertex lies on a segment it is
//!   not an endpoint of;
//! - polylines touch each other only at shared graph vertices (at their
//!   terminal ends) or in proper transversal interior crossings;
//! - no two segments overlap collinearly, and no crossing point is shared
//!   by a third segment.

use std::collections::HashMap;
use std::fmt::Write as _;

use num_rational::Ratio;
use num_traits::Zero;
use thiserror::Error;

use crate::graph::Graph;
use crate::graph6::encode_graph6;

/// Exact coordinate type. `i128` numerators and denominators leave ample
/// headroom for the cross-multiplied comparisons on the coordinates used by
/// the drawing generators.
pub type Coord = Ratio<i128>;

/// Builds a coordinate from an integer.
pub fn coord(n: i128) -> Coord {
    Ratio::from_integer(n)
}

/// Builds a coordinate from a fraction.
pub fn frac(num: i128, den: i128) -> Coord {
    Ratio::new(num, den)
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: Coord,
    pub y: Coord,
}

impl Point {
    pub fn new(x: Coord, y: Coord) -> Self {
        Point { x, y }
    }
}

/// Identifies one segment of one edge path: `(edge index, segment index)`.
pub type SegmentId = (usize, usize);

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeometryError {
    #[error("drawing has {paths} edge paths but the graph has {edges} edges")]
    PathCountMismatch { paths: usize, edges: usize },
    #[error("drawing has {points} vertex points but the graph has {vertices} vertices")]
    VertexCountMismatch { points: usize, vertices: usize },
    #[error("edge {edge} path must start and end at its vertices' points")]
    PathEndpointMismatch { edge: usize },
    #[error("edge {edge} path needs at least two points")]
    PathTooShort { edge: usize },
    #[error("edge {edge} segment {segment} has zero length")]
    ZeroLengthSegment { edge: usize, segment: usize },
    #[error("vertices {a} and {b} share the same point")]
    CoincidentVertices { a: usize, b: usize },
    #[error("vertex {vertex} lies on edge {edge} segment {segment}")]
    VertexOnSegment {
        vertex: usize,
        edge: usize,
        segment: usize,
    },
    #[error("segments {a:?} and {b:?} overlap collinearly")]
    CollinearOverlap { a: SegmentId, b: SegmentId },
    #[error("segments {a:?} and {b:?} touch without crossing")]
    NonTransversalContact { a: SegmentId, b: SegmentId },
    #[error("three or more segments pass through one point, including {a:?} and {b:?}")]
    ConcurrentCrossings { a: SegmentId, b: SegmentId },
    #[error("planarization requires a good drawing ({reason})")]
    NotGoodDrawing { reason: &'static str },
}

/// A graph drawn with rational polylines. Edge path `i` corresponds to edge
/// `i` in the graph's sorted edge list and runs from the smaller-numbered
/// endpoint to the larger.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolylineDrawing {
    pub graph: Graph,
    pub vertex_points: Vec<Point>,
    pub edge_paths: Vec<Vec<Point>>,
}

/// One proper crossing between two distinct edges.
#[derive(Clone, Debug)]
pub struct Crossing {
    /// Edge indices, `edges.0 < edges.1`.
    pub edges: (usize, usize),
    pub point: Point,
    /// Position along each edge path, in edge order.
    pub along: [PathParam; 2],
}

/// Position along an edge path: segment index, then the fraction of the way
/// along that segment.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PathParam {
    pub segment: usize,
    pub t: Coord,
}

/// The three good-drawing conditions, evaluated separately.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GoodDrawingReport {
    pub no_self_crossings: bool,
    pub no_adjacent_crossings: bool,
    pub pairs_cross_at_most_once: bool,
}

impl GoodDrawingReport {
    pub fn is_good(&self) -> bool {
        self.no_self_crossings && self.no_adjacent_crossings && self.pairs_cross_at_most_once
    }
}

/// A dummy vertex of a planarization, replacing one crossing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingVertex {
    pub vertex: usize,
    /// The two original edge indices that crossed, smaller first.
    pub edges: (usize, usize),
}

impl PolylineDrawing {
    /// Wraps the parts into a drawing, checking only structural consistency
    /// (sizes and path endpoints). General position is checked by
    /// [`validate_drawing`].
    pub fn new(
        graph: Graph,
        vertex_points: Vec<Point>,
        edge_paths: Vec<Vec<Point>>,
    ) -> Result<Self, GeometryError> {
        if vertex_points.len() != graph.order() {
            return Err(GeometryError::VertexCountMismatch {
                points: vertex_points.len(),
                vertices: graph.order(),
            });
        }
        if edge_paths.len() != graph.edge_count() {
            return Err(GeometryError::PathCountMismatch {
                paths: edge_paths.len(),
                edges: graph.edge_count(),
            });
        }
        for (i, (u, v)) in graph.edges().enumerate() {
            let path = &edge_paths[i];
            if path.len() < 2 {
                return Err(GeometryError::PathTooShort { edge: i });
            }
            if path[0] != vertex_points[u] || path[path.len() - 1] != vertex_points[v] {
                return Err(GeometryError::PathEndpointMismatch { edge: i });
            }
            for s in 0..path.len() - 1 {
                if path[s] == path[s + 1] {
                    return Err(GeometryError::ZeroLengthSegment { edge: i, segment: s });
                }
            }
        }
        Ok(PolylineDrawing {
            graph,
            vertex_points,
            edge_paths,
        })
    }

    /// A straight-line drawing: every edge is a single segment.
    pub fn straight_line(graph: Graph, vertex_points: Vec<Point>) -> Result<Self, GeometryError> {
        let edge_paths = graph
            .edges()
            .map(|(u, v)| vec![vertex_points[u].clone(), vertex_points[v].clone()])
            .collect();
        PolylineDrawing::new(graph, vertex_points, edge_paths)
    }
}

fn cross(o: &Point, a: &Point, b: &Point) -> Coord {
    (a.x.clone() - o.x.clone()) * (b.y.clone() - o.y.clone())
        - (a.y.clone() - o.y.clone()) * (b.x.clone() - o.x.clone())
}

/// Whether `p` lies on the closed segment `a..b` (assumes the three points
/// are collinear).
fn on_segment_collinear(a: &Point, b: &Point, p: &Point) -> bool {
    let min_x = a.x.clone().min(b.x.clone());
    let max_x = a.x.clone().max(b.x.clone());
    let min_y = a.y.clone().min(b.y.clone());
    let max_y = a.y.clone().max(b.y.clone());
    p.x >= min_x && p.x <= max_x && p.y >= min_y && p.y <= max_y
}

/// Parameter of `p` along the segment `a..b` (assumes `p` on the segment).
fn param_on_segment(a: &Point, b: &Point, p: &Point) -> Coord {
    let dx = b.x.clone() - a.x.clone();
    if !dx.is_zero() {
        (p.x.clone() - a.x.clone()) / dx
    } else {
        (p.y.clone() - a.y.clone()) / (b.y.clone() - a.y.clone())
    }
}

/// Exact relation between two closed segments.
enum SegRelation {
    Disjoint,
    /// Transversal crossing of the open interiors.
    Proper { point: Point, t1: Coord, t2: Coord },
    /// A single shared point that is an endpoint of at least one segment.
    Touch { point: Point, t1: Coord, t2: Coord },
    /// Collinear with a shared sub-segment of positive length.
    Overlap,
}

fn segment_relation(p1: &Point, q1: &Point, p2: &Point, q2: &Point) -> SegRelation {
    let d1 = cross(p2, q2, p1);
    let d2 = cross(p2, q2, q1);
    let d3 = cross(p1, q1, p2);
    let d4 = cross(p1, q1, q2);

    let zero = Coord::zero();
    if d1.is_zero() && d2.is_zero() {
        // Collinear segments: they overlap, touch at one point, or miss.
        let mut contacts: Vec<Point> = Vec::new();
        for p in [p1, q1] {
            if on_segment_collinear(p2, q2, p) && !contacts.contains(p) {
                contacts.push(p.clone());
            }
        }
        for p in [p2, q2] {
            if on_segment_collinear(p1, q1, p) && !contacts.contains(p) {
                contacts.push(p.clone());
            }
        }
        return match contacts.len() {
            0 => SegRelation::Disjoint,
            1 => {
                let point = contacts.pop().expect("one contact");
                let t1 = param_on_segment(p1, q1, &point);
                let t2 = param_on_segment(p2, q2, &point);
                SegRelation::Touch { point, t1, t2 }
            }
            _ => SegRelation::Overlap,
        };
    }

    let strictly_opposite =
        |a: &Coord, b: &Coord| (a > &zero && b < &zero) || (a < &zero && b > &zero);
    if strictly_opposite(&d1, &d2) && strictly_opposite(&d3, &d4) {
        // Proper crossing: the signed area to the other segment's line is
        // linear along each segment, so its zero gives the parameter.
        let t1 = d1.clone() / (d1.clone() - d2.clone());
        let point = Point::new(
            p1.x.clone() + t1.clone() * (q1.x.clone() - p1.x.clone()),
            p1.y.clone() + t1.clone() * (q1.y.clone() - p1.y.clone()),
        );
        let t2 = d3.clone() / (d3.clone() - d4.clone());
        return SegRelation::Proper { point, t1, t2 };
    }

    // Any remaining contact involves an endpoint on the other segment.
    for (p, other) in [(p1, (p2, q2)), (q1, (p2, q2)), (p2, (p1, q1)), (q2, (p1, q1))] {
        let d = cross(other.0, other.1, p);
        if d.is_zero() && on_segment_collinear(other.0, other.1, p) {
            let t1 = param_on_segment(p1, q1, p);
            let t2 = param_on_segment(p2, q2, p);
            return SegRelation::Touch {
                point: p.clone(),
                t1,
                t2,
            };
        }
    }
    SegRelation::Disjoint
}

struct SegmentRef {
    edge: usize,
    segment: usize,
    min_x: Coord,
    max_x: Coord,
    min_y: Coord,
    max_y: Coord,
}

fn collect_segments(d: &PolylineDrawing) -> Vec<SegmentRef> {
    let mut segs = Vec::new();
    for (e, path) in d.edge_paths.iter().enumerate() {
        for s in 0..path.len() - 1 {
            let (a, b) = (&path[s], &path[s + 1]);
            segs.push(SegmentRef {
                edge: e,
                segment: s,
                min_x: a.x.clone().min(b.x.clone()),
                max_x: a.x.clone().max(b.x.clone()),
                min_y: a.y.clone().min(b.y.clone()),
                max_y: a.y.clone().max(b.y.clone()),
            });
        }
    }
    segs
}

/// Validates general position and collects all proper crossings. This is the
/// single geometric pass behind [`validate_drawing`], [`count_crossings`],
/// [`check_good_drawing`] and [`planarize_drawing`].
fn analyze(d: &PolylineDrawing) -> Result<Vec<Crossing>, GeometryError> {
    // Re-run the structural checks so `analyze` is self-contained.
    let _ = PolylineDrawing::new(
        d.graph.clone(),
        d.vertex_points.clone(),
        d.edge_paths.clone(),
    )?;

    // Distinct vertex points.
    let mut by_point: HashMap<&Point, usize> = HashMap::new();
    for (v, p) in d.vertex_points.iter().enumerate() {
        if let Some(&u) = by_point.get(p) {
            return Err(GeometryError::CoincidentVertices { a: u, b: v });
        }
        by_point.insert(p, v);
    }

    let edge_list = d.graph.edge_list();
    let segs = collect_segments(d);

    // No vertex in the interior of any segment, and none on a foreign
    // segment at all.
    for sr in &segs {
        let path = &d.edge_paths[sr.edge];
        let (a, b) = (&path[sr.segment], &path[sr.segment + 1]);
        let (eu, ev) = edge_list[sr.edge];
        for (v, p) in d.vertex_points.iter().enumerate() {
            if p.x < sr.min_x || p.x > sr.max_x || p.y < sr.min_y || p.y > sr.max_y {
                continue;
            }
            if !cross(a, b, p).is_zero() || !on_segment_collinear(a, b, p) {
                continue;
            }
            // The only admissible incidences are the path's own terminals.
            let at_start = sr.segment == 0 && p == a && v == eu;
            let at_end = sr.segment == path.len() - 2 && p == b && v == ev;
            if !(at_start || at_end) {
                return Err(GeometryError::VertexOnSegment {
                    vertex: v,
                    edge: sr.edge,
                    segment: sr.segment,
                });
            }
        }
    }

    // Pairwise segment pass with a sweep over x-extents.
    let mut order: Vec<usize> = (0..segs.len()).collect();
    order.sort_by(|&i, &j| segs[i].min_x.cmp(&segs[j].min_x));
    let mut crossings: Vec<Crossing> = Vec::new();
    for (rank, &i) in order.iter().enumerate() {
        let si = &segs[i];
        for &j in &order[rank + 1..] {
            let sj = &segs[j];
            if sj.min_x > si.max_x {
                break;
            }
            if sj.max_y < si.min_y || sj.min_y > si.max_y {
                continue;
            }
            let (a, b) = canonical_pair(si, sj);
            check_pair(d, &edge_list, a, b, &mut crossings)?;
        }
    }

    // At most one crossing through any point (no three segments concurrent,
    // and no two distinct pairs at the same point).
    let mut seen: HashMap<&Point, (usize, usize)> = HashMap::new();
    for c in &crossings {
        if let Some(&prev) = seen.get(&c.point) {
            return Err(GeometryError::ConcurrentCrossings {
                a: (prev.0, prev.1),
                b: (c.edges.0, c.along[0].segment),
            });
        }
        seen.insert(&c.point, (c.edges.0, c.along[0].segment));
    }

    crossings.sort_by(|a, b| {
        (a.edges, &a.along[0], &a.along[1]).cmp(&(b.edges, &b.along[0], &b.along[1]))
    });
    Ok(crossings)
}

fn canonical_pair<'a>(a: &'a SegmentRef, b: &'a SegmentRef) -> (&'a SegmentRef, &'a SegmentRef) {
    if (a.edge, a.segment) <= (b.edge, b.segment) {
        (a, b)
    } else {
        (b, a)
    }
}

fn check_pair(
    d: &PolylineDrawing,
    edge_list: &[(usize, usize)],
    si: &SegmentRef,
    sj: &SegmentRef,
    crossings: &mut Vec<Crossing>,
) -> Result<(), GeometryError> {
    let id_i = (si.edge, si.segment);
    let id_j = (sj.edge, sj.segment);
    let path_i = &d.edge_paths[si.edge];
    let path_j = &d.edge_paths[sj.edge];
    let (p1, q1) = (&path_i[si.segment], &path_i[si.segment + 1]);
    let (p2, q2) = (&path_j[sj.segment], &path_j[sj.segment + 1]);

    match segment_relation(p1, q1, p2, q2) {
        SegRelation::Disjoint => Ok(()),
        SegRelation::Overlap => Err(GeometryError::CollinearOverlap { a: id_i, b: id_j }),
        SegRelation::Proper { point, t1, t2 } => {
            if si.edge != sj.edge {
                crossings.push(Crossing {
                    edges: (si.edge, sj.edge),
                    point,
                    along: [
                        PathParam {
                            segment: si.segment,
                            t: t1,
                        },
                        PathParam {
                            segment: sj.segment,
                            t: t2,
                        },
                    ],
                });
                Ok(())
            } else {
                // A transversal self-crossing is geometrically sound; the
                // good-drawing check reports it separately.
                crossings.push(Crossing {
                    edges: (si.edge, sj.edge),
                    point,
                    along: [
                        PathParam {
                            segment: si.segment,
                            t: t1,
                        },
                        PathParam {
                            segment: sj.segment,
                            t: t2,
                        },
                    ],
                });
                Ok(())
            }
        }
        SegRelation::Touch { point, t1, t2 } => {
            if si.edge == sj.edge {
                // Only consecutive segments may touch, exactly at the bend.
                let consecutive = sj.segment == si.segment + 1;
                let at_bend = t1 == coord(1) && t2.is_zero();
                if consecutive && at_bend {
                    Ok(())
                } else {
                    Err(GeometryError::NonTransversalContact { a: id_i, b: id_j })
                }
            } else {
                // Different edges may touch only at a shared graph vertex,
                // and only at the corresponding path terminals.
                let terminal_at = |edge: usize,
                                   path: &Vec<Point>,
                                   segment: usize,
                                   t: &Coord,
                                   point: &Point|
                 -> Option<usize> {
                    let (u, v) = edge_list[edge];
                    if segment == 0 && t.is_zero() && point == &d.vertex_points[u] {
                        Some(u)
                    } else if segment == path.len() - 2
                        && t == &coord(1)
                        && point == &d.vertex_points[v]
                    {
                        Some(v)
                    } else {
                        None
                    }
                };
                let vi = terminal_at(si.edge, path_i, si.segment, &t1, &point);
                let vj = terminal_at(sj.edge, path_j, sj.segment, &t2, &point);
                match (vi, vj) {
                    (Some(a), Some(b)) if a == b => Ok(()),
                    _ => Err(GeometryError::NonTransversalContact { a: id_i, b: id_j }),
                }
            }
        }
    }
}

/// Checks general position; errors name the offending segments.
pub fn validate_drawing(d: &PolylineDrawing) -> Result<(), GeometryError> {
    analyze(d).map(|_| ())
}

/// All proper crossings of the drawing (including self-crossings), sorted by
/// edge pair and position.
pub fn drawing_crossings(d: &PolylineDrawing) -> Result<Vec<Crossing>, GeometryError> {
    analyze(d)
}

/// Number of proper crossings between distinct edges.
pub fn count_crossings(d: &PolylineDrawing) -> Result<usize, GeometryError> {
    Ok(analyze(d)?
        .iter()
        .filter(|c| c.edges.0 != c.edges.1)
        .count())
}

/// Evaluates the three good-drawing conditions.
pub fn check_good_drawing(d: &PolylineDrawing) -> Result<GoodDrawingReport, GeometryError> {
    let crossings = analyze(d)?;
    let edge_list = d.graph.edge_list();
    let mut no_self = true;
    let mut no_adjacent = true;
    let mut pair_once = true;
    let mut pair_counts: HashMap<(usize, usize), usize> = HashMap::new();
    for c in &crossings {
        if c.edges.0 == c.edges.1 {
            no_self = false;
            continue;
        }
        let (u1, v1) = edge_list[c.edges.0];
        let (u2, v2) = edge_list[c.edges.1];
        if u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2 {
            no_adjacent = false;
        }
        let count = pair_counts.entry(c.edges).or_insert(0);
        *count += 1;
        if *count > 1 {
            pair_once = false;
        }
    }
    Ok(GoodDrawingReport {
        no_self_crossings: no_self,
        no_adjacent_crossings: no_adjacent,
        pairs_cross_at_most_once: pair_once,
    })
}

/// Replaces every crossing of a good drawing with a degree-4 dummy vertex.
/// Dummy vertices are numbered from `graph.order()` upward in the
/// deterministic order of [`drawing_crossings`]. A drawing with no crossings
/// planarizes to its own graph.
pub fn planarize_drawing(
    d: &PolylineDrawing,
) -> Result<(Graph, Vec<CrossingVertex>), GeometryError> {
    let report = check_good_drawing(d)?;
    if !report.no_self_crossings {
        return Err(GeometryError::NotGoodDrawing {
            reason: "an edge crosses itself",
        });
    }
    if !report.no_adjacent_crossings {
        return Err(GeometryError::NotGoodDrawing {
            reason: "two adjacent edges cross",
        });
    }
    if !report.pairs_cross_at_most_once {
        return Err(GeometryError::NotGoodDrawing {
            reason: "an edge pair crosses more than once",
        });
    }
    let crossings = analyze(d)?;
    let base = d.graph.order();
    let mut planar = Graph::new(base + crossings.len());
    if let Some(name) = d.graph.name() {
        planar.set_name(format!("{name} planarized"));
    }
    let edge_list = d.graph.edge_list();

    // Per original edge, the dummy vertices along it ordered by position.
    let mut along_edge: Vec<Vec<(&PathParam, usize)>> = vec![Vec::new(); edge_list.len()];
    let mut dummies = Vec::with_capacity(crossings.len());
    for (k, c) in crossings.iter().enumerate() {
        let dummy = base + k;
        along_edge[c.edges.0].push((&c.along[0], dummy));
        along_edge[c.edges.1].push((&c.along[1], dummy));
        dummies.push(CrossingVertex {
            vertex: dummy,
            edges: c.edges,
        });
    }
    for (e, &(u, v)) in edge_list.iter().enumerate() {
        let mut stops = along_edge[e].clone();
        stops.sort_by(|a, b| a.0.cmp(b.0));
        let mut prev = u;
        for (_, dummy) in stops {
            planar.add_edge(prev, dummy).expect("chain edge");
            prev = dummy;
        }
        planar.add_edge(prev, v).expect("chain edge");
    }
    Ok((planar, dummies))
}

/// Formats a coordinate with exactly six fraction digits (round half away
/// from zero), used for deterministic SVG output.
fn decimal6(value: &Coord) -> String {
    const SCALE: i128 = 1_000_000;
    let num = value.numer() * SCALE;
    let den = *value.denom(); // canonical form: positive
    let half_adjust = if num >= 0 { den } else { -den };
    let scaled = (2 * num + half_adjust) / (2 * den);
    let sign = if scaled < 0 { "-" } else { "" };
    let abs = scaled.unsigned_abs();
    format!("{sign}{}.{:06}", abs / SCALE as u128, abs % SCALE as u128)
}

/// Renders the drawing as a standalone SVG document. Output is a pure
/// function of the drawing: same drawing, same bytes.
pub fn export_svg(d: &PolylineDrawing) -> String {
    let mut min_x = Coord::zero();
    let mut max_x = Coord::zero();
    let mut min_y = Coord::zero();
    let mut max_y = Coord::zero();
    let mut first = true;
    for p in d
        .vertex_points
        .iter()
        .chain(d.edge_paths.iter().flatten())
    {
        if first {
            min_x = p.x.clone();
            max_x = p.x.clone();
            min_y = p.y.clone();
            max_y = p.y.clone();
            first = false;
        } else {
            min_x = min_x.min(p.x.clone());
            max_x = max_x.max(p.x.clone());
            min_y = min_y.min(p.y.clone());
            max_y = max_y.max(p.y.clone());
        }
    }
    let width = max_x.clone() - min_x.clone();
    let height = max_y.clone() - min_y.clone();
    let span = width.clone().max(height.clone()).max(coord(1));
    let margin = span.clone() / coord(20);
    let stroke = span.clone() / coord(400);
    let radius = span.clone() / coord(150);

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">"#,
        decimal6(&(min_x - margin.clone())),
        decimal6(&(min_y - margin.clone())),
        decimal6(&(width + margin.clone() * coord(2))),
        decimal6(&(height + margin * coord(2))),
    );
    for path in &d.edge_paths {
        let points: Vec<String> = path
            .iter()
            .map(|p| format!("{},{}", decimal6(&p.x), decimal6(&p.y)))
            .collect();
        let _ = writeln!(
            svg,
            r##"  <polyline fill="none" stroke="#355f8d" stroke-width="{}" points="{}"/>"##,
            decimal6(&stroke),
            points.join(" ")
        );
    }
    for p in &d.vertex_points {
        let _ = writeln!(
            svg,
            r##"  <circle cx="{}" cy="{}" r="{}" fill="#c44e52"/>"##,
            decimal6(&p.x),
            decimal6(&p.y),
            decimal6(&radius)
        );
    }
    svg.push_str("</svg>\n");
    svg
}

fn coord_string(c: &Coord) -> String {
    if c.denom() == &1 {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn parse_coord(s: &str) -> Option<Coord> {
    match s.split_once('/') {
        Some((n, d)) => {
            let den: i128 = d.parse().ok()?;
            if den == 0 {
                return None;
            }
            Some(Ratio::new(n.parse().ok()?, den))
        }
        None => Some(Ratio::from_integer(s.parse().ok()?)),
    }
}

/// Serializes a drawing as JSON with exact `"p/q"` rational coordinates.
pub fn drawing_to_json(d: &PolylineDrawing) -> serde_json::Value {
    let point = |p: &Point| {
        serde_json::Value::Array(vec![
            coord_string(&p.x).into(),
            coord_string(&p.y).into(),
        ])
    };
    serde_json::json!({
        "graph6": encode_graph6(&d.graph).ok(),
        "vertex_points": d.vertex_points.iter().map(point).collect::<Vec<_>>(),
        "edge_paths": d
            .edge_paths
            .iter()
            .map(|path| path.iter().map(point).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    })
}

/// Reads back a drawing serialized by [`drawing_to_json`].
pub fn drawing_from_json(value: &serde_json::Value) -> Option<PolylineDrawing> {
    let point = |v: &serde_json::Value| -> Option<Point> {
        let arr = v.as_array()?;
        if arr.len() != 2 {
            return None;
        }
        Some(Point::new(
            parse_coord(arr[0].as_str()?)?,
            parse_coord(arr[1].as_str()?)?,
        ))
    };
    let graph = crate::graph6::parse_graph6(value.get("graph6")?.as_str()?).ok()?;
    let vertex_points = value
        .get("vertex_points")?
        .as_array()?
        .iter()
        .map(point)
        .collect::<Option<Vec<_>>>()?;
    let edge_paths = value
        .get("edge_paths")?
        .as_array()?
        .iter()
        .map(|path| {
            path.as_array()?
                .iter()
                .map(point)
                .collect::<Option<Vec<_>>>()
        })
        .collect::<Option<Vec<_>>>()?;
    PolylineDrawing::new(graph, vertex_points, edge_paths).ok()
}
