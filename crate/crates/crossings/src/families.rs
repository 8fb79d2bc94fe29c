//! Constructive drawing generators for ten Cartesian-product families whose
//! crossing numbers the bundled database records, one layout per partner
//! kind:
//!
//! - **Cycle partners** (six-vertex graphs 63, 64, 75, 77, 92, 98 with Cn):
//!   an annular layout. Each cycle copy occupies one ray of a fan of `n`
//!   rational rays; product edges run as chords between consecutive rays and
//!   each non-spine edge of the six-vertex graph bows into a neighbouring
//!   sector, crossing exactly one product edge.
//! - **Path partners** (110, 137 with Pn): concentric hexagonal rings on six
//!   equal-norm rational rays; each ring carries one copy, radial edges are
//!   the product edges, and each hexagon chord detours around an
//!   intermediate ray, crossing exactly one radial edge (boundary rings
//!   route chords towards the free side for nothing, or one crossing).
//! - **Star partners** (62, 121 with Sn): column/cluster layouts around a
//!   central hub copy, with leaf copies split evenly to the left and right;
//!   bundles of star edges are routed through disjoint altitude bands so
//!   that every ordered same-side pair of copies contributes a fixed number
//!   of crossings, and the hub copy's own chords add a linear term.
//!
//! Only the crossing pattern is contractual: the generators guarantee a
//! drawing in general position whose crossing count equals the database
//! formula for every admissible `n`.

use std::collections::HashMap;

use num_rational::Ratio;
use thiserror::Error;

use crate::atlas::{Atlas, AtlasKey};
use crate::geometry::{coord, frac, Coord, Point, PolylineDrawing};
use crate::graph::{build_elementary, cartesian_product, subgraph_embedding, Elementary, Graph};

/// The partner factor of a product family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Partner {
    Path,
    Cycle,
    Star,
}

impl Partner {
    pub fn as_str(&self) -> &'static str {
        match self {
            Partner::Path => "path",
            Partner::Cycle => "cycle",
            Partner::Star => "star",
        }
    }
}

/// Which neighbouring sector a cycle-family chord bows into.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Whether a path-family chord detours towards the centre or outwards.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum RadialDir {
    Inward,
    Outward,
}

/// One drawable family: a six-vertex atlas graph times a partner family.
#[derive(Clone, Debug)]
pub struct FamilySpec {
    /// Index of the six-vertex atlas entry.
    pub atlas_index: u32,
    pub partner: Partner,
    /// Smallest admissible partner parameter.
    pub min_n: usize,
    /// Human-readable crossing-count formula.
    pub formula: &'static str,
}

impl FamilySpec {
    pub fn atlas_key(&self) -> AtlasKey {
        (6, self.atlas_index)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("no drawing generator for atlas graph 6.{index} with a {partner} partner")]
    Unsupported { index: u32, partner: &'static str },
    #[error("family 6.{index} requires n >= {min_n}, got {n}")]
    ParameterTooSmall { index: u32, min_n: usize, n: usize },
    #[error("atlas entry 6.{index} is missing")]
    AtlasEntryMissing { index: u32 },
    #[error("atlas entry 6.{index} does not match the generator's tile structure")]
    TileMismatch { index: u32 },
    #[error("ray construction failed for n = {n}: {reason}")]
    RayConstruction { n: usize, reason: &'static str },
}

/// The ten families with bundled drawing generators.
pub fn list_supported_families() -> Vec<FamilySpec> {
    vec![
        FamilySpec { atlas_index: 110, partner: Partner::Path, min_n: 1, formula: "3n - 1" },
        FamilySpec { atlas_index: 137, partner: Partner::Path, min_n: 1, formula: "4n" },
        FamilySpec { atlas_index: 63, partner: Partner::Cycle, min_n: 3, formula: "2n" },
        FamilySpec { atlas_index: 64, partner: Partner::Cycle, min_n: 3, formula: "2n" },
        FamilySpec { atlas_index: 75, partner: Partner::Cycle, min_n: 3, formula: "2n" },
        FamilySpec { atlas_index: 77, partner: Partner::Cycle, min_n: 3, formula: "2n" },
        FamilySpec { atlas_index: 92, partner: Partner::Cycle, min_n: 3, formula: "3n" },
        FamilySpec { atlas_index: 98, partner: Partner::Cycle, min_n: 3, formula: "3n" },
        FamilySpec { atlas_index: 62, partner: Partner::Star, min_n: 1, formula: "5 fl(n) fl(n-1) + 2 fl(n)" },
        FamilySpec { atlas_index: 121, partner: Partner::Star, min_n: 1, formula: "6 fl(n) fl(n-1) + 4n" },
    ]
}

fn fl(n: u64) -> u64 {
    n / 2
}

/// The crossing count the generator realizes (and the database records) for
/// the family at parameter `n`.
pub fn expected_crossings(atlas_index: u32, partner: Partner, n: usize) -> Option<u64> {
    let n64 = n as u64;
    match (atlas_index, partner) {
        (110, Partner::Path) => Some(3 * n64 - 1),
        (137, Partner::Path) => Some(4 * n64),
        (63 | 64 | 75 | 77, Partner::Cycle) => Some(2 * n64),
        (92 | 98, Partner::Cycle) => Some(3 * n64),
        (62, Partner::Star) => Some(5 * fl(n64) * fl(n64.saturating_sub(1)) + 2 * fl(n64)),
        (121, Partner::Star) => Some(6 * fl(n64) * fl(n64.saturating_sub(1)) + 4 * n64),
        _ => None,
    }
}

/// Generates the drawing of `6.atlas_index x partner(n)`. The drawing's
/// graph is exactly `cartesian_product(atlas graph, partner graph)`.
pub fn generate_family_drawing(
    atlas_index: u32,
    partner: Partner,
    n: usize,
    atlas: &Atlas,
) -> Result<PolylineDrawing, FamilyError> {
    let spec = list_supported_families()
        .into_iter()
        .find(|f| f.atlas_index == atlas_index && f.partner == partner)
        .ok_or(FamilyError::Unsupported {
            index: atlas_index,
            partner: partner.as_str(),
        })?;
    if n < spec.min_n {
        return Err(FamilyError::ParameterTooSmall {
            index: atlas_index,
            min_n: spec.min_n,
            n,
        });
    }
    let g = atlas
        .get(&(6, atlas_index))
        .ok_or(FamilyError::AtlasEntryMissing { index: atlas_index })?;
    match (atlas_index, partner) {
        (63, Partner::Cycle) => {
            radial_cycle(g, n, atlas_index, &[(3, 1, Side::Right), (2, 0, Side::Left)])
        }
        (64, Partner::Cycle) => {
            radial_cycle(g, n, atlas_index, &[(4, 2, Side::Left), (2, 0, Side::Left)])
        }
        (75, Partner::Cycle) => {
            radial_cycle(g, n, atlas_index, &[(4, 2, Side::Right), (3, 1, Side::Left)])
        }
        (77, Partner::Cycle) => {
            radial_cycle(g, n, atlas_index, &[(5, 3, Side::Right), (2, 0, Side::Right)])
        }
        (92, Partner::Cycle) => radial_cycle(
            g,
            n,
            atlas_index,
            &[(5, 3, Side::Right), (3, 1, Side::Right), (2, 0, Side::Left)],
        ),
        (98, Partner::Cycle) => radial_cycle(
            g,
            n,
            atlas_index,
            &[(4, 2, Side::Right), (2, 0, Side::Right), (3, 1, Side::Left)],
        ),
        (110, Partner::Path) => hexagon_path(
            g,
            n,
            atlas_index,
            &[
                (0, 2, 1, RadialDir::Inward),
                (0, 4, 5, RadialDir::Inward),
                (1, 5, 0, RadialDir::Outward),
            ],
            true,
        ),
        (137, Partner::Path) => hexagon_path(
            g,
            n,
            atlas_index,
            &[
                (0, 2, 1, RadialDir::Outward),
                (0, 4, 5, RadialDir::Outward),
                (1, 3, 2, RadialDir::Inward),
                (3, 5, 4, RadialDir::Inward),
            ],
            false,
        ),
        (62, Partner::Star) => star_columns(g, n, atlas_index),
        (121, Partner::Star) => star_clusters(g, n, atlas_index),
        _ => unreachable!("spec table and dispatch agree"),
    }
}

// ---------------------------------------------------------------------------
// Shared helpers
// ---------------------------------------------------------------------------

fn pt(x: Coord, y: Coord) -> Point {
    Point::new(x, y)
}

/// Linear combination `ca * a + cb * b` of two direction vectors.
fn combo(a: &Point, ca: &Coord, b: &Point, cb: &Coord) -> Point {
    Point::new(
        a.x.clone() * ca.clone() + b.x.clone() * cb.clone(),
        a.y.clone() * ca.clone() + b.y.clone() * cb.clone(),
    )
}

fn scaled(a: &Point, c: &Coord) -> Point {
    Point::new(a.x.clone() * c.clone(), a.y.clone() * c.clone())
}

/// Finds the vertex relabelling from the generator's positional tile graph
/// onto the atlas graph (they must be isomorphic).
fn tile_isomorphism(tile: &Graph, atlas_graph: &Graph, index: u32) -> Result<Vec<usize>, FamilyError> {
    if tile.order() != atlas_graph.order() || tile.edge_count() != atlas_graph.edge_count() {
        return Err(FamilyError::TileMismatch { index });
    }
    subgraph_embedding(tile, atlas_graph).ok_or(FamilyError::TileMismatch { index })
}

/// Collects one polyline per edge keyed by endpoints, then emits them in the
/// product graph's sorted edge order.
struct PathTable {
    paths: HashMap<(usize, usize), Vec<Point>>,
}

impl PathTable {
    fn new() -> Self {
        PathTable {
            paths: HashMap::new(),
        }
    }

    fn insert(&mut self, u: usize, v: usize, mut points: Vec<Point>) {
        debug_assert!(u != v);
        if u < v {
            self.paths.insert((u, v), points);
        } else {
            points.reverse();
            self.paths.insert((v, u), points);
        }
    }

    fn into_drawing(
        mut self,
        graph: Graph,
        vertex_points: Vec<Point>,
    ) -> Result<PolylineDrawing, FamilyError> {
        let edge_paths: Vec<Vec<Point>> = graph
            .edges()
            .map(|(u, v)| {
                self.paths
                    .remove(&(u, v))
                    .unwrap_or_else(|| panic!("no path generated for edge ({u}, {v})"))
            })
            .collect();
        assert!(self.paths.is_empty(), "generated paths for non-edges");
        Ok(PolylineDrawing::new(graph, vertex_points, edge_paths)
            .expect("generated drawing is structurally sound"))
    }
}

// ---------------------------------------------------------------------------
// Cycle partners: annular layout
// ---------------------------------------------------------------------------

/// Rational ray directions for `n` sectors. Ray `k` is `(1 - t^2, 2t)` for a
/// rational tangent half-angle `t`, snapped to denominator 256, so that rays
/// are in strict angular order and consecutive sectors span less than a half
/// turn (checked exactly).
fn sector_rays(n: usize) -> Result<Vec<Point>, FamilyError> {
    let mut ts: Vec<Coord> = Vec::with_capacity(n);
    for k in 0..n {
        let angle = std::f64::consts::PI * (2.0 * k as f64 + 1.0 - n as f64) / (2.0 * n as f64);
        let snapped = (angle.tan() * 256.0).round() as i128;
        ts.push(frac(snapped, 256));
    }
    let minus_one = coord(-1);
    for w in ts.windows(2) {
        if w[0] >= w[1] {
            return Err(FamilyError::RayConstruction {
                n,
                reason: "tangents not strictly increasing",
            });
        }
        if w[0].clone() * w[1].clone() <= minus_one {
            return Err(FamilyError::RayConstruction {
                n,
                reason: "adjacent sector spans a half turn",
            });
        }
    }
    if ts[0].clone() * ts[n - 1].clone() >= minus_one {
        return Err(FamilyError::RayConstruction {
            n,
            reason: "wrap-around sector spans a half turn",
        });
    }
    Ok(ts
        .into_iter()
        .map(|t| {
            pt(
                coord(1) - t.clone() * t.clone(),
                coord(2) * t,
            )
        })
        .collect())
}

/// Affine radius of tile level `j`.
fn level_radius(j: usize) -> Coord {
    coord(j as i128 + 2)
}

/// Annular drawing of `g x Cn`. The tile is a spine path on levels 0..5 plus
/// distance-two chords; each chord bows into the given neighbouring sector
/// and crosses exactly one product edge there.
fn radial_cycle(
    g: &Graph,
    n: usize,
    index: u32,
    chords: &[(usize, usize, Side)],
) -> Result<PolylineDrawing, FamilyError> {
    let mut tile = Graph::new(6);
    for j in 0..5 {
        tile.add_edge(j, j + 1).expect("tile spine");
    }
    for &(a, b, _) in chords {
        tile.add_edge(a, b).expect("tile chord");
    }
    let phi = tile_isomorphism(&tile, g, index)?;
    let rays = sector_rays(n)?;
    let cycle = build_elementary(Elementary::Cycle, n, 0).expect("cycle partner");
    let product = cartesian_product(g, &cycle);

    // Product vertex for tile level j in sector k.
    let pv = |j: usize, k: usize| phi[j] * n + k;

    let mut vertex_points = vec![pt(coord(0), coord(0)); product.order()];
    for k in 0..n {
        for j in 0..6 {
            vertex_points[pv(j, k)] = scaled(&rays[k], &level_radius(j));
        }
    }

    let eps = frac(1, 16);
    let mut table = PathTable::new();
    for k in 0..n {
        // Spine edges: radial segments on ray k.
        for j in 0..5 {
            table.insert(
                pv(j, k),
                pv(j + 1, k),
                vec![vertex_points[pv(j, k)].clone(), vertex_points[pv(j + 1, k)].clone()],
            );
        }
        // Product edges: straight chords between consecutive rays.
        let k_next = (k + 1) % n;
        for j in 0..6 {
            table.insert(
                pv(j, k),
                pv(j, k_next),
                vec![vertex_points[pv(j, k)].clone(), vertex_points[pv(j, k_next)].clone()],
            );
        }
        // Tile chords: two-segment bows into a neighbouring sector. The bow
        // from level a down to level b = a - 2 dips to affine radius
        // `R(b) + 1/2`, crossing exactly the level-(b+1) product edge.
        for &(a, b, side) in chords {
            let neighbour = match side {
                Side::Right => (k + 1) % n,
                Side::Left => (k + n - 1) % n,
            };
            let beta = level_radius(b) + frac(1, 2);
            let bend = combo(
                &rays[k],
                &(beta.clone() - eps.clone()),
                &rays[neighbour],
                &eps,
            );
            table.insert(
                pv(a, k),
                pv(b, k),
                vec![
                    vertex_points[pv(a, k)].clone(),
                    bend,
                    vertex_points[pv(b, k)].clone(),
                ],
            );
        }
    }
    table.into_drawing(product, vertex_points)
}

// ---------------------------------------------------------------------------
// Path partners: concentric hexagons
// ---------------------------------------------------------------------------

/// Unit-length rational directions of the six hexagon rays.
fn hexagon_rays() -> [Point; 6] {
    [
        pt(coord(1), coord(0)),
        pt(frac(3, 5), frac(4, 5)),
        pt(frac(-3, 5), frac(4, 5)),
        pt(coord(-1), coord(0)),
        pt(frac(-3, 5), frac(-4, 5)),
        pt(frac(3, 5), frac(-4, 5)),
    ]
}

/// Concentric-hexagon drawing of `g x Pn` (rings 0..n, ring j at radius
/// j + 2). The tile is the hexagon cycle on positions 0..5 plus chords
/// `(a, b)` detouring around intermediate ray `r`, each crossing exactly the
/// radial edge on ray `r` adjacent to its ring — except at the innermost
/// (inward chords) or outermost (outward chords) ring, where the detour is
/// free. For 110 the outermost ring swaps all chord directions, saving one
/// crossing there.
fn hexagon_path(
    g: &Graph,
    n: usize,
    index: u32,
    chords: &[(usize, usize, usize, RadialDir)],
    flip_outer_ring: bool,
) -> Result<PolylineDrawing, FamilyError> {
    let mut tile = Graph::new(6);
    for p in 0..6 {
        tile.add_edge(p, (p + 1) % 6).expect("tile hexagon");
    }
    for &(a, b, _, _) in chords {
        tile.add_edge(a, b).expect("tile chord");
    }
    let phi = tile_isomorphism(&tile, g, index)?;
    let rays = hexagon_rays();
    let path = build_elementary(Elementary::Path, n, 0).expect("path partner");
    let product = cartesian_product(g, &path);
    let copies = n + 1;

    let pv = |p: usize, j: usize| phi[p] * copies + j;
    let ring_radius = |j: usize| coord(j as i128 + 2);

    let mut vertex_points = vec![pt(coord(0), coord(0)); product.order()];
    for j in 0..copies {
        for p in 0..6 {
            vertex_points[pv(p, j)] = scaled(&rays[p], &ring_radius(j));
        }
    }

    let eps = frac(1, 16);
    let mut table = PathTable::new();
    for j in 0..copies {
        // Ring edges: the hexagon of copy j.
        for p in 0..6 {
            let q = (p + 1) % 6;
            table.insert(
                pv(p, j),
                pv(q, j),
                vec![vertex_points[pv(p, j)].clone(), vertex_points[pv(q, j)].clone()],
            );
        }
        // Radial edges to the next ring.
        if j + 1 < copies {
            for p in 0..6 {
                table.insert(
                    pv(p, j),
                    pv(p, j + 1),
                    vec![vertex_points[pv(p, j)].clone(), vertex_points[pv(p, j + 1)].clone()],
                );
            }
        }
        // Chords: three-segment detours hugging the intermediate ray.
        for &(a, b, r, dir) in chords {
            let dir = if flip_outer_ring && j == copies - 1 {
                match dir {
                    RadialDir::Inward => RadialDir::Outward,
                    RadialDir::Outward => RadialDir::Inward,
                }
            } else {
                dir
            };
            let beta = match dir {
                RadialDir::Inward => ring_radius(j) - frac(1, 4),
                RadialDir::Outward => ring_radius(j) + frac(1, 4),
            };
            let inner = beta - eps.clone();
            let bend1 = combo(&rays[a], &eps, &rays[r], &inner);
            let bend2 = combo(&rays[r], &inner, &rays[b], &eps);
            table.insert(
                pv(a, j),
                pv(b, j),
                vec![
                    vertex_points[pv(a, j)].clone(),
                    bend1,
                    bend2,
                    vertex_points[pv(b, j)].clone(),
                ],
            );
        }
    }
    table.into_drawing(product, vertex_points)
}

// ---------------------------------------------------------------------------
// Star partners
// ---------------------------------------------------------------------------

/// Splits the star's leaf copies between the two sides of the hub: leaf `j`
/// goes right as column `j` for `j <= ceil(n/2)`, otherwise left as column
/// `j - ceil(n/2)`. Returns `(side_sign, column, side_count)`.
fn leaf_side(j: usize, n: usize) -> (i128, usize, usize) {
    let right = n.div_ceil(2);
    let left = n / 2;
    if j <= right {
        (1, j, right)
    } else {
        (-1, j - right, left)
    }
}

/// Column drawing of `6.62 x Sn` (tile: spine path on levels 0..5 plus
/// chords {0,3} and {1,3}).
///
/// The hub copy is a vertical column at x = 0 with level k at height 2k;
/// leaf copies are columns at x = ±2c. Star edges are routed per level
/// through disjoint altitude bands that deepen with the column distance, so
/// that each ordered same-side pair of copies crosses exactly five times;
/// the hub's two chords bow left and add two crossings per left copy.
fn star_columns(g: &Graph, n: usize, index: u32) -> Result<PolylineDrawing, FamilyError> {
    let mut tile = Graph::new(6);
    for k in 0..5 {
        tile.add_edge(k, k + 1).expect("tile spine");
    }
    tile.add_edge(0, 3).expect("tile chord");
    tile.add_edge(1, 3).expect("tile chord");
    let phi = tile_isomorphism(&tile, g, index)?;
    let star = build_elementary(Elementary::Star, n, 0).expect("star partner");
    let product = cartesian_product(g, &star);
    let copies = n + 1;
    let left_count = n / 2;

    let pv = |k: usize, j: usize| phi[k] * copies + j;
    let column_x = |j: usize| -> Coord {
        if j == 0 {
            coord(0)
        } else {
            let (sign, c, _) = leaf_side(j, n);
            coord(sign * 2 * c as i128)
        }
    };

    let mut vertex_points = vec![pt(coord(0), coord(0)); product.order()];
    for j in 0..copies {
        for k in 0..6 {
            vertex_points[pv(k, j)] = pt(column_x(j), coord(2 * k as i128));
        }
    }

    let mut table = PathTable::new();
    // Spine edges (all copies) and leaf-copy chords.
    for j in 0..copies {
        for k in 0..5 {
            table.insert(
                pv(k, j),
                pv(k + 1, j),
                vec![vertex_points[pv(k, j)].clone(), vertex_points[pv(k + 1, j)].clone()],
            );
        }
        if j > 0 {
            // Chords bow away from the hub, {1,3} nested inside {0,3}.
            let (sign, _, _) = leaf_side(j, n);
            let x = column_x(j);
            let away = |depth: Coord| x.clone() + coord(sign) * depth;
            table.insert(
                pv(0, j),
                pv(3, j),
                vec![
                    vertex_points[pv(0, j)].clone(),
                    pt(away(frac(3, 4)), coord(3)),
                    vertex_points[pv(3, j)].clone(),
                ],
            );
            table.insert(
                pv(1, j),
                pv(3, j),
                vec![
                    vertex_points[pv(1, j)].clone(),
                    pt(away(frac(2, 5)), coord(4)),
                    vertex_points[pv(3, j)].clone(),
                ],
            );
        }
    }
    // Hub chords: {1,3} bows left, crossing each left copy's level-2 star
    // edge; {0,3} loops around the whole left side below and above,
    // crossing each left column's spine edge {3,4}.
    table.insert(
        pv(1, 0),
        pv(3, 0),
        vec![
            vertex_points[pv(1, 0)].clone(),
            pt(frac(-3, 10), coord(4)),
            vertex_points[pv(3, 0)].clone(),
        ],
    );
    let loop_x = coord(-2 * left_count as i128) - frac(5, 4);
    let low_y = frac(-31, 16);
    let high_y = frac(127, 16);
    table.insert(
        pv(0, 0),
        pv(3, 0),
        vec![
            vertex_points[pv(0, 0)].clone(),
            pt(frac(-2, 5), low_y.clone()),
            pt(loop_x.clone(), low_y),
            pt(loop_x, high_y.clone()),
            pt(frac(-2, 5), high_y),
            vertex_points[pv(3, 0)].clone(),
        ],
    );
    // Star edges: per level, hub vertex -> leaf-copy vertex, routed through
    // a level band whose offset grows with the column index.
    for j in 1..copies {
        let (sign, c, side_count) = leaf_side(j, n);
        let s = coord(sign);
        let x = column_x(j);
        // Band offset in (0, 3/4), strictly increasing with c.
        let delta = frac(3, 4) * Ratio::new(c as i128, side_count as i128 + 1);
        // Levels 0 and 1 dip below the hub; levels 2..5 fly above their
        // target height. Approach slots at the leaf column shrink with the
        // level so same-column bundles stay disjoint.
        let band = |k: usize| -> Coord {
            match k {
                0 => -(coord(1) + frac(1, 8) + delta.clone()),
                1 => -(frac(1, 8) + delta.clone()),
                2 => coord(6) + frac(1, 8) + delta.clone(),
                3 => coord(7) + frac(1, 8) + delta.clone(),
                4 => coord(8) + frac(1, 8) + delta.clone(),
                _ => coord(10) + frac(1, 8) + delta.clone(),
            }
        };
        let slot = |k: usize| -> Coord {
            match k {
                0 => frac(1, 10),
                1 => frac(1, 5),
                _ => frac(2, 5),
            }
        };
        for k in 0..6 {
            let y_band = band(k);
            table.insert(
                pv(k, 0),
                pv(k, j),
                vec![
                    vertex_points[pv(k, 0)].clone(),
                    pt(s.clone() * frac(2, 5), y_band.clone()),
                    pt(x.clone() - s.clone() * slot(k), y_band),
                    vertex_points[pv(k, j)].clone(),
                ],
            );
        }
    }
    table.into_drawing(product, vertex_points)
}

/// Cluster drawing of `6.121 x Sn` (tile: spine path on levels 0..5 plus
/// chords {1,3}, {2,4}, {0,4}, {1,5}).
///
/// The hub copy is a short column at x = 0 (heights -3..3); each leaf copy
/// collapses to a near-point cluster at x = ±2c with a tiny vertical spread.
/// Straight star-edge fans give six crossings per ordered same-side pair of
/// copies; each cluster draws its four chords as nested bows with exactly
/// two internal crossings; and the hub's four chords (two bows, two loops
/// around one side) add four crossings per leaf copy.
fn star_clusters(g: &Graph, n: usize, index: u32) -> Result<PolylineDrawing, FamilyError> {
    let mut tile = Graph::new(6);
    for k in 0..5 {
        tile.add_edge(k, k + 1).expect("tile spine");
    }
    for (a, b) in [(1, 3), (2, 4), (0, 4), (1, 5)] {
        tile.add_edge(a, b).expect("tile chord");
    }
    let phi = tile_isomorphism(&tile, g, index)?;
    let star = build_elementary(Elementary::Star, n, 0).expect("star partner");
    let product = cartesian_product(g, &star);
    let copies = n + 1;
    let right_count = n.div_ceil(2);
    let left_count = n / 2;

    let pv = |k: usize, j: usize| phi[k] * copies + j;
    let sigma = frac(1, 1000);
    let hub_y = |k: usize| coord([-3, -2, -1, 1, 2, 3][k]);

    let mut vertex_points = vec![pt(coord(0), coord(0)); product.order()];
    for k in 0..6 {
        vertex_points[pv(k, 0)] = pt(coord(0), hub_y(k));
    }
    for j in 1..copies {
        let (sign, c, _) = leaf_side(j, n);
        let x = coord(sign * 2 * c as i128);
        for k in 0..6 {
            vertex_points[pv(k, j)] = pt(x.clone(), sigma.clone() * coord(k as i128));
        }
    }

    let mut table = PathTable::new();
    // Spine edges everywhere.
    for j in 0..copies {
        for k in 0..5 {
            table.insert(
                pv(k, j),
                pv(k + 1, j),
                vec![vertex_points[pv(k, j)].clone(), vertex_points[pv(k + 1, j)].clone()],
            );
        }
    }
    // Cluster chords: bows away from the hub with geometrically spaced
    // depths, so nested chords stay nested and interleaved chords cross
    // exactly once ({1,3} x {2,4} and {0,4} x {1,5}).
    for j in 1..copies {
        let (sign, c, _) = leaf_side(j, n);
        let x = coord(sign * 2 * c as i128);
        for (a, b, depth_num) in [(1usize, 3usize, 1i128), (2, 4, 4), (0, 4, 16), (1, 5, 64)] {
            let depth = sigma.clone() * frac(depth_num, 40);
            let apex_y = sigma.clone() * frac((a + b) as i128, 2);
            table.insert(
                pv(a, j),
                pv(b, j),
                vec![
                    vertex_points[pv(a, j)].clone(),
                    pt(x.clone() + coord(sign) * depth, apex_y),
                    vertex_points[pv(b, j)].clone(),
                ],
            );
        }
    }
    // Star-edge fans: straight segments from cluster to hub.
    for j in 1..copies {
        for k in 0..6 {
            table.insert(
                pv(k, 0),
                pv(k, j),
                vec![vertex_points[pv(k, 0)].clone(), vertex_points[pv(k, j)].clone()],
            );
        }
    }
    // Hub chords. {2,4} bows left (crosses every left level-3 fan), {1,3}
    // bows right (crosses every right level-2 fan); {0,4} loops around the
    // right side (crossing every right level-5 fan on its final descent),
    // {1,5} loops around the left side (crossing every left level-0 fan on
    // its initial drop).
    table.insert(
        pv(2, 0),
        pv(4, 0),
        vec![
            vertex_points[pv(2, 0)].clone(),
            pt(frac(-3, 10), frac(1, 2)),
            vertex_points[pv(4, 0)].clone(),
        ],
    );
    table.insert(
        pv(1, 0),
        pv(3, 0),
        vec![
            vertex_points[pv(1, 0)].clone(),
            pt(frac(3, 10), frac(-1, 2)),
            vertex_points[pv(3, 0)].clone(),
        ],
    );
    let right_x = coord(2 * right_count as i128 + 1);
    table.insert(
        pv(0, 0),
        pv(4, 0),
        vec![
            vertex_points[pv(0, 0)].clone(),
            pt(frac(1, 100), frac(-7, 2)),
            pt(right_x.clone(), frac(-7, 2)),
            pt(right_x, frac(7, 2)),
            pt(frac(1, 100), frac(7, 2)),
            vertex_points[pv(4, 0)].clone(),
        ],
    );
    let left_x = coord(-(2 * left_count as i128 + 1));
    table.insert(
        pv(1, 0),
        pv(5, 0),
        vec![
            vertex_points[pv(1, 0)].clone(),
            pt(frac(-1, 100), frac(-7, 2)),
            pt(left_x.clone(), frac(-7, 2)),
            pt(left_x, frac(7, 2)),
            pt(frac(-1, 100), frac(7, 2)),
            vertex_points[pv(5, 0)].clone(),
        ],
    );
    table.into_drawing(product, vertex_points)
}
