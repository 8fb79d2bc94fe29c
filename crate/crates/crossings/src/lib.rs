//! Crossing numbers of Cartesian products of small graphs with paths,
//! cycles and stars.
//!
//! The crate bundles:
//! - core graph types, products and subgraph search ([`graph`]);
//! - graph6 encoding ([`graph6`]) and an indexed atlas of the relevant
//!   four- and six-vertex graphs ([`atlas`]);
//! - LR planarity testing with combinatorial embeddings ([`planarity`]);
//! - exact rational polyline drawings, crossing counting, planarization and
//!   SVG export ([`geometry`]);
//! - constructive drawing generators for ten product families
//!   ([`families`]);
//! - a small exact crossing-number solver ([`solver`]) and a randomized
//!   planarization heuristic with verifiable witnesses ([`heuristic`]);
//! - a database of published crossing-number formulas with interval
//!   inference ([`kb`]).

pub mod atlas;
pub mod families;
pub mod geometry;
pub mod graph;
pub mod graph6;
pub mod heuristic;
pub mod kb;
pub mod planarity;
pub mod solver;
