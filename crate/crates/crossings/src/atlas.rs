//! The bundled atlas of small graphs, keyed `order.index` following Harary's
//! numbering of the graphs on a fixed number of vertices, together with the
//! subgraph relations that the results database relies on.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use thiserror::Error;

use crate::graph::{is_subgraph_of, Graph};
use crate::graph6::{parse_graph6, Graph6Error};

/// Atlas key: `(order, index)`, printed as `order.index`.
pub type AtlasKey = (u8, u32);

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AtlasError {
    #[error("line {line}: expected '<order>.<index> <graph6>', got {content:?}")]
    MalformedLine { line: usize, content: String },
    #[error("line {line}: bad graph6 for key {order}.{index}: {source}")]
    BadGraph6 {
        line: usize,
        order: u8,
        index: u32,
        source: Graph6Error,
    },
    #[error("line {line}: key {order}.{index} declares order {order} but graph6 decodes to order {actual}")]
    OrderMismatch {
        line: usize,
        order: u8,
        index: u32,
        actual: usize,
    },
    #[error("line {line}: duplicate key {order}.{index}")]
    DuplicateKey { line: usize, order: u8, index: u32 },
    #[error("required key {order}.{index} is missing from the atlas")]
    MissingKey { order: u8, index: u32 },
}

/// Every key that the bundled results database or a relation check refers
/// to. `load_atlas` demands all of them.
pub const REQUIRED_KEYS: &[AtlasKey] = &[
    (4, 1),
    (4, 2),
    (4, 3),
    (4, 4),
    (4, 5),
    (4, 6),
    (6, 25),
    (6, 26),
    (6, 27),
    (6, 28),
    (6, 29),
    (6, 31),
    (6, 40),
    (6, 41),
    (6, 42),
    (6, 43),
    (6, 44),
    (6, 45),
    (6, 46),
    (6, 47),
    (6, 48),
    (6, 49),
    (6, 51),
    (6, 53),
    (6, 54),
    (6, 59),
    (6, 60),
    (6, 61),
    (6, 62),
    (6, 63),
    (6, 64),
    (6, 65),
    (6, 66),
    (6, 67),
    (6, 70),
    (6, 72),
    (6, 73),
    (6, 74),
    (6, 75),
    (6, 77),
    (6, 78),
    (6, 79),
    (6, 80),
    (6, 83),
    (6, 84),
    (6, 85),
    (6, 86),
    (6, 89),
    (6, 90),
    (6, 92),
    (6, 93),
    (6, 94),
    (6, 98),
    (6, 103),
    (6, 104),
    (6, 109),
    (6, 110),
    (6, 111),
    (6, 113),
    (6, 118),
    (6, 119),
    (6, 120),
    (6, 121),
    (6, 124),
    (6, 125),
    (6, 130),
    (6, 137),
    (6, 146),
    (6, 152),
    (6, 154),
    (6, 155),
    (6, 156),
];

/// A loaded atlas: key -> graph. Iteration order is by key.
pub type Atlas = BTreeMap<AtlasKey, Graph>;

/// Parses an atlas from text. Each non-comment line is
/// `<order>.<index> <graph6>`; `#` starts a comment and blank lines are
/// skipped. Duplicate keys, malformed lines and missing required keys are
/// errors.
pub fn load_atlas(text: &str) -> Result<Atlas, AtlasError> {
    let mut atlas = Atlas::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let malformed = || AtlasError::MalformedLine {
            line: line_no,
            content: raw.to_string(),
        };
        let (key_part, g6_part) = line.split_once(char::is_whitespace).ok_or_else(malformed)?;
        let (order_s, index_s) = key_part.split_once('.').ok_or_else(malformed)?;
        let order: u8 = order_s.parse().map_err(|_| malformed())?;
        let index: u32 = index_s.parse().map_err(|_| malformed())?;
        let g6 = g6_part.trim();
        if g6.is_empty() || g6.contains(char::is_whitespace) {
            return Err(malformed());
        }
        let graph = parse_graph6(g6).map_err(|source| AtlasError::BadGraph6 {
            line: line_no,
            order,
            index,
            source,
        })?;
        if graph.order() != order as usize {
            return Err(AtlasError::OrderMismatch {
                line: line_no,
                order,
                index,
                actual: graph.order(),
            });
        }
        let named = graph.with_name(format!("{order}.{index}"));
        if atlas.insert((order, index), named).is_some() {
            return Err(AtlasError::DuplicateKey {
                line: line_no,
                order,
                index,
            });
        }
    }
    for &(order, index) in REQUIRED_KEYS {
        if !atlas.contains_key(&(order, index)) {
            return Err(AtlasError::MissingKey { order, index });
        }
    }
    Ok(atlas)
}

/// The atlas bundled with the crate.
pub fn bundled_atlas() -> &'static Atlas {
    static ATLAS: OnceLock<Atlas> = OnceLock::new();
    ATLAS.get_or_init(|| {
        load_atlas(include_str!("../data/atlas.g6")).expect("bundled atlas is valid")
    })
}

/// Raw text of the bundled atlas, for callers that persist a copy.
pub fn bundled_atlas_text() -> &'static str {
    include_str!("../data/atlas.g6")
}

/// Outcome of one pairwise containment check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelationStatus {
    Pass,
    Fail,
    MissingEntry,
}

/// One pairwise containment `sub ⊆ sup` inside a named relation.
#[derive(Clone, Debug)]
pub struct PairCheck {
    pub sub: AtlasKey,
    pub sup: AtlasKey,
    pub status: RelationStatus,
}

/// A named subgraph relation from the results database, with all of its
/// pairwise checks. A chain or sandwich counts as a single relation.
#[derive(Clone, Debug)]
pub struct RelationCheck {
    pub name: String,
    pub pairs: Vec<PairCheck>,
}

impl RelationCheck {
    pub fn status(&self) -> RelationStatus {
        if self.pairs.iter().any(|p| p.status == RelationStatus::Fail) {
            RelationStatus::Fail
        } else if self
            .pairs
            .iter()
            .any(|p| p.status == RelationStatus::MissingEntry)
        {
            RelationStatus::MissingEntry
        } else {
            RelationStatus::Pass
        }
    }
}

#[derive(Clone, Debug)]
pub struct RelationReport {
    pub relations: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_pass(&self) -> bool {
        self.relations
            .iter()
            .all(|r| r.status() == RelationStatus::Pass)
    }
}

fn k6(i: u32) -> AtlasKey {
    (6, i)
}

/// The subgraph relations used by the bounds in the results database: a
/// sandwich, two chains, and thirteen single containments.
fn relation_table() -> Vec<(&'static str, Vec<(AtlasKey, AtlasKey)>)> {
    vec![
        (
            "6.40 ⊆ {6.59, 6.60, 6.83, 6.90} ⊆ 6.113",
            vec![
                (k6(40), k6(59)),
                (k6(40), k6(60)),
                (k6(40), k6(83)),
                (k6(40), k6(90)),
                (k6(59), k6(113)),
                (k6(60), k6(113)),
                (k6(83), k6(113)),
                (k6(90), k6(113)),
            ],
        ),
        ("6.41 ⊆ 6.66", vec![(k6(41), k6(66))]),
        ("6.66 ⊆ 6.98", vec![(k6(66), k6(98))]),
        ("6.41 ⊆ 6.70", vec![(k6(41), k6(70))]),
        ("6.70 ⊆ 6.98", vec![(k6(70), k6(98))]),
        ("6.42 ⊆ 6.63", vec![(k6(42), k6(63))]),
        ("6.47 ⊆ 6.64", vec![(k6(47), k6(64))]),
        ("6.49 ⊆ 6.75", vec![(k6(49), k6(75))]),
        ("6.53 ⊆ 6.77", vec![(k6(53), k6(77))]),
        ("6.67 ⊆ 6.92", vec![(k6(67), k6(92))]),
        ("6.84 ⊆ 6.110", vec![(k6(84), k6(110))]),
        ("6.121 ⊆ 6.137", vec![(k6(121), k6(137))]),
        ("6.27 ⊆ 6.62", vec![(k6(27), k6(62))]),
        ("6.93 ⊆ 6.121", vec![(k6(93), k6(121))]),
        ("6.46 ⊆ 6.60", vec![(k6(46), k6(60))]),
        ("4.3 ⊆ 6.46", vec![((4, 3), k6(46))]),
    ]
}

/// Checks every named subgraph relation against `atlas`. Missing entries are
/// reported per pair rather than failing the whole validation.
pub fn validate_atlas_relations(atlas: &Atlas) -> RelationReport {
    let relations = relation_table()
        .into_iter()
        .map(|(name, pairs)| RelationCheck {
            name: name.to_string(),
            pairs: pairs
                .into_iter()
                .map(|(sub, sup)| {
                    let status = match (atlas.get(&sub), atlas.get(&sup)) {
                        (Some(g_sub), Some(g_sup)) => {
                            if is_subgraph_of(g_sub, g_sup) {
                                RelationStatus::Pass
                            } else {
                                RelationStatus::Fail
                            }
                        }
                        _ => RelationStatus::MissingEntry,
                    };
                    PairCheck { sub, sup, status }
                })
                .collect(),
        })
        .collect();
    RelationReport { relations }
}

/// Formats an atlas key as `order.index`.
pub fn key_string(key: AtlasKey) -> String {
    format!("{}.{}", key.0, key.1)
}

/// Parses `order.index` into an atlas key.
pub fn parse_key(s: &str) -> Option<AtlasKey> {
    let (o, i) = s.split_once('.')?;
    Some((o.parse().ok()?, i.parse().ok()?))
}
