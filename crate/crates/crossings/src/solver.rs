//! Exact crossing-number computation for tiny graphs.
//!
//! The search space is the good-drawing normal form: a drawing is abstracted
//! to the set of edge pairs that cross (each pair at most once, never two
//! adjacent edges) plus, for every edge crossed more than once, the order of
//! its crossings. Realizability of such a configuration is decided by
//! replacing each crossing with a degree-4 vertex and testing planarity.
//! Restricting to this normal form preserves optimality (a classical fact
//! about optimal drawings, relied on here as an external mathematical
//! dependency).

use std::collections::{BTreeMap, HashMap};
use std::time::Instant;

use itertools::Itertools;
use rayon::prelude::*;
use thiserror::Error;

use crate::geometry::Crossing;
use crate::graph::Graph;
use crate::planarity::is_planar;

/// An abstract set of crossings: which independent edge pairs cross, and in
/// what order along each multiply-crossed edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingConfig {
    /// Unordered pairs of edge indices, smaller first, sorted.
    pub pairs: Vec<(usize, usize)>,
    /// For each edge crossed at least twice: its crossing partners in the
    /// order they occur along the edge.
    pub edge_orders: BTreeMap<usize, Vec<usize>>,
}

impl CrossingConfig {
    pub fn empty() -> Self {
        CrossingConfig { pairs: Vec::new(), edge_orders: BTreeMap::new() }
    }

    pub fn crossings(&self) -> usize {
        self.pairs.len()
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConfigError {
    #[error("edge index {edge} out of range for a graph with {edges} edges")]
    EdgeOutOfRange { edge: usize, edges: usize },
    #[error("edges {e} and {f} share an endpoint and may not cross")]
    AdjacentPair { e: usize, f: usize },
    #[error("pair ({e}, {f}) listed twice")]
    DuplicatePair { e: usize, f: usize },
    #[error("edge {edge} crossed {crossings} times but its order lists {listed} partners")]
    OrderMismatch { edge: usize, crossings: usize, listed: usize },
    #[error("edge {edge} has a crossing order but fewer than two crossings")]
    SpuriousOrder { edge: usize },
}

/// Replaces each crossing of `c` by a new degree-4 vertex. Dummy vertices
/// are numbered `g.order() + i` following the sorted pair list; each edge is
/// subdivided by its crossing vertices in declared order.
pub fn build_planarization(g: &Graph, c: &CrossingConfig) -> Result<Graph, ConfigError> {
    let edge_list = g.edge_list();
    let m = edge_list.len();
    let mut partners: HashMap<usize, Vec<usize>> = HashMap::new();
    let mut seen = std::collections::HashSet::new();
    for &(e, f) in &c.pairs {
        for idx in [e, f] {
            if idx >= m {
                return Err(ConfigError::EdgeOutOfRange { edge: idx, edges: m });
            }
        }
        let (eu, ev) = edge_list[e];
        let (fu, fv) = edge_list[f];
        if e == f || eu == fu || eu == fv || ev == fu || ev == fv {
            return Err(ConfigError::AdjacentPair { e, f });
        }
        let key = (e.min(f), e.max(f));
        if !seen.insert(key) {
            return Err(ConfigError::DuplicatePair { e: key.0, f: key.1 });
        }
        partners.entry(e).or_default().push(f);
        partners.entry(f).or_default().push(e);
    }
    for (&edge, order) in &c.edge_orders {
        let crossings = partners.get(&edge).map_or(0, Vec::len);
        if crossings < 2 {
            return Err(ConfigError::SpuriousOrder { edge });
        }
        let mut declared: Vec<usize> = order.clone();
        let mut actual = partners[&edge].clone();
        declared.sort_unstable();
        actual.sort_unstable();
        if declared != actual {
            return Err(ConfigError::OrderMismatch {
                edge,
                crossings,
                listed: order.len(),
            });
        }
    }
    for (&edge, list) in &partners {
        if list.len() >= 2 && !c.edge_orders.contains_key(&edge) {
            return Err(ConfigError::OrderMismatch {
                edge,
                crossings: list.len(),
                listed: 0,
            });
        }
    }

    // Dummy vertex per sorted pair.
    let mut sorted_pairs: Vec<(usize, usize)> =
        c.pairs.iter().map(|&(e, f)| (e.min(f), e.max(f))).collect();
    sorted_pairs.sort_unstable();
    let dummy_of: HashMap<(usize, usize), usize> = sorted_pairs
        .iter()
        .enumerate()
        .map(|(i, &p)| (p, g.order() + i))
        .collect();

    let mut out = Graph::new(g.order() + sorted_pairs.len());
    for (e, &(u, v)) in edge_list.iter().enumerate() {
        let chain: Vec<usize> = match partners.get(&e) {
            None => Vec::new(),
            Some(list) if list.len() == 1 => {
                vec![dummy_of[&(e.min(list[0]), e.max(list[0]))]]
            }
            Some(_) => c.edge_orders[&e]
                .iter()
                .map(|&f| dummy_of[&(e.min(f), e.max(f))])
                .collect(),
        };
        let mut prev = u;
        for d in chain {
            out.add_edge(prev, d).expect("planarization edge");
            prev = d;
        }
        out.add_edge(prev, v).expect("planarization edge");
    }
    Ok(out)
}

/// Resource limits for one solver call.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    pub max_configs: u64,
    pub max_seconds: f64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_configs: 10_000_000, max_seconds: 300.0 }
    }
}

/// Outcome of a `cr(g) <= k` decision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    /// A realizable configuration with at most `k` crossings (the
    /// lexicographically least one).
    Yes(CrossingConfig),
    /// Exhaustively refuted.
    No,
    /// Neither confirmed nor refuted within budget.
    BudgetExhausted,
}

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct SolverStats {
    pub configs_tested: u64,
    pub elapsed_seconds: f64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExactVerdict {
    Exact(usize),
    /// All levels below `k` exhausted; `budget_exhausted` distinguishes
    /// "ran out of budget at level k" from "searched every level up to the
    /// cap".
    AtLeast { k: usize, budget_exhausted: bool },
}

#[derive(Clone, Debug)]
pub struct ExactResult {
    pub verdict: ExactVerdict,
    pub certificate: Option<CrossingConfig>,
    pub stats: SolverStats,
}

/// All unordered pairs of independent (non-adjacent) edges, sorted.
fn independent_pairs(g: &Graph) -> Vec<(usize, usize)> {
    let edge_list = g.edge_list();
    let mut pairs = Vec::new();
    for e in 0..edge_list.len() {
        for f in e + 1..edge_list.len() {
            let (eu, ev) = edge_list[e];
            let (fu, fv) = edge_list[f];
            if eu != fu && eu != fv && ev != fu && ev != fv {
                pairs.push((e, f));
            }
        }
    }
    pairs
}

/// Enumerates the order variants of a pair set (identity if no edge is
/// crossed twice) and tests each planarization. Returns the first
/// realizable variant and the number tested.
fn test_pair_set(g: &Graph, pairs: &[(usize, usize)]) -> (u64, Option<CrossingConfig>) {
    let mut partners: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(e, f) in pairs {
        partners.entry(e).or_default().push(f);
        partners.entry(f).or_default().push(e);
    }
    let multi: Vec<(usize, Vec<usize>)> = partners
        .into_iter()
        .filter(|(_, list)| list.len() >= 2)
        .collect();
    let mut tested = 0u64;
    let mut try_config = |edge_orders: BTreeMap<usize, Vec<usize>>| -> Option<CrossingConfig> {
        let config = CrossingConfig { pairs: pairs.to_vec(), edge_orders };
        let planarized = build_planarization(g, &config).expect("enumerated config is valid");
        tested += 1;
        is_planar(&planarized).then_some(config)
    };
    if multi.is_empty() {
        let hit = try_config(BTreeMap::new());
        return (tested, hit);
    }
    // Cartesian product of partner permutations, in lexicographic order.
    let permutation_sets: Vec<Vec<Vec<usize>>> = multi
        .iter()
        .map(|(_, list)| {
            let mut sorted = list.clone();
            sorted.sort_unstable();
            let k = sorted.len();
            sorted.into_iter().permutations(k).collect()
        })
        .collect();
    for choice in permutation_sets
        .into_iter()
        .multi_cartesian_product()
    {
        let edge_orders: BTreeMap<usize, Vec<usize>> = multi
            .iter()
            .map(|(edge, _)| *edge)
            .zip(choice)
            .collect();
        if let Some(config) = try_config(edge_orders) {
            return (tested, Some(config));
        }
    }
    (tested, None)
}

/// Decides whether `cr(g) <= k` by exhaustive enumeration of crossing
/// configurations with at most `k` pairs, in lexicographic order over the
/// sorted independent-pair list. Chunks are searched in parallel but the
/// reported certificate is the lexicographically least success.
pub fn decide_cr_at_most(g: &Graph, k: usize, budget: &Budget) -> Decision {
    let (decision, _) = decide_with_stats(g, k, budget);
    decision
}

fn decide_with_stats(g: &Graph, k: usize, budget: &Budget) -> (Decision, SolverStats) {
    let start = Instant::now();
    let mut stats = SolverStats::default();
    if is_planar(g) {
        stats.configs_tested = 1;
        stats.elapsed_seconds = start.elapsed().as_secs_f64();
        return (Decision::Yes(CrossingConfig::empty()), stats);
    }
    stats.configs_tested = 1;
    let pairs = independent_pairs(g);
    const CHUNK: usize = 2048;
    for size in 1..=k {
        if size > pairs.len() {
            break;
        }
        let mut combos = (0..pairs.len()).combinations(size);
        loop {
            let chunk: Vec<Vec<usize>> = combos.by_ref().take(CHUNK).collect();
            if chunk.is_empty() {
                break;
            }
            let results: Vec<(u64, Option<CrossingConfig>)> = chunk
                .par_iter()
                .map(|combo| {
                    let selected: Vec<(usize, usize)> =
                        combo.iter().map(|&i| pairs[i]).collect();
                    test_pair_set(g, &selected)
                })
                .collect();
            for (tested, hit) in results {
                stats.configs_tested += tested;
                if let Some(config) = hit {
                    stats.elapsed_seconds = start.elapsed().as_secs_f64();
                    return (Decision::Yes(config), stats);
                }
            }
            if stats.configs_tested >= budget.max_configs
                || start.elapsed().as_secs_f64() >= budget.max_seconds
            {
                stats.elapsed_seconds = start.elapsed().as_secs_f64();
                return (Decision::BudgetExhausted, stats);
            }
        }
    }
    stats.elapsed_seconds = start.elapsed().as_secs_f64();
    (Decision::No, stats)
}

/// Iterative deepening: the least `k <= k_max` with `cr(g) <= k`, or a
/// certified lower bound.
pub fn compute_crossing_number_exact(g: &Graph, k_max: usize, budget: &Budget) -> ExactResult {
    let start = Instant::now();
    let mut stats = SolverStats::default();
    for k in 0..=k_max {
        let remaining = Budget {
            max_configs: budget.max_configs.saturating_sub(stats.configs_tested),
            max_seconds: budget.max_seconds - start.elapsed().as_secs_f64(),
        };
        let (decision, level_stats) = decide_with_stats(g, k, &remaining);
        stats.configs_tested += level_stats.configs_tested;
        stats.elapsed_seconds = start.elapsed().as_secs_f64();
        match decision {
            Decision::Yes(config) => {
                return ExactResult {
                    verdict: ExactVerdict::Exact(k),
                    certificate: Some(config),
                    stats,
                }
            }
            Decision::No => {}
            Decision::BudgetExhausted => {
                return ExactResult {
                    verdict: ExactVerdict::AtLeast { k, budget_exhausted: true },
                    certificate: None,
                    stats,
                }
            }
        }
    }
    ExactResult {
        verdict: ExactVerdict::AtLeast { k: k_max + 1, budget_exhausted: false },
        certificate: None,
        stats,
    }
}

/// Abstracts the crossings of a validated drawing into a configuration,
/// ordering multiply-crossed edges by position along their paths.
pub fn config_from_crossings(crossings: &[Crossing]) -> CrossingConfig {
    let mut pairs: Vec<(usize, usize)> = crossings.iter().map(|c| c.edges).collect();
    pairs.sort_unstable();
    let mut along_partner: HashMap<usize, Vec<(crate::geometry::PathParam, usize)>> =
        HashMap::new();
    for c in crossings {
        let (e, f) = c.edges;
        along_partner.entry(e).or_default().push((c.along[0].clone(), f));
        along_partner.entry(f).or_default().push((c.along[1].clone(), e));
    }
    let mut edge_orders = BTreeMap::new();
    for (edge, mut list) in along_partner {
        if list.len() >= 2 {
            list.sort_by(|a, b| a.0.cmp(&b.0));
            edge_orders.insert(edge, list.into_iter().map(|(_, f)| f).collect());
        }
    }
    CrossingConfig { pairs, edge_orders }
}
