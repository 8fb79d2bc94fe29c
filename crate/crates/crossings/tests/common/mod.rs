//! Shared test oracles, independent of the library's own algorithms.

#![allow(dead_code)]

use crossings::graph::Graph;
use itertools::Itertools;

/// Brute-force planarity oracle for graphs of order at most ~8: a graph is
/// planar iff it contains no subdivision of K5 or K3,3. The subdivision
/// search enumerates branch-vertex sets directly and assigns the remaining
/// vertices as internal path vertices.
pub fn planar_by_kuratowski(g: &Graph) -> bool {
    !(has_subdivision(g, &k5_pairs(), 5, 4) || has_k33_subdivision(g))
}

fn k5_pairs() -> Vec<(usize, usize)> {
    (0..5).tuple_combinations().collect()
}

/// Searches for a subdivision of the pattern whose branch pairs are given on
/// vertices `0..branch_count`, each branch vertex needing degree at least
/// `min_degree` in the host.
fn has_subdivision(g: &Graph, pattern_pairs: &[(usize, usize)], branch_count: usize, min_degree: usize) -> bool {
    let n = g.order();
    let adj = g.adjacency();
    let deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let candidates: Vec<usize> = (0..n).filter(|&v| deg[v] >= min_degree).collect();
    if candidates.len() < branch_count {
        return false;
    }
    for branch in candidates.iter().copied().combinations(branch_count) {
        let extras: Vec<usize> = (0..n)
            .filter(|&v| deg[v] >= 2 && !branch.contains(&v))
            .collect();
        let pairs: Vec<(usize, usize)> = pattern_pairs
            .iter()
            .map(|&(a, b)| (branch[a], branch[b]))
            .collect();
        if assign_paths(g, &pairs, &extras, &mut vec![false; n]) {
            return true;
        }
    }
    false
}

fn has_k33_subdivision(g: &Graph) -> bool {
    let n = g.order();
    let deg: Vec<usize> = g.adjacency().iter().map(Vec::len).collect();
    let candidates: Vec<usize> = (0..n).filter(|&v| deg[v] >= 3).collect();
    if candidates.len() < 6 {
        return false;
    }
    for six in candidates.iter().copied().combinations(6) {
        // Split the six branch vertices into two sides; fixing the first
        // vertex on the left side kills the side symmetry.
        for rest in six[1..].iter().copied().combinations(2) {
            let left = [six[0], rest[0], rest[1]];
            let right: Vec<usize> = six[1..]
                .iter()
                .copied()
                .filter(|v| !rest.contains(v))
                .collect();
            let pairs: Vec<(usize, usize)> = left
                .iter()
                .cartesian_product(right.iter())
                .map(|(&a, &b)| (a, b))
                .collect();
            let extras: Vec<usize> = (0..n)
                .filter(|&v| deg[v] >= 2 && !six.contains(&v))
                .collect();
            if assign_paths(g, &pairs, &extras, &mut vec![false; n]) {
                return true;
            }
        }
    }
    false
}

/// Recursively routes one internally disjoint path per pair, drawing
/// internal vertices from `extras` (each usable once).
fn assign_paths(g: &Graph, pairs: &[(usize, usize)], extras: &[usize], used: &mut Vec<bool>) -> bool {
    let Some(&(u, v)) = pairs.first() else {
        return true;
    };
    let rest = &pairs[1..];
    if g.has_edge(u, v) && assign_paths(g, rest, extras, used) {
        return true;
    }
    // Paths through one or two internal vertices cover hosts with up to two
    // spare vertices; longer paths recurse further if more spares exist.
    let free: Vec<usize> = extras.iter().copied().filter(|&x| !used[x]).collect();
    for seq_len in 1..=free.len() {
        for seq in free.iter().copied().permutations(seq_len) {
            let mut prev = u;
            let mut ok = true;
            for &x in &seq {
                if !g.has_edge(prev, x) {
                    ok = false;
                    break;
                }
                prev = x;
            }
            if !ok || !g.has_edge(prev, v) {
                continue;
            }
            for &x in &seq {
                used[x] = true;
            }
            if assign_paths(g, rest, extras, used) {
                return true;
            }
            for &x in &seq {
                used[x] = false;
            }
        }
    }
    false
}

/// Deterministic random graph on `n` vertices with edge probability
/// `num/den`, from a simple LCG so the corpus is stable across runs.
pub fn random_graph(n: usize, num: u64, den: u64, seed: &mut u64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            *seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            if (*seed >> 33) % den < num {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}
