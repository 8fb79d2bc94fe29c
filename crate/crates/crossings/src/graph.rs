//! Simple undirected graphs on vertex sets `0..order`, together with the
//! elementary constructors, Cartesian products, and exact subgraph /
//! isomorphism search used throughout the crate.
//!
//! All graphs here are small (a few hundred vertices at most), so edges are
//! kept in a sorted set and the combinatorial searches are plain backtracking
//! with degree pruning.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// Errors produced by graph constructors and mutators.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop at vertex {0} is not allowed in a simple graph")]
    Loop(usize),
    #[error("{family} requires n >= {min}, got n = {n}")]
    ParameterTooSmall {
        family: &'static str,
        min: usize,
        n: usize,
    },
    #[error("complete bipartite graphs need both part sizes to be positive")]
    EmptyPart,
}

/// An undirected simple graph with vertices `0..order`.
///
/// Equality and hashing compare structure only (order and edge set); the
/// optional display name is ignored.
#[derive(Clone, Debug)]
pub struct Graph {
    order: usize,
    edges: BTreeSet<(usize, usize)>,
    name: Option<String>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.order.hash(state);
        self.edges.hash(state);
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.name {
            Some(name) => write!(f, "{} (n={}, m={})", name, self.order, self.edges.len()),
            None => write!(f, "graph (n={}, m={})", self.order, self.edges.len()),
        }
    }
}

impl Graph {
    /// An edgeless graph on `order` vertices.
    pub fn new(order: usize) -> Self {
        Graph {
            order,
            edges: BTreeSet::new(),
            name: None,
        }
    }

    /// Builds a graph from an edge list. Vertices must lie in `0..order` and
    /// loops are rejected; duplicate edges collapse silently.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(order);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Attaches a display name, used only in diagnostics.
    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = Some(name.into());
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Inserts the undirected edge `{u, v}`.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::Loop(u));
        }
        for w in [u, v] {
            if w >= self.order {
                return Err(GraphError::VertexOutOfRange {
                    vertex: w,
                    order: self.order,
                });
            }
        }
        self.edges.insert((u.min(v), u.max(v)));
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// Edges in sorted order, each as `(u, v)` with `u < v`. This ordering is
    /// the canonical edge indexing used by drawings and planarizations.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    /// Sorted edge list as a vector (see [`Graph::edges`]).
    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.edges.iter().copied().collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// Adjacency lists, each sorted ascending.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.order];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        adj
    }

    /// Non-increasing degree sequence.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degs: Vec<usize> = self.adjacency().iter().map(Vec::len).collect();
        degs.sort_unstable_by(|a, b| b.cmp(a));
        degs
    }

    /// Connected components as sorted vertex lists, ordered by smallest
    /// member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.order];
        let mut comps = Vec::new();
        for start in 0..self.order {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.order <= 1 || self.components().len() == 1
    }

    /// The subgraph induced on `vertices` (which must be sorted and
    /// duplicate-free), with vertices relabelled to `0..vertices.len()`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.order];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::new(vertices.len());
        for &(u, v) in &self.edges {
            if index[u] != usize::MAX && index[v] != usize::MAX {
                g.add_edge(index[u], index[v]).expect("relabelled edge");
            }
        }
        g
    }
}

/// The elementary graph families used as product factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Elementary {
    /// Path with `n` edges on `n + 1` vertices, `0 - 1 - ... - n`.
    Path,
    /// Cycle on `n` vertices (`n >= 3`).
    Cycle,
    /// Star with `n` leaves on `n + 1` vertices; the hub is vertex `0`.
    Star,
    /// Complete graph on `n` vertices.
    Complete,
    /// Complete bipartite graph with parts `0..n` and `n..n + m`.
    CompleteBipartite,
}

/// Builds one of the elementary families. `m` is only used (and required to
/// be positive) for [`Elementary::CompleteBipartite`].
pub fn build_elementary(kind: Elementary, n: usize, m: usize) -> Result<Graph, GraphError> {
    match kind {
        Elementary::Path => {
            if n == 0 {
                return Err(GraphError::ParameterTooSmall {
                    family: "path",
                    min: 1,
                    n,
                });
            }
            let mut g = Graph::new(n + 1);
            for i in 0..n {
                g.add_edge(i, i + 1)?;
            }
            Ok(g.with_name(format!("P{n}")))
        }
        Elementary::Cycle => {
            if n < 3 {
                return Err(GraphError::ParameterTooSmall {
                    family: "cycle",
                    min: 3,
                    n,
                });
            }
            let mut g = Graph::new(n);
            for i in 0..n {
                g.add_edge(i, (i + 1) % n)?;
            }
            Ok(g.with_name(format!("C{n}")))
        }
        Elementary::Star => {
            if n == 0 {
                return Err(GraphError::ParameterTooSmall {
                    family: "star",
                    min: 1,
                    n,
                });
            }
            let mut g = Graph::new(n + 1);
            for i in 1..=n {
                g.add_edge(0, i)?;
            }
            Ok(g.with_name(format!("S{n}")))
        }
        Elementary::Complete => {
            if n == 0 {
                return Err(GraphError::ParameterTooSmall {
                    family: "complete",
                    min: 1,
                    n,
                });
            }
            let mut g = Graph::new(n);
            for u in 0..n {
                for v in (u + 1)..n {
                    g.add_edge(u, v)?;
                }
            }
            Ok(g.with_name(format!("K{n}")))
        }
        Elementary::CompleteBipartite => {
            if n == 0 || m == 0 {
                return Err(GraphError::EmptyPart);
            }
            let mut g = Graph::new(n + m);
            for u in 0..n {
                for v in n..(n + m) {
                    g.add_edge(u, v)?;
                }
            }
            Ok(g.with_name(format!("K{n},{m}")))
        }
    }
}

/// Cartesian product `g x h`. Vertex `(i, j)` of the product is flattened
/// row-major to `i * h.order() + j`, so copy `i` of `h` occupies a contiguous
/// block. Both factors must be non-empty.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    assert!(
        g.order() > 0 && h.order() > 0,
        "cartesian product factors must be non-empty"
    );
    let nh = h.order();
    let mut p = Graph::new(g.order() * nh);
    for i in 0..g.order() {
        for (a, b) in h.edges() {
            p.add_edge(i * nh + a, i * nh + b).expect("product edge");
        }
    }
    for (u, v) in g.edges() {
        for j in 0..nh {
            p.add_edge(u * nh + j, v * nh + j).expect("product edge");
        }
    }
    let gname = g.name.clone().unwrap_or_else(|| "G".into());
    let hname = h.name.clone().unwrap_or_else(|| "H".into());
    p.with_name(format!("{gname} x {hname}"))
}

/// Searches for a subgraph embedding of `pattern` into `host`: an injective
/// vertex map under which every edge of `pattern` maps to an edge of `host`
/// (not necessarily induced). Returns the image vector `phi` with
/// `phi[u] = image of u`, or `None`.
pub fn subgraph_embedding(pattern: &Graph, host: &Graph) -> Option<Vec<usize>> {
    if pattern.order() > host.order() || pattern.edge_count() > host.edge_count() {
        return None;
    }
    let pat_adj = pattern.adjacency();
    let host_adj = host.adjacency();
    let host_deg: Vec<usize> = host_adj.iter().map(Vec::len).collect();

    // Order pattern vertices by decreasing degree, preferring vertices with
    // many already-placed neighbours, so edge constraints bind early.
    let mut order: Vec<usize> = Vec::with_capacity(pattern.order());
    let mut placed = vec![false; pattern.order()];
    for _ in 0..pattern.order() {
        let next = (0..pattern.order())
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let anchored = pat_adj[v].iter().filter(|&&w| placed[w]).count();
                (anchored, pat_adj[v].len())
            })
            .expect("unplaced vertex exists");
        placed[next] = true;
        order.push(next);
    }

    let mut phi = vec![usize::MAX; pattern.order()];
    let mut used = vec![false; host.order()];

    fn extend(
        depth: usize,
        order: &[usize],
        pat_adj: &[Vec<usize>],
        host_adj: &[Vec<usize>],
        host_deg: &[usize],
        host: &Graph,
        phi: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let u = order[depth];
        for cand in 0..host.order() {
            if used[cand] || host_deg[cand] < pat_adj[u].len() {
                continue;
            }
            let ok = pat_adj[u]
                .iter()
                .filter(|&&w| phi[w] != usize::MAX)
                .all(|&w| host_adj[cand].binary_search(&phi[w]).is_ok());
            if !ok {
                continue;
            }
            phi[u] = cand;
            used[cand] = true;
            if extend(
                depth + 1,
                order,
                pat_adj,
                host_adj,
                host_deg,
                host,
                phi,
                used,
            ) {
                return true;
            }
            phi[u] = usize::MAX;
            used[cand] = false;
        }
        false
    }

    if extend(
        0, &order, &pat_adj, &host_adj, &host_deg, host, &mut phi, &mut used,
    ) {
        Some(phi)
    } else {
        None
    }
}

/// Whether `pattern` embeds into `host` as a (not necessarily induced)
/// subgraph.
pub fn is_subgraph_of(pattern: &Graph, host: &Graph) -> bool {
    subgraph_embedding(pattern, host).is_some()
}

/// Exact isomorphism test. For equal orders and edge counts an injective
/// edge-preserving map is automatically an isomorphism, so this reduces to a
/// subgraph search after cheap invariant checks.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.edge_count() == h.edge_count()
        && g.degree_sequence() == h.degree_sequence()
        && subgraph_embedding(g, h).is_some()
}
