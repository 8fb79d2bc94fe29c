//! Planarity testing via the left-right (LR) criterion, returning a
//! combinatorial embedding (rotation system) for planar inputs, plus face
//! extraction with an Euler-formula consistency check.
//!
//! The tester is the classic LR algorithm: orient the graph by DFS while
//! computing low-points and nesting depths, replay the DFS maintaining a
//! stack of conflict pairs of back-edge intervals, then derive the rotation
//! system from the resolved edge sides. All three phases use explicit
//! stacks, so deep planarized product graphs cannot overflow the call stack.

use std::collections::HashMap;

use thiserror::Error;

use crate::graph::Graph;

/// A combinatorial embedding: for every vertex, its neighbours in cyclic
/// (clockwise) order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    rotation: Vec<Vec<usize>>,
}

impl Embedding {
    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn order(&self) -> usize {
        self.rotation.len()
    }

    /// All rotations; index = vertex.
    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotation
    }
}

/// Result of a planarity test.
#[derive(Clone, Debug)]
pub enum Planarity {
    Planar(Embedding),
    NonPlanar,
}

impl Planarity {
    pub fn is_planar(&self) -> bool {
        matches!(self, Planarity::Planar(_))
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EmbeddingError {
    #[error("face extraction requires a connected graph")]
    Disconnected,
    #[error("embedding rotation at vertex {0} does not match the graph's adjacency")]
    RotationMismatch(usize),
    #[error("embedding violates Euler's formula: V={v}, E={e}, F={f}")]
    EulerViolation { v: usize, e: usize, f: usize },
}

/// Convenience wrapper for callers that only need the boolean.
pub fn is_planar(g: &Graph) -> bool {
    check_planarity(g).is_planar()
}

/// Tests planarity and, on success, returns a rotation system covering all
/// components of `g`.
pub fn check_planarity(g: &Graph) -> Planarity {
    let n = g.order();
    let m = g.edge_count();
    if n >= 3 && m > 3 * n - 6 {
        return Planarity::NonPlanar;
    }
    match LrState::new(g).run() {
        Some(embedding) => Planarity::Planar(embedding),
        None => Planarity::NonPlanar,
    }
}

type EdgeId = usize;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
struct Interval {
    low: Option<EdgeId>,
    high: Option<EdgeId>,
}

impl Interval {
    fn empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Clone, Copy, Debug, Default)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

struct LrState {
    n: usize,
    adj: Vec<Vec<usize>>,
    // Vertex state.
    height: Vec<Option<usize>>,
    parent_edge: Vec<Option<EdgeId>>,
    roots: Vec<usize>,
    // Directed edges of the DFS orientation, in discovery order.
    edge_ends: Vec<(usize, usize)>,
    edge_id: HashMap<(usize, usize), EdgeId>,
    out_edges: Vec<Vec<usize>>, // oriented out-neighbours per vertex
    // Per-edge state.
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<i64>,
    side: Vec<i8>,
    ref_edge: Vec<Option<EdgeId>>,
    lowpt_edge: Vec<Option<EdgeId>>,
    stack_bottom: Vec<usize>,
    // Conflict-pair stack.
    stack: Vec<ConflictPair>,
    ordered_out: Vec<Vec<usize>>,
}

impl LrState {
    fn new(g: &Graph) -> Self {
        let n = g.order();
        LrState {
            n,
            adj: g.adjacency(),
            height: vec![None; n],
            parent_edge: vec![None; n],
            roots: Vec::new(),
            edge_ends: Vec::new(),
            edge_id: HashMap::new(),
            out_edges: vec![Vec::new(); n],
            lowpt: Vec::new(),
            lowpt2: Vec::new(),
            nesting_depth: Vec::new(),
            side: Vec::new(),
            ref_edge: Vec::new(),
            lowpt_edge: Vec::new(),
            stack_bottom: Vec::new(),
            stack: Vec::new(),
            ordered_out: vec![Vec::new(); n],
        }
    }

    fn run(mut self) -> Option<Embedding> {
        for v in 0..self.n {
            if self.height[v].is_none() {
                self.height[v] = Some(0);
                self.roots.push(v);
                self.dfs_orientation(v);
            }
        }
        self.sort_out_edges();
        let roots = self.roots.clone();
        for &root in &roots {
            if !self.dfs_testing(root) {
                return None;
            }
        }
        for e in 0..self.edge_ends.len() {
            let sign = i64::from(self.resolve_side(e));
            self.nesting_depth[e] *= sign;
        }
        self.sort_out_edges();
        Some(self.build_embedding())
    }

    fn new_edge(&mut self, v: usize, w: usize) -> EdgeId {
        let e = self.edge_ends.len();
        self.edge_ends.push((v, w));
        self.edge_id.insert((v, w), e);
        self.out_edges[v].push(w);
        self.lowpt.push(0);
        self.lowpt2.push(0);
        self.nesting_depth.push(0);
        self.side.push(1);
        self.ref_edge.push(None);
        self.lowpt_edge.push(None);
        self.stack_bottom.push(0);
        e
    }

    fn sort_out_edges(&mut self) {
        for v in 0..self.n {
            let mut out = self.out_edges[v].clone();
            out.sort_by_key(|&w| self.nesting_depth[self.edge_id[&(v, w)]]);
            self.ordered_out[v] = out;
        }
    }

    /// Phase 1: DFS orientation computing low-points and nesting depths.
    fn dfs_orientation(&mut self, root: usize) {
        let mut dfs_stack = vec![root];
        let mut ind = vec![0usize; self.n];
        let mut pending_child: Vec<Option<EdgeId>> = vec![None; self.n];

        while let Some(v) = dfs_stack.pop() {
            let parent = self.parent_edge[v];
            let hv = self.height[v].expect("height set before visit");
            let mut descended = false;
            while ind[v] < self.adj[v].len() {
                let w = self.adj[v][ind[v]];
                let vw = match pending_child[v].take() {
                    Some(edge) => edge, // returning from the subtree under this edge
                    None => {
                        if self.edge_id.contains_key(&(v, w)) || self.edge_id.contains_key(&(w, v))
                        {
                            ind[v] += 1;
                            continue;
                        }
                        let vw = self.new_edge(v, w);
                        self.lowpt[vw] = hv;
                        self.lowpt2[vw] = hv;
                        if self.height[w].is_none() {
                            // Tree edge: descend and resume here afterwards.
                            self.parent_edge[w] = Some(vw);
                            self.height[w] = Some(hv + 1);
                            pending_child[v] = Some(vw);
                            dfs_stack.push(v);
                            dfs_stack.push(w);
                            descended = true;
                            break;
                        }
                        // Back edge.
                        self.lowpt[vw] = self.height[w].expect("back edge target visited");
                        vw
                    }
                };
                self.nesting_depth[vw] = 2 * self.lowpt[vw] as i64;
                if self.lowpt2[vw] < hv {
                    self.nesting_depth[vw] += 1; // chordal adjustment
                }
                if let Some(e) = parent {
                    if self.lowpt[vw] < self.lowpt[e] {
                        self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[vw]);
                        self.lowpt[e] = self.lowpt[vw];
                    } else if self.lowpt[vw] > self.lowpt[e] {
                        self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[vw]);
                    } else {
                        self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[vw]);
                    }
                }
                ind[v] += 1;
            }
            let _ = descended;
        }
    }

    /// Phase 2: replay the DFS, maintaining the conflict-pair stack.
    fn dfs_testing(&mut self, root: usize) -> bool {
        let mut dfs_stack = vec![root];
        let mut ind = vec![0usize; self.n];
        let mut skip_init: Vec<bool> = vec![false; self.edge_ends.len()];

        while let Some(v) = dfs_stack.pop() {
            let parent = self.parent_edge[v];
            let hv = self.height[v].expect("height set");
            let mut descended = false;
            while ind[v] < self.ordered_out[v].len() {
                let w = self.ordered_out[v][ind[v]];
                let ei = self.edge_id[&(v, w)];
                if !skip_init[ei] {
                    self.stack_bottom[ei] = self.stack.len();
                    if Some(ei) == self.parent_edge[w] {
                        // Tree edge: descend first, finish this edge later.
                        skip_init[ei] = true;
                        dfs_stack.push(v);
                        dfs_stack.push(w);
                        descended = true;
                        break;
                    }
                    // Back edge becomes its own one-interval conflict pair.
                    self.lowpt_edge[ei] = Some(ei);
                    self.stack.push(ConflictPair {
                        left: Interval::default(),
                        right: Interval {
                            low: Some(ei),
                            high: Some(ei),
                        },
                    });
                }
                // Integrate the return edges of this child edge.
                if self.lowpt[ei] < hv {
                    if w == self.ordered_out[v][0] {
                        if let Some(e) = parent {
                            self.lowpt_edge[e] = self.lowpt_edge[ei];
                        }
                    } else if !self.add_constraints(ei, parent.expect("non-first edge has parent"))
                    {
                        return false;
                    }
                }
                ind[v] += 1;
            }
            if !descended {
                if let Some(e) = parent {
                    self.remove_back_edges(e);
                }
            }
        }
        true
    }

    fn conflicting(&self, interval: &Interval, b: EdgeId) -> bool {
        match interval.high {
            Some(high) => self.lowpt[high] > self.lowpt[b],
            None => false,
        }
    }

    fn add_constraints(&mut self, ei: EdgeId, e: EdgeId) -> bool {
        let mut p = ConflictPair::default();
        // Merge the return edges of `ei` into the right interval of `p`.
        loop {
            let mut q = self.stack.pop().expect("stack holds this edge's pairs");
            if !q.left.empty() {
                q.swap();
            }
            if !q.left.empty() {
                return false; // two non-empty sides cannot all go right
            }
            let q_low = q.right.low.expect("non-degenerate interval");
            if self.lowpt[q_low] > self.lowpt[e] {
                // Merge into the same side.
                if p.right.empty() {
                    p.right.high = q.right.high;
                } else {
                    let p_low = p.right.low.expect("non-empty interval has low");
                    self.ref_edge[p_low] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                // Interval ends below lowpt(e): align with the parent's
                // lowest return edge.
                self.ref_edge[q_low] = self.lowpt_edge[e];
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }
        // Merge the conflicting return edges of earlier siblings into the
        // left interval of `p`.
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().expect("checked non-empty");
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false; // both sides conflict
            }
            // The part of q.right below lowpt(ei) merges into p.right.
            let p_low = p.right.low.expect("p.right populated above");
            self.ref_edge[p_low] = q.right.high;
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.empty() {
                p.left.high = q.left.high;
            } else {
                let pl_low = p.left.low.expect("non-empty interval has low");
                self.ref_edge[pl_low] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.empty() && p.right.empty()) {
            self.stack.push(p);
        }
        true
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        match (p.left.low, p.right.low) {
            (None, Some(r)) => self.lowpt[r],
            (Some(l), None) => self.lowpt[l],
            (Some(l), Some(r)) => self.lowpt[l].min(self.lowpt[r]),
            (None, None) => unreachable!("empty conflict pair on stack"),
        }
    }

    /// Drops and trims intervals whose back edges end at the parent `u` of
    /// the just-finished tree edge `e`.
    fn remove_back_edges(&mut self, e: EdgeId) {
        let u = self.edge_ends[e].0;
        let hu = self.height[u].expect("height set");
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != hu {
                break;
            }
            let p = self.stack.pop().expect("checked non-empty");
            if let Some(l_low) = p.left.low {
                self.side[l_low] = -1;
            }
        }
        if let Some(mut p) = self.stack.pop() {
            // Trim the left interval.
            while let Some(high) = p.left.high {
                if self.edge_ends[high].1 != u {
                    break;
                }
                p.left.high = self.ref_edge[high];
            }
            if p.left.high.is_none() {
                if let Some(l_low) = p.left.low {
                    self.ref_edge[l_low] = p.right.low;
                    self.side[l_low] = -1;
                    p.left.low = None;
                }
            }
            // Trim the right interval.
            while let Some(high) = p.right.high {
                if self.edge_ends[high].1 != u {
                    break;
                }
                p.right.high = self.ref_edge[high];
            }
            if p.right.high.is_none() {
                if let Some(r_low) = p.right.low {
                    self.ref_edge[r_low] = p.left.low;
                    self.side[r_low] = -1;
                    p.right.low = None;
                }
            }
            self.stack.push(p);
        }
        // The side of e follows its highest remaining return edge.
        if self.lowpt[e] < hu {
            if let Some(top) = self.stack.last() {
                let hl = top.left.high;
                let hr = top.right.high;
                self.ref_edge[e] = match (hl, hr) {
                    (Some(l), Some(r)) => {
                        if self.lowpt[l] > self.lowpt[r] {
                            Some(l)
                        } else {
                            Some(r)
                        }
                    }
                    (Some(l), None) => Some(l),
                    (None, hr) => hr,
                };
            }
        }
    }

    /// Collapses the reference chain of `e`, returning its resolved side.
    fn resolve_side(&mut self, e: EdgeId) -> i8 {
        let mut chain = vec![e];
        while let Some(&last) = chain.last() {
            match self.ref_edge[last] {
                Some(r) => chain.push(r),
                None => break,
            }
        }
        while chain.len() > 1 {
            let child = chain.pop().expect("len > 1");
            let parent = *chain.last().expect("len >= 1");
            self.side[parent] *= self.side[child];
            self.ref_edge[parent] = None;
        }
        self.side[e]
    }

    /// Phase 3: place half-edges into cyclic orders.
    fn build_embedding(&mut self) -> Embedding {
        let mut rot = RotationBuilder::new(self.n);
        // Seed each vertex's rotation with its outgoing edges in nesting
        // order; incoming half-edges are inserted during the DFS below.
        for v in 0..self.n {
            let mut prev: Option<usize> = None;
            for &w in &self.ordered_out[v] {
                rot.add_cw(v, w, prev);
                prev = Some(w);
            }
        }
        let mut left_ref: Vec<Option<usize>> = vec![None; self.n];
        let mut right_ref: Vec<Option<usize>> = vec![None; self.n];
        let mut ind = vec![0usize; self.n];
        for root_ix in 0..self.roots.len() {
            let mut dfs_stack = vec![self.roots[root_ix]];
            while let Some(v) = dfs_stack.pop() {
                let mut descended = false;
                while ind[v] < self.ordered_out[v].len() {
                    let w = self.ordered_out[v][ind[v]];
                    ind[v] += 1;
                    let ei = self.edge_id[&(v, w)];
                    if Some(ei) == self.parent_edge[w] {
                        rot.add_first(w, v);
                        // Back edges returning into v from w's subtree
                        // attach relative to the child edge just taken.
                        left_ref[v] = Some(w);
                        right_ref[v] = Some(w);
                        dfs_stack.push(v);
                        dfs_stack.push(w);
                        descended = true;
                        break;
                    }
                    if self.side[ei] == 1 {
                        rot.add_cw(w, v, right_ref[w]);
                    } else {
                        rot.add_ccw(w, v, left_ref[w]);
                        left_ref[w] = Some(v);
                    }
                }
                let _ = descended;
            }
        }
        Embedding {
            rotation: rot.into_rotations(),
        }
    }
}

/// Cyclic neighbour orders under construction, one doubly linked ring per
/// vertex.
struct RotationBuilder {
    first: Vec<Option<usize>>,
    cw: Vec<HashMap<usize, usize>>,
    ccw: Vec<HashMap<usize, usize>>,
}

impl RotationBuilder {
    fn new(n: usize) -> Self {
        RotationBuilder {
            first: vec![None; n],
            cw: vec![HashMap::new(); n],
            ccw: vec![HashMap::new(); n],
        }
    }

    fn add_single(&mut self, v: usize, w: usize) {
        self.first[v] = Some(w);
        self.cw[v].insert(w, w);
        self.ccw[v].insert(w, w);
    }

    /// Inserts `w` clockwise after `after` in the rotation of `v`.
    fn add_cw(&mut self, v: usize, w: usize, after: Option<usize>) {
        match after {
            None => self.add_single(v, w),
            Some(r) => {
                let next = self.cw[v][&r];
                self.cw[v].insert(r, w);
                self.cw[v].insert(w, next);
                self.ccw[v].insert(next, w);
                self.ccw[v].insert(w, r);
            }
        }
    }

    /// Inserts `w` counterclockwise before `before` in the rotation of `v`.
    fn add_ccw(&mut self, v: usize, w: usize, before: Option<usize>) {
        match before {
            None => self.add_single(v, w),
            Some(r) => {
                let prev = self.ccw[v][&r];
                self.cw[v].insert(prev, w);
                self.cw[v].insert(w, r);
                self.ccw[v].insert(r, w);
                self.ccw[v].insert(w, prev);
                if self.first[v] == Some(r) {
                    self.first[v] = Some(w);
                }
            }
        }
    }

    /// Inserts `w` at the start of the rotation of `v`.
    fn add_first(&mut self, v: usize, w: usize) {
        let f = self.first[v];
        self.add_ccw(v, w, f);
    }

    fn into_rotations(self) -> Vec<Vec<usize>> {
        let mut rotations = Vec::with_capacity(self.first.len());
        for v in 0..self.first.len() {
            let mut order = Vec::with_capacity(self.cw[v].len());
            if let Some(start) = self.first[v] {
                let mut cur = start;
                loop {
                    order.push(cur);
                    cur = self.cw[v][&cur];
                    if cur == start {
                        break;
                    }
                }
            }
            rotations.push(order);
        }
        rotations
    }
}

/// Extracts the faces of a connected embedded graph as cycles of directed
/// edges, verifying that the rotation matches `g` and that Euler's formula
/// holds.
pub fn faces_of(g: &Graph, embedding: &Embedding) -> Result<Vec<Vec<(usize, usize)>>, EmbeddingError> {
    if !g.is_connected() {
        return Err(EmbeddingError::Disconnected);
    }
    let adj = g.adjacency();
    let n = g.order();
    if embedding.order() != n {
        return Err(EmbeddingError::RotationMismatch(embedding.order().min(n)));
    }
    // Position of each neighbour inside each rotation, and the check that
    // rotations are permutations of the adjacency lists.
    let mut pos: Vec<HashMap<usize, usize>> = Vec::with_capacity(n);
    for v in 0..n {
        let rot = embedding.rotation(v);
        let mut sorted = rot.to_vec();
        sorted.sort_unstable();
        if sorted != adj[v] {
            return Err(EmbeddingError::RotationMismatch(v));
        }
        pos.push(rot.iter().enumerate().map(|(i, &w)| (w, i)).collect());
    }

    if g.edge_count() == 0 {
        // A single vertex bounds one (outer) face.
        return Ok(vec![Vec::new()]);
    }

    let mut visited: HashMap<(usize, usize), bool> = HashMap::new();
    let mut faces = Vec::new();
    for v in 0..n {
        for &w in embedding.rotation(v) {
            if visited.get(&(v, w)).copied().unwrap_or(false) {
                continue;
            }
            let mut face = Vec::new();
            let (mut a, mut b) = (v, w);
            loop {
                visited.insert((a, b), true);
                face.push((a, b));
                // Next half-edge: rotate at b from a.
                let rot_b = embedding.rotation(b);
                let i = pos[b][&a];
                let c = rot_b[(i + 1) % rot_b.len()];
                a = b;
                b = c;
                if (a, b) == (v, w) {
                    break;
                }
            }
            faces.push(face);
        }
    }
    let f = faces.len();
    if n + f != g.edge_count() + 2 {
        return Err(EmbeddingError::EulerViolation {
            v: n,
            e: g.edge_count(),
            f,
        });
    }
    Ok(faces)
}
