//! Dinic max-flow on small integer-capacity networks.

use std::collections::VecDeque;

use crate::graph::MultiGraph;
use crate::vset::VertexSet;

pub(crate) const INF: u64 = u64::MAX / 4;

#[derive(Clone, Copy)]
struct Arc {
    to: usize,
    cap: u64,
    rev: usize,
}

pub(crate) struct Dinic {
    arcs: Vec<Vec<Arc>>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

impl Dinic {
    pub(crate) fn new(size: usize) -> Self {
        Dinic {
            arcs: vec![Vec::new(); size],
            level: vec![0; size],
            iter: vec![0; size],
        }
    }

    /// Adds an arc `from -> to` with capacity `cap` whose reverse arc has
    /// capacity `rev_cap`. Undirected edges use `cap == rev_cap`.
    pub(crate) fn add_edge(&mut self, from: usize, to: usize, cap: u64, rev_cap: u64) {
        let (rf, rt) = (self.arcs[to].len(), self.arcs[from].len());
        self.arcs[from].push(Arc { to, cap, rev: rf });
        self.arcs[to].push(Arc { to: from, cap: rev_cap, rev: rt });
    }

    fn bfs(&mut self, s: usize) {
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            for a in &self.arcs[v] {
                if a.cap > 0 && self.level[a.to] < 0 {
                    self.level[a.to] = self.level[v] + 1;
                    q.push_back(a.to);
                }
            }
        }
    }

    fn dfs(&mut self, v: usize, t: usize, f: u64) -> u64 {
        if v == t {
            return f;
        }
        while self.iter[v] < self.arcs[v].len() {
            let a = self.arcs[v][self.iter[v]];
            if a.cap > 0 && self.level[v] < self.level[a.to] {
                let d = self.dfs(a.to, t, f.min(a.cap));
                if d > 0 {
                    self.arcs[v][self.iter[v]].cap -= d;
                    self.arcs[a.to][a.rev].cap += d;
                    return d;
                }
            }
            self.iter[v] += 1;
        }
        0
    }

    /// Pushes flow from `s` to `t` until none is left or `limit` is reached.
    pub(crate) fn max_flow(&mut self, s: usize, t: usize, limit: u64) -> u64 {
        let mut flow = 0;
        while flow < limit {
            self.bfs(s);
            if self.level[t] < 0 {
                break;
            }
            self.iter.iter_mut().for_each(|i| *i = 0);
            loop {
                let f = self.dfs(s, t, limit - flow);
                if f == 0 {
                    break;
                }
                flow += f;
                if flow >= limit {
                    break;
                }
            }
        }
        flow
    }

    /// Nodes reachable from `s` in the residual network.
    pub(crate) fn reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.arcs.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for a in &self.arcs[v] {
                if a.cap > 0 && !seen[a.to] {
                    seen[a.to] = true;
                    stack.push(a.to);
                }
            }
        }
        seen
    }
}

/// Outcome of a minimum edge cut computation between two disjoint vertex sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeCut {
    /// Cut size counted with multiplicity.
    pub value: u64,
    /// Vertices on the first set's side of a minimum cut.
    pub side: VertexSet,
}

/// Minimum number of edges (with multiplicity) separating `a` from `b`.
///
/// Returns `None` when the cut is at least `limit`; the search stops as soon
/// as that much flow has been pushed.
pub fn min_edge_cut(g: &MultiGraph, a: VertexSet, b: VertexSet, limit: u64) -> Option<EdgeCut> {
    debug_assert!(a.is_disjoint(b) && !a.is_empty() && !b.is_empty());
    let n = g.n();
    let (s, t) = (n, n + 1);
    let mut net = Dinic::new(n + 2);
    for &(u, v, m) in g.edges() {
        net.add_edge(u, v, m, m);
    }
    for v in a {
        net.add_edge(s, v, INF, 0);
    }
    for v in b {
        net.add_edge(v, t, INF, 0);
    }
    let value = net.max_flow(s, t, limit);
    if value >= limit {
        return None;
    }
    let seen = net.reachable(s);
    let side = (0..n).filter(|&v| seen[v]).collect();
    Some(EdgeCut { value, side })
}

/// Maximum number of internally vertex-disjoint paths between non-adjacent `s` and `t`.
pub(crate) fn vertex_disjoint_paths(g: &MultiGraph, s: usize, t: usize) -> u64 {
    let n = g.n();
    // v_in = v, v_out = v + n
    let mut net = Dinic::new(2 * n);
    for v in 0..n {
        let cap = if v == s || v == t { INF } else { 1 };
        net.add_edge(v, v + n, cap, 0);
    }
    for &(u, v, _) in g.edges() {
        net.add_edge(u + n, v, INF, 0);
        net.add_edge(v + n, u, INF, 0);
    }
    net.max_flow(s + n, t, INF)
}
