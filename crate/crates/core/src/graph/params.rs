//! Structural parameters: degrees, girth, connectivities and the
//! k-restricted variants used by the approximation results.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::flow::{min_edge_cut, vertex_disjoint_paths};
use crate::graph::{enumerate_connected_subgraphs, MultiGraph};
use crate::vset::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphParams {
    pub min_degree: u64,
    pub max_degree: u64,
    /// `None` for acyclic graphs. Parallel edges form cycles of length 2.
    pub girth: Option<u64>,
    pub vertex_connectivity: u64,
    pub edge_connectivity: u64,
}

pub fn connectivity_params(g: &MultiGraph) -> Result<GraphParams> {
    if g.n() < 2 {
        return Err(Error::BadParams("connectivity needs at least two vertices".into()));
    }
    Ok(GraphParams {
        min_degree: g.min_degree(),
        max_degree: g.max_degree(),
        girth: girth(g),
        vertex_connectivity: vertex_connectivity(g),
        edge_connectivity: edge_connectivity(g),
    })
}

/// Length of a shortest cycle, or `None` for a tree.
pub fn girth(g: &MultiGraph) -> Option<u64> {
    if !g.is_simple() {
        return Some(2);
    }
    let n = g.n();
    let mut best: Option<u64> = None;
    for root in 0..n {
        let mut dist = vec![u64::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[root] = 0;
        let mut q = VecDeque::from([root]);
        while let Some(u) = q.pop_front() {
            for &(w, _) in g.adjacency(u) {
                if dist[w] == u64::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// Minimum number of edges (with multiplicity) whose removal disconnects `g`.
pub fn edge_connectivity(g: &MultiGraph) -> u64 {
    (1..g.n())
        .filter_map(|t| min_edge_cut(g, VertexSet::singleton(0), VertexSet::singleton(t), u64::MAX / 8))
        .map(|c| c.value)
        .min()
        .unwrap_or(0)
}

/// Minimum number of vertices whose removal disconnects `g`; `n - 1` when
/// every pair of vertices is adjacent.
pub fn vertex_connectivity(g: &MultiGraph) -> u64 {
    let n = g.n();
    let mut best = n as u64 - 1;
    for s in 0..n {
        for t in s + 1..n {
            if !g.neighbors(s).contains(t) {
                best = best.min(vertex_disjoint_paths(g, s, t));
            }
        }
    }
    best
}

/// k-restricted edge connectivity: the fewest edges whose removal leaves a
/// disconnected graph with every component of size at least `k`. `None`
/// when no such edge set exists.
///
/// A minimum such set always leaves exactly two components, so this scans
/// the bipartitions `(A, V \ A)` with both sides connected.
pub fn lambda_k(g: &MultiGraph, k: usize, budget: &Budget) -> Result<Option<u64>> {
    if k == 0 {
        return Err(Error::BadParams("k must be at least 1".into()));
    }
    let n = g.n();
    if 2 * k > n {
        return Ok(None);
    }
    budget.check_vertices("lambda_k", n, budget.subset_vertices)?;
    let full = g.vertices();
    let mut best: Option<u64> = None;
    // vertex 0 always on side A
    for rest in 0u64..(1u64 << (n - 1)) {
        let a = VertexSet::from_bits((rest << 1) | 1);
        let b = full.difference(a);
        if a.len() < k || b.len() < k || b.is_empty() {
            continue;
        }
        let cut = g.edges_between(a, b);
        if best.is_some_and(|x| cut >= x) {
            continue;
        }
        if g.is_connected_set(a) && g.is_connected_set(b) {
            best = Some(cut);
        }
        if rest & 0xffff == 0 {
            budget.check_deadline("lambda_k")?;
        }
    }
    Ok(best)
}

/// k-component independence number: the largest vertex set whose induced
/// components all have at most `k` vertices. `alpha_k(g, 1)` is the
/// independence number.
pub fn alpha_k(g: &MultiGraph, k: usize, budget: &Budget) -> Result<usize> {
    Ok(max_k_component_set(g, k, budget)?.len())
}

/// A maximum set witnessing [`alpha_k`].
pub fn max_k_component_set(g: &MultiGraph, k: usize, budget: &Budget) -> Result<VertexSet> {
    if k == 0 {
        return Err(Error::BadParams("k must be at least 1".into()));
    }
    budget.check_vertices("alpha_k", g.n(), budget.subset_vertices)?;
    if k >= g.n() {
        return Ok(g.vertices());
    }
    let mut best = VertexSet::EMPTY;
    let mut nodes = 0u64;
    alpha_search(g, k, 0, VertexSet::EMPTY, &mut best, &mut nodes, budget)?;
    Ok(best)
}

fn alpha_search(
    g: &MultiGraph,
    k: usize,
    next: usize,
    chosen: VertexSet,
    best: &mut VertexSet,
    nodes: &mut u64,
    budget: &Budget,
) -> Result<()> {
    *nodes += 1;
    if *nodes & 0xffff == 0 {
        budget.check_deadline("alpha_k")?;
    }
    if chosen.len() > best.len() {
        *best = chosen;
    }
    if next == g.n() || chosen.len() + (g.n() - next) <= best.len() {
        return Ok(());
    }
    let with = chosen.with(next);
    if g.reach_within(VertexSet::singleton(next), with).len() <= k {
        alpha_search(g, k, next + 1, with, best, nodes, budget)?;
    }
    alpha_search(g, k, next + 1, chosen, best, nodes, budget)
}

/// Minimum edge boundary (with multiplicity) over connected k-vertex sets.
pub fn xi_k(g: &MultiGraph, k: usize, budget: &Budget) -> Result<u64> {
    if k == 0 || k > g.n() {
        return Err(Error::BadParams(format!("k = {k} outside 1..={}", g.n())));
    }
    let sets = enumerate_connected_subgraphs(g, k, budget.enumerated_sets)?;
    Ok(sets.into_iter().map(|s| g.boundary(s)).min().expect("a connected graph has connected k-sets"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate_family, Family};

    fn fam(f: Family) -> MultiGraph {
        generate_family(&f).unwrap()
    }

    #[test]
    fn cycle_and_complete_connectivity() {
        let p = connectivity_params(&fam(Family::Cycle(7))).unwrap();
        assert_eq!((p.vertex_connectivity, p.edge_connectivity, p.girth), (2, 2, Some(7)));
        let p = connectivity_params(&fam(Family::Complete(5))).unwrap();
        assert_eq!((p.vertex_connectivity, p.edge_connectivity, p.girth), (4, 4, Some(3)));
    }

    #[test]
    fn bipartite_plus_cycle_kappa() {
        let p = connectivity_params(&fam(Family::BipartitePlusCycle(10))).unwrap();
        assert_eq!(p.vertex_connectivity, 6);
    }

    #[test]
    fn multigraph_girth_and_lambda() {
        let p = connectivity_params(&fam(Family::MultipliedPath(4, 3))).unwrap();
        assert_eq!((p.girth, p.edge_connectivity, p.vertex_connectivity), (Some(2), 3, 1));
        assert_eq!(girth(&fam(Family::Star(3))), None);
        assert_eq!(girth(&fam(Family::Petersen)), Some(5));
    }

    #[test]
    fn lambda_k_values() {
        let b = Budget::default();
        let c6 = fam(Family::Cycle(6));
        assert_eq!(lambda_k(&c6, 1, &b).unwrap(), Some(2));
        assert_eq!(lambda_k(&c6, 2, &b).unwrap(), Some(2));
        assert_eq!(lambda_k(&fam(Family::Star(4)), 2, &b).unwrap(), None);
        assert_eq!(lambda_k(&c6, 4, &b).unwrap(), None);
        let k8 = fam(Family::Complete(8));
        assert_eq!(lambda_k(&k8, 2, &b).unwrap(), Some(12));
    }

    #[test]
    fn alpha_values() {
        let b = Budget::default();
        assert_eq!(alpha_k(&fam(Family::Cycle(6)), 1, &b).unwrap(), 3);
        assert_eq!(alpha_k(&fam(Family::Rook(4, 4)), 1, &b).unwrap(), 4);
        assert_eq!(alpha_k(&fam(Family::BipartitePlusCycle(10)), 4, &b).unwrap(), 4);
        assert_eq!(alpha_k(&fam(Family::Cycle(6)), 6, &b).unwrap(), 6);
    }

    #[test]
    fn xi_values() {
        let b = Budget::default();
        let pet = fam(Family::Petersen);
        assert_eq!(xi_k(&pet, 1, &b).unwrap(), 3);
        assert_eq!(xi_k(&fam(Family::Cycle(9)), 2, &b).unwrap(), 2);
        assert_eq!(xi_k(&pet, 3, &b).unwrap(), 5);
    }
}
