use serde::Serialize;

use crate::budget::Budget;
use crate::count::Count;
use crate::error::Result;
use crate::graph::flow::min_edge_cut;
use crate::graph::params::edge_connectivity;
use crate::graph::MultiGraph;
use crate::scramble::hitting::minimal_sets;
use crate::vset::VertexSet;

/// Minimum egg-cut of a scramble with a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EggCut {
    pub value: Count,
    /// One side of a minimum egg-cut (the other side is its complement).
    pub side: Option<VertexSet>,
    /// The cut edges, one entry per edge copy.
    pub edges: Option<Vec<[usize; 2]>>,
}

/// Order of a scramble together with certificates for both terms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderReport {
    pub hitting: u64,
    pub egg_cut: Count,
    pub order: u64,
    pub hitting_witness: VertexSet,
    pub cut_witness: Option<Vec<[usize; 2]>>,
    #[serde(skip)]
    pub cut_side: Option<VertexSet>,
}

impl OrderReport {
    pub(crate) fn new(hitting: u64, hitting_witness: VertexSet, cut: EggCut) -> Self {
        OrderReport {
            hitting,
            egg_cut: cut.value,
            order: cut.value.min_with(hitting),
            hitting_witness,
            cut_witness: cut.edges,
            cut_side: cut.side,
        }
    }
}

/// Edges crossing from `side` to its complement, one entry per copy.
pub(crate) fn cut_edges(g: &MultiGraph, side: VertexSet) -> Vec<[usize; 2]> {
    let mut out = Vec::new();
    for &(u, v, m) in g.edges() {
        if side.contains(u) != side.contains(v) {
            out.extend(std::iter::repeat_n([u, v], m as usize));
        }
    }
    out
}

/// Minimum over vertex-disjoint egg pairs of the edge cut separating them.
///
/// Only inclusion-minimal eggs are paired: a cut separating a superset egg
/// from another egg also separates the subset. The scan stops early once the
/// global edge connectivity is reached.
pub fn egg_cut_number(g: &MultiGraph, eggs: &[VertexSet], budget: &Budget) -> Result<EggCut> {
    let eggs = minimal_sets(eggs);
    let floor = if g.n() >= 2 { edge_connectivity(g) } else { 0 };
    let mut best: Option<(u64, VertexSet)> = None;
    'outer: for (i, &a) in eggs.iter().enumerate() {
        budget.check_deadline("egg-cut number")?;
        for &b in &eggs[i + 1..] {
            if a.intersects(b) {
                continue;
            }
            let limit = best.map_or(u64::MAX, |(v, _)| v);
            if let Some(cut) = min_edge_cut(g, a, b, limit) {
                best = Some((cut.value, cut.side));
                if cut.value <= floor {
                    break 'outer;
                }
            }
        }
    }
    Ok(match best {
        Some((value, side)) => EggCut {
            value: Count::Finite(value),
            side: Some(side),
            edges: Some(cut_edges(g, side)),
        },
        None => EggCut { value: Count::Infinite, side: None, edges: None },
    })
}

/// Whether deleting `edges` (one entry per copy) leaves exactly two
/// components, each containing some egg.
pub fn certify_cut(g: &MultiGraph, eggs: &[VertexSet], edges: &[[usize; 2]]) -> bool {
    let mut removed: std::collections::HashMap<(usize, usize), u64> = Default::default();
    for &[u, v] in edges {
        *removed.entry((u.min(v), u.max(v))).or_default() += 1;
    }
    let mut remaining = Vec::new();
    for &(u, v, m) in g.edges() {
        let r = removed.remove(&(u, v)).unwrap_or(0);
        if r > m {
            return false;
        }
        if r < m {
            remaining.push((u, v));
        }
    }
    if !removed.is_empty() {
        return false;
    }
    let mut comp: Vec<usize> = (0..g.n()).collect();
    fn find(c: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while c[r] != r {
            r = c[r];
        }
        c[x] = r;
        r
    }
    for (u, v) in remaining {
        let (a, b) = (find(&mut comp, u), find(&mut comp, v));
        comp[a] = b;
    }
    let roots: Vec<usize> = (0..g.n()).map(|v| find(&mut comp, v)).collect();
    let mut distinct = roots.clone();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != 2 {
        return false;
    }
    let side: VertexSet = (0..g.n()).filter(|&v| roots[v] == distinct[0]).collect();
    let other = g.vertices().difference(side);
    eggs.iter().any(|e| e.is_subset(side)) && eggs.iter().any(|e| e.is_subset(other))
}
