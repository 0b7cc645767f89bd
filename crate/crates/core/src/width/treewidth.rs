use crate::budget::Budget;
use crate::error::Result;
use crate::graph::MultiGraph;
use crate::vset::VertexSet;

/// Vertices outside `s ∪ {v}` reachable from `v` through `s`.
fn q_set(g: &MultiGraph, s: VertexSet, v: usize) -> VertexSet {
    let reach = g.reach_within(VertexSet::singleton(v), s.with(v));
    g.neighborhood(reach).difference(s).without(v)
}

/// Exact treewidth by dynamic programming over elimination prefixes.
///
/// `TW(S) = min_{v ∈ S} max(TW(S − v), |Q(S − v, v)|)`, where `Q(S, v)` is
/// the set of vertices outside `S ∪ {v}` reachable from `v` through `S`.
/// Multiplicities are ignored. The empty graph has treewidth -1.
pub fn treewidth_exact(g: &MultiGraph, budget: &Budget) -> Result<i64> {
    let n = g.n();
    budget.check_vertices("treewidth", n, budget.treewidth_vertices)?;
    if n == 0 {
        return Ok(-1);
    }
    let mut tw = vec![u8::MAX; 1 << n];
    tw[0] = 0;
    for mask in 1u64..(1 << n) {
        if mask & 0xffff == 0 {
            budget.check_deadline("treewidth")?;
        }
        let s = VertexSet::from_bits(mask);
        let mut best = u8::MAX;
        for v in s {
            let rest = s.without(v);
            let prev = tw[rest.bits() as usize];
            if prev >= best {
                continue;
            }
            let q = q_set(g, rest, v).len() as u8;
            best = best.min(prev.max(q));
        }
        tw[mask as usize] = best;
    }
    Ok(tw[(1usize << n) - 1] as i64)
}
