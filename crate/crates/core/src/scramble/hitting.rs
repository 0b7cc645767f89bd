//! Exact minimum hitting set by branch and bound.

use crate::error::{Error, Result};
use crate::vset::VertexSet;

/// A minimum-cardinality vertex set meeting every set in `sets`.
///
/// Branches on the smallest unhit set, trying its vertices in order of
/// decreasing frequency (ties to the lowest index) and forbidding the
/// vertices already tried. Bounds with a greedy disjoint packing. Fails once
/// more than `node_budget` search nodes have been expanded.
pub fn min_hitting_set(sets: &[VertexSet], node_budget: u64) -> Result<VertexSet> {
    if sets.iter().any(|s| s.is_empty()) {
        return Err(Error::BadParams("cannot hit an empty set".into()));
    }
    let minimal = minimal_sets(sets);
    let mut search = Search {
        best: greedy_hitting_set(&minimal),
        nodes: 0,
        node_budget,
    };
    search.branch(VertexSet::EMPTY, minimal)?;
    Ok(search.best)
}

/// Keeps only inclusion-minimal sets; hitting those hits everything.
pub(crate) fn minimal_sets(sets: &[VertexSet]) -> Vec<VertexSet> {
    let mut v: Vec<VertexSet> = sets.to_vec();
    v.sort_unstable_by_key(|s| (s.len(), *s));
    v.dedup();
    let mut out: Vec<VertexSet> = Vec::with_capacity(v.len());
    for s in v {
        if !out.iter().any(|m| m.is_subset(s)) {
            out.push(s);
        }
    }
    out
}

fn frequencies(sets: &[VertexSet]) -> [u32; 64] {
    let mut f = [0u32; 64];
    for s in sets {
        for v in *s {
            f[v] += 1;
        }
    }
    f
}

/// Repeatedly takes the vertex in the most unhit sets (lowest index on ties).
pub fn greedy_hitting_set(sets: &[VertexSet]) -> VertexSet {
    let mut chosen = VertexSet::EMPTY;
    let mut unhit: Vec<VertexSet> = sets.to_vec();
    while !unhit.is_empty() {
        let f = frequencies(&unhit);
        let v = (0..64).max_by_key(|&v| (f[v], std::cmp::Reverse(v))).expect("nonempty");
        chosen.insert(v);
        unhit.retain(|s| !s.contains(v));
    }
    chosen
}

fn packing_bound(sets: &[VertexSet]) -> usize {
    let mut used = VertexSet::EMPTY;
    let mut count = 0;
    // sets arrive sorted by size, so small sets are packed first
    for &s in sets {
        if s.is_disjoint(used) {
            used = used.union(s);
            count += 1;
        }
    }
    count
}

struct Search {
    best: VertexSet,
    nodes: u64,
    node_budget: u64,
}

impl Search {
    fn branch(&mut self, chosen: VertexSet, mut unhit: Vec<VertexSet>) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.node_budget {
            return Err(Error::FeasibilityCapExceeded {
                what: "hitting set",
                detail: format!("node budget {} exhausted", self.node_budget),
            });
        }
        if unhit.is_empty() {
            if chosen.len() < self.best.len() {
                self.best = chosen;
            }
            return Ok(());
        }
        unhit.sort_unstable_by_key(|s| (s.len(), *s));
        if chosen.len() + packing_bound(&unhit) >= self.best.len() {
            return Ok(());
        }
        let pivot = unhit[0];
        let f = frequencies(&unhit);
        let mut order: Vec<usize> = pivot.to_vec();
        order.sort_by_key(|&v| (std::cmp::Reverse(f[v]), v));
        let mut forbidden = VertexSet::EMPTY;
        for v in order {
            let mut rest = Vec::with_capacity(unhit.len());
            let mut dead = false;
            for &s in &unhit {
                if s.contains(v) {
                    continue;
                }
                let t = s.difference(forbidden);
                if t.is_empty() {
                    dead = true;
                    break;
                }
                rest.push(t);
            }
            if !dead {
                self.branch(chosen.with(v), rest)?;
            }
            forbidden.insert(v);
        }
        Ok(())
    }
}
