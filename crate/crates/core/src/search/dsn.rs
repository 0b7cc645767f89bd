use serde::Serialize;

use crate::budget::Budget;
use crate::error::Result;
use crate::graph::enumerate::connected_sets_containing;
use crate::graph::flow::min_edge_cut;
use crate::graph::params::edge_connectivity;
use crate::graph::MultiGraph;
use crate::vset::VertexSet;

/// Disjoint scramble number with a witness partition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DsnResult {
    pub dsn: u64,
    pub eggs: Vec<VertexSet>,
    /// False when the search stopped at the `stop_at` bound.
    pub complete: bool,
}

/// Exact disjoint scramble number.
///
/// Only partitions of `V` into connected blocks are searched: adding an
/// uncovered neighbor to an egg keeps the number of eggs and cannot lower
/// any pairwise cut. Blocks are grown around the lowest uncovered vertex;
/// a block is rejected when its boundary, the best reachable egg count, or
/// its cut to an earlier block cannot beat the incumbent. With `stop_at`,
/// the search ends as soon as that order is reached.
pub fn dsn_exact(g: &MultiGraph, stop_at: Option<u64>, budget: &Budget) -> Result<DsnResult> {
    let n = g.n();
    budget.check_vertices("disjoint scramble number", n, budget.dsn_vertices)?;
    let verteggs: Vec<VertexSet> = (0..n).map(VertexSet::singleton).collect();
    let start = if n >= 2 { (n as u64).min(edge_connectivity(g)) } else { 1 };
    let mut s = DsnSearch {
        g,
        budget,
        stop_at: stop_at.unwrap_or(u64::MAX),
        best: start,
        best_eggs: verteggs,
        blocks: Vec::new(),
        nodes: 0,
    };
    if s.best < s.stop_at {
        s.search(g.vertices(), u64::MAX)?;
    }
    let complete = s.best < s.stop_at;
    let mut eggs = s.best_eggs;
    eggs.sort_unstable();
    Ok(DsnResult { dsn: s.best, eggs, complete })
}

struct DsnSearch<'a> {
    g: &'a MultiGraph,
    budget: &'a Budget,
    stop_at: u64,
    best: u64,
    best_eggs: Vec<VertexSet>,
    blocks: Vec<VertexSet>,
    nodes: u64,
}

impl DsnSearch<'_> {
    /// Returns true once `stop_at` is reached.
    fn search(&mut self, uncovered: VertexSet, min_cut: u64) -> Result<bool> {
        let Some(root) = uncovered.first() else {
            let order = min_cut.min(self.blocks.len() as u64);
            if order > self.best {
                self.best = order;
                self.best_eggs = self.blocks.clone();
            }
            return Ok(self.best >= self.stop_at);
        };
        self.nodes += 1;
        if self.nodes.is_multiple_of(1024) {
            self.budget.check_deadline("disjoint scramble number")?;
        }
        let mut options = connected_sets_containing(self.g, root, uncovered, self.budget.enumerated_sets)?;
        options.sort_unstable_by_key(|b| (b.len(), *b));
        for block in options {
            let rest = uncovered.difference(block);
            let most_eggs = (self.blocks.len() + 1 + rest.len()) as u64;
            if most_eggs <= self.best || (!rest.is_empty() || !self.blocks.is_empty()) && self.g.boundary(block) <= self.best {
                continue;
            }
            let mut cut = min_cut;
            let mut ok = true;
            for &a in &self.blocks {
                match min_edge_cut(self.g, a, block, most_eggs.min(cut)) {
                    Some(c) if c.value <= self.best => {
                        ok = false;
                        break;
                    }
                    Some(c) => cut = c.value,
                    None => {}
                }
            }
            if !ok {
                continue;
            }
            self.blocks.push(block);
            let done = self.search(rest, cut)?;
            self.blocks.pop();
            if done {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

#[cfg(test)]
/// Order of the disjoint scramble is re-derived independently of the search.
pub(crate) fn verify_partition(g: &MultiGraph, eggs: &[VertexSet], budget: &Budget) -> Result<u64> {
    crate::scramble::make_scramble(g, eggs.iter().copied())?.order_value(budget)
}

/// `max_k min(k, ⌊d·n/k⌋)`: no graph on `n` vertices with maximum degree
/// `d` has a larger disjoint scramble number.
pub fn dsn_growth_bound(n: u64, d: u64) -> u64 {
    (1..=n).map(|k| k.min(d * n / k)).max().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate_family, Family};
    use crate::scramble::make_scramble;

    fn b() -> Budget {
        Budget::default()
    }

    fn dsn(f: Family) -> u64 {
        let g = generate_family(&f).unwrap();
        let r = dsn_exact(&g, None, &b()).unwrap();
        assert_eq!(verify_partition(&g, &r.eggs, &b()).unwrap(), r.dsn, "{f}");
        assert!(r.complete);
        r.dsn
    }

    /// Best order over all partitions into connected blocks, by brute force
    /// over set partitions.
    fn brute(g: &MultiGraph) -> u64 {
        fn go(g: &MultiGraph, left: VertexSet, blocks: &mut Vec<VertexSet>, best: &mut u64) {
            let Some(v) = left.first() else {
                let s = make_scramble(g, blocks.iter().copied()).unwrap();
                *best = (*best).max(s.order_value(&Budget::default()).unwrap());
                return;
            };
            let rest = left.without(v);
            for sub in crate::vset::subsets(rest.bits()) {
                let block = VertexSet::from_bits(sub).with(v);
                if g.is_connected_set(block) {
                    blocks.push(block);
                    go(g, left.difference(block), blocks, best);
                    blocks.pop();
                }
            }
        }
        let mut best = 0;
        go(g, g.vertices(), &mut Vec::new(), &mut best);
        best
    }

    /// Best order over all disjoint collections of connected sets.
    fn brute_any(g: &MultiGraph) -> u64 {
        let sets: Vec<VertexSet> = (1u64..1 << g.n()).map(VertexSet::from_bits).filter(|s| g.is_connected_set(*s)).collect();
        fn go(g: &MultiGraph, sets: &[VertexSet], used: VertexSet, chosen: &mut Vec<VertexSet>, best: &mut u64) {
            if !chosen.is_empty() {
                let s = make_scramble(g, chosen.iter().copied()).unwrap();
                *best = (*best).max(s.order_value(&Budget::default()).unwrap());
            }
            for (i, &s) in sets.iter().enumerate() {
                if s.is_disjoint(used) {
                    chosen.push(s);
                    go(g, &sets[i + 1..], used.union(s), chosen, best);
                    chosen.pop();
                }
            }
        }
        let mut best = 0;
        go(g, &sets, VertexSet::EMPTY, &mut Vec::new(), &mut best);
        best
    }

    #[test]
    fn families() {
        assert_eq!(dsn(Family::Path(1)), 1);
        assert_eq!(dsn(Family::Path(5)), 1);
        assert_eq!(dsn(Family::Star(4)), 1);
        assert_eq!(dsn(Family::Cycle(6)), 2);
        assert_eq!(dsn(Family::Complete(5)), 4);
        assert_eq!(dsn(Family::Grid(3, 4)), 3);
        assert_eq!(dsn(Family::Cylinder(4, 2)), 4);
        assert_eq!(dsn(Family::CompleteMultipartite(vec![3, 3])), 3);
    }

    #[test]
    fn matches_partition_brute_force() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2);
        for i in 0..40 {
            let g = crate::corpus::random_connected_simple(&mut rng, 2 + i % 6, 0.5);
            assert_eq!(dsn_exact(&g, None, &b()).unwrap().dsn, brute(&g), "{g:?}");
        }
    }

    #[test]
    fn spanning_partitions_suffice() {
        for n in 1..=5 {
            for g in crate::corpus::connected_simple_graphs(n).unwrap() {
                assert_eq!(brute(&g), brute_any(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn stop_at_bound() {
        let g = generate_family(&Family::Complete(6)).unwrap();
        let r = dsn_exact(&g, Some(3), &b()).unwrap();
        assert!(r.dsn >= 3 && !r.complete);
    }

    #[test]
    fn growth_bound() {
        assert_eq!(dsn_growth_bound(9, 4), 6);
        assert_eq!(dsn_growth_bound(4, 2), 2);
        for n in 2..=7 {
            for g in crate::corpus::connected_simple_graphs(n.min(6)).unwrap() {
                let d = dsn_exact(&g, None, &b()).unwrap().dsn;
                assert!(d <= dsn_growth_bound(g.n() as u64, g.max_degree()));
            }
        }
    }
}
