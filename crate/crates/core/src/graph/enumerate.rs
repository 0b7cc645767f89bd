use crate::error::{Error, Result};
use crate::graph::MultiGraph;
use crate::vset::VertexSet;

/// All vertex sets of size `k` inducing a connected subgraph, in canonical
/// (lexicographic) order. Fails if there are more than `cap` of them.
pub fn enumerate_connected_subgraphs(g: &MultiGraph, k: usize, cap: usize) -> Result<Vec<VertexSet>> {
    if k == 0 || k > g.n() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for v in 0..g.n() {
        let higher = VertexSet::full(g.n()).difference(VertexSet::full(v + 1));
        let ext = g.neighbors(v).intersection(higher);
        extend(g, k, VertexSet::singleton(v), ext, higher, cap, &mut out)?;
    }
    out.sort_unstable();
    Ok(out)
}

// ESU-style extension: every connected set is produced once, from its
// smallest vertex, by only adding exclusive neighbors of the newest vertex.
fn extend(
    g: &MultiGraph,
    k: usize,
    set: VertexSet,
    mut ext: VertexSet,
    allowed: VertexSet,
    cap: usize,
    out: &mut Vec<VertexSet>,
) -> Result<()> {
    if set.len() == k {
        if out.len() >= cap {
            return Err(Error::FeasibilityCapExceeded {
                what: "connected subgraph enumeration",
                detail: format!("more than {cap} sets of size {k}"),
            });
        }
        out.push(set);
        return Ok(());
    }
    let closed = set.union(g.neighborhood(set));
    while let Some(w) = ext.first() {
        ext.remove(w);
        let exclusive = g.neighbors(w).intersection(allowed).difference(closed);
        extend(g, k, set.with(w), ext.union(exclusive), allowed, cap, out)?;
    }
    Ok(())
}

/// Every connected vertex set inside `allowed` that contains `root`.
pub(crate) fn connected_sets_containing(g: &MultiGraph, root: usize, allowed: VertexSet, cap: usize) -> Result<Vec<VertexSet>> {
    let mut out = Vec::new();
    let allowed = allowed.without(root);
    grow(g, VertexSet::singleton(root), g.neighbors(root).intersection(allowed), allowed, cap, &mut out)?;
    Ok(out)
}

fn grow(
    g: &MultiGraph,
    set: VertexSet,
    mut ext: VertexSet,
    allowed: VertexSet,
    cap: usize,
    out: &mut Vec<VertexSet>,
) -> Result<()> {
    if out.len() >= cap {
        return Err(Error::FeasibilityCapExceeded {
            what: "connected subgraph enumeration",
            detail: format!("more than {cap} sets"),
        });
    }
    out.push(set);
    let closed = set.union(g.neighborhood(set));
    while let Some(w) = ext.first() {
        ext.remove(w);
        let exclusive = g.neighbors(w).intersection(allowed).difference(closed);
        grow(g, set.with(w), ext.union(exclusive), allowed, cap, out)?;
    }
    Ok(())
}

/// Every connected vertex set of size at most `max_size`.
pub(crate) fn all_connected_sets(g: &MultiGraph, max_size: usize, cap: usize) -> Result<Vec<VertexSet>> {
    let mut out = Vec::new();
    for k in 1..=max_size.min(g.n()) {
        out.extend(enumerate_connected_subgraphs(g, k, cap.saturating_sub(out.len()))?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate_family, Family};

    fn brute(g: &MultiGraph, k: usize) -> Vec<VertexSet> {
        let mut v: Vec<_> = (0u64..1 << g.n())
            .map(VertexSet::from_bits)
            .filter(|s| s.len() == k && g.is_connected_set(*s))
            .collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn sets_containing_root_match_brute_force() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(4);
        for i in 0..30 {
            let n = 3 + i % 6;
            let g = crate::corpus::random_connected_simple(&mut rng, n, 0.4);
            let allowed = VertexSet::from_bits(0b1011_0111 & ((1 << n) - 1)).with(0);
            let mut got = connected_sets_containing(&g, 0, allowed, usize::MAX).unwrap();
            got.sort_unstable();
            let expect: Vec<VertexSet> = brute_all(&g)
                .into_iter()
                .filter(|s| s.contains(0) && s.is_subset(allowed))
                .collect();
            assert_eq!(got, expect);
        }
    }

    fn brute_all(g: &MultiGraph) -> Vec<VertexSet> {
        let mut v: Vec<_> = (1u64..1 << g.n()).map(VertexSet::from_bits).filter(|s| g.is_connected_set(*s)).collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn small_counts() {
        let c4 = generate_family(&Family::Cycle(4)).unwrap();
        assert_eq!(enumerate_connected_subgraphs(&c4, 2, 100).unwrap().len(), 4);
        let p4 = generate_family(&Family::Path(4)).unwrap();
        assert_eq!(enumerate_connected_subgraphs(&p4, 3, 100).unwrap().len(), 2);
    }

    #[test]
    fn bipartite_plus_cycle_has_all_half_sets() {
        let g = generate_family(&Family::BipartitePlusCycle(10)).unwrap();
        assert_eq!(enumerate_connected_subgraphs(&g, 5, 1000).unwrap().len(), 252);
    }

    #[test]
    fn matches_brute_force() {
        for f in [Family::Petersen, Family::Grid(3, 3), Family::Band(2)] {
            let g = generate_family(&f).unwrap();
            for k in 1..=5 {
                assert_eq!(enumerate_connected_subgraphs(&g, k, 10_000).unwrap(), brute(&g, k), "{f:?} k={k}");
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        let g = generate_family(&Family::Complete(8)).unwrap();
        assert!(matches!(
            enumerate_connected_subgraphs(&g, 4, 10),
            Err(Error::FeasibilityCapExceeded { .. })
        ));
    }
}
