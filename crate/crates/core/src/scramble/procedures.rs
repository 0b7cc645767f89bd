use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::MultiGraph;
use crate::scramble::hitting::min_hitting_set;
use crate::scramble::{make_scramble, Scramble};
use crate::vset::VertexSet;

/// A subscramble with the same order whose hitting number equals its order.
///
/// Eggs are removed in canonical order. Removing an egg lowers the hitting
/// number by at most one and never lowers the egg-cut number, so the
/// shortest removed prefix reaching the target order is found by binary
/// search.
pub fn pare_to_hitting<'g>(s: &Scramble<'g>, budget: &Budget) -> Result<Scramble<'g>> {
    let report = s.order(budget)?;
    let target = report.order;
    if report.hitting == target {
        return Ok(s.clone());
    }
    let eggs = s.eggs();
    let h = |i: usize| -> Result<u64> { Ok(min_hitting_set(&eggs[i..], budget.hitting_nodes)?.len() as u64) };
    // h(eggs[0..]) > target and h(eggs[len-1..]) = 1 <= target.
    let (mut lo, mut hi) = (0, eggs.len() - 1);
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if h(mid)? > target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut skip = 0;
    s.subset(|_| {
        skip += 1;
        skip > hi
    })
}

/// Deletes every egg that strictly contains another egg.
pub fn prune_nested<'g>(s: &Scramble<'g>) -> Scramble<'g> {
    let eggs = s.eggs();
    s.subset(|e| !eggs.iter().any(|f| f != e && f.is_subset(*e)))
        .expect("inclusion-minimal eggs always exist")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TransferDirection {
    /// From `G` to the graph where `(u, w)` is subdivided by the new vertex `v`.
    Forward,
    /// From the subdivided graph back to `G` by smoothing `v`.
    Backward,
}

/// Moves a scramble across the subdivision of `(u, w)` by `v`.
///
/// Forward: `s` lives on `G`, `target` is `G` with one copy of `(u, w)`
/// subdivided and `v` the new vertex; `v` joins every egg containing `u`.
/// Backward: `s` lives on the subdivided graph, `target` is the result of
/// smoothing `v`; `v` leaves every egg, emptied eggs are dropped, and the
/// vertices above `v` shift down by one. Backward requires order at least 3.
pub fn subdivision_transfer<'h>(
    s: &Scramble<'_>,
    target: &'h MultiGraph,
    direction: TransferDirection,
    (u, w, v): (usize, usize, usize),
    budget: &Budget,
) -> Result<Scramble<'h>> {
    let (big, small) = match direction {
        TransferDirection::Forward => (target, s.host()),
        TransferDirection::Backward => (s.host(), target),
    };
    let fits = big.n() == small.n() + 1
        && v < big.n()
        && big.degree(v) == 2
        && u != w
        && u != v
        && w != v
        && big.multiplicity(u, v) == 1
        && big.multiplicity(v, w) == 1;
    if !fits {
        return Err(Error::BadVertex(v));
    }
    match direction {
        TransferDirection::Forward => {
            if v != small.n() || u >= small.n() || w >= small.n() || small.multiplicity(u, w) == 0 {
                return Err(Error::BadVertex(v));
            }
            let eggs = s.eggs().iter().map(|&e| if e.contains(u) { e.with(v) } else { e });
            make_scramble(target, eggs)
        }
        TransferDirection::Backward => {
            let order = s.order_value(budget)?;
            if order < 3 {
                return Err(Error::OrderTooSmall(order));
            }
            let low = VertexSet::full(v);
            let eggs: Vec<VertexSet> = s
                .eggs()
                .iter()
                .map(|&e| {
                    let b = e.without(v).bits();
                    VertexSet::from_bits((b & low.bits()) | ((b >> 1) & !low.bits()))
                })
                .filter(|e| !e.is_empty())
                .collect();
            make_scramble(target, eggs)
        }
    }
}
