//! Scrambles: collections of connected vertex sets ("eggs") and their order.

mod bounds;
pub mod hitting;
pub mod io;
mod order;
mod procedures;

use std::sync::OnceLock;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{enumerate_connected_subgraphs, MultiGraph};
use crate::vset::VertexSet;

pub use bounds::{carton_lower_bound, min_egg_size, required_order, scramble_size_lower_bound};
pub use order::{certify_cut, egg_cut_number, EggCut, OrderReport};
pub use procedures::{pare_to_hitting, prune_nested, subdivision_transfer, TransferDirection};

/// A nonempty set of distinct, nonempty, connected eggs on a host graph.
///
/// Eggs are kept in canonical (lexicographic) order. The order report is
/// computed at most once per value.
#[derive(Clone)]
pub struct Scramble<'g> {
    host: &'g MultiGraph,
    eggs: Vec<VertexSet>,
    report: OnceLock<OrderReport>,
}

impl std::fmt::Debug for Scramble<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Scramble").field("eggs", &self.eggs).finish()
    }
}

impl PartialEq for Scramble<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.host == other.host && self.eggs == other.eggs
    }
}

/// Validates `eggs` against `host` and builds the scramble; duplicates are dropped.
pub fn make_scramble<I>(host: &MultiGraph, eggs: I) -> Result<Scramble<'_>>
where
    I: IntoIterator<Item = VertexSet>,
{
    let mut out = Vec::new();
    let full = host.vertices();
    for (i, egg) in eggs.into_iter().enumerate() {
        if egg.is_empty() {
            return Err(Error::EmptyEgg(i));
        }
        if !egg.is_subset(full) {
            let index = egg.difference(full).first().expect("nonempty difference");
            return Err(Error::BadIndex { index, n: host.n() });
        }
        if !host.is_connected_set(egg) {
            return Err(Error::DisconnectedEgg(i));
        }
        out.push(egg);
    }
    if out.is_empty() {
        return Err(Error::EmptyCollection);
    }
    out.sort_unstable();
    out.dedup();
    Ok(Scramble { host, eggs: out, report: OnceLock::new() })
}

/// Every vertex as its own egg.
pub fn vertegg_scramble(host: &MultiGraph) -> Scramble<'_> {
    make_scramble(host, (0..host.n()).map(VertexSet::singleton)).expect("single vertices are connected")
}

/// The k-uniform scramble: all connected k-vertex sets.
pub fn uniform_scramble<'g>(host: &'g MultiGraph, k: usize, budget: &Budget) -> Result<Scramble<'g>> {
    if k == 0 || k > host.n() {
        return Err(Error::BadParams(format!("k = {k} outside 1..={}", host.n())));
    }
    make_scramble(host, enumerate_connected_subgraphs(host, k, budget.enumerated_sets)?)
}

impl<'g> Scramble<'g> {
    pub fn host(&self) -> &'g MultiGraph {
        self.host
    }

    pub fn eggs(&self) -> &[VertexSet] {
        &self.eggs
    }

    /// Number of eggs.
    pub fn size(&self) -> usize {
        self.eggs.len()
    }

    pub fn is_disjoint(&self) -> bool {
        let mut seen = VertexSet::EMPTY;
        for &e in &self.eggs {
            if e.intersects(seen) {
                return false;
            }
            seen = seen.union(e);
        }
        true
    }

    /// Minimum hitting set size with a witness.
    pub fn hitting_number(&self, budget: &Budget) -> Result<(u64, VertexSet)> {
        if let Some(r) = self.report.get() {
            return Ok((r.hitting, r.hitting_witness));
        }
        let h = hitting::min_hitting_set(&self.eggs, budget.hitting_nodes)?;
        Ok((h.len() as u64, h))
    }

    pub fn egg_cut_number(&self, budget: &Budget) -> Result<EggCut> {
        egg_cut_number(self.host, &self.eggs, budget)
    }

    /// `min(h, e)` with witnesses for both.
    pub fn order(&self, budget: &Budget) -> Result<&OrderReport> {
        if let Some(r) = self.report.get() {
            return Ok(r);
        }
        let (hitting, hitting_witness) = self.hitting_number(budget)?;
        let cut = self.egg_cut_number(budget)?;
        let report = OrderReport::new(hitting, hitting_witness, cut);
        Ok(self.report.get_or_init(|| report))
    }

    pub fn order_value(&self, budget: &Budget) -> Result<u64> {
        Ok(self.order(budget)?.order)
    }

    /// The scramble keeping only the eggs for which `keep` holds.
    pub fn subset<F: FnMut(&VertexSet) -> bool>(&self, mut keep: F) -> Result<Scramble<'g>> {
        let eggs: Vec<VertexSet> = self.eggs.iter().copied().filter(|e| keep(e)).collect();
        if eggs.is_empty() {
            return Err(Error::EmptyCollection);
        }
        Ok(Scramble { host: self.host, eggs, report: OnceLock::new() })
    }

    /// The same eggs viewed on another host (which must contain them as
    /// connected sets).
    pub fn rehost<'h>(&self, host: &'h MultiGraph) -> Result<Scramble<'h>> {
        make_scramble(host, self.eggs.iter().copied())
    }
}
