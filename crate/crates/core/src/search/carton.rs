use serde::Serialize;

use super::dsn::dsn_exact;
use super::interval::sn_interval;
use crate::budget::Budget;
use crate::count::Count;
use crate::error::{Error, Result};
use crate::graph::enumerate::all_connected_sets;
use crate::graph::flow::min_edge_cut;
use crate::graph::{Family, MultiGraph};
use crate::scramble::carton_lower_bound;
use crate::vset::VertexSet;

/// Carton number as an exact value or an interval with an open top.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CartonValue {
    pub lower: u64,
    /// `inf` when no scramble of maximum order is known.
    pub upper: Count,
    pub exact: bool,
    /// Scramble-number bounds used.
    pub sn: (u64, u64),
    pub method: String,
    pub witness: Option<Vec<VertexSet>>,
}

impl CartonValue {
    fn exact(value: u64, method: &str, witness: Option<Vec<VertexSet>>) -> Self {
        CartonValue {
            lower: value,
            upper: Count::Finite(value),
            exact: true,
            sn: (value, value),
            method: method.into(),
            witness,
        }
    }
}

/// Closed forms for families whose five invariants coincide.
fn family_formula(f: &Family) -> Option<u64> {
    use Family::*;
    Some(match f {
        Path(_) | Star(_) => 1,
        Complete(1) => 1,
        Complete(n) => *n as u64 - 1,
        Cycle(_) => 2,
        CompleteMultipartite(p) => {
            let total: usize = p.iter().sum();
            (total - p.iter().max().copied().unwrap_or(0)) as u64
        }
        Grid(m, n) => (*m).min(*n) as u64,
        Cylinder(m, n) => (*m).min(2 * *n) as u64,
        _ => return None,
    })
}

/// Carton number by the strongest available route: a family formula (when
/// the tag matches the graph), exhaustive search on tiny graphs, `cart = sn`
/// when a disjoint scramble reaches the pinned scramble number, and
/// otherwise `max(sn, 3·sn − n if Δ < sn)` from below with the smallest
/// known maximum-order scramble from above. A supplied `known_sn` is taken
/// as given.
pub fn carton_value(g: &MultiGraph, family: Option<&Family>, known_sn: Option<u64>, budget: &Budget) -> Result<CartonValue> {
    if let Some(f) = family {
        if crate::graph::generate_family(f).ok().as_ref() == Some(g) {
            if let Some(v) = family_formula(f) {
                return Ok(CartonValue::exact(v, &format!("family formula for {f}"), None));
            }
        }
    }
    if known_sn.is_none() && g.n() <= budget.carton_vertices {
        let r = carton_bruteforce(g, budget)?;
        return Ok(CartonValue::exact(r.cart, "exhaustive search", Some(r.witness)).with_sn(r.sn));
    }
    let n = g.n() as u64;
    let (sn, dsn, best_scramble) = match known_sn {
        Some(s) => ((s, s), None, None),
        None => {
            let r = sn_interval(g, family, &[], budget)?;
            let pinned = r.sn.exact_value();
            let smallest = r
                .catalog
                .iter()
                .filter(|e| Some(e.order) == pinned)
                .min_by_key(|e| e.size)
                .map(|e| e.eggs.clone());
            ((r.sn.lower, r.sn.upper), r.dsn.map(|d| (d.dsn, d.eggs)), smallest)
        }
    };
    let mut lower = sn.0;
    let mut method = "at least the scramble number".to_string();
    if sn.0 == sn.1 {
        // dsn ≤ sn, so a search stopped at sn is exact
        let dsn = match dsn {
            Some(d) => Some(d),
            None => match dsn_exact(g, Some(sn.0), budget) {
                Ok(d) => Some((d.dsn, d.eggs)),
                Err(Error::FeasibilityCapExceeded { .. }) => None,
                Err(e) => return Err(e),
            },
        };
        match dsn {
            Some((d, eggs)) if d == sn.0 => {
                return Ok(CartonValue::exact(d, "disjoint scramble meets the scramble number", Some(eggs)).with_sn(d));
            }
            Some(_) => {
                lower = sn.0 + 1;
                method = "disjoint scramble number below the scramble number".into();
            }
            None => {}
        }
    }
    if let Ok(b) = carton_lower_bound(sn.0, n, g.max_degree()) {
        if b > lower as i64 {
            lower = b as u64;
            method = "3·sn − n with maximum degree below sn".into();
        }
    }
    let upper = match &best_scramble {
        Some(eggs) => Count::Finite(eggs.len() as u64),
        None => Count::Infinite,
    };
    let exact = upper == Count::Finite(lower);
    Ok(CartonValue { lower, upper, exact, sn, method, witness: best_scramble })
}

impl CartonValue {
    fn with_sn(mut self, sn: u64) -> Self {
        self.sn = (sn, sn);
        self
    }
}

/// Exact scramble and carton numbers with a carton scramble.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CartonBrute {
    pub sn: u64,
    pub cart: u64,
    pub witness: Vec<VertexSet>,
    pub witness_disjoint: bool,
}

/// Exhaustive scramble and carton numbers for graphs on at most six
/// vertices (the budget's carton cap).
///
/// A family has egg-cut number at least `t` exactly when every disjoint
/// pair of its eggs has minimum cut at least `t`, so `sn ≥ t` is decided by
/// a clique search over connected vertex sets, pruned by the hitting number
/// of everything still addable. The carton search then looks for the
/// fewest such eggs with hitting number at least `sn`, over antichains
/// only (a nested egg can always be dropped), starting from
/// `max(sn, 3·sn − n)` when every degree is below `sn`.
pub fn carton_bruteforce(g: &MultiGraph, budget: &Budget) -> Result<CartonBrute> {
    let n = g.n();
    budget.check_vertices("carton number", n, budget.carton_vertices.min(6))?;
    let sets = all_connected_sets(g, n, 64)?;
    let m = sets.len();
    let mut cut = vec![vec![u64::MAX; m]; m];
    for i in 0..m {
        for j in i + 1..m {
            if sets[i].is_disjoint(sets[j]) {
                let c = min_edge_cut(g, sets[i], sets[j], u64::MAX).expect("unbounded cut").value;
                cut[i][j] = c;
                cut[j][i] = c;
            }
        }
    }
    // hitters[i]: bit X set iff vertex subset X meets sets[i].
    let hitters: Vec<u64> = sets
        .iter()
        .map(|s| (0..1u64 << n).filter(|&x| x & s.bits() != 0).fold(0, |acc, x| acc | 1 << x))
        .collect();
    let by_size: Vec<u64> = (0..=n).map(|k| (0..1u64 << n).filter(|x| x.count_ones() as usize == k).fold(0, |a, x| a | 1 << x)).collect();
    let ctx = Ctx { hitters, by_size, budget };
    let compat = |t: u64| -> Vec<u64> {
        (0..m).map(|i| (0..m).filter(|&j| j != i && cut[i][j] >= t).fold(0u64, |a, j| a | 1 << j)).collect()
    };

    let mut sn = 1;
    let mut sn_family = vec![0];
    for t in 2..=n as u64 {
        let c = compat(t);
        let mut found = None;
        ctx.clique(&c, 0, (1u64 << m) - 1, t, &mut found)?;
        match found {
            Some(f) => {
                sn = t;
                sn_family = bits(f);
            }
            None => break,
        }
    }

    let c = compat(sn);
    let nested: Vec<u64> = (0..m)
        .map(|i| (0..m).filter(|&j| j != i && (sets[i].is_subset(sets[j]) || sets[j].is_subset(sets[i]))).fold(0u64, |a, j| a | 1 << j))
        .collect();
    let mut start = sn;
    if let Ok(b) = carton_lower_bound(sn, n as u64, g.max_degree()) {
        start = start.max(b.max(0) as u64);
    }
    let mut witness = None;
    for size in start..=sn_family.len() as u64 {
        let mut found = None;
        ctx.sized(&c, &nested, 0, (1u64 << m) - 1, size, sn, &mut found)?;
        if let Some(f) = found {
            witness = Some(bits(f));
            break;
        }
    }
    let witness: Vec<VertexSet> = witness.unwrap_or(sn_family).into_iter().map(|i| sets[i]).collect();
    let witness_disjoint = witness.iter().enumerate().all(|(i, a)| witness[i + 1..].iter().all(|b| a.is_disjoint(*b)));
    Ok(CartonBrute { sn, cart: witness.len() as u64, witness, witness_disjoint })
}

fn bits(mask: u64) -> Vec<usize> {
    VertexSet::from_bits(mask).to_vec()
}

struct Ctx<'a> {
    hitters: Vec<u64>,
    by_size: Vec<u64>,
    budget: &'a Budget,
}

impl Ctx<'_> {
    /// Hitting number of the family with combined hitter mask `mask`.
    fn h(&self, mask: u64) -> u64 {
        self.by_size.iter().position(|&s| s & mask != 0).unwrap_or(self.by_size.len()) as u64
    }

    fn hit_mask(&self, family: u64) -> u64 {
        VertexSet::from_bits(family).iter().fold(u64::MAX, |a, i| a & self.hitters[i])
    }

    /// Some pairwise-compatible family with hitting number at least `t`.
    fn clique(&self, compat: &[u64], chosen: u64, cand: u64, t: u64, found: &mut Option<u64>) -> Result<()> {
        if found.is_some() {
            return Ok(());
        }
        if self.h(self.hit_mask(chosen)) >= t {
            *found = Some(chosen);
            return Ok(());
        }
        if self.h(self.hit_mask(chosen | cand)) < t {
            return Ok(());
        }
        self.budget.check_deadline("carton number")?;
        let i = cand.trailing_zeros() as usize;
        self.clique(compat, chosen | 1 << i, cand & compat[i] & !(1 << i), t, found)?;
        self.clique(compat, chosen, cand & !(1 << i), t, found)
    }

    /// Some compatible antichain of exactly `size` eggs with hitting number at least `t`.
    #[allow(clippy::too_many_arguments)]
    fn sized(&self, compat: &[u64], nested: &[u64], chosen: u64, cand: u64, size: u64, t: u64, found: &mut Option<u64>) -> Result<()> {
        if found.is_some() {
            return Ok(());
        }
        let have = chosen.count_ones() as u64;
        let h = self.h(self.hit_mask(chosen));
        if have == size {
            if h >= t {
                *found = Some(chosen);
            }
            return Ok(());
        }
        let left = size - have;
        if h + left < t || (cand.count_ones() as u64) < left || self.h(self.hit_mask(chosen | cand)) < t {
            return Ok(());
        }
        self.budget.check_deadline("carton number")?;
        let i = cand.trailing_zeros() as usize;
        let next = cand & compat[i] & !nested[i] & !(1 << i);
        self.sized(compat, nested, chosen | 1 << i, next, size, t, found)?;
        self.sized(compat, nested, chosen, cand & !(1 << i), size, t, found)
    }
}

/// Carton number across a bridge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BridgeCarton {
    pub cart: u64,
    /// Vertices of the side whose carton number is taken.
    pub side: VertexSet,
    pub sn: (u64, u64),
    pub cart_sides: (u64, u64),
}

/// For a bridge `(u, v)` splitting `G` into `G_1`, `G_2` ordered so that
/// `sn(G_1) ≥ sn(G_2)` (ties: `cart(G_1) ≤ cart(G_2)`), returns `cart(G_1)`.
pub fn bridge_compose_carton(g: &MultiGraph, u: usize, v: usize, budget: &Budget) -> Result<BridgeCarton> {
    let side = g.bridge_side(u, v)?.ok_or(Error::NotABridge(u, v))?;
    let other = g.vertices().difference(side);
    let mut parts = Vec::new();
    for s in [side, other] {
        let (h, _) = g.induced_subgraph(s)?;
        let c = carton_value(&h, None, None, budget)?;
        if !c.exact || c.sn.0 != c.sn.1 {
            return Err(Error::FeasibilityCapExceeded {
                what: "bridge composition",
                detail: format!("carton number of a side is only known within [{}, {}]", c.lower, c.upper),
            });
        }
        parts.push((s, c.sn.0, c.lower));
    }
    let (a, b) = (parts[0], parts[1]);
    let first = if a.1 > b.1 || (a.1 == b.1 && a.2 <= b.2) { a } else { b };
    Ok(BridgeCarton { cart: first.2, side: first.0, sn: (a.1, b.1), cart_sides: (a.2, b.2) })
}
