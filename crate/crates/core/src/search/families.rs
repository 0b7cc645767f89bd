use serde::Serialize;

use super::carton::{carton_value, CartonValue};
use super::dsn::dsn_exact;
use super::interval::sn_interval;
use crate::budget::Budget;
use crate::chipfiring::gonality_exact;
use crate::error::{Error, Result};
use crate::graph::params::edge_connectivity;
use crate::graph::{generate_family, Family, MultiGraph};
use crate::scramble::make_scramble;
use crate::vset::VertexSet;
use crate::width::screewidth_exact;

/// Eggs of `G □ H` (vertex `g·|V(H)| + h`) made of the copies of `G`, one per
/// vertex of `H`, or of the copies of `H` when `copies_of_first` is false.
pub fn cartesian_copies(n_first: usize, n_second: usize, copies_of_first: bool) -> Vec<VertexSet> {
    if copies_of_first {
        (0..n_second).map(|h| (0..n_first).map(|g| g * n_second + h).collect()).collect()
    } else {
        (0..n_first).map(|g| (0..n_second).map(|h| g * n_second + h).collect()).collect()
    }
}

/// The copies-of-`G` scramble on `G □ H` and the bound its order meets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CartesianBound {
    pub order: u64,
    /// `min(|V(H)|, |V(G)|·λ(H))`.
    pub bound: u64,
    pub eggs: Vec<VertexSet>,
}

pub fn dsn_cartesian_lower(g: &MultiGraph, h: &MultiGraph, budget: &Budget) -> Result<CartesianBound> {
    let product = g.cartesian_product(h)?;
    let eggs = cartesian_copies(g.n(), h.n(), true);
    let s = make_scramble(&product, eggs)?;
    let order = s.order_value(budget)?;
    let nh = h.n() as u64;
    let bound = if h.n() >= 2 { nh.min(g.n() as u64 * edge_connectivity(h)) } else { nh };
    if order < bound {
        return Err(Error::PreconditionViolated(format!("copies scramble has order {order} below {bound}")));
    }
    Ok(CartesianBound { order, bound, eggs: s.eggs().to_vec() })
}

/// A desk-scale instance of a Cartesian-product family whose disjoint
/// scramble number, scramble number, carton number and gonality coincide.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table1Row {
    pub row: usize,
    pub g: Family,
    pub h: Family,
    pub expected: u64,
}

/// Outcome of checking one [`Table1Row`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table1Check {
    pub row: usize,
    pub assumptions_hold: bool,
    pub copies_order: u64,
    pub gonality: u64,
    pub expected: u64,
    pub holds: bool,
}

pub fn table1_rows() -> Vec<Table1Row> {
    use Family::*;
    vec![
        Table1Row { row: 1, g: Path(2), h: Cycle(4), expected: 4 },
        Table1Row { row: 1, g: Path(3), h: Complete(4), expected: 4 },
        Table1Row { row: 2, g: Path(2), h: Grid(2, 2), expected: 4 },
        Table1Row { row: 3, g: Path(2), h: Cylinder(3, 2), expected: 6 },
        Table1Row { row: 4, g: Path(2), h: Cycle(5), expected: 4 },
        Table1Row { row: 5, g: Path(2), h: CompleteMultipartite(vec![2, 3]), expected: 4 },
    ]
}

impl Table1Row {
    /// Checks the row's assumptions on the factors, then that the copies of
    /// `G` reach the expected order and the gonality of `G □ H` equals it,
    /// which pins all four invariants.
    pub fn check(&self, budget: &Budget) -> Result<Table1Check> {
        let g = generate_family(&self.g)?;
        let h = generate_family(&self.h)?;
        let (ng, nh) = (g.n() as u64, h.n() as u64);
        let lambda_h = edge_connectivity(&h);
        let gon = |x: &MultiGraph| gonality_exact(x, budget.gonality_degree.max(self.expected), budget).map(|r| r.gonality);
        let is_tree = g.edge_count() + 1 == ng;
        let assumptions_hold = match self.row {
            1 => is_tree && gon(&h)? == lambda_h && self.expected == nh.min(lambda_h * ng),
            2 => match (&self.g, &self.h) {
                (Family::Path(l), Family::Grid(m, n)) => 2 * l >= m * n && self.expected == (m * n) as u64,
                _ => false,
            },
            3 => match &self.h {
                Family::Cylinder(3, t) => ng <= *t as u64 && *t >= 2 && self.expected == 3 * ng,
                Family::Rook(l, t) => ng <= *t as u64 && *t >= 2 && self.expected == (*l as u64) * ng,
                _ => false,
            },
            4 => lambda_h == 2 && gon(&h)? == 2 && 2 * ng <= nh && self.expected == 2 * ng,
            5 => match &self.h {
                Family::CompleteMultipartite(p) if p.len() == 2 => {
                    let (m, n) = (p[0].min(p[1]) as u64, p[0].max(p[1]) as u64);
                    ng * m <= m + n && self.expected == m * ng
                }
                _ => false,
            },
            _ => false,
        };
        let copies = dsn_cartesian_lower(&g, &h, budget)?;
        let product = g.cartesian_product(&h)?;
        let gonality = gon(&product)?;
        Ok(Table1Check {
            row: self.row,
            assumptions_hold,
            copies_order: copies.order,
            gonality,
            expected: self.expected,
            holds: assumptions_hold && copies.order == self.expected && gonality == self.expected,
        })
    }
}

/// Values gathered for a `k`-edge-connected graph of gonality `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiveReport {
    pub edge_connectivity: Option<u64>,
    pub gonality: Option<u64>,
    pub precondition_met: bool,
    pub dsn: Option<u64>,
    pub sn: Option<(u64, u64)>,
    pub cart: Option<CartonValue>,
    pub scw: Option<u64>,
    /// Every computed invariant equals `k` (vacuously true when the
    /// precondition fails).
    pub holds: bool,
}

/// If `λ(G) = gon(G) = k`, computes dsn, sn, cart and scw (each where
/// feasible) and checks they all equal `k`.
pub fn five_invariant_check(g: &MultiGraph, budget: &Budget) -> Result<FiveReport> {
    let mut r = FiveReport {
        edge_connectivity: None,
        gonality: None,
        precondition_met: false,
        dsn: None,
        sn: None,
        cart: None,
        scw: None,
        holds: true,
    };
    if g.n() < 2 {
        return Ok(r);
    }
    let k = edge_connectivity(g);
    r.edge_connectivity = Some(k);
    let gon = match gonality_exact(g, k.max(1), budget) {
        Ok(x) => x.gonality,
        Err(Error::CapExceeded(_)) => return Ok(r),
        Err(e) => return Err(e),
    };
    r.gonality = Some(gon);
    if gon != k {
        return Ok(r);
    }
    r.precondition_met = true;
    r.dsn = Some(dsn_exact(g, None, budget)?.dsn);
    let sn = sn_interval(g, None, &[], budget)?;
    r.sn = Some((sn.sn.lower, sn.sn.upper));
    r.cart = Some(carton_value(g, None, None, budget)?);
    r.scw = match screewidth_exact(g, budget) {
        Ok((w, _)) => Some(w),
        Err(Error::FeasibilityCapExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    r.holds = r.dsn == Some(k)
        && r.sn == Some((k, k))
        && r.cart.as_ref().is_some_and(|c| c.exact && c.lower == k)
        && r.scw.is_none_or(|w| w == k);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn copies_bounds() {
        let p2 = generate_family(&Family::Path(2)).unwrap();
        let c3 = generate_family(&Family::Cycle(3)).unwrap();
        let r = dsn_cartesian_lower(&p2, &c3, &b()).unwrap();
        assert_eq!((r.bound, r.order), (3, 3));
        let c4 = generate_family(&Family::Cycle(4)).unwrap();
        assert_eq!(dsn_cartesian_lower(&c4, &p2, &b()).unwrap().bound, 2);
        assert_eq!(dsn_cartesian_lower(&p2, &c4, &b()).unwrap().order, 4);
    }

    #[test]
    fn copies_match_generated_products() {
        for f in [Family::Grid(3, 4), Family::Cylinder(4, 2), Family::Rook(3, 3)] {
            let (a, c) = f.product_factors().unwrap();
            let (a, c) = (generate_family(&a).unwrap(), generate_family(&c).unwrap());
            assert_eq!(a.cartesian_product(&c).unwrap(), generate_family(&f).unwrap());
        }
        assert_eq!(cartesian_copies(2, 3, true), vec![VertexSet::from_iter([0, 3]), VertexSet::from_iter([1, 4]), VertexSet::from_iter([2, 5])]);
        assert_eq!(cartesian_copies(2, 3, false), vec![VertexSet::from_iter([0, 1, 2]), VertexSet::from_iter([3, 4, 5])]);
    }

    #[test]
    fn five_invariants() {
        for f in [Family::Cycle(5), Family::CompleteMultipartite(vec![2, 3]), Family::Path(4)] {
            let r = five_invariant_check(&generate_family(&f).unwrap(), &b()).unwrap();
            assert!(r.precondition_met && r.holds, "{f}: {r:?}");
        }
        let r = five_invariant_check(&generate_family(&Family::Petersen).unwrap(), &b()).unwrap();
        assert!(!r.precondition_met);
    }
}
