//! Disjoint scramble number, the scramble-number interval, carton number,
//! and Cartesian-product constructions.

mod carton;
mod dsn;
mod families;
mod interval;

use serde::Serialize;

pub use carton::{bridge_compose_carton, carton_bruteforce, carton_value, BridgeCarton, CartonBrute, CartonValue};
pub use dsn::{dsn_exact, dsn_growth_bound, DsnResult};
pub use families::{
    cartesian_copies, dsn_cartesian_lower, five_invariant_check, table1_rows, CartesianBound, FiveReport, Table1Check, Table1Row,
};
pub use interval::{sn_interval, CatalogEntry, SnReport};

use crate::budget::Budget;
use crate::chipfiring::{has_positive_rank, Divisor};
use crate::error::Result;
use crate::graph::MultiGraph;
use crate::scramble::make_scramble;
use crate::vset::VertexSet;
use crate::width::{tcd_width, treewidth_exact, TreeCutDecomposition};

/// Evidence for one end of an [`InvariantInterval`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// A scramble whose order is the bound.
    Scramble { name: String, eggs: Vec<VertexSet> },
    /// Treewidth, a lower bound on scramble number.
    Treewidth { tw: i64 },
    /// No scramble has order above the vertex count.
    VertexCount { n: u64 },
    /// `(tw + 1)·Δ − 1`.
    DegreeBound { tw: i64, max_degree: u64 },
    /// A tree-cut decomposition whose width is the bound.
    Decomposition { decomposition: TreeCutDecomposition },
    /// A positive-rank divisor whose degree is the bound.
    Divisor { divisor: Divisor },
    /// A closed-form value for a named family or a value supplied by the caller.
    Formula { statement: String },
}

impl Certificate {
    /// Recomputes the value this certificate proves.
    pub fn value(&self, g: &MultiGraph, budget: &Budget) -> Result<Option<i64>> {
        Ok(match self {
            Certificate::Scramble { eggs, .. } => {
                Some(make_scramble(g, eggs.iter().copied())?.order_value(budget)? as i64)
            }
            Certificate::Treewidth { tw } => (treewidth_exact(g, budget)? == *tw).then_some(*tw),
            Certificate::VertexCount { n } => (*n == g.n() as u64).then_some(*n as i64),
            Certificate::DegreeBound { tw, max_degree } => {
                let ok = treewidth_exact(g, budget)? == *tw && *max_degree == g.max_degree();
                ok.then(|| (tw + 1) * *max_degree as i64 - 1)
            }
            Certificate::Decomposition { decomposition } => Some(tcd_width(decomposition, g)?.width as i64),
            Certificate::Divisor { divisor } => {
                (divisor.is_effective() && has_positive_rank(g, divisor)?).then(|| divisor.degree())
            }
            Certificate::Formula { .. } => None,
        })
    }
}

/// Certified bounds `lower ≤ x ≤ upper` on an invariant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantInterval {
    pub lower: u64,
    pub upper: u64,
    pub lower_witness: Certificate,
    pub upper_witness: Certificate,
    pub exact: bool,
}

impl InvariantInterval {
    pub fn new(lower: (u64, Certificate), upper: (u64, Certificate)) -> Self {
        InvariantInterval {
            lower: lower.0,
            upper: upper.0,
            lower_witness: lower.1,
            upper_witness: upper.1,
            exact: lower.0 == upper.0,
        }
    }

    pub fn exact_value(&self) -> Option<u64> {
        self.exact.then_some(self.lower)
    }

    /// Whether both witnesses recompute to at least (lower) or at most
    /// (upper) the stated bounds. Formula witnesses are accepted as given.
    pub fn verify(&self, g: &MultiGraph, budget: &Budget) -> Result<bool> {
        let lo = self.lower_witness.value(g, budget)?;
        let hi = self.upper_witness.value(g, budget)?;
        let lo_ok = match (&self.lower_witness, lo) {
            (Certificate::Formula { .. }, _) => true,
            (_, Some(v)) => v >= self.lower as i64,
            (_, None) => false,
        };
        let hi_ok = match (&self.upper_witness, hi) {
            (Certificate::Formula { .. }, _) => true,
            (_, Some(v)) => v <= self.upper as i64,
            (_, None) => false,
        };
        Ok(self.lower <= self.upper && lo_ok && hi_ok)
    }
}
