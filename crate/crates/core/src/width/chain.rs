use serde::Serialize;

use super::{screewidth_exact, treewidth_exact, vertex_congestion_exact};
use crate::budget::Budget;
use crate::chipfiring::gonality_exact;
use crate::error::{Error, Result};
use crate::graph::MultiGraph;

/// Invariant values for [`bound_chain_check`]. The scramble number must be
/// supplied as an interval; missing width values and gonality are computed
/// when they fit the budget.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ChainInputs {
    pub sn: Option<(u64, u64)>,
    pub tw: Option<i64>,
    pub scw: Option<u64>,
    pub vcon: Option<u64>,
    pub tw_line: Option<i64>,
    pub gon: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainCheck {
    pub name: &'static str,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    pub inputs: ChainInputs,
    pub checks: Vec<ChainCheck>,
}

impl ChainReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }
}

fn check(name: &'static str, values: Option<(bool, String)>, why_skipped: &str) -> ChainCheck {
    match values {
        Some((ok, detail)) => ChainCheck {
            name,
            status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
            detail,
        },
        None => ChainCheck { name, status: CheckStatus::Skipped, detail: why_skipped.to_string() },
    }
}

/// Evaluates `tw ≤ sn ≤ gon`, `sn ≤ scw`, `sn ≤ (tw+1)Δ − 1`,
/// `scw ≤ vcon`, `tw(L(G)) ≥ tw − 1` and, for simple graphs,
/// `vcon = tw(L(G)) + 1`.
pub fn bound_chain_check(g: &MultiGraph, inputs: &ChainInputs, budget: &Budget) -> Result<ChainReport> {
    let (sn_lo, sn_hi) = inputs.sn.ok_or(Error::MissingInvariant("sn"))?;
    let n = g.n();
    let mut v = inputs.clone();
    if v.tw.is_none() {
        v.tw = treewidth_exact(g, budget).ok();
    }
    if v.scw.is_none() {
        v.scw = screewidth_exact(g, budget).ok().map(|(w, _)| w);
    }
    if v.vcon.is_none() {
        v.vcon = vertex_congestion_exact(g, budget).ok().map(|(c, _)| c);
    }
    if v.tw_line.is_none() && g.edge_count() > 0 {
        v.tw_line = g.line_graph().ok().and_then(|l| treewidth_exact(&l, budget).ok());
    }
    if v.gon.is_none() {
        v.gon = gonality_exact(g, budget.gonality_degree, budget).ok().map(|x| x.gonality);
    }
    let delta = g.max_degree() as i64;
    let unknown = "an input is unavailable";
    let checks = vec![
        check("tw <= sn", v.tw.map(|tw| (tw <= sn_hi as i64, format!("tw = {tw}, sn <= {sn_hi}"))), unknown),
        check("sn <= gon", v.gon.map(|gon| (sn_lo <= gon, format!("sn >= {sn_lo}, gon = {gon}"))), unknown),
        check("sn <= scw", v.scw.map(|scw| (sn_lo <= scw, format!("sn >= {sn_lo}, scw = {scw}"))), unknown),
        check(
            "sn <= (tw+1)*maxdeg - 1",
            v.tw.filter(|_| n >= 2).map(|tw| {
                let bound = (tw + 1) * delta - 1;
                (sn_lo as i64 <= bound, format!("sn >= {sn_lo}, tw = {tw}, maxdeg = {delta}, bound = {bound}"))
            }),
            "needs tw and at least two vertices",
        ),
        check(
            "scw <= vcon",
            v.scw.zip(v.vcon).filter(|_| n >= 3).map(|(s, c)| (s <= c, format!("scw = {s}, vcon = {c}"))),
            "needs scw, vcon and at least three vertices",
        ),
        check(
            "tw(L) >= tw - 1",
            v.tw.zip(v.tw_line).map(|(t, l)| (l >= t - 1, format!("tw = {t}, tw(L) = {l}"))),
            unknown,
        ),
        check(
            "vcon = tw(L) + 1",
            v.vcon.zip(v.tw_line).filter(|_| g.is_simple()).map(|(c, l)| (c as i64 == l + 1, format!("vcon = {c}, tw(L) = {l}"))),
            "needs vcon, tw(L) and a simple graph",
        ),
    ];
    Ok(ChainReport { inputs: v, checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate_family, Family};

    #[test]
    fn cycle_chain() {
        let g = generate_family(&Family::Cycle(5)).unwrap();
        let r = bound_chain_check(&g, &ChainInputs { sn: Some((2, 2)), ..Default::default() }, &Budget::default()).unwrap();
        assert!(r.all_hold(), "{r:?}");
        assert!(r.checks.iter().all(|c| c.status == CheckStatus::Pass));
        assert_eq!(r.inputs.tw, Some(2));
        assert_eq!(r.checks[3].detail, "sn >= 2, tw = 2, maxdeg = 2, bound = 5");
    }

    #[test]
    fn failures_and_missing() {
        let g = generate_family(&Family::Cycle(5)).unwrap();
        assert_eq!(
            bound_chain_check(&g, &ChainInputs::default(), &Budget::default()).unwrap_err(),
            Error::MissingInvariant("sn")
        );
        let r = bound_chain_check(&g, &ChainInputs { sn: Some((9, 9)), ..Default::default() }, &Budget::default()).unwrap();
        assert!(!r.all_hold());
    }
}
