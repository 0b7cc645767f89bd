use serde::Serialize;

use super::dsn::{dsn_exact, DsnResult};
use super::families::cartesian_copies;
use super::{Certificate, InvariantInterval};
use crate::budget::Budget;
use crate::chipfiring::gonality_exact;
use crate::error::{Error, Result};
use crate::graph::{enumerate_connected_subgraphs, generate_family, Family, MultiGraph};
use crate::scramble::make_scramble;
use crate::vset::VertexSet;
use crate::width::{screewidth_exact, treewidth_exact};

/// One candidate scramble tried for the lower bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub name: String,
    pub size: usize,
    pub order: u64,
    #[serde(skip)]
    pub eggs: Vec<VertexSet>,
}

/// The scramble-number interval and the component values behind it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SnReport {
    pub sn: InvariantInterval,
    pub tw: Option<i64>,
    /// Exact: the search stops only at the upper end, which `dsn` cannot exceed.
    pub dsn: Option<DsnResult>,
    pub scw: Option<u64>,
    pub gon: Option<u64>,
    pub catalog: Vec<CatalogEntry>,
    /// Components that were not computed and why.
    pub skipped: Vec<String>,
}

fn skip_on_cap<T>(r: Result<T>, what: &str, skipped: &mut Vec<String>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(e @ (Error::FeasibilityCapExceeded { .. } | Error::CapExceeded(_))) => {
            skipped.push(format!("{what}: {e}"));
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

/// Candidate scrambles: verteggs, uniform scrambles up to the budget's `k`,
/// copies of a factor for Cartesian-product families, the middle verteggs
/// of a band graph, and any `extra` egg collections.
fn catalog(
    g: &MultiGraph,
    family: Option<&Family>,
    extra: &[Vec<VertexSet>],
    budget: &Budget,
    skipped: &mut Vec<String>,
) -> Result<Vec<(String, Vec<VertexSet>)>> {
    let n = g.n();
    let mut out = vec![("verteggs".to_string(), (0..n).map(VertexSet::singleton).collect())];
    for k in 2..=budget.uniform_k.min(n) {
        if let Some(eggs) = skip_on_cap(enumerate_connected_subgraphs(g, k, budget.enumerated_sets), &format!("uniform {k}"), skipped)? {
            out.push((format!("uniform {k}"), eggs));
        }
    }
    if let Some(f) = family {
        if generate_family(f).ok().as_ref() == Some(g) {
            if let Some((a, b)) = f.product_factors() {
                let (na, nb) = (generate_family(&a)?.n(), generate_family(&b)?.n());
                out.push((format!("copies of {a}"), cartesian_copies(na, nb, true)));
                out.push((format!("copies of {b}"), cartesian_copies(na, nb, false)));
            }
            if let Family::Band(k) = *f {
                out.push(("middle verteggs".to_string(), (k..3 * k).map(VertexSet::singleton).collect()));
            }
        } else {
            skipped.push(format!("family tag {f} does not match the graph"));
        }
    }
    for (i, eggs) in extra.iter().enumerate() {
        out.push((format!("supplied {i}"), eggs.clone()));
    }
    Ok(out)
}

/// Bounds `tw ≤ sn ≤ min(scw, gon, (tw+1)Δ − 1, n)` tightened from below by
/// the best catalog scramble and the exact disjoint scramble number.
pub fn sn_interval(
    g: &MultiGraph,
    family: Option<&Family>,
    extra: &[Vec<VertexSet>],
    budget: &Budget,
) -> Result<SnReport> {
    let n = g.n() as u64;
    let mut skipped = Vec::new();

    let tw = skip_on_cap(treewidth_exact(g, budget), "treewidth", &mut skipped)?;
    let mut upper = (n, Certificate::VertexCount { n });
    let mut offer_upper = |v: u64, c: Certificate| {
        if v < upper.0 {
            upper = (v, c);
        }
    };
    if let Some(tw) = tw.filter(|_| n >= 2) {
        let bound = (tw + 1) * g.max_degree() as i64 - 1;
        if bound >= 1 {
            offer_upper(bound as u64, Certificate::DegreeBound { tw, max_degree: g.max_degree() });
        }
    }
    let gon = skip_on_cap(gonality_exact(g, budget.gonality_degree, budget), "gonality", &mut skipped)?;
    if let Some(r) = &gon {
        offer_upper(r.gonality, Certificate::Divisor { divisor: r.witness.clone() });
    }
    let scw = skip_on_cap(screewidth_exact(g, budget), "screewidth", &mut skipped)?;
    if let Some((w, t)) = &scw {
        offer_upper(*w, Certificate::Decomposition { decomposition: t.clone() });
    }

    let mut lower = (1, Certificate::VertexCount { n: 1 });
    let mut entries = Vec::new();
    for (name, eggs) in catalog(g, family, extra, budget, &mut skipped)? {
        let s = make_scramble(g, eggs)?;
        let Some(order) = skip_on_cap(s.order_value(budget), &name, &mut skipped)? else { continue };
        if order > lower.0 || entries.is_empty() {
            lower = (order, Certificate::Scramble { name: name.clone(), eggs: s.eggs().to_vec() });
        }
        entries.push(CatalogEntry { name, size: s.size(), order, eggs: s.eggs().to_vec() });
    }
    let dsn = if lower.0 < upper.0 {
        skip_on_cap(dsn_exact(g, Some(upper.0), budget), "disjoint scramble number", &mut skipped)?
    } else {
        None
    };
    if let Some(d) = &dsn {
        if d.dsn > lower.0 {
            lower = (d.dsn, Certificate::Scramble { name: "disjoint search".into(), eggs: d.eggs.clone() });
        }
    }
    if let Some(tw) = tw {
        if tw > lower.0 as i64 {
            lower = (tw as u64, Certificate::Treewidth { tw });
        }
    }
    // When the catalog already meets the upper end the disjoint search is
    // skipped; a disjoint catalog scramble still pins dsn.
    let dsn = dsn.or_else(|| {
        entries
            .iter()
            .filter(|e| e.order == upper.0 && make_scramble(g, e.eggs.iter().copied()).is_ok_and(|s| s.is_disjoint()))
            .map(|e| DsnResult { dsn: e.order, eggs: e.eggs.clone(), complete: false })
            .next()
    });
    Ok(SnReport {
        sn: InvariantInterval::new(lower, upper),
        tw,
        dsn,
        scw: scw.map(|(w, _)| w),
        gon: gon.map(|r| r.gonality),
        catalog: entries,
        skipped,
    })
}
