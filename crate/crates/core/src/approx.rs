//! Polynomial-time approximations: k-hitting sets, vertex covers, and the
//! constant-factor estimates of scramble number and gonality built on them.

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::params::girth;
use crate::graph::{alpha_k, enumerate_connected_subgraphs, lambda_k, xi_k, MultiGraph};
use crate::vset::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// `OPT ≤ estimate ≤ factor · OPT`.
    Min,
    /// `OPT / factor ≤ estimate ≤ OPT`.
    Max,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ApproxResult {
    /// Size of the constructed witness.
    pub value: u64,
    /// The estimate is `value / scale`.
    pub scale: u64,
    pub factor: f64,
    pub direction: Direction,
    /// Quantity being approximated.
    pub target: String,
    /// A hitting set or vertex cover of size `value`.
    pub witness: VertexSet,
    pub matching: Option<Vec<[usize; 2]>>,
    /// Matched family case.
    pub case: Option<u8>,
}

impl ApproxResult {
    pub fn estimate(&self) -> f64 {
        self.value as f64 / self.scale as f64
    }
}

/// Local-ratio k-approximation of the minimum hitting set of sets of size
/// at most `k`: take the first unhit set in lexicographic order and add all
/// of its vertices, until every set is hit.
pub fn hitting_set_k_approx(sets: &[VertexSet], k: usize) -> Result<ApproxResult> {
    for (index, s) in sets.iter().enumerate() {
        if s.len() > k {
            return Err(Error::SetTooLarge { index, size: s.len(), k });
        }
        if s.is_empty() {
            return Err(Error::BadParams("cannot hit an empty set".into()));
        }
    }
    let mut order: Vec<Vec<usize>> = sets.iter().map(|s| s.to_vec()).collect();
    order.sort();
    let mut chosen = VertexSet::EMPTY;
    for s in order {
        let s: VertexSet = s.into_iter().collect();
        if s.is_disjoint(chosen) {
            chosen = chosen.union(s);
        }
    }
    Ok(ApproxResult {
        value: chosen.len() as u64,
        scale: 1,
        factor: k as f64,
        direction: Direction::Min,
        target: "minimum hitting set".into(),
        witness: chosen,
        matching: None,
        case: None,
    })
}

/// k-approximation of `n − α_{k−1}(G)`, the hitting number of the
/// k-uniform scramble.
pub fn approx_n_minus_alpha(g: &MultiGraph, k: usize, budget: &Budget) -> Result<ApproxResult> {
    if k == 0 || k > g.n() {
        return Err(Error::BadParams(format!("k = {k} outside 1..={}", g.n())));
    }
    let eggs = enumerate_connected_subgraphs(g, k, budget.enumerated_sets)?;
    let mut r = hitting_set_k_approx(&eggs, k)?;
    r.target = format!("n - alpha_{}", k - 1);
    Ok(r)
}

/// Gavril's 2-approximation of the minimum vertex cover `n − α(G)`: both
/// endpoints of a greedy maximal matching taken in lexicographic edge order.
pub fn gavril_2approx(g: &MultiGraph) -> Result<ApproxResult> {
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    let mut edges: Vec<(usize, usize)> = g.edges().iter().map(|&(u, v, _)| (u.min(v), u.max(v))).collect();
    edges.sort_unstable();
    let mut cover = VertexSet::EMPTY;
    let mut matching = Vec::new();
    for (u, v) in edges {
        if !cover.contains(u) && !cover.contains(v) {
            cover = cover.with(u).with(v);
            matching.push([u, v]);
        }
    }
    Ok(ApproxResult {
        value: cover.len() as u64,
        scale: 1,
        factor: 2.0,
        direction: Direction::Min,
        target: "n - alpha".into(),
        witness: cover,
        matching: Some(matching),
        case: None,
    })
}

/// First family case (in numeric order) that `g` satisfies,
/// with the uniform-scramble size `k` used for it. In these families
/// `sn = gon = n − α_{k−1}`.
pub fn family_case(g: &MultiGraph, budget: &Budget) -> Result<Option<(u8, usize)>> {
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    let n = g.n() as u64;
    let girth_at_least = |t: u64| girth(g).is_none_or(|x| x >= t);
    let delta = g.min_degree();
    if girth_at_least(4) && delta >= 3 && n >= 3 && xi_k(g, 3, budget)? > n {
        return Ok(Some((1, 3)));
    }
    if girth_at_least(4) && n >= 6 && 3 * delta >= n + 3 {
        return Ok(Some((2, 3)));
    }
    if girth_at_least(5) && n >= 8 && 2 * delta >= n / 2 + 4 {
        return Ok(Some((3, 4)));
    }
    let degree_sums = (0..g.n()).all(|u| {
        (u + 1..g.n()).all(|v| {
            let need = if g.multiplicity(u, v) > 0 { n } else { n + 1 };
            g.degree(u) + g.degree(v) >= need
        })
    });
    if n >= 2 && degree_sums {
        return Ok(Some((4, 2)));
    }
    Ok(None)
}

/// Constant-factor approximation of both `sn(G)` and `gon(G)` in the
/// four family cases (factors 3, 3, 4, 2).
pub fn family_gon_sn_approx(g: &MultiGraph, budget: &Budget) -> Result<ApproxResult> {
    let (case, k) = family_case(g, budget)?.ok_or(Error::NoCaseMatches)?;
    let mut r = approx_n_minus_alpha(g, k, budget)?;
    r.case = Some(case);
    r.target = format!("sn = gon = n - alpha_{}", k - 1);
    Ok(r)
}

/// The `(k+1)c` scheme: the k+1 hitting-set approximation of
/// `n − α_k(G)` scaled by `1/(k+1)`, valid when
/// `α(G) ≤ (c−1)/(kc−1) · n` and `λ_{k+1}(G) ≥ n − α_k(G)`. The constant
/// `c = c_num / c_den` must exceed 1.
pub fn scaled_kc_approx(g: &MultiGraph, k: usize, c_num: u64, c_den: u64, budget: &Budget) -> Result<ApproxResult> {
    if k == 0 || c_den == 0 || c_num <= c_den {
        return Err(Error::BadParams("need k ≥ 1 and c > 1".into()));
    }
    let n = g.n() as u64;
    let alpha = alpha_k(g, 1, budget)? as u64;
    // α ≤ (c−1)n/(kc−1) with c = p/q: α(kp − q) ≤ (p − q)n.
    if alpha * (k as u64 * c_num - c_den) > (c_num - c_den) * n {
        return Err(Error::PreconditionViolated(format!(
            "alpha = {alpha} exceeds (c-1)/(kc-1) * n for c = {c_num}/{c_den}, k = {k}"
        )));
    }
    let target = n - alpha_k(g, k, budget)? as u64;
    match lambda_k(g, k + 1, budget)? {
        Some(l) if l >= target => {}
        Some(l) => {
            return Err(Error::PreconditionViolated(format!("lambda_{} = {l} is below n - alpha_{k} = {target}", k + 1)));
        }
        None => {
            return Err(Error::PreconditionViolated(format!("lambda_{} is undefined on {n} vertices", k + 1)));
        }
    }
    let mut r = approx_n_minus_alpha(g, k + 1, budget)?;
    r.scale = k as u64 + 1;
    r.factor = (k as f64 + 1.0) * c_num as f64 / c_den as f64;
    r.direction = Direction::Max;
    r.target = "sn and gon".into();
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate_family, Family};
    use crate::scramble::hitting::min_hitting_set;
    use proptest::prelude::*;

    fn b() -> Budget {
        Budget::default()
    }

    fn fam(f: Family) -> MultiGraph {
        generate_family(&f).unwrap()
    }

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn hitting_trivial_cases() {
        let disjoint = [set(&[0, 1]), set(&[2, 3]), set(&[4, 5])];
        let r = hitting_set_k_approx(&disjoint, 2).unwrap();
        assert_eq!(r.value, 6);
        let r = hitting_set_k_approx(&[set(&[3, 4, 5])], 3).unwrap();
        assert_eq!(r.value, 3);
        assert_eq!(
            hitting_set_k_approx(&[set(&[0]), set(&[0, 1, 2])], 2).unwrap_err(),
            Error::SetTooLarge { index: 1, size: 3, k: 2 }
        );
    }

    #[test]
    fn n_minus_alpha_examples() {
        let c6 = fam(Family::Cycle(6));
        let r = approx_n_minus_alpha(&c6, 2, &b()).unwrap();
        assert!((3..=6).contains(&r.value));
        let k5 = fam(Family::Complete(5));
        let r = approx_n_minus_alpha(&k5, 2, &b()).unwrap();
        assert!((4..=8).contains(&r.value));
    }

    #[test]
    fn gavril_examples() {
        assert_eq!(gavril_2approx(&fam(Family::Path(2))).unwrap().value, 2);
        assert_eq!(gavril_2approx(&fam(Family::Star(5))).unwrap().value, 2);
        assert!(gavril_2approx(&fam(Family::Cycle(6))).unwrap().value <= 6);
        let banana = MultiGraph::new(2, [(0, 1, 3)]).unwrap();
        assert_eq!(gavril_2approx(&banana).unwrap_err(), Error::NotSimple);
    }

    #[test]
    fn family_cases() {
        let cocktail = fam(Family::CompleteMultipartite(vec![2, 2, 2]));
        let r = family_gon_sn_approx(&cocktail, &b()).unwrap();
        assert_eq!((r.case, r.factor), (Some(4), 2.0));
        let sn = 4;
        assert!(sn <= r.value && r.value <= 2 * sn);
        assert_eq!(family_gon_sn_approx(&fam(Family::Cycle(4)), &b()).unwrap_err(), Error::NoCaseMatches);
        // K_{5,5} fails case 4 on non-adjacent pairs but meets case 1: ξ_3 = 11 = n + 1
        assert_eq!(family_case(&fam(Family::CompleteMultipartite(vec![5, 5])), &b()).unwrap(), Some((1, 3)));
        // K_{3,3}: girth 4, δ = 3, n = 6, 3δ = 9 ≥ n + 3
        assert_eq!(family_case(&fam(Family::CompleteMultipartite(vec![3, 3])), &b()).unwrap(), Some((2, 3)));
    }

    #[test]
    fn family_values_bracket_exact_invariants() {
        let g = fam(Family::CompleteMultipartite(vec![2, 2, 2]));
        let r = family_gon_sn_approx(&g, &b()).unwrap();
        let gon = crate::chipfiring::gonality_exact(&g, 6, &b()).unwrap().gonality;
        assert_eq!(gon, 4);
        assert!(gon <= r.value && r.value as f64 <= r.factor * gon as f64);
    }

    #[test]
    fn kc_examples() {
        let k8 = fam(Family::Complete(8));
        let r = scaled_kc_approx(&k8, 1, 2, 1, &b()).unwrap();
        assert_eq!((r.scale, r.factor, r.direction), (2, 4.0, Direction::Max));
        // sn(K_8) = 7
        assert!(r.estimate() <= 7.0 && 7.0 <= r.factor * r.estimate());
        let c6 = fam(Family::Cycle(6));
        assert!(matches!(scaled_kc_approx(&c6, 1, 2, 1, &b()), Err(Error::PreconditionViolated(_))));
        assert!(matches!(scaled_kc_approx(&k8, 1, 1, 1, &b()), Err(Error::BadParams(_))));
    }

    fn set_system() -> impl Strategy<Value = (usize, Vec<VertexSet>)> {
        (2usize..=3).prop_flat_map(|k| {
            let one = prop::collection::btree_set(0usize..12, 1..=k).prop_map(|s| s.into_iter().collect::<VertexSet>());
            (Just(k), prop::collection::vec(one, 1..12))
        })
    }

    proptest! {
        #[test]
        fn hitting_within_factor_k((k, sets) in set_system()) {
            let r = hitting_set_k_approx(&sets, k).unwrap();
            prop_assert!(sets.iter().all(|s| s.intersects(r.witness)));
            let opt = min_hitting_set(&sets, u64::MAX).unwrap().len() as u64;
            prop_assert!(opt <= r.value && r.value <= k as u64 * opt);
        }

        #[test]
        fn gavril_within_factor_two(seed in any::<u64>(), n in 2usize..=10) {
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let g = crate::corpus::random_connected_simple(&mut rng, n, 0.4);
            let r = gavril_2approx(&g).unwrap();
            prop_assert!(g.edges().iter().all(|&(u, v, _)| r.witness.contains(u) || r.witness.contains(v)));
            let opt = (n - alpha_k(&g, 1, &Budget::default()).unwrap()) as u64;
            prop_assert!(opt <= r.value && r.value <= 2 * opt);
        }
    }
}
