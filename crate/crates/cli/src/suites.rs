//! Check suites: each runs a family of checks over a fixed, seeded corpus
//! and reports one record per graph or property.

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use scramble_lab::approx::{gavril_2approx, hitting_set_k_approx, scaled_kc_approx};
use scramble_lab::chipfiring::{gonality_exact, q_reduce, Divisor};
use scramble_lab::corpus::{are_isomorphic, connected_simple_graphs, random_connected_simple, trees};
use scramble_lab::graph::{alpha_k, generate_family};
use scramble_lab::scramble::hitting::min_hitting_set;
use scramble_lab::scramble::{carton_lower_bound, uniform_scramble};
use scramble_lab::search::{carton_bruteforce, carton_value, dsn_exact, sn_interval, table1_rows, CartonValue};
use scramble_lab::width::{
    bound_chain_check, congestion, embedding_to_tcd, screewidth_exact, tcd_width, treewidth_exact, vertex_congestion_exact,
    ChainInputs,
};
use scramble_lab::{make_scramble, Budget, Error, Family, MultiGraph, Result, VertexSet};

use crate::report::{CheckRecord, SuiteReport};

/// Suite ids in acceptance-criterion order, followed by the extra suites.
pub const CRITERIA: [&str; 11] = [
    "families",
    "uniform",
    "sperner",
    "band",
    "carton-bound",
    "gonality",
    "congestion",
    "sandwich",
    "approx",
    "invariance",
    "bruteforce",
];

pub const EXTRA: [&str; 4] = ["table1", "chain", "acceptance", "empty-corpus"];

/// A named corpus graph with its generator, when it has one.
#[derive(Debug, Clone)]
pub struct Job {
    pub name: String,
    pub graph: MultiGraph,
    pub family: Option<Family>,
}

impl Job {
    fn family(f: Family) -> Result<Job> {
        Ok(Job { name: f.to_string(), graph: generate_family(&f)?, family: Some(f) })
    }

    fn plain(name: String, graph: MultiGraph) -> Job {
        Job { name, graph, family: None }
    }
}

pub fn run_suite(id: &str, budget: &Budget) -> Result<SuiteReport> {
    match id {
        "families" => families(budget),
        "uniform" => uniform(budget),
        "sperner" => sperner(budget),
        "band" => band(budget),
        "carton-bound" => carton_bound(),
        "gonality" => gonality(budget),
        "congestion" => congestion_chain(budget),
        "sandwich" => sandwich(budget),
        "approx" => approx(budget),
        "invariance" => invariance(budget),
        "bruteforce" => bruteforce(budget),
        "table1" => table1(budget),
        "chain" => chain(budget),
        "acceptance" => acceptance(budget),
        "empty-corpus" => {
            let checks = per_graph(&[], |_, _| Ok(Vec::new()))?;
            Ok(SuiteReport::new(id, 0, checks))
        }
        _ => Err(Error::BadParams(format!(
            "unknown suite {id:?}; known: {}",
            CRITERIA.iter().chain(EXTRA.iter()).copied().collect::<Vec<_>>().join(", ")
        ))),
    }
}

/// Every criterion suite in order, merged into one report.
fn acceptance(budget: &Budget) -> Result<SuiteReport> {
    let mut checks = Vec::new();
    let mut graphs = 0;
    for (i, id) in CRITERIA.iter().enumerate() {
        let r = run_suite(id, budget)?;
        graphs += r.graphs_run;
        checks.extend(r.checks.into_iter().map(|mut c| {
            c.id = format!("{}.{}", i + 1, c.id);
            c
        }));
    }
    Ok(SuiteReport::new("acceptance", graphs, checks))
}

/// Small connected graphs, the named families and a few seeded random
/// graphs on six to eight vertices.
pub fn desk_corpus() -> Result<Vec<Job>> {
    let mut jobs = Vec::new();
    for n in 1..=5 {
        for (i, g) in connected_simple_graphs(n)?.into_iter().enumerate() {
            jobs.push(Job::plain(format!("connected {n} #{i}"), g));
        }
    }
    use Family::*;
    for f in [
        Cycle(6),
        Cycle(7),
        Cycle(8),
        Complete(5),
        Complete(6),
        CompleteMultipartite(vec![2, 3]),
        CompleteMultipartite(vec![3, 3]),
        CompleteMultipartite(vec![2, 2, 2]),
        Grid(2, 3),
        Grid(2, 4),
        Grid(3, 3),
        Cylinder(4, 2),
        Banana(3),
        MultipliedPath(3, 2),
        Star(5),
        Path(6),
        Band(2),
        BipartitePlusCycle(6),
        Petersen,
    ] {
        jobs.push(Job::family(f)?);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for i in 0..8 {
        let n = rng.gen_range(6..=8);
        let p = rng.gen_range(0.2..0.5);
        jobs.push(Job::plain(format!("random {n} #{i}"), random_connected_simple(&mut rng, n, p)));
    }
    Ok(jobs)
}

/// Runs `check` on every job in parallel; results keep the corpus order.
/// A job that errors becomes a failed record carrying its graph.
fn per_graph<F>(jobs: &[Job], check: F) -> Result<Vec<CheckRecord>>
where
    F: Fn(usize, &Job) -> Result<Vec<CheckRecord>> + Sync,
{
    if jobs.is_empty() {
        return Err(Error::BadParams("the corpus is empty".into()));
    }
    let out: Vec<Vec<CheckRecord>> = jobs
        .par_iter()
        .enumerate()
        .map(|(i, job)| {
            let started = Instant::now();
            check(i, job).unwrap_or_else(|e| {
                vec![CheckRecord::new(&job.name, "computation finished", Some(false), json!({ "error": e.to_string() }), started)
                    .on(&job.graph)]
            })
        })
        .collect();
    Ok(out.concat())
}

fn runtime_check(id: &str, started: Instant, limit: Duration) -> CheckRecord {
    CheckRecord::new(
        format!("{id} runtime"),
        format!("finishes within {} s", limit.as_secs()),
        Some(started.elapsed() < limit),
        json!({ "limit_s": limit.as_secs() }),
        started,
    )
}

fn cart_json(c: &CartonValue) -> Value {
    if c.exact {
        json!(c.lower)
    } else {
        json!([c.lower, c.upper])
    }
}

fn family_value(f: &Family) -> u64 {
    match f {
        Family::Cycle(_) => 2,
        Family::CompleteMultipartite(p) => (p.iter().sum::<usize>() - p.iter().max().copied().unwrap_or(0)) as u64,
        Family::Grid(m, n) => (*m).min(*n) as u64,
        Family::Cylinder(m, n) => (*m).min(2 * *n) as u64,
        _ => unreachable!("no closed form used for {f}"),
    }
}

/// cart = sn = dsn = scw = gon on cycles, complete multipartite graphs,
/// grids and cylinders, each from its own solver.
fn families(budget: &Budget) -> Result<SuiteReport> {
    let started = Instant::now();
    use Family::*;
    let mut fams: Vec<Family> = (3..=8).map(Cycle).collect();
    fams.extend([
        CompleteMultipartite(vec![2, 3]),
        CompleteMultipartite(vec![3, 3]),
        CompleteMultipartite(vec![2, 2, 2]),
        Grid(2, 5),
        Grid(3, 3),
        Grid(3, 4),
        Cylinder(4, 2),
        Cylinder(6, 2),
    ]);
    let jobs = fams.into_iter().map(Job::family).collect::<Result<Vec<_>>>()?;
    let mut checks = per_graph(&jobs, |_, job| {
        let t = Instant::now();
        let (g, f) = (&job.graph, job.family.as_ref().expect("family job"));
        let want = family_value(f);
        let gon = gonality_exact(g, budget.gonality_degree.max(want), budget)?.gonality;
        let dsn = dsn_exact(g, None, budget)?.dsn;
        let sn = sn_interval(g, Some(f), &[], budget)?;
        let cart = carton_value(g, None, None, budget)?;
        let scw = if g.n() <= budget.screewidth_vertices { Some(screewidth_exact(g, budget)?.0) } else { None };
        let ok = gon == want
            && dsn == want
            && sn.sn.exact_value() == Some(want)
            && cart.exact
            && cart.lower == want
            && scw.is_none_or(|w| w == want);
        let values = json!({
            "expected": want, "gon": gon, "dsn": dsn, "sn": [sn.sn.lower, sn.sn.upper],
            "cart": cart_json(&cart), "scw": scw.map_or(json!("skipped: above cap"), |w| json!(w)),
        });
        Ok(vec![CheckRecord::new(&job.name, "cart = sn = dsn = scw = gon = closed form", Some(ok), values, t).on(g)])
    })?;
    checks.push(runtime_check("families", started, Duration::from_secs(300)));
    Ok(SuiteReport::new("families", jobs.len(), checks))
}

/// h(ε_k) = n − α_{k−1} on 50 seeded random graphs.
fn uniform(budget: &Budget) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let jobs: Vec<Job> = (0..50)
        .map(|i| {
            let n = rng.gen_range(3..=10);
            let p = rng.gen_range(0.15..0.6);
            Job::plain(format!("random {n} #{i}"), random_connected_simple(&mut rng, n, p))
        })
        .collect();
    let checks = per_graph(&jobs, |_, job| {
        let t = Instant::now();
        let g = &job.graph;
        let mut rows = Vec::new();
        let mut ok = true;
        for k in 2..=4.min(g.n()) {
            let (h, _) = uniform_scramble(g, k, budget)?.hitting_number(budget)?;
            let a = alpha_k(g, k - 1, budget)? as u64;
            ok &= h == g.n() as u64 - a;
            rows.push(json!({ "k": k, "h": h, "n_minus_alpha": g.n() as u64 - a }));
        }
        Ok(vec![CheckRecord::new(&job.name, "h(eps_k) = n - alpha_{k-1}", Some(ok), json!(rows), t).on(g)])
    })?;
    Ok(SuiteReport::new("uniform", jobs.len(), checks))
}

/// The Sperner-sharp scramble on K_{6,4} plus a 6-cycle.
fn sperner(budget: &Budget) -> Result<SuiteReport> {
    let started = Instant::now();
    let g = generate_family(&Family::BipartitePlusCycle(10))?;
    let mut checks = Vec::new();
    let t = Instant::now();
    let e5 = uniform_scramble(&g, 5, budget)?;
    checks.push(CheckRecord::new("eps5 size", "|eps_5| = C(10,5) = 252", Some(e5.size() == 252), json!({ "size": e5.size() }), t));
    let t = Instant::now();
    let o5 = e5.order_value(budget)?;
    checks.push(CheckRecord::new("eps5 order", "||eps_5|| = 6", Some(o5 == 6), json!({ "order": o5 }), t));
    let t = Instant::now();
    let e2 = uniform_scramble(&g, 2, budget)?;
    let o2 = e2.order_value(budget)?;
    checks.push(CheckRecord::new("eps2 order", "||eps_2|| = 6", Some(o2 == 6), json!({ "order": o2 }), t));
    checks.push(CheckRecord::new(
        "eps2 size",
        "|eps_2| = 45 < 252",
        Some(e2.size() == 45 && e2.size() < e5.size()),
        json!({ "size": e2.size(), "edges": g.edge_count() }),
        t,
    ));
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let sample: Vec<VertexSet> = e5.eggs().choose_multiple(&mut rng, 20).copied().collect();
    let mut drops = Vec::new();
    for egg in &sample {
        let rest = e5.subset(|e| e != egg)?;
        drops.push(rest.order_value(budget)?);
    }
    checks.push(CheckRecord::new(
        "eps5 deletion",
        "deleting any one of 20 sampled eggs drops the order to 5",
        Some(drops.len() == 20 && drops.iter().all(|&o| o == 5)),
        json!({ "orders": drops }),
        t,
    ));
    checks.push(runtime_check("sperner", started, Duration::from_secs(120)));
    let checks = checks.into_iter().map(|c| c.on(&g)).collect();
    Ok(SuiteReport::new("sperner", 1, checks))
}

/// The k = 3 band graph: tw = 3 and the middle verteggs have order 5.
fn band(budget: &Budget) -> Result<SuiteReport> {
    let g = generate_family(&Family::Band(3))?;
    let t = Instant::now();
    let tw = treewidth_exact(&g, budget)?;
    let mut checks = vec![CheckRecord::new("tw", "12 vertices and tw = 3", Some(g.n() == 12 && tw == 3), json!({ "n": g.n(), "tw": tw }), t)];
    let t = Instant::now();
    let middle = make_scramble(&g, (3..9).map(VertexSet::singleton))?;
    let report = middle.order(budget)?;
    let order = report.order;
    let values = json!({ "order": order, "hitting": report.hitting, "egg_cut": report.egg_cut });
    checks.push(CheckRecord::new("middle order", "middle-six vertegg scramble has order exactly 5", Some(order == 5), values, t));
    let t = Instant::now();
    let gap = order as i64 - tw;
    checks.push(CheckRecord::new(
        "dsn gap",
        "the disjoint middle scramble gives dsn >= 5 and dsn - tw >= k - 1 = 2",
        Some(middle.is_disjoint() && order >= 5 && gap >= 2),
        json!({ "dsn_lower": order, "gap": gap }),
        t,
    ));
    let checks = checks.into_iter().map(|c| c.on(&g)).collect();
    Ok(SuiteReport::new("band", 1, checks))
}

/// cart ≥ 3·sn − n when Δ < sn, on the rook's graph parameters.
fn carton_bound() -> Result<SuiteReport> {
    let t = Instant::now();
    let rook = generate_family(&Family::Rook(4, 4))?;
    let shape = (rook.n(), rook.max_degree());
    let bound = carton_lower_bound(11, 16, 6);
    let mut checks = vec![CheckRecord::new(
        "rook 4 4",
        "carton_lower_bound(11, 16, 6) = 17 with n = 16, maxdeg = 6",
        Some(shape == (16, 6) && bound == Ok(17)),
        json!({ "n": shape.0, "maxdeg": shape.1, "bound": bound.as_ref().ok() }),
        t,
    )];
    for (sn, n, d) in [(5u64, 10u64, 5u64), (5, 10, 7), (11, 16, 11)] {
        let t = Instant::now();
        let r = carton_lower_bound(sn, n, d);
        checks.push(CheckRecord::new(
            format!("reject sn {sn} n {n} maxdeg {d}"),
            "rejects maxdeg >= sn",
            Some(matches!(r, Err(Error::PreconditionViolated(_)))),
            json!({ "result": format!("{r:?}") }),
            t,
        ));
    }
    Ok(SuiteReport::new("carton-bound", 1, checks))
}

/// Positive rank of `d` by reducing `d − q` at every vertex `q`.
fn rank_positive_by_reduction(g: &MultiGraph, d: &Divisor) -> Result<bool> {
    for q in 0..g.n() {
        let mut minus = d.clone();
        minus.chips[q] -= 1;
        if !q_reduce(g, &minus, q)?.is_effective() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Gonality of trees, cycles, complete graphs and K_{2,3}.
fn gonality(budget: &Budget) -> Result<SuiteReport> {
    let mut jobs = Vec::new();
    let mut expected = Vec::new();
    for n in 1..=8 {
        for (i, t) in trees(n)?.into_iter().enumerate() {
            jobs.push(Job::plain(format!("tree {n} #{i}"), t));
            expected.push(1);
        }
    }
    for n in 3..=8 {
        jobs.push(Job::family(Family::Cycle(n))?);
        expected.push(2);
    }
    for n in 2..=6 {
        jobs.push(Job::family(Family::Complete(n))?);
        expected.push(n as u64 - 1);
    }
    jobs.push(Job::family(Family::CompleteMultipartite(vec![2, 3]))?);
    expected.push(2);
    let checks = per_graph(&jobs, |i, job| {
        let t = Instant::now();
        let g = &job.graph;
        let r = gonality_exact(g, budget.gonality_degree.max(expected[i]), budget)?;
        let w = &r.witness;
        let verified = w.is_effective() && w.degree() == r.gonality as i64 && rank_positive_by_reduction(g, w)?;
        let ok = r.gonality == expected[i] && verified;
        let values = json!({ "expected": expected[i], "gon": r.gonality, "witness": w.chips, "witness_verified": verified });
        Ok(vec![CheckRecord::new(&job.name, "gon matches and the witness has positive rank", Some(ok), values, t).on(g)])
    })?;
    Ok(SuiteReport::new("gonality", jobs.len(), checks))
}

/// vcon = tw(L) + 1, scw ≤ vcon, tw(L) ≥ tw − 1 and
/// width(embedding_to_tcd(π)) = congestion(π) on every connected simple
/// graph with at most six vertices.
fn congestion_chain(budget: &Budget) -> Result<SuiteReport> {
    let started = Instant::now();
    let mut jobs = Vec::new();
    for n in 1..=6 {
        for (i, g) in connected_simple_graphs(n)?.into_iter().enumerate() {
            jobs.push(Job::plain(format!("connected {n} #{i}"), g));
        }
    }
    let mut checks = per_graph(&jobs, |_, job| {
        let t = Instant::now();
        let g = &job.graph;
        let (vcon, pi) = vertex_congestion_exact(g, budget)?;
        let tw = treewidth_exact(g, budget)?;
        let tw_line = if g.edge_count() == 0 { -1 } else { treewidth_exact(&g.line_graph()?, budget)? };
        let (scw, _) = screewidth_exact(g, budget)?;
        let mut ok = vcon as i64 == tw_line + 1 && scw <= vcon && tw_line >= tw - 1;
        let mut values = json!({ "vcon": vcon, "tw_line": tw_line, "tw": tw, "scw": scw });
        if g.n() >= 3 {
            let cong = congestion(&pi, g)?;
            let width = tcd_width(&embedding_to_tcd(&pi, g)?, g)?.width;
            ok &= cong == vcon && width == cong;
            values["congestion"] = json!(cong);
            values["tcd_width"] = json!(width);
        }
        Ok(vec![CheckRecord::new(&job.name, "congestion chain", Some(ok), values, t).on(g)])
    })?;
    checks.push(runtime_check("congestion", started, Duration::from_secs(1800)));
    Ok(SuiteReport::new("congestion", jobs.len(), checks))
}

/// tw ≤ sn ≤ min(scw, gon) and sn ≤ (tw+1)Δ − 1 wherever sn is pinned.
fn sandwich(budget: &Budget) -> Result<SuiteReport> {
    let jobs = desk_corpus()?;
    let mut checks = per_graph(&jobs, |_, job| {
        let t = Instant::now();
        let g = &job.graph;
        let r = sn_interval(g, job.family.as_ref(), &[], budget)?;
        let certified = r.sn.verify(g, budget)?;
        let Some(sn) = r.sn.exact_value() else {
            let values = json!({ "sn": [r.sn.lower, r.sn.upper], "certified": certified });
            let ok = if certified { None } else { Some(false) };
            return Ok(vec![CheckRecord::new(&job.name, "sn is not pinned; bounds certified", ok, values, t).on(g)]);
        };
        let tw = r.tw.ok_or(Error::MissingInvariant("tw"))?;
        let delta = g.max_degree() as i64;
        let ok = certified
            && tw <= sn as i64
            && r.scw.is_none_or(|w| sn <= w)
            && r.gon.is_none_or(|x| sn <= x)
            && (g.n() < 2 || (sn as i64) < (tw + 1) * delta);
        let values = json!({ "sn": sn, "tw": tw, "scw": r.scw, "gon": r.gon, "maxdeg": delta, "certified": certified });
        Ok(vec![CheckRecord::new(&job.name, "tw <= sn <= min(scw, gon), sn <= (tw+1)maxdeg - 1", Some(ok), values, t).on(g)])
    })?;
    let t = Instant::now();
    let pinned = checks.iter().filter(|c| c.statement.starts_with("tw")).count();
    checks.push(CheckRecord::new("pinned count", "sn is pinned on most of the corpus", Some(2 * pinned > jobs.len()), json!({ "pinned": pinned, "graphs": jobs.len() }), t));
    Ok(SuiteReport::new("sandwich", jobs.len(), checks))
}

/// Random set systems of sets of size at most `k` over `0..n`.
fn random_sets(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Vec<VertexSet> {
    let count = rng.gen_range(1..=15);
    let universe: Vec<usize> = (0..n).collect();
    (0..count)
        .map(|_| {
            let size = rng.gen_range(1..=k.min(n));
            universe.choose_multiple(rng, size).copied().collect()
        })
        .collect()
}

/// Approximation guarantees against exact optima.
fn approx(budget: &Budget) -> Result<SuiteReport> {
    let mut checks = Vec::new();

    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut violations = Vec::new();
    for i in 0..200 {
        let n = rng.gen_range(2..=12);
        let k = 2 + i % 2;
        let sets = random_sets(&mut rng, n, k);
        let r = hitting_set_k_approx(&sets, k)?;
        let opt = min_hitting_set(&sets, budget.hitting_nodes)?.len() as u64;
        let hits = sets.iter().all(|s| s.intersects(r.witness));
        if !(hits && opt <= r.value && r.value <= k as u64 * opt) {
            violations.push(json!({ "k": k, "sets": sets, "value": r.value, "opt": opt }));
        }
    }
    checks.push(CheckRecord::new(
        "k-hitting set",
        "OPT <= value <= k OPT on 200 random set systems",
        Some(violations.is_empty()),
        json!({ "instances": 200, "violations": violations }),
        t,
    ));

    let t = Instant::now();
    let mut violations = Vec::new();
    for _ in 0..100 {
        let n = rng.gen_range(2..=12);
        let p = rng.gen_range(0.1..0.6);
        let g = random_connected_simple(&mut rng, n, p);
        let r = gavril_2approx(&g)?;
        let opt = (n - alpha_k(&g, 1, budget)?) as u64;
        let covers = g.edges().iter().all(|&(u, v, _)| r.witness.contains(u) || r.witness.contains(v));
        if !(covers && opt <= r.value && r.value <= 2 * opt) {
            violations.push(json!({ "graph": scramble_lab::graph::io::write_graph(&g, None), "value": r.value, "opt": opt }));
        }
    }
    checks.push(CheckRecord::new(
        "gavril",
        "n - alpha <= value <= 2 (n - alpha) on 100 random graphs",
        Some(violations.is_empty()),
        json!({ "instances": 100, "violations": violations }),
        t,
    ));

    let t = Instant::now();
    let jobs: Vec<Job> = desk_corpus()?.into_iter().filter(|j| j.graph.is_simple()).collect();
    let mut accepted = 0;
    let mut violations = Vec::new();
    for job in &jobs {
        let g = &job.graph;
        let n = g.n() as u64;
        for k in 1..=3 {
            for (p, q) in [(2u64, 1u64), (3, 1), (3, 2), (5, 2)] {
                match scaled_kc_approx(g, k, p, q, budget) {
                    Ok(_) => {
                        accepted += 1;
                        let alpha = alpha_k(g, 1, budget)? as u64;
                        let alpha_k_val = alpha_k(g, k, budget)? as u64;
                        // (1/c)(n − α) ≤ n − α_k ≤ n − α with c = p/q
                        if !(q * (n - alpha) <= p * (n - alpha_k_val) && alpha_k_val >= alpha) {
                            violations.push(json!({ "graph": job.name, "k": k, "c": [p, q], "alpha": alpha, "alpha_k": alpha_k_val }));
                        }
                    }
                    Err(Error::PreconditionViolated(_)) => {}
                    Err(e) => return Err(e),
                }
            }
        }
    }
    checks.push(CheckRecord::new(
        "kc chain",
        "every accepted (k+1)c input satisfies (1/c)(n - alpha) <= n - alpha_k <= n - alpha",
        Some(accepted > 0 && violations.is_empty()),
        json!({ "accepted": accepted, "violations": violations }),
        t,
    ));
    Ok(SuiteReport::new("approx", 300 + jobs.len(), checks))
}

fn exact_cart(g: &MultiGraph, budget: &Budget) -> Result<Option<u64>> {
    match carton_value(g, None, None, budget) {
        Ok(c) if c.exact => Ok(Some(c.lower)),
        Ok(_) | Err(Error::FeasibilityCapExceeded { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

fn exact_dsn(g: &MultiGraph, budget: &Budget) -> Result<Option<u64>> {
    match dsn_exact(g, None, budget) {
        Ok(d) => Ok(Some(d.dsn)),
        Err(Error::FeasibilityCapExceeded { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// dsn and cart survive three random subdivisions, and smoothing the new
/// vertices restores the graph and its values.
fn invariance(budget: &Budget) -> Result<SuiteReport> {
    let jobs: Vec<Job> = desk_corpus()?.into_iter().filter(|j| j.graph.n() <= 8).collect();
    let checks = per_graph(&jobs, |i, job| {
        let t = Instant::now();
        let g = &job.graph;
        let n = g.n();
        let mut rng = ChaCha8Rng::seed_from_u64(1000 + i as u64);
        let mut sub = g.clone();
        for _ in 0..3 {
            let copies = sub.edge_copies();
            let Some(&(u, w)) = copies.choose(&mut rng) else { break };
            sub = sub.subdivide_edge(u, w)?;
        }
        let added = sub.n() - n;
        let mut smooth = sub.clone();
        for v in (n..sub.n()).rev() {
            smooth = smooth.smooth_vertex(v)?;
        }
        let (dsn0, dsn1, dsn2) = (exact_dsn(g, budget)?, exact_dsn(&sub, budget)?, exact_dsn(&smooth, budget)?);
        let (cart0, cart1, cart2) = (exact_cart(g, budget)?, exact_cart(&sub, budget)?, exact_cart(&smooth, budget)?);
        let same = |a: Option<u64>, b: Option<u64>| a.zip(b).map(|(x, y)| x == y);
        let restored = are_isomorphic(&smooth, g)?;
        let parts = [same(dsn0, dsn1), same(cart0, cart1), same(dsn0, dsn2), same(cart0, cart2)];
        let ok = if added == 0 {
            None
        } else if parts.contains(&Some(false)) || !restored {
            Some(false)
        } else if parts.iter().all(Option::is_none) {
            None
        } else {
            Some(true)
        };
        let values = json!({
            "subdivisions": added, "dsn": [dsn0, dsn1, dsn2], "cart": [cart0, cart1, cart2], "smoothing_restores": restored,
        });
        Ok(vec![CheckRecord::new(&job.name, "dsn and cart invariant under subdivision and smoothing", ok, values, t).on(g)])
    })?;
    Ok(SuiteReport::new("invariance", jobs.len(), checks))
}

/// Exhaustive carton search against the disjoint-scramble characterization
/// and the closed sandwich, on every connected simple graph with at most
/// five vertices.
fn bruteforce(budget: &Budget) -> Result<SuiteReport> {
    let mut jobs = Vec::new();
    for n in 1..=5 {
        for (i, g) in connected_simple_graphs(n)?.into_iter().enumerate() {
            jobs.push(Job::plain(format!("connected {n} #{i}"), g));
        }
    }
    let checks = per_graph(&jobs, |_, job| {
        let t = Instant::now();
        let g = &job.graph;
        let b = carton_bruteforce(g, budget)?;
        let dsn = dsn_exact(g, None, budget)?.dsn;
        let sandwich = sn_interval(g, None, &[], budget)?;
        let disjoint_ok = !b.witness_disjoint || b.cart == b.sn;
        let characterization = (b.cart == b.sn) == (dsn == b.sn);
        let closed_ok = sandwich.sn.exact_value().is_none_or(|s| s == b.sn);
        let values = json!({
            "sn": b.sn, "cart": b.cart, "witness_disjoint": b.witness_disjoint, "dsn": dsn,
            "sandwich": [sandwich.sn.lower, sandwich.sn.upper],
        });
        let ok = disjoint_ok && characterization && closed_ok;
        Ok(vec![CheckRecord::new(&job.name, "brute force agrees with cart = sn iff dsn = sn and the sandwich", Some(ok), values, t).on(g)])
    })?;
    Ok(SuiteReport::new("bruteforce", jobs.len(), checks))
}

/// Cartesian-product rows at desk scale.
fn table1(budget: &Budget) -> Result<SuiteReport> {
    let rows = table1_rows();
    let checks: Vec<CheckRecord> = rows
        .par_iter()
        .map(|row| {
            let t = Instant::now();
            let id = format!("row {} {} x {}", row.row, row.g, row.h);
            match row.check(budget) {
                Ok(c) => CheckRecord::new(id, "assumptions hold and dsn = sn = cart = gon = expected", Some(c.holds), json!(c), t),
                Err(e) => CheckRecord::new(id, "computation finished", Some(false), json!({ "error": e.to_string() }), t),
            }
        })
        .collect();
    Ok(SuiteReport::new("table1", rows.len(), checks))
}

/// The full bound chain on the desk corpus up to eight vertices.
fn chain(budget: &Budget) -> Result<SuiteReport> {
    let jobs: Vec<Job> = desk_corpus()?.into_iter().filter(|j| j.graph.n() <= 8).collect();
    let checks = per_graph(&jobs, |_, job| {
        let t = Instant::now();
        let g = &job.graph;
        let r = sn_interval(g, job.family.as_ref(), &[], budget)?;
        let inputs = ChainInputs {
            sn: Some((r.sn.lower, r.sn.upper)),
            tw: r.tw,
            scw: r.scw,
            gon: r.gon,
            ..ChainInputs::default()
        };
        let report = bound_chain_check(g, &inputs, budget)?;
        Ok(vec![CheckRecord::new(&job.name, "bound chain", Some(report.all_hold()), json!(report), t).on(g)])
    })?;
    Ok(SuiteReport::new("chain", jobs.len(), checks))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_ids() {
        assert!(matches!(run_suite("empty-corpus", &Budget::default()), Err(Error::BadParams(_))));
        assert!(matches!(run_suite("nope", &Budget::default()), Err(Error::BadParams(_))));
        let mut ids: Vec<_> = CRITERIA.iter().chain(EXTRA.iter()).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), CRITERIA.len() + EXTRA.len());
    }

    #[test]
    fn corpus_is_seeded() {
        let a = desk_corpus().unwrap();
        let b = desk_corpus().unwrap();
        assert_eq!(a.len(), b.len());
        assert!(a.iter().zip(&b).all(|(x, y)| x.name == y.name && x.graph == y.graph));
    }

    #[test]
    fn report_order_is_stable() {
        let b = Budget::default();
        let x = serde_json::to_value(run_suite("gonality", &b).unwrap().checks.iter().map(|c| &c.id).collect::<Vec<_>>()).unwrap();
        let y = serde_json::to_value(run_suite("gonality", &b).unwrap().checks.iter().map(|c| &c.id).collect::<Vec<_>>()).unwrap();
        assert_eq!(x, y);
    }
}
