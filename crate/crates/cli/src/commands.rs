//! One function per subcommand. Each returns the JSON document to print
//! and whether the command's check passed.

use std::fs;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};

use scramble_lab::approx::{approx_n_minus_alpha, family_gon_sn_approx, gavril_2approx, scaled_kc_approx, ApproxResult};
use scramble_lab::chipfiring::{gonality_exact, has_positive_rank, Gonality};
use scramble_lab::graph::generate_family;
use scramble_lab::graph::io::{parse_graph, write_graph, GraphFile};
use scramble_lab::scramble::io::{parse_scramble, write_scramble};
use scramble_lab::search::{carton_value, dsn_exact, sn_interval, Certificate};
use scramble_lab::width::{
    congestion, embedding_to_tcd, screewidth_exact, tcd_width, treewidth_exact, vertex_congestion_exact, SubcubicEmbedding,
    TreeCutDecomposition,
};
use scramble_lab::{make_scramble, Budget, Error, Family, MultiGraph};

use crate::error::CliError;
use crate::report::SCHEMA;
use crate::suites::run_suite;

pub type Outcome = Result<(Value, bool), CliError>;

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

pub fn load_graph(path: &Path) -> Result<GraphFile, CliError> {
    parse_graph(&read(path)?).map_err(|source| CliError::Input { path: path.to_path_buf(), source })
}

fn load_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    serde_json::from_str(&read(path)?).map_err(|source| CliError::Json { path: path.to_path_buf(), source })
}

fn with_schema(mut v: Value) -> Value {
    if let Value::Object(map) = &mut v {
        map.insert("schema".into(), json!(SCHEMA));
    }
    v
}

/// Graph file text for a family member.
pub fn gen(family: &str) -> Result<String, CliError> {
    let f: Family = family.parse()?;
    Ok(write_graph(&generate_family(&f)?, Some(&f)))
}

pub const INVARIANTS: [&str; 7] = ["dsn", "sn", "cart", "tw", "scw", "gon", "vcon"];

/// Requested invariants, each reported as a value or as the error that
/// stopped it. Witnesses go to `witness_dir` when given.
pub fn compute(graph: &Path, family: Option<&str>, which: &[String], witness_dir: Option<&Path>, budget: &Budget) -> Outcome {
    let file = load_graph(graph)?;
    let g = &file.graph;
    let family = match family {
        Some(s) => Some(s.parse::<Family>()?),
        None => file.family.clone(),
    };
    for w in which {
        if !INVARIANTS.contains(&w.as_str()) {
            return Err(CliError::Usage(format!("unknown invariant {w:?}; known: {}", INVARIANTS.join(", "))));
        }
    }
    let wants = |name: &str| which.iter().any(|w| w == name);
    let mut out = json!({ "n": g.n(), "edges": g.edge_count() });
    let mut errors = serde_json::Map::new();
    let mut witnesses: Vec<(String, String)> = Vec::new();
    let mut record = |name: &str, r: Result<Value, Error>| match r {
        Ok(v) => out[name] = v,
        Err(e) => {
            errors.insert(name.into(), json!(e.to_string()));
        }
    };

    if wants("dsn") {
        record(
            "dsn",
            dsn_exact(g, None, budget).map(|d| {
                witnesses.push(("dsn.scramble".into(), scramble_text(g, &d.eggs)));
                json!(d.dsn)
            }),
        );
    }
    if wants("sn") {
        record(
            "sn",
            sn_interval(g, family.as_ref(), &[], budget).map(|r| {
                if let Certificate::Scramble { eggs, .. } = &r.sn.lower_witness {
                    witnesses.push(("sn.scramble".into(), scramble_text(g, eggs)));
                }
                json!([r.sn.lower, r.sn.upper])
            }),
        );
    }
    if wants("cart") {
        record(
            "cart",
            carton_value(g, family.as_ref(), None, budget).map(|c| {
                if let Some(eggs) = &c.witness {
                    witnesses.push(("cart.scramble".into(), scramble_text(g, eggs)));
                }
                if c.exact {
                    json!(c.lower)
                } else {
                    json!([c.lower, c.upper])
                }
            }),
        );
    }
    if wants("tw") {
        record("tw", treewidth_exact(g, budget).map(|t| json!(t)));
    }
    if wants("scw") {
        record(
            "scw",
            screewidth_exact(g, budget).map(|(w, t)| {
                witnesses.push(("scw.tcd.json".into(), serde_json::to_string_pretty(&t).expect("serializable")));
                json!(w)
            }),
        );
    }
    if wants("gon") {
        record(
            "gon",
            gonality_exact(g, budget.gonality_degree, budget).map(|r| {
                witnesses.push(("gon.divisor.json".into(), serde_json::to_string(&r.witness).expect("serializable")));
                json!(r.gonality)
            }),
        );
    }
    if wants("vcon") {
        record(
            "vcon",
            vertex_congestion_exact(g, budget).map(|(c, pi)| {
                witnesses.push(("vcon.embedding.json".into(), serde_json::to_string_pretty(&pi).expect("serializable")));
                json!(c)
            }),
        );
    }
    if !errors.is_empty() {
        out["errors"] = Value::Object(errors);
    }
    if let Some(dir) = witness_dir {
        fs::create_dir_all(dir).map_err(|source| CliError::Io { path: dir.to_path_buf(), source })?;
        let mut written = serde_json::Map::new();
        for (name, text) in &witnesses {
            let path: PathBuf = dir.join(name);
            write(&path, text)?;
            written.insert(name.clone(), json!(path.display().to_string()));
        }
        out["witnesses"] = Value::Object(written);
    }
    Ok((with_schema(out), true))
}

fn scramble_text(g: &MultiGraph, eggs: &[scramble_lab::VertexSet]) -> String {
    make_scramble(g, eggs.iter().copied()).map(|s| write_scramble(&s)).unwrap_or_default()
}

/// Order of a scramble file on a graph, with hitting set and egg-cut
/// witnesses. An invalid scramble is a failed check.
pub fn check_scramble(graph: &Path, scramble: &Path, budget: &Budget) -> Outcome {
    let g = load_graph(graph)?.graph;
    let eggs = parse_scramble(&read(scramble)?).map_err(|source| CliError::Input { path: scramble.to_path_buf(), source })?;
    let s = match make_scramble(&g, eggs) {
        Ok(s) => s,
        Err(e) => return Ok((with_schema(json!({ "valid": false, "error": e.to_string() })), false)),
    };
    let report = s.order(budget)?;
    let mut v = serde_json::to_value(report).expect("serializable");
    v["valid"] = json!(true);
    v["eggs"] = json!(s.size());
    Ok((with_schema(v), true))
}

pub fn check_tcd(graph: &Path, tcd: &Path) -> Outcome {
    let g = load_graph(graph)?.graph;
    let t: TreeCutDecomposition = load_json(tcd)?;
    Ok(match tcd_width(&t, &g) {
        Ok(w) => (with_schema(json!({ "valid": true, "lw": w.lw, "bw": w.bw, "width": w.width })), true),
        Err(e) => (with_schema(json!({ "valid": false, "error": e.to_string() })), false),
    })
}

/// Congestion of an embedding and the width of its induced tree-cut
/// decomposition; the check passes when the two agree.
pub fn check_embedding(graph: &Path, embedding: &Path) -> Outcome {
    let g = load_graph(graph)?.graph;
    let pi: SubcubicEmbedding = load_json(embedding)?;
    let result = congestion(&pi, &g).and_then(|c| {
        let width = if g.n() >= 3 { Some(tcd_width(&embedding_to_tcd(&pi, &g)?, &g)?.width) } else { None };
        Ok((c, width))
    });
    Ok(match result {
        Ok((c, width)) => {
            let consistent = width.is_none_or(|w| w == c);
            (with_schema(json!({ "valid": true, "congestion": c, "tcd_width": width, "consistent": consistent })), consistent)
        }
        Err(e) => (with_schema(json!({ "valid": false, "error": e.to_string() })), false),
    })
}

pub fn gon(graph: &Path, cap: Option<u64>, budget: &Budget) -> Outcome {
    let g = load_graph(graph)?.graph;
    let Gonality { gonality, witness } = gonality_exact(&g, cap.unwrap_or(budget.gonality_degree), budget)?;
    let verified = witness.is_effective() && has_positive_rank(&g, &witness)?;
    Ok((with_schema(json!({ "gonality": gonality, "witness": witness.chips, "verified": verified })), verified))
}

/// Exact rational `p/q` from `"2"`, `"3/2"` or `"1.5"`.
pub fn parse_ratio(s: &str) -> Result<(u64, u64), CliError> {
    let bad = || CliError::Usage(format!("bad constant {s:?}; expected an integer, p/q or a decimal"));
    if let Some((p, q)) = s.split_once('/') {
        return Ok((p.trim().parse().map_err(|_| bad())?, q.trim().parse().map_err(|_| bad())?));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let scale = 10u64.checked_pow(frac.len() as u32).ok_or_else(bad)?;
        let whole: u64 = if whole.is_empty() { 0 } else { whole.parse().map_err(|_| bad())? };
        let frac: u64 = frac.parse().map_err(|_| bad())?;
        return Ok((whole * scale + frac, scale));
    }
    Ok((s.trim().parse().map_err(|_| bad())?, 1))
}

pub fn approx(graph: &Path, method: &str, k: Option<usize>, c: Option<&str>, budget: &Budget) -> Outcome {
    let g = load_graph(graph)?.graph;
    let r: ApproxResult = match method {
        "khit" => approx_n_minus_alpha(&g, k.unwrap_or(2), budget)?,
        "gavril" => gavril_2approx(&g)?,
        "family" => family_gon_sn_approx(&g, budget)?,
        "kc" => {
            let (p, q) = parse_ratio(c.unwrap_or("2"))?;
            scaled_kc_approx(&g, k.unwrap_or(1), p, q, budget)?
        }
        _ => return Err(CliError::Usage(format!("unknown method {method:?}; known: khit, gavril, family, kc"))),
    };
    let mut v = serde_json::to_value(&r).expect("serializable");
    v["estimate"] = json!(r.estimate());
    Ok((with_schema(v), true))
}

pub fn suite(id: &str, budget: &Budget) -> Outcome {
    let report = run_suite(id, budget)?;
    let pass = report.pass;
    Ok((serde_json::to_value(&report).expect("serializable"), pass))
}
