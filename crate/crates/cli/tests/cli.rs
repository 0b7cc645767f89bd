use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::{json, Value};
use tempfile::TempDir;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_scramble-lab"));
    cmd.env_remove("SCRAMBLE_LAB_BUDGET_MS");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn json_out(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("stdout is not JSON ({e}): {}", String::from_utf8_lossy(&out.stdout)))
}

fn gen(dir: &TempDir, family: &str) -> PathBuf {
    let path = dir.path().join(format!("{}.graph", family.replace(' ', "_")));
    let mut args = vec!["gen"];
    args.extend(family.split(' '));
    args.extend(["-o", path.to_str().unwrap()]);
    let out = run(&args);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    path
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn vertex_count(text: &str) -> usize {
    let line = text.lines().find(|l| l.starts_with("n ")).expect("vertex line");
    line[2..].trim().parse().unwrap()
}

#[test]
fn gen_writes_family_members() {
    let out = run(&["gen", "cycle", "6"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("# family: cycle 6"));
    assert_eq!(vertex_count(&text), 6);

    assert_eq!(vertex_count(&String::from_utf8(run(&["gen", "rook", "4", "4"]).stdout).unwrap()), 16);
    assert_eq!(vertex_count(&String::from_utf8(run(&["gen", "band", "3"]).stdout).unwrap()), 12);
}

#[test]
fn gen_rejects_unknown_family() {
    let out = run(&["gen", "nope", "3"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("nope"));
}

#[test]
fn compute_small_graphs() {
    let dir = TempDir::new().unwrap();
    let mut v = json_out(&run(&["compute", s(&gen(&dir, "cycle 6"))]));
    assert_eq!(v["schema"], 1);
    for key in ["schema", "n", "edges"] {
        v.as_object_mut().unwrap().remove(key);
    }
    assert_eq!(v, json!({ "dsn": 2, "sn": [2, 2], "cart": 2, "tw": 2, "scw": 2, "gon": 2 }));

    let v = json_out(&run(&["compute", s(&gen(&dir, "path 4"))]));
    for key in ["dsn", "cart", "tw", "scw", "gon"] {
        assert_eq!(v[key], 1, "{key}");
    }
    assert_eq!(v["sn"], json!([1, 1]));
}

#[test]
fn compute_reports_capped_invariants_as_errors() {
    let dir = TempDir::new().unwrap();
    let out = run(&["compute", s(&gen(&dir, "grid 3 4")), "--invariants", "sn,tw,scw"]);
    assert_eq!(code(&out), 0);
    let v = json_out(&out);
    assert_eq!(v["sn"], json!([3, 3]));
    assert_eq!(v["tw"], 3);
    assert!(v.get("scw").is_none());
    assert!(v["errors"]["scw"].as_str().unwrap().contains("cap"));
}

#[test]
fn compute_rejects_unknown_invariant() {
    let dir = TempDir::new().unwrap();
    let out = run(&["compute", s(&gen(&dir, "cycle 4")), "--invariants", "tw,bogus"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn compute_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let g = gen(&dir, "multipartite 2 3");
    let a = run(&["compute", s(&g), "--invariants", "dsn,sn,cart,tw,scw,gon,vcon"]);
    let b = run(&["compute", s(&g), "--invariants", "dsn,sn,cart,tw,scw,gon,vcon"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn witnesses_reverify() {
    let dir = TempDir::new().unwrap();
    let g = gen(&dir, "cycle 6");
    let wdir = dir.path().join("w");
    let v = json_out(&run(&["compute", s(&g), "--invariants", "dsn,sn,scw,gon,vcon", "--witness-dir", s(&wdir)]));
    assert_eq!(v["vcon"], 3);

    let check = json_out(&run(&["check-scramble", s(&g), s(&wdir.join("dsn.scramble"))]));
    assert_eq!(check["valid"], true);
    assert_eq!(check["order"], 2);

    let check = json_out(&run(&["check-scramble", s(&g), s(&wdir.join("sn.scramble"))]));
    assert_eq!(check["order"], 2);

    let out = run(&["check-tcd", s(&g), s(&wdir.join("scw.tcd.json"))]);
    assert_eq!(code(&out), 0);
    assert_eq!(json_out(&out)["width"], 2);

    let out = run(&["check-embedding", s(&g), s(&wdir.join("vcon.embedding.json"))]);
    assert_eq!(code(&out), 0);
    let check = json_out(&out);
    assert_eq!(check["congestion"], 3);
    assert_eq!(check["consistent"], true);

    let divisor: Value = serde_json::from_str(&fs::read_to_string(wdir.join("gon.divisor.json")).unwrap()).unwrap();
    let chips: Vec<i64> = serde_json::from_value(divisor["chips"].clone()).unwrap();
    assert_eq!(chips.iter().sum::<i64>(), 2);
}

#[test]
fn check_scramble_orders() {
    let dir = TempDir::new().unwrap();
    let c4 = gen(&dir, "cycle 4");
    let edges = write(&dir, "eps2.scramble", "scramble 4\n0 1\n1 2\n2 3\n0 3\n");
    let v = json_out(&run(&["check-scramble", s(&c4), s(&edges)]));
    assert_eq!(v["order"], 2);
    assert_eq!(v["eggs"], 4);

    let banana = gen(&dir, "banana 3");
    let verteggs = write(&dir, "verteggs.scramble", "# one egg per vertex\nscramble 2\n0\n1\n");
    let v = json_out(&run(&["check-scramble", s(&banana), s(&verteggs)]));
    assert_eq!(v["order"], 2);
}

#[test]
fn check_scramble_rejects_disconnected_egg() {
    let dir = TempDir::new().unwrap();
    let c4 = gen(&dir, "cycle 4");
    let bad = write(&dir, "bad.scramble", "scramble 2\n0 2\n1\n");
    let out = run(&["check-scramble", s(&c4), s(&bad)]);
    assert_eq!(code(&out), 1);
    assert_eq!(json_out(&out)["valid"], false);
}

#[test]
fn malformed_inputs_exit_two() {
    let dir = TempDir::new().unwrap();
    let c4 = gen(&dir, "cycle 4");
    let garbage = write(&dir, "garbage.scramble", "eggs 2\n0\n");
    assert_eq!(code(&run(&["check-scramble", s(&c4), s(&garbage)])), 2);
    let missing = dir.path().join("missing.graph");
    assert_eq!(code(&run(&["compute", s(&missing)])), 2);
    let not_json = write(&dir, "tcd.json", "{");
    assert_eq!(code(&run(&["check-tcd", s(&c4), s(&not_json)])), 2);
    let bad_graph = write(&dir, "bad.graph", "n 2\n0 5 1\n");
    assert_eq!(code(&run(&["compute", s(&bad_graph)])), 2);
}

#[test]
fn check_tcd_rejects_missing_vertex() {
    let dir = TempDir::new().unwrap();
    let c4 = gen(&dir, "cycle 4");
    let tcd = write(&dir, "tcd.json", r#"{"links": [[0, 1]], "bags": {"0": [0, 1], "1": [2]}}"#);
    let out = run(&["check-tcd", s(&c4), s(&tcd)]);
    assert_eq!(code(&out), 1);
    assert_eq!(json_out(&out)["valid"], false);
}

#[test]
fn gonality_command() {
    let dir = TempDir::new().unwrap();
    let v = json_out(&run(&["gon", s(&gen(&dir, "complete 5"))]));
    assert_eq!(v["gonality"], 4);
    assert_eq!(v["verified"], true);
    let v = json_out(&run(&["gon", s(&gen(&dir, "path 5"))]));
    assert_eq!(v["gonality"], 1);
}

#[test]
fn approx_methods() {
    let dir = TempDir::new().unwrap();
    let c6 = gen(&dir, "cycle 6");

    let v = json_out(&run(&["approx", s(&c6), "--method", "gavril"]));
    assert_eq!(v["direction"], "min");
    let cover = v["value"].as_u64().unwrap();
    assert!((3..=6).contains(&cover));
    assert_eq!(v["matching"].as_array().unwrap().len() * 2, cover as usize);

    let v = json_out(&run(&["approx", s(&c6), "--method", "khit", "--k", "3"]));
    let value = v["value"].as_u64().unwrap();
    assert!((2..=6).contains(&value));

    let c4 = gen(&dir, "cycle 4");
    let v = json_out(&run(&["approx", s(&c4), "--method", "kc", "--k", "1", "--c", "3/2"]));
    assert_eq!(v["scale"], 2);
    assert_eq!(v["factor"], 3.0);

    let k33 = gen(&dir, "multipartite 3 3");
    let out = run(&["approx", s(&k33), "--method", "family"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert!(json_out(&out)["case"].is_u64());

    let out = run(&["approx", s(&c6), "--method", "kc", "--c", "3/2"]);
    assert_eq!(code(&out), 1, "precondition failure");
    let out = run(&["approx", s(&c4), "--method", "kc", "--c", "two"]);
    assert_eq!(code(&out), 2);
    let out = run(&["approx", s(&c6), "--method", "nope"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn suites_report_and_exit() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("table1.json");
    let out = run(&["suite", "table1", "-o", s(&path)]);
    assert_eq!(code(&out), 0);
    let report: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["schema"], 1);
    assert_eq!(report["pass"], true);
    assert!(!report["checks"].as_array().unwrap().is_empty());

    assert_eq!(code(&run(&["suite", "empty-corpus"])), 2);
    assert_eq!(code(&run(&["suite", "no-such-suite"])), 2);
}

#[test]
fn failing_suite_exits_one() {
    let out = run(&["suite", "sperner"]);
    assert_eq!(code(&out), 1);
    let report = json_out(&out);
    assert_eq!(report["pass"], false);
    let failed = report["checks"].as_array().unwrap().iter().find(|c| c["status"] == "fail").unwrap();
    assert!(failed["graph"].is_string());
}
