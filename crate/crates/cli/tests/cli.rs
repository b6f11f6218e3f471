use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn cga(dir: &Path, args: &[&str]) -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_cga"));
    c.current_dir(dir).args(args);
    for var in ["CGA_CAP", "CGA_JOBS", "CGA_BUDGET", "CGA_CACHE_DIR"] {
        c.env_remove(var);
    }
    c
}

fn run(dir: &Path, args: &[&str]) -> Output {
    cga(dir, args).output().unwrap()
}

fn json(dir: &Path, args: &[&str]) -> (i32, Value) {
    let mut a = args.to_vec();
    a.push("--json");
    let out = run(dir, &a);
    let doc = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stderr)));
    (out.status.code().unwrap(), doc)
}

#[test]
fn classes_report_y_b() {
    let dir = tempfile::tempdir().unwrap();
    let (code, doc) = json(dir.path(), &["classes", "--group", "alt", "--n", "11"]);
    assert_eq!(code, 0);
    assert_eq!(doc["schema_version"], "1");
    assert_eq!(doc["reports"][0]["y_b"], serde_json::json!(["4-4-3"]));
    let (_, doc) = json(dir.path(), &["classes", "--group", "alt", "--n", "7"]);
    assert_eq!(doc["reports"][0]["y_b"], serde_json::json!([]));
    let (_, doc) = json(dir.path(), &["classes", "--group", "sym", "--n", "3"]);
    let classes = doc["reports"][0]["classification"]["classes"].as_array().unwrap();
    assert!(classes.iter().all(|c| c["in_ya"] == "in_ya"));
}

#[test]
fn centralizer_of_an_element() {
    let dir = tempfile::tempdir().unwrap();
    let (code, doc) = json(dir.path(), &["centralizer", "--group", "alt", "--n", "8", "--perm", "(1,3,2,4)(5,7,6,8)"]);
    assert_eq!(code, 0);
    assert_eq!(doc["reports"][0]["order"], "16");
    assert_eq!(doc["reports"][0]["abelian"], false);
    // An odd element is not in the alternating group.
    let out = run(dir.path(), &["centralizer", "--group", "alt", "--n", "4", "--perm", "(1,2)"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn component_and_cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["component", "--group", "alt", "--n", "8", "--class", "4-4", "--seed", "(1,3,2,4)(5,7,6,8)"];
    let (code, first) = json(dir.path(), &args);
    assert_eq!(code, 0);
    let r = &first["reports"][0];
    assert_eq!((r["size"].as_u64(), r["delta"].as_u64(), r["Delta"].as_u64()), (Some(12), Some(3), Some(3)));
    assert_eq!(r["cache"]["hit"], false);
    let path = dir.path().join(r["cache"]["path"].as_str().unwrap());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("# cga-component schema_version=1 degree=8"));
    assert_eq!(text.lines().count(), 13);

    let (_, second) = json(dir.path(), &args);
    let s = &second["reports"][0];
    assert_eq!(s["cache"]["hit"], true);
    assert_eq!(s["size"], r["size"]);
    assert_eq!(s["delta"], r["delta"]);
}

#[test]
fn fifteen_point_components() {
    let dir = tempfile::tempdir().unwrap();
    for (class, seed, size, value) in [
        ("7-4-4", "(1,3,2,4)(5,7,6,8)(9,10,11,12,13,14,15)", 72, 3),
        ("6-3-3-2", "(1,2,5,6,3,4)(7,8,9)(10,12,11)(13,14)", 96, 12),
    ] {
        let (code, doc) = json(
            dir.path(),
            &["component", "--group", "alt", "--n", "15", "--class", class, "--seed", seed, "--no-cache"],
        );
        assert_eq!(code, 0);
        let r = &doc["reports"][0];
        assert_eq!(r["size"], size);
        assert_eq!(r["delta"], value);
        assert_eq!(r["Delta"], value);
        assert_eq!(r["cache"], Value::Null);
    }
}

#[test]
fn seed_outside_class_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(dir.path(), &["component", "--group", "alt", "--n", "8", "--class", "4-4", "--seed", "(1,2,3)"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not in the class"));
}

#[test]
fn cap_exhaustion_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(
        dir.path(),
        &["component", "--group", "alt", "--n", "8", "--class", "4-4", "--seed", "(1,3,2,4)(5,7,6,8)", "--cap", "5"],
    );
    assert_eq!(out.status.code(), Some(3));
    let out = run(dir.path(), &["classes", "--group", "alt", "--n", "11", "--cap", "10"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn reps_search_examples() {
    let dir = tempfile::tempdir().unwrap();
    let (code, doc) = json(dir.path(), &["reps-search", "--n", "12", "--kind", "even"]);
    assert_eq!(code, 0);
    assert_eq!(doc["reports"][0]["feasible"], false);
    assert_eq!(doc["reports"][0]["replay"], "ok");
    let (_, doc) = json(dir.path(), &["reps-search", "--n", "12", "--kind", "even", "--groups", "8"]);
    let r = &doc["reports"][0];
    assert_eq!(r["feasible"], true);
    assert_eq!(r["search"]["outcome"]["assignment"][2], "(1,3)(2,4,6)(9,10,11,12)");
    let (_, doc) = json(dir.path(), &["reps-search", "--n", "16", "--kind", "even", "--no-symmetry-reduction"]);
    assert_eq!(doc["reports"][0]["feasible"], false);
    assert_eq!(doc["reports"][0]["symmetry_reduction"], false);
}

#[test]
fn cover_of_the_twelve_point_slice() {
    let dir = tempfile::tempdir().unwrap();
    let (code, doc) = json(dir.path(), &["cover", "--n", "12", "--kind", "even"]);
    assert_eq!(code, 0);
    let r = &doc["reports"][0];
    assert_eq!(r["members"].as_array().unwrap().len(), 280);
    assert_eq!(r["meets_slice"]["result"], "pass");
    let out = run(dir.path(), &["cover", "--n", "14", "--kind", "even"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_orders_reports_and_sets_exit_status() {
    let dir = tempfile::tempdir().unwrap();
    let (code, doc) = json(dir.path(), &["verify", "prop-alt-even", "--n", "12", "--jobs", "4"]);
    assert_eq!(code, 0);
    let reports = doc["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 6);
    assert!(reports.iter().all(|r| r["result"] == "pass"));
    let ids: Vec<&str> = reports.iter().map(|r| r["claim_id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);

    // The plain table carries the same ids.
    let out = run(dir.path(), &["verify", "prop-alt-even", "--n", "12"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(ids.iter().all(|id| text.contains(id)));

    let out = run(dir.path(), &["verify", "bogus-id"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn jsonl_has_header_reports_and_end() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(dir.path(), &["verify", "lemma-alt-abelian-centralizer.y-b", "--n", "7,8", "--jsonl"]);
    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<Value> = String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    let kinds: Vec<&str> = lines.iter().map(|l| l["record"].as_str().unwrap()).collect();
    assert_eq!(kinds, ["invocation", "report", "report", "end"]);
    assert!(lines.iter().all(|l| l["schema_version"] == "1"));
    assert_eq!(lines[3]["exit_status"], 0);
}

#[test]
fn configuration_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("cga.toml");
    std::fs::write(&file, "cap = 5000\njobs = 3\nbudget = 1000000\n").unwrap();
    let f = file.to_str().unwrap();
    let base = ["centralizer", "--group", "sym", "--n", "3", "--perm", "(1,2)", "--json", "--config", f];

    let out = cga(dir.path(), &base).env("CGA_CAP", "7000").output().unwrap();
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    let c = &doc["invocation"]["config"];
    assert_eq!((c["cap"].as_u64(), c["sources"]["cap"].as_str()), (Some(7000), Some("env")));
    assert_eq!((c["jobs"].as_u64(), c["sources"]["jobs"].as_str()), (Some(3), Some("file")));
    assert_eq!(c["sources"]["cache_dir"], "default");

    let mut with_flag = base.to_vec();
    with_flag.extend(["--cap", "9000"]);
    let out = cga(dir.path(), &with_flag).env("CGA_CAP", "7000").output().unwrap();
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    let c = &doc["invocation"]["config"];
    assert_eq!((c["cap"].as_u64(), c["sources"]["cap"].as_str()), (Some(9000), Some("flag")));

    std::fs::write(&file, "cpa = 1\n").unwrap();
    assert_eq!(run(dir.path(), &base).status.code(), Some(2));
}

#[test]
fn bad_arguments_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(run(dir.path(), &["classes", "--group", "dihedral", "--n", "4"]).status.code(), Some(2));
    assert_eq!(run(dir.path(), &["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(dir.path(), &["classes", "--group", "alt", "--n", "0"]).status.code(), Some(2));
}
