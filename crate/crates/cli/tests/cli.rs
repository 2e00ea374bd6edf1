use std::path::Path;
use std::process::{Command, Output};

fn turan(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_turan"))
        .args(args)
        .env("TURAN_CACHE", cache)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn construct_prints_graph6_and_count() {
    let dir = tempfile::tempdir().unwrap();
    let o = turan(&dir.path().join("c"), &["construct", "G1", "--p", "3", "--s", "5", "--n", "20", "--r", "3"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(turan_core::decode_graph6(lines[0]).unwrap().order(), 20);
    assert_eq!(lines[1], "N(K_3)=23");
}

#[test]
fn search_is_cached_and_identical() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache.jsonl");
    let args = ["search", "--n", "5", "--r", "2", "--forbid", "K3", "--s", "2", "--json"];
    let first = turan(&cache, &args);
    assert!(first.status.success());
    assert!(stderr(&first).contains("cache miss"));
    assert!(stdout(&first).contains("\"value\":\"6\""));
    let second = turan(&cache, &args);
    assert!(stderr(&second).contains("cache hit"));
    assert_eq!(stdout(&first), stdout(&second));
    let fresh = turan(&cache, &[&args[..], &["--no-cache"]].concat());
    assert_eq!(stdout(&first), stdout(&fresh));

    let plain = turan(&cache, &["search", "--n", "5", "--r", "2", "--forbid", "K3", "--forbid", "M3"]);
    let text = stdout(&plain);
    assert!(stderr(&plain).contains("cache hit"), "M3 is the same bound as --s 2");
    assert!(text.starts_with("value=6\n"));
    assert!(text.contains("witness "));
}

#[test]
fn mismatched_and_corrupt_entries_are_not_trusted() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache.jsonl");
    let args = ["search", "--n", "6", "--r", "2", "--forbid", "K3", "--s", "2", "--json"];
    let good = stdout(&turan(&cache, &args));

    // a different s is a different key
    let other = turan(&cache, &["search", "--n", "6", "--r", "2", "--forbid", "K3", "--s", "1", "--json"]);
    assert!(stderr(&other).contains("cache miss"));

    // tamper with the stored value and append garbage
    let text = std::fs::read_to_string(&cache).unwrap();
    let tampered = text.replace("\"value\":\"8\"", "\"value\":\"99\"").replacen("\"digest\":\"", "\"digest\":\"0", 1);
    std::fs::write(&cache, tampered + "{not json\n").unwrap();
    let o = turan(&cache, &args);
    assert!(o.status.success());
    assert!(stderr(&o).contains("warning"));
    assert_eq!(stdout(&o), good);
    // the rebuilt cache is clean again
    let o = turan(&cache, &args);
    assert!(!stderr(&o).contains("warning"));
    assert!(stderr(&o).contains("cache hit"));
    assert_eq!(stdout(&o), good);
}

#[test]
fn verify_and_report() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c");
    let manifest = dir.path().join("m.jsonl");
    let m = manifest.to_str().unwrap();
    let o = turan(&cache, &["verify", "alon-frankl", "--k", "2", "--s", "2", "--n", "5..8", "--manifest", m]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("n=") && l.ends_with(" AGREE")).count(), 4);
    assert!(stdout(&o).ends_with("status AGREE\n"));

    // disagreement is data, not failure
    let o = turan(&cache, &["verify", "thm1.5", "--p", "2", "--s", "2", "--r", "3", "--n", "8", "--manifest", m]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("status DISAGREE"));

    let o = turan(&cache, &["report", m, "--format", "csv"]);
    let csv = stdout(&o);
    assert!(csv.starts_with("check_id,n,expected,observed,status\n"));
    assert_eq!(csv.lines().count(), 6);
    let o = turan(&cache, &["report", m]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(json["reports"].as_array().unwrap().len(), 2);
}

#[test]
fn formulas() {
    let dir = tempfile::tempdir().unwrap();
    let c = dir.path().join("c");
    let o = turan(&c, &["formula", "alon-frankl", "--k", "2", "--s", "2", "--n", "8"]);
    assert_eq!(stdout(&o), "value=12\n");
    let o = turan(&c, &["formula", "q11", "--p", "2", "--k", "2", "--r", "3", "--n", "20"]);
    assert!(stdout(&o).contains("difference=6"));
    let o = turan(&c, &["formula", "thm15", "--p", "2", "--s", "2", "--r", "2", "--n", "8"]);
    assert!(stdout(&o).starts_with("value=7\n"));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let c = dir.path().join("c");
    assert_eq!(turan(&c, &["frobnicate"]).status.code(), Some(2));
    assert_eq!(turan(&c, &["verify", "thm1.5", "--p", "2"]).status.code(), Some(2));
    let bad = turan(&c, &["count", "g6:C"]);
    assert_eq!(bad.status.code(), Some(3));
    assert!(stderr(&bad).contains("graph6"));
    assert_eq!(turan(&c, &["count", "join(K3"]).status.code(), Some(3));
    let big = turan(&c, &["matching", "K20000"]);
    assert_eq!(big.status.code(), Some(4));
    assert_eq!(turan(&c, &["search", "--n", "12", "--r", "2", "--forbid", "K3"]).status.code(), Some(4));
    // counting works on expressions too large to build
    let o = turan(&c, &["count", "T(3,30000)", "--r", "3"]);
    assert_eq!(stdout(&o), "n=30000\nN(K_3)=1000000000000\n");
}
