use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cering"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn make(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name);
    let p = path.to_str().unwrap().to_string();
    let mut full = vec!["make"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", &p]);
    assert_eq!(run(&full).status.code(), Some(0));
    p
}

#[test]
fn make_then_check_through_a_pipe() {
    let made = run(&["make", "ce-matrix", "--n", "7", "--scalar", "int"]);
    assert_eq!(made.status.code(), Some(0));
    let out = run_stdin(&["check", "ce", "-"], &made.stdout);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["verdict"], "yes");
}

#[test]
fn make_output_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    for (family, n, scalar) in [("ce-matrix", "9", "int"), ("grassmann", "3", "Z/3"), ("full-matrix", "2", "rat"), ("cyclic", "4", "mod:6")] {
        let p = make(dir.path(), "r.json", &[family, "--n", n, "--scalar", scalar]);
        let text = std::fs::read_to_string(&p).unwrap();
        let ring = cering::ring::io::from_json(&text).unwrap();
        assert_eq!(ring.to_json() + "\n", text);
        let v = run(&["validate", &p]);
        assert_eq!(v.status.code(), Some(0), "{family}");
        assert_eq!(json(&v)["passed"], true);
    }
}

#[test]
fn quotient_then_check() {
    let dir = tempfile::tempdir().unwrap();
    let p = make(dir.path(), "r.json", &["ce-matrix", "--n", "7"]);
    let q = dir.path().join("q.json");
    let out = run(&["quotient", &p, "-p", "2", "--out", q.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let c = run(&["check", "ce", q.to_str().unwrap()]);
    assert_eq!(c.status.code(), Some(0));
    assert_eq!(json(&c)["method"], "exhaustive");
    let g = make(dir.path(), "g.json", &["grassmann", "--n", "3", "--scalar", "Z/3"]);
    assert_eq!(run(&["quotient", &g, "-p", "2"]).status.code(), Some(2));
}

#[test]
fn malformed_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let garbage = dir.path().join("garbage.json");
    std::fs::write(&garbage, "not json at all").unwrap();
    let out = run(&["validate", garbage.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1"));

    let bad = r#"{"name":"d","scalar":{"kind":"integer"},"rank":1,"one":["1"],"table":[[["x"]]]}"#;
    let out = run_stdin(&["validate", "-"], bad.as_bytes());
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("table[0][0][0]"));

    assert_eq!(run(&["validate", "/nonexistent/ring.json"]).status.code(), Some(2));
    assert_eq!(run(&["make", "nosuch", "--n", "3"]).status.code(), Some(2));
    assert_eq!(run(&["make", "ce-matrix", "--n", "5"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn non_associative_table_fails_validation() {
    // e1 e1 = 1 but the identity is wrong on the left: e0 e1 = 0
    let t = r#"{"name":"bad","scalar":{"kind":"integer"},"rank":2,"one":["1","0"],"table":[[["1","0"],["0","0"]],[["0","1"],["1","0"]]]}"#;
    let out = run_stdin(&["validate", "-"], t.as_bytes());
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["passed"], false);
}

#[test]
fn negative_control_exits_one_with_counterexample() {
    let dir = tempfile::tempdir().unwrap();
    let p = make(dir.path(), "m.json", &["full-matrix", "--n", "2", "--scalar", "Z/2"]);
    let out = run(&["check", "ce", &p]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["verdict"], "no");
    assert_eq!(v["evidence"]["counterexample"].as_array().unwrap().len(), 4);
}

#[test]
fn ideal_questions() {
    let dir = tempfile::tempdir().unwrap();
    let p = make(dir.path(), "r.json", &["ce-matrix", "--n", "7"]);
    let spec = dir.path().join("i.json");
    std::fs::write(&spec, r#"{"side":"right","generators":[[0,0,1,0,0,0,0]]}"#).unwrap();
    let s = spec.to_str().unwrap();

    let two = run(&["ideal", &p, "--spec", s, "--two-sided"]);
    assert_eq!(two.status.code(), Some(1));
    let v = json(&two);
    assert_eq!(v["two_sided"], false);
    assert_eq!(v["witness"]["product"], serde_json::json!(["0", "0", "0", "1", "0", "0", "0"]));

    let closed = run(&["ideal", &p, "--spec", s, "--closed"]);
    assert_eq!(closed.status.code(), Some(1));
    assert_eq!(json(&closed)["closed"], false);

    let comp = run(&["ideal", &p, "--spec", s, "--complement"]);
    assert_eq!(comp.status.code(), Some(0));
    let k = json(&comp)["complement"].clone();
    assert!(k.as_array().unwrap().contains(&serde_json::json!(["0", "0", "0", "1", "0", "0", "0"])));

    assert_eq!(run(&["ideal", &p, "--spec", s]).status.code(), Some(2));
    assert_eq!(run(&["ideal", &p, "--spec", s, "--closed", "--complement"]).status.code(), Some(2));

    std::fs::write(&spec, r#"{"side":"two-sided","generators":[[0,0,0,1,0,0,0]]}"#).unwrap();
    let two = run(&["ideal", &p, "--spec", s, "--two-sided"]);
    assert_eq!(two.status.code(), Some(0));
    std::fs::write(&spec, r#"{"side":"sideways","generators":[]}"#).unwrap();
    assert_eq!(run(&["ideal", &p, "--spec", s, "--two-sided"]).status.code(), Some(2));
}

#[test]
fn center_command() {
    let out = run_stdin(&["center", "-"], &run(&["make", "ce-matrix", "--n", "8"]).stdout);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["rank"], 6);
}

#[test]
fn verify_paper_on_small_corpora() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.json");
    std::fs::write(&empty, r#"{"rings":[]}"#).unwrap();
    let out = run(&["verify-paper", "--corpus", empty.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["results"].as_array().unwrap().len(), 0);
    assert_eq!(v["summary"], serde_json::json!({ "pass": 0, "fail": 0, "vacuous": 0, "skipped": 0 }));

    make(dir.path(), "m2.json", &["full-matrix", "--n", "2", "--scalar", "Z/2"]);
    let corpus = dir.path().join("c.json");
    std::fs::write(
        &corpus,
        r#"{"rings":[
            {"family":"grassmann","n":3,"scalar":"Z/3","expect":{"centrally_essential":true,"commutative":false,"finite":true}},
            {"file":"m2.json","expect":{"centrally_essential":false,"commutative":false,"finite":true}}
        ]}"#,
    )
    .unwrap();
    let out = run(&["verify-paper", "--corpus", corpus.to_str().unwrap()]);
    let v = json(&out);
    let summary = &v["summary"];
    assert_eq!(out.status.code(), Some(if summary["fail"] == 0 { 0 } else { 1 }));
    assert_eq!(out.status.code(), Some(0));
    let results = v["results"].as_array().unwrap();
    let of = |ring: &str, id: &str| {
        results
            .iter()
            .find(|r| r["ring"] == ring && r["check_id"] == id)
            .map(|r| r["verdict"].as_str().unwrap().to_string())
    };
    assert_eq!(of("M_2(Z/2)", "corpus-tags").as_deref(), Some("pass"));
    assert_eq!(of("M_2(Z/2)", "minimal-right-ideals-central").as_deref(), Some("skipped"));
    assert_eq!(of("M_2(Z/2)", "nonideal-maximal-meets-center-without-ce").as_deref(), Some("pass"));
    assert_eq!(of("grassmann(3, F_3)", "nonideal-maximal-meets-center").as_deref(), Some("vacuous"));
    assert!(results.iter().all(|r| r["millis"] == 0));

    // a wrong tag is a failure
    std::fs::write(
        &corpus,
        r#"{"rings":[{"family":"full-matrix","n":2,"scalar":"Z/2","expect":{"centrally_essential":true,"commutative":false,"finite":true}}]}"#,
    )
    .unwrap();
    assert_eq!(run(&["verify-paper", "--corpus", corpus.to_str().unwrap()]).status.code(), Some(1));

    assert_eq!(run(&["verify-paper", "--corpus", empty.to_str().unwrap(), "--primes", "2,4"]).status.code(), Some(2));
    assert_eq!(run(&["verify-paper", "--corpus", empty.to_str().unwrap(), "--cap", "0"]).status.code(), Some(2));
    std::fs::write(&corpus, r#"{"rings":[{"family":"nope","n":2,"expect":{"centrally_essential":true,"commutative":true,"finite":true}}]}"#).unwrap();
    let out = run(&["verify-paper", "--corpus", corpus.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("rings[0].family"));
}
