use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liecps")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn gl2r_structure_verifies() {
    let o = run(&["verify-cps", "--catalog", "gl2R"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("span{W+Z, Y}"));
}

#[test]
fn a2_connection_is_not_flat() {
    let o = run(&["connection", "--catalog", "A2", "--flat"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("EQ-FLAT"), "{out}");
    assert!(out.contains("(A-D, B+C, A-D) ↦ -6C"), "{out}");
}

#[test]
fn gl2r_connection_is_flat() {
    let o = run(&["connection", "--catalog", "gl2R", "--flat", "--curvature"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn bad_complex_structure_is_malformed() {
    let dir = tempfile::tempdir().unwrap();
    let doc = r#"{
        "algebra": {"name": "aff(R)", "dim": 2, "basis": ["X", "Y"],
                    "brackets": [{"i": "X", "j": "Y", "out": {"Y": "1"}}]},
        "J": [["1", "0"], ["0", "1"]],
        "E": [["1", "0"], ["0", "-1"]]
    }"#;
    let path = write(dir.path(), "bad.json", doc);
    let o = run(&["verify-cps", &path]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("J squared is not -Id"), "{}", stderr(&o));
}

#[test]
fn non_integrable_structure_fails_a_check() {
    let dir = tempfile::tempdir().unwrap();
    // Anticommuting J and E on aff(R) whose eigenspaces are not subalgebras of
    // h3: E fixes X and Y, J swaps them up to sign, the bracket X,Y -> Z breaks
    // integrability of E on the 4-dimensional algebra.
    let doc = r#"{
        "algebra": {"name": "h3+R", "dim": 4, "basis": ["X", "Y", "Z", "W"],
                    "brackets": [{"i": "X", "j": "Y", "out": {"Z": "1"}}]},
        "J": [["0","0","-1","0"],["0","0","0","-1"],["1","0","0","0"],["0","1","0","0"]],
        "E": [["1","0","0","0"],["0","1","0","0"],["0","0","-1","0"],["0","0","0","-1"]]
    }"#;
    let path = write(dir.path(), "h3.json", doc);
    let o = run(&["verify-cps", &path]);
    assert_eq!(o.status.code(), Some(1), "{}", stderr(&o));
}

#[test]
fn unknown_key_and_missing_parameter_are_malformed() {
    assert_eq!(run(&["verify-cps", "--catalog", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["verify-cps", "--catalog", "h3R"]).status.code(), Some(2));
    assert_eq!(run(&["verify-cps", "--catalog", "A4", "--t", "1", "--structure", "E'_theta"]).status.code(), Some(2));
}

#[test]
fn unknown_verb_is_rejected() {
    let o = run(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn machine_output_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("a4.json");
    let o = run(&["--machine", "--out", out.to_str().unwrap(), "verify-cps", "--catalog", "A4", "--t", "1/2"]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["passed"], true);
    let saved: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(report["result"], saved);

    let again = dir.path().join("again.json");
    let o = run(&["--out", again.to_str().unwrap(), "verify-cps", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(fs::read_to_string(&out).unwrap(), fs::read_to_string(&again).unwrap());
}

#[test]
fn matched_pair_and_bicross_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let pair = dir.path().join("mp.json");
    let o = run(&["--out", pair.to_str().unwrap(), "matched-pair", "--catalog", "h3R", "--t", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = run(&["matched-pair", "--pair", pair.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["bicross", "--catalog", "h3R", "--t", "3"]);
    assert!(stdout(&o).contains("ROUND-TRIP"));
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["bicross", "--pair", pair.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn lsa_checks_products() {
    let dir = tempfile::tempdir().unwrap();
    let good = write(
        dir.path(),
        "good.json",
        r#"{"basis": ["a", "b"], "product": [{"i": "a", "j": "a", "out": {"a": "1"}}, {"i": "a", "j": "b", "out": {"b": "1"}}]}"#,
    );
    // b.b = a is not left-symmetric together with a.a = a.
    let bad = write(
        dir.path(),
        "bad.json",
        r#"{"basis": ["a", "b"], "product": [{"i": "a", "j": "a", "out": {"a": "1"}}, {"i": "b", "j": "b", "out": {"a": "1"}}]}"#,
    );
    assert_eq!(run(&["lsa", "--product", &good]).status.code(), Some(0));
    assert_eq!(run(&["lsa", "--product", &bad]).status.code(), Some(1));
    assert_eq!(run(&["lsa", "--catalog", "A2"]).status.code(), Some(0));
    let o = run(&["aff", &good]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(run(&["aff", &bad]).status.code(), Some(1));
}

#[test]
fn hypercomplex_output_reloads() {
    let dir = tempfile::tempdir().unwrap();
    let h = dir.path().join("h.json");
    let o = run(&["--out", h.to_str().unwrap(), "hypercomplex", "--catalog", "gl2R"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["hypercomplex", "--check", h.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn iterate_respects_the_cap() {
    let o = run(&["iterate", "--catalog", "affR", "--k", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("dimension"));
    let o = run(&["iterate", "--catalog", "affR", "--k", "5", "--cap", "32"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("exceeds the cap"));
}

#[test]
fn hypersymplectic_suite_on_flat_space() {
    let dir = tempfile::tempdir().unwrap();
    let w = write(
        dir.path(),
        "w.json",
        r#"{"dim": 4, "degree": 2, "coefficients": [{"indices": [0, 1], "value": "1"}, {"indices": [2, 3], "value": "1"}]}"#,
    );
    let o = run(&["forms", "--catalog", "Cn_abelian", "--n", "2", "--hypersymplectic", &w]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("(2, 2)"));
}

#[test]
fn catalog_verbs() {
    let o = run(&["catalog", "list"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("A4_hat"));
    let o = run(&["catalog", "show", "--catalog", "A4", "--t", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("excluded"));
    let o = run(&["catalog", "verify", "h3R", "--t", "2", "--t", "-1/3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(run(&["catalog", "verify", "nope"]).status.code(), Some(2));
}
