use std::path::Path;
use std::process::{Command, Output};

use skewbrace::report::Report;

fn skewbrace(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skewbrace")).args(args).output().expect("binary runs")
}

fn report(out: &Output) -> Report {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

const Z4: &str = r#"{"order":4,"table":[[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]]}"#;

#[test]
fn missing_file_is_an_io_error() {
    let out = skewbrace(&["verify", "missing.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("missing.json"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(skewbrace(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(skewbrace(&["z2", "--family", "case9"]).status.code(), Some(2));
    assert_eq!(skewbrace(&["free"]).status.code(), Some(2));
}

#[test]
fn klein_bottle_family() {
    let out = skewbrace(&["z2", "--p", "0", "--family", "case2", "--verify", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r.report_version, 1);
    assert!(r.verdicts.iter().any(|e| e.check == "type relations" && e.pass));
    let data = r.data.unwrap();
    assert_eq!(data["classification"]["mult_group"], "klein-bottle");
    assert_eq!(data["matrix"], serde_json::json!([[1, 0], [2, -1]]));
}

#[test]
fn negative_parameter_and_explicit_matrix() {
    let out = skewbrace(&["z2", "--p", "-2", "--verify", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out).data.unwrap()["classification"]["family"]["p"], -2);
    let out = skewbrace(&["z2", "--matrix", "[[2,-1],[1,0]]", "--json"]);
    assert_eq!(report(&out).data.unwrap()["classification"]["family"]["family"], "case1");
    // rows must sum to 1
    assert_eq!(skewbrace(&["z2", "--matrix", "[[1,1],[0,1]]"]).status.code(), Some(2));
}

#[test]
fn same_seed_same_report() {
    let args = ["free", "--construction", "inversion", "--verify", "--samples", "300", "--seed", "9", "--json"];
    let a = report(&skewbrace(&args));
    let b = report(&skewbrace(&args));
    assert_eq!(a.without_timing(), b.without_timing());
    assert_eq!(a.seed, 9);
    assert!(a.verdicts.iter().all(|e| e.pass));
    assert!(a.verdicts.iter().any(|e| e.seed == Some(9)));
    let c = report(&skewbrace(&["free", "--construction", "inversion", "--verify", "--samples", "300", "--json"]));
    assert_ne!(c.seed, 9);
}

#[test]
fn regular_subgroups_of_z4() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "z4.json", Z4);
    let out = skewbrace(&["enum-regular", "--group", &g, "--cross-check", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let data = report(&out).data.unwrap();
    assert_eq!(data["count"], 2);
    assert_eq!(data["aut_order"], 2);
    assert_eq!(data["subgroups"][0], serde_json::json!([[0, 0], [0, 1], [0, 2], [0, 3]]));
    let out = skewbrace(&["enum-regular", "--group", &g, "--limit", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn construct_then_verify_and_ybe() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "z4.json", Z4);
    let out = skewbrace(&["construct", "--group", &g, "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let data = report(&out).data.unwrap();
    let entries = data.as_array().unwrap();
    assert_eq!(entries.len(), 2);
    let brace = entries.iter().find(|e| e["lambda"] != serde_json::json!([0, 0, 0, 0])).unwrap()["brace"].to_string();
    let b = write(dir.path(), "b.json", &brace);
    let out = skewbrace(&["verify", &b, "--mode", "axiom,lambda-hom,lambda-cyclic,symmetric,meta-trivial", "--json"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    assert_eq!(report(&out).verdicts.len(), 7);
    let out = skewbrace(&["ybe", &b, "--check", "braid,nondegen,involutive", "--json"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn broken_axiom_exits_one_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    // ℤ₄ with ∘ a relabelled ℤ₄ where 1 has order 2: both are groups, no brace
    let doc = r#"{"carrier":{"order":4},
        "dot":[[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]],
        "circ":[[0,1,2,3],[1,0,3,2],[2,3,1,0],[3,2,0,1]]}"#;
    let b = write(dir.path(), "bad.json", doc);
    let out = skewbrace(&["verify", &b, "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let r = report(&out);
    let axiom = &r.verdicts[0];
    assert!(!axiom.pass);
    assert!(axiom.witness.as_deref().unwrap().starts_with("a="));
}

#[test]
fn trivial_brace_on_a_nonabelian_group_is_not_involutive() {
    let dir = tempfile::tempdir().unwrap();
    let d3 = skewbrace::group::catalog::dihedral(3);
    let doc = skewbrace::FiniteBrace::trivial(d3).to_document();
    let b = write(dir.path(), "d3.json", &serde_json::to_string(&doc).unwrap());
    let out = skewbrace(&["ybe", &b, "--check", "braid,involutive", "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let r = report(&out);
    assert!(r.verdicts.iter().any(|e| e.check == "braid relation" && e.pass));
    assert!(r.verdicts.iter().any(|e| e.check == "involutive" && !e.pass));
}

#[test]
fn out_flag_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = skewbrace(&["zn-cyclic", "--n", "4", "--verify-presentation", "--json", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let r: Report = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(r.command, "zn-cyclic");
    assert!(r.verdicts.iter().any(|e| e.check == "presentation relations" && e.pass));
}

#[test]
fn factor_series_and_suite_subset() {
    for args in [
        &["factor", "--family", "wreath", "--verify", "--samples", "200"][..],
        &["factor", "--family", "f2", "--verify", "--samples", "200"][..],
        &["series", "--vars", "2", "--degree", "3", "--check", "two-sided", "--samples", "200"][..],
        &["series", "--check", "free-witness", "--len", "3"][..],
        &["free", "--construction", "ia", "--verify", "--samples", "200"][..],
        &["paper-suite", "--level", "desk", "--only", "4,5,10"][..],
    ] {
        let out = skewbrace(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stdout));
    }
    let out = skewbrace(&["paper-suite", "--only", "10", "--json"]);
    let r = report(&out);
    assert_eq!(r.verdicts.len(), 1);
    assert!(r.verdicts[0].check.starts_with("10 "));
}
