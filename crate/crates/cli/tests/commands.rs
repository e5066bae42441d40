use std::process::Command;

use nearholo::series::NearlyHolomorphicForm;
use nearholo_cli::{main_with, run, ErrorCode, Status};
use serde_json::{json, Value};

fn ok(args: &[&str]) -> Value {
    let mut argv = vec!["nearholo"];
    argv.extend_from_slice(args);
    let r = run(argv);
    assert_eq!(r.status, Status::Ok, "{args:?}: {}", r.envelope());
    r.payload
}

fn err(args: &[&str]) -> ErrorCode {
    let mut argv = vec!["nearholo"];
    argv.extend_from_slice(args);
    let r = run(argv);
    assert_eq!(r.status, Status::Error, "{args:?} unexpectedly succeeded");
    r.code.expect("error results carry a code")
}

fn write_temp(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn e2_form_file() {
    let v = ok(&["e2", "--trunc", "5"]);
    assert_eq!(v["weight"], 2);
    assert_eq!(v["truncation"], 5);
    let terms = v["terms"].as_array().unwrap();
    assert!(terms.contains(&json!([1, 0, "12"])));
    assert!(terms.contains(&json!([0, 0, "-1"])));
    assert!(terms.contains(&json!([0, 1, "24"])));
    assert_eq!(terms[1], json!([0, 1, "24"]));
}

#[test]
fn decompose_of_e2_output() {
    let dir = tempfile::tempdir().unwrap();
    let e2 = ok(&["e2", "--trunc", "5"]);
    let path = write_temp(&dir, "e2.json", &e2.to_string());
    let d = ok(&["decompose", "--in", &path]);
    assert_eq!(d, json!({"terms": [], "e2": {"m": 0, "c": "1"}}));
}

#[test]
fn constant_term_verdicts() {
    assert_eq!(ok(&["constant-term", "--k", "2", "--d", "2"])["verdict"]["kind"], "PureSection");
    let v = ok(&["constant-term", "--k", "2", "--d", "1", "--character", "trivial"]);
    assert_eq!(v["verdict"]["kind"], "SectionPlusResidue");
    assert_eq!(v["verdict"]["leading_display"], "-3·π^-1");
    assert_eq!(v["verdict"]["leading"], json!([["-1", "-3", "0"]]));
    assert_eq!(err(&["constant-term", "--k", "2", "--d", "1", "--character", "sgn"]), ErrorCode::Domain);
}

#[test]
fn emitted_forms_reparse() {
    let dir = tempfile::tempdir().unwrap();
    let outputs = [
        ok(&["eis", "--k", "4", "--trunc", "8"]),
        ok(&["eis", "--k", "12", "--trunc", "3"]),
        ok(&["e2", "--trunc", "7"]),
        ok(&["theta", "1", "1", "1", "--trunc", "20"]),
    ];
    for (i, v) in outputs.iter().enumerate() {
        let text = v.to_string();
        let f = NearlyHolomorphicForm::from_json(&text).unwrap();
        assert_eq!(f.to_json(), text);
        let path = write_temp(&dir, &format!("f{i}.json"), &text);
        let raised = ok(&["raise", "--in", &path]);
        let raised_path = write_temp(&dir, &format!("r{i}.json"), &raised.to_string());
        let back = ok(&["lower", "--in", &raised_path]);
        let lowered = NearlyHolomorphicForm::from_json(&back.to_string()).unwrap();
        // Λδ f = -k f for holomorphic f
        let k = f.weight().unwrap();
        assert_eq!(lowered, f.scale(&nearholo::series::int(-k)));
    }
}

#[test]
fn identify_and_casimir() {
    let dir = tempfile::tempdir().unwrap();
    let e2 = write_temp(&dir, "e2.json", &ok(&["e2", "--trunc", "6"]).to_string());
    assert_eq!(ok(&["identify", "--in", &e2])["class"], "DualVerma");
    let c = ok(&["casimir", "--in", &e2]);
    assert_eq!(c["eigenvalue"], "0");
    assert_eq!(c["lambda"], "2");
    let e4 = write_temp(&dir, "e4.json", &ok(&["eis", "--k", "4"]).to_string());
    assert_eq!(ok(&["identify", "--in", &e4])["label"], "L(4)");
}

#[test]
fn local_commands() {
    assert_eq!(ok(&["local", "hilbert", "2", "5", "5"])["symbol"], -1);
    assert_eq!(ok(&["local", "hilbert", "-1", "-1", "real"])["symbol"], -1);
    let inv = ok(&["local", "invariants", "2", "3", "--place", "2"]);
    assert_eq!(inv["invariants"][0]["epsilon"], -1);
    let c = ok(&["local", "coherent", r#"{"discriminant":"-1","epsilons":{"3":-1}}"#]);
    assert_eq!(c["coherent"], false);
    let defs = ok(&["local", "definite", "-1", "--bound", "10"]);
    assert_eq!(defs["count"], 4);
    let r = ok(&["local", "reducible", "--residue", "real", "--order", "2", "--real-sign", "1", "--re", "0"]);
    assert_eq!(r["constituents"], json!(["R(2,0)", "R(0,2)"]));
    let r = ok(&["local", "reducible", "--residue", "3", "--order", "1", "--re", "1/2"]);
    assert_eq!(r["reducible"], false);
    assert_eq!(ok(&["local", "eigenvalue", "--q", "3", "--epsilon", "-1"])["eigenvalue"], "-3/2");
    assert_eq!(err(&["local", "hilbert", "0", "1", "3"]), ErrorCode::Domain);
    assert_eq!(err(&["local", "hilbert", "1", "1", "4"]), ErrorCode::Usage);
}

#[test]
fn catalog_and_block() {
    assert_eq!(ok(&["catalog", "--d", "2", "--k", "3"])["summands"].as_array().unwrap().len(), 1);
    assert!(ok(&["catalog", "--d", "2", "--k", "2"])["holomorphic_quotient"].is_null());
    assert_eq!(ok(&["block", "5"])["classes"].as_array().unwrap().len(), 5);
    assert_eq!(ok(&["block", "-3"]), ok(&["block", "5"]));
}

#[test]
fn failures_have_codes() {
    assert_eq!(err(&["frobnicate"]), ErrorCode::Usage);
    assert_eq!(err(&["eis"]), ErrorCode::Usage);
    assert_eq!(err(&["eis", "--k", "3"]), ErrorCode::Domain);
    assert_eq!(err(&["raise", "--in", "/nonexistent/form.json"]), ErrorCode::Io);
    let dir = tempfile::tempdir().unwrap();
    let bad = write_temp(&dir, "bad.json", r#"{"weight":2,"truncation":3,"terms":[[1,0,"12"],[0,0,"-1"]]}"#);
    assert_eq!(err(&["raise", "--in", &bad]), ErrorCode::MalformedInput);
    let noncanonical = write_temp(&dir, "nc.json", r#"{"weight":2,"truncation":3,"terms":[[0,0,"2/4"]]}"#);
    assert_eq!(err(&["decompose", "--in", &noncanonical]), ErrorCode::MalformedInput);
}

#[test]
fn verify_passes() {
    let v = ok(&["verify"]);
    assert_eq!(v["failed"], 0);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
}

#[test]
fn output_is_deterministic() {
    let a = ok(&["catalog", "--d", "1", "--k", "1"]).to_string();
    let b = ok(&["catalog", "--d", "1", "--k", "1"]).to_string();
    assert_eq!(a, b);
}

#[test]
fn main_with_writes_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("e2.json");
    let (mut stdout, mut stderr) = (Vec::new(), Vec::new());
    let code = main_with(["nearholo", "e2", "--trunc", "2", "--out", out.to_str().unwrap()], &mut stdout, &mut stderr);
    assert_eq!(code, 0);
    assert!(stdout.is_empty() && stderr.is_empty());
    let text = std::fs::read_to_string(&out).unwrap();
    assert_eq!(text.trim_end(), r#"{"weight":2,"truncation":2,"terms":[[0,0,"-1"],[0,1,"24"],[0,2,"72"],[1,0,"12"]]}"#);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_nearholo");
    let good = Command::new(bin).args(["e2", "--trunc", "1"]).output().unwrap();
    assert!(good.status.success());
    assert!(good.stderr.is_empty());
    let bad = Command::new(bin).args(["catalog", "--d", "0", "--k", "1"]).output().unwrap();
    assert!(!bad.status.success());
    assert!(bad.stdout.is_empty());
    let envelope: Value = serde_json::from_slice(&bad.stderr).unwrap();
    assert_eq!(envelope["status"], "error");
    assert_eq!(envelope["code"], "domain");
}

#[test]
fn help_is_plain_text() {
    let mut out = Vec::new();
    let mut errs = Vec::new();
    assert_eq!(main_with(["nearholo", "--help"], &mut out, &mut errs), 0);
    let text = String::from_utf8(out).unwrap();
    assert!(text.starts_with("Exact computations"));
    assert!(text.contains("\n  decompose"));
    assert!(!text.contains("\\n"));
}
