use std::io::Write;
use std::process::{Command, Output};

use normcone::hilbert::{self, Assumptions, FiltrationProfile};
use serde_json::Value;

fn normcone(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_normcone"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let o = normcone(&all);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

fn schema() -> jsonschema::Validator {
    let text = include_str!("../schema/normcone.report.v1.json");
    jsonschema::validator_for(&serde_json::from_str(text).unwrap()).unwrap()
}

fn assert_valid(v: &Value) {
    let validator = schema();
    let errors: Vec<String> = validator.iter_errors(v).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{errors:?}\n{v:#}");
}

/// Digit runs not glued to a word character, so `e0` and `v1` do not count.
fn numeric_tokens(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut prev_word = false;
    let mut cur = String::new();
    for ch in s.chars() {
        if ch.is_ascii_digit() && (!cur.is_empty() || !prev_word) {
            cur.push(ch);
        } else if !cur.is_empty() {
            out.push(std::mem::take(&mut cur));
        }
        prev_word = ch.is_alphanumeric() || ch == '_';
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out.sort();
    out
}

fn profile_file(contents: &str, suffix: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::Builder::new().suffix(suffix).tempfile().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

#[test]
fn gcd_and_domain_errors_exit_two() {
    assert_eq!(normcone(&["semigroup", "2", "2"]).status.code(), Some(2));
    assert_eq!(normcone(&["semigroup", "4", "6"]).status.code(), Some(2));
    assert_eq!(normcone(&["hypersurface", "--a", "1", "--b", "3"]).status.code(), Some(2));
    assert_eq!(normcone(&["hypersurface", "--a", "5", "--b", "3"]).status.code(), Some(2));
    assert_eq!(normcone(&["hypersurface", "--a", "3", "--b", "5", "--m", "0"]).status.code(), Some(2));
}

#[test]
fn missing_file_is_an_input_error() {
    let o = normcone(&["filtration", "/nonexistent/profile.json", "--dim", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn symmetric_semigroup_with_non_gorenstein_cone() {
    let v = json(&["semigroup", "4", "6", "7"]);
    assert_valid(&v);
    assert_eq!(v["verdicts"]["gorenstein"]["status"], "fails");
    assert_eq!(v["instance"]["symmetric"], true);
    assert_eq!(v["invariants"]["h_vector"], serde_json::json!([1, 2, 0, 1]));
    assert_eq!(v["invariants"]["reduction_number"], 3);
    assert_eq!(v["invariants"]["postulation_number"], 2);
}

#[test]
fn two_generator_semigroup_holds() {
    let v = json(&["semigroup", "3", "4"]);
    assert_valid(&v);
    assert_eq!(v["verdicts"]["gorenstein"]["status"], "holds");
    assert_eq!(v["invariants"]["h_vector"], serde_json::json!([1, 1, 1]));
    assert_eq!(v["instance"]["frobenius"], 5);
}

#[test]
fn hypersurface_examples() {
    let v = json(&["hypersurface", "--a", "3", "--b", "5", "--m", "2"]);
    assert_valid(&v);
    assert_eq!(v["verdicts"]["gorenstein"]["status"], "fails");
    assert_eq!(v["verdicts"]["ring_class"], "not_gorenstein");

    let v = json(&["hypersurface", "--a", "4", "--b", "6"]);
    assert_eq!(v["verdicts"]["gorenstein"]["status"], "holds");
    assert_eq!(v["verdicts"]["ring_class"], "complete_intersection");

    let v = json(&["hypersurface", "--a", "2", "--b", "2"]);
    assert_eq!(v["invariants"]["reduction_number"], 1);
    assert_eq!(v["verdicts"]["ring_class"], "reduced_hypersurface");
}

#[test]
fn verify_attaches_passing_checks() {
    for args in [
        &["hypersurface", "--a", "5", "--b", "13", "--m", "2", "--verify"][..],
        &["semigroup", "5", "7", "9", "--verify"][..],
    ] {
        let v = json(args);
        assert_valid(&v);
        let checks = v["verification"]["checks"].as_array().unwrap();
        assert!(!checks.is_empty());
        assert!(checks.iter().all(|c| c["passed"] == true), "{checks:?}");
    }
}

#[test]
fn max_n_extends_the_length_table() {
    let v = json(&["semigroup", "3", "4", "--max-n", "12"]);
    assert_eq!(v["invariants"]["length_table"].as_array().unwrap().len(), 13);
}

#[test]
fn text_and_json_carry_the_same_numbers() {
    let cases: &[&[&str]] = &[
        &["semigroup", "4", "6", "7"],
        &["semigroup", "5", "7", "9", "--verify"],
        &["hypersurface", "--a", "3", "--b", "5", "--m", "2", "--verify"],
        &["hypersurface", "--a", "6", "--b", "10"],
        &["sweep", "zariski", "--a", "2..4", "--b", "..9", "--m", "1"],
    ];
    for args in cases {
        let text = stdout(&normcone(args));
        let mut with_json = args.to_vec();
        with_json.push("--json");
        let js = stdout(&normcone(&with_json));
        assert_eq!(numeric_tokens(&text), numeric_tokens(&js), "{args:?}\n{text}\n{js}");
    }
}

#[test]
fn flagless_identity_table_is_inapplicable() {
    let f = profile_file(r#"{"dim": 1, "H": [0, 1, 2, 3, 4, 5]}"#, ".json");
    let v = json(&["filtration", f.path().to_str().unwrap()]);
    assert_valid(&v);
    assert_eq!(v["verdicts"]["gorenstein"]["status"], "inapplicable");
    assert_eq!(v["invariants"]["e0"], 1);
    assert_eq!(v["invariants"]["reduction_number"], Value::Null);
}

#[test]
fn maximal_table_holds_from_json_and_csv() {
    // λ = 1, e0 = 2, r = 3 in dimension one
    let h = hilbert::hs_maximal(1, 2, 3, 1).unwrap();
    let p = FiltrationProfile::from_hvector(&h, 8, Assumptions::default()).unwrap();
    let lengths: Vec<String> = p.lengths().iter().map(ToString::to_string).collect();

    let j = profile_file(
        &format!(r#"{{"dim": 1, "H": [{}], "flags": {{"ambient": true, "cm": true}}}}"#, lengths.join(", ")),
        ".json",
    );
    let v = json(&["filtration", j.path().to_str().unwrap()]);
    assert_valid(&v);
    assert_eq!(v["verdicts"]["gorenstein"]["status"], "holds");
    assert_eq!(v["invariants"]["maximal"], true);

    let rows: String = lengths.iter().enumerate().map(|(n, h)| format!("{n},{h}\n")).collect();
    let c = profile_file(&format!("n,H\n{rows}"), ".csv");
    let path = c.path().to_str().unwrap();
    let w = json(&["filtration", path, "--dim", "1", "--ambient-gorenstein", "--cm"]);
    assert_eq!(w["invariants"], v["invariants"]);
    assert_eq!(w["verdicts"], v["verdicts"]);

    assert_eq!(normcone(&["filtration", path]).status.code(), Some(2), "CSV needs --dim");
}

#[test]
fn short_table_reports_stabilization_in_band() {
    // h = (1, 1, 1) needs H up to n = 4 before it can be certified
    let f = profile_file(r#"{"dim": 1, "H": [0, 1, 3, 6], "flags": {"ambient": true, "cm": true}}"#, ".json");
    let v = json(&["filtration", f.path().to_str().unwrap()]);
    assert_valid(&v);
    assert_eq!(v["verdicts"]["gorenstein"]["status"], "inapplicable");
    assert_eq!(v["invariants"]["h_vector"], Value::Null);
    let reasons = v["verdicts"]["gorenstein"]["reasons"].as_array().unwrap();
    assert!(reasons.iter().any(|r| r["criterion"] == "stabilization"));
}

#[test]
fn malformed_profiles_are_rejected() {
    for (body, suffix) in [
        (r#"{"dim": 1, "H": [0, 1], "extra": 1}"#, ".json"),
        (r#"{"dim": 1, "H": [1, 2, 3]}"#, ".json"),
        ("0,0\n1,3\n2,2\n", ".csv"),
        ("0,0\n2,1\n", ".csv"),
    ] {
        let f = profile_file(body, suffix);
        let o = normcone(&["filtration", f.path().to_str().unwrap(), "--dim", "1"]);
        assert_eq!(o.status.code(), Some(2), "{body}");
    }
}

#[test]
fn sweeps() {
    let empty = normcone(&["sweep", "zariski", "--a", "5..4"]);
    assert_eq!(empty.status.code(), Some(0));

    let v = json(&["sweep", "zariski", "--a", "2..6", "--b", "..20", "--m", "1..2", "--verify"]);
    assert_eq!(v["violations"], serde_json::json!([]));
    assert!(v["instances"].as_u64().unwrap() > 0);

    let v = json(&["sweep", "semigroup", "--max-gen", "5", "--bound", "15"]);
    assert_eq!(v["family"], "semigroup");
    assert_eq!(v["violations"], serde_json::json!([]));
}
