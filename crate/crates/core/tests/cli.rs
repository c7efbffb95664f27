use std::path::PathBuf;

use cdr_engine::cli::run;
use serde_json::Value;

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("cdr-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn run_to(args: &[&str], name: &str) -> (i32, String) {
    let out = scratch(name);
    let mut full = vec!["cdr"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--output", out.to_str().unwrap()]);
    let code = run(full);
    (code, std::fs::read_to_string(&out).unwrap_or_default())
}

fn json(body: &str) -> Value {
    serde_json::from_str(body).unwrap()
}

#[test]
fn n2_report_has_central_charge_six() {
    let (code, body) = run_to(&["verify-n2", "--dim", "2"], "n2.json");
    assert_eq!(code, 0);
    let r = json(&body);
    assert_eq!(r["details"]["central_charge"], "6");
    assert_eq!(r["details"]["j1j"], "2");
    assert_eq!(r["command"], "verify-n2");
    assert_eq!(r["config"]["dim"], 2);
    for key in ["tool", "version", "verdicts", "tables", "timing"] {
        assert!(r.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn main_comparison_passes_at_default_bounds() {
    let (code, body) = run_to(&["invariants-compare", "--series", "sl", "--dim", "2", "--max-weight", "3"], "compare.json");
    assert_eq!(code, 0);
    let r = json(&body);
    let rows = r["details"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 22);
    assert!(rows.iter().all(|row| row["matches"] == true && row["span_in_kernel"] == true));
}

#[test]
fn odd_rank_symplectic_is_a_config_error() {
    assert_eq!(run(["cdr", "invariants-compare", "--series", "sp", "--dim", "3"]), 2);
    assert_eq!(run(["cdr", "group-invariants", "--series", "sp", "--dim", "1"]), 2);
}

#[test]
fn bad_arguments_exit_two() {
    assert_eq!(run(["cdr", "no-such-command"]), 2);
    assert_eq!(run(["cdr", "verify-n2", "--dim", "0"]), 2);
    assert_eq!(run(["cdr", "character", "--max-weight", "-1"]), 2);
    assert_eq!(run(["cdr", "character", "--format", "xml"]), 2);
}

#[test]
fn reports_are_reproducible_apart_from_timing() {
    let args = ["invariants-compare", "--max-weight", "1", "--degree", "1"];
    let (_, a) = run_to(&args, "repeat.json");
    let (_, b) = run_to(&args, "repeat.json");
    let strip = |s: &str| {
        let mut v = json(s);
        v.as_object_mut().unwrap().remove("timing");
        serde_json::to_string(&v).unwrap()
    };
    assert_eq!(strip(&a), strip(&b));
}

#[test]
fn csv_holds_only_tables() {
    let (code, body) = run_to(&["character", "--max-weight", "1", "--format", "csv"], "character.csv");
    assert_eq!(code, 0);
    let lines: Vec<&str> = body.lines().collect();
    assert_eq!(lines[0], "# character");
    assert_eq!(lines[1], "weight,fermion,w_plus,generated");
    assert!(lines.contains(&"1,0,8,1"));
}

#[test]
fn fermion_filter_restricts_rows() {
    let (code, body) = run_to(&["group-invariants", "--fermion", "-1", "--max-weight", "2"], "group.json");
    assert_eq!(code, 0);
    let r = json(&body);
    let rows = r["tables"]["group"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert!(rows.iter().all(|row| row["fermion"] == -1));
}

#[test]
fn axioms_and_invariance_commands_pass() {
    assert_eq!(run_to(&["verify-axioms", "--trials", "20"], "axioms.json").0, 0);
    assert_eq!(run_to(&["verify-odake-invariance", "--series", "sp", "--degree", "2"], "odake.json").0, 0);
    assert_eq!(run_to(&["gt-invariants", "--max-weight", "2"], "gt.json").0, 0);
}
