use serde_json::Value;

use super::*;

fn run_with(args: &[&str], limits: Limits) -> (u8, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("groupscope").chain(args.iter().copied());
    let code = main_with(argv, Ok(limits), &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn run_args(args: &[&str]) -> (u8, String, String) {
    run_with(args, Limits::default())
}

#[test]
fn info_quaternion() {
    let (code, out, _) = run_args(&["info", "Q(8)"]);
    assert_eq!(code, 0);
    assert!(out.contains("order: 8"));
    assert!(out.contains("class: 2"));
    assert!(out.contains("|Z|: 2"));
    assert!(out.contains("Z: Ab(2; 1)"));
    assert!(out.contains("purely non-abelian: true"));
}

#[test]
fn info_of_a_non_nilpotent_group() {
    let (code, out, _) = run_args(&["info", "D(3)"]);
    assert_eq!(code, 0);
    assert!(out.contains("class: not nilpotent"));
}

#[test]
fn aut_filters() {
    assert!(run_args(&["aut", "D(4)"]).1.starts_with("full: 8"));
    assert!(run_args(&["aut", "D(4)", "--filter", "box:Z,g2"])
        .1
        .starts_with("box: 4"));
    assert!(run_args(&["aut", "D(4)", "--filter", "box:Z,gamma_2"])
        .1
        .starts_with("box: 4"));
    assert!(run_args(&["aut", "Q(8) x C(2)", "--filter", "class:1"])
        .1
        .starts_with("class:1: 4"));
    assert!(run_args(&["aut", "Q(8)", "--filter", "central"])
        .1
        .starts_with("central: 4"));
    assert_eq!(
        run_args(&["aut", "D(4)", "--filter", "box:Z,H"]).0,
        EXIT_CONFIG
    );
    assert_eq!(
        run_args(&["aut", "D(4)", "--filter", "inner"]).0,
        EXIT_CONFIG
    );
}

#[test]
fn check_json_to_stdout() {
    let (code, out, _) = run_args(&["check", "T3.4", "D(4)", "--json", "-"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["theorem_id"], "T3.4");
    assert_eq!(v["status"], "PASSED");
    assert_eq!(v["conclusion"], true);
}

#[test]
fn check_json_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let (code, out, _) = run_args(&["check", "T2.4", "Q(8)", "--json", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("T2.4 on Q(8): PASSED"));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(v["group_spec"], "Q(8)");
}

#[test]
fn failed_report_exits_one() {
    let (code, out, _) = run_args(&["check", "L2.1", "D(8)"]);
    assert_eq!(code, EXIT_FAILED);
    assert!(out.contains("FAILED"));
}

#[test]
fn not_applicable_exits_zero() {
    let (code, out, _) = run_args(&["check", "C4.5", "C(4)"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("NOT-APPLICABLE"));
    assert!(out.contains("conclusion not asserted"));
}

#[test]
fn config_errors_exit_two() {
    for args in [
        &["info", "Q(6)"][..],
        &["info", "D(4) x"],
        &["check", "T9.9", "D(4)"],
        &["corpus", "--theorems", "T3.4,nope"],
        &["info", "@/nonexistent/table.json"],
        &["frobnicate"],
        &[],
    ] {
        let (code, _, err) = run_args(args);
        assert_eq!(code, EXIT_CONFIG, "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
}

#[test]
fn help_is_not_an_error() {
    let (code, out, _) = run_args(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("corpus"));
}

#[test]
fn order_cap() {
    let (code, _, err) = run_with(&["info", "C(32)"], Limits { max_order: 16 });
    assert_eq!(code, EXIT_CONFIG);
    assert!(err.contains("cap"));
    let bad = Limits::from_env_value("lots");
    assert!(bad.is_err());
}

#[test]
fn cayley_file_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("v4.json");
    std::fs::write(
        &path,
        r#"{"order": 4, "table": [[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]]}"#,
    )
    .unwrap();
    let spec = format!("@{}", path.display());
    let (code, out, _) = run_args(&["info", &spec]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("Ab(2; 1, 1)"));
    assert_eq!(
        run_with(&["info", &spec], Limits { max_order: 2 }).0,
        EXIT_CONFIG
    );

    std::fs::write(&path, r#"{"order": 2, "table": [[0,1],[1,1]]}"#).unwrap();
    assert_eq!(run_args(&["info", &spec]).0, EXIT_CONFIG);
}

#[test]
fn corpus_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("r.json");
    let csv = dir.path().join("r.csv");
    let (code, out, _) = run_args(&[
        "corpus",
        "--max-order",
        "16",
        "--theorems",
        "T3.4,C4.2",
        "--json",
        json.to_str().unwrap(),
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("0 failed"));
    let reports: Vec<Value> =
        serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert!(!reports.is_empty());
    assert!(reports.iter().all(|r| r["schema"] == 1));

    let mut rd = csv::Reader::from_path(&csv).unwrap();
    let headers = rd.headers().unwrap().clone();
    assert_eq!(headers.iter().collect::<Vec<_>>(), CSV_HEADER);
    assert_eq!(rd.records().count(), reports.len());
}

#[test]
fn corpus_json_to_stdout_keeps_summary_on_stderr() {
    let (code, out, err) = run_args(&[
        "corpus",
        "--max-order",
        "8",
        "--theorems",
        "T2.4",
        "--json",
        "-",
    ]);
    assert_eq!(code, EXIT_OK);
    let reports: Vec<Value> = serde_json::from_str(&out).unwrap();
    assert!(!reports.is_empty());
    assert!(err.contains("reports:"));
}

#[test]
fn corpus_failure_exit_code() {
    let (code, out, _) = run_args(&["corpus", "--max-order", "16", "--theorems", "L2.1"]);
    assert_eq!(code, EXIT_FAILED);
    assert!(out.contains("FAILED L2.1 D(8)"));
}
