use dickson_do::cli::{dispatch, EXIT_OK, EXIT_USAGE, EXIT_VIOLATION};
use dickson_do::report::{Checked, Generated};
use dickson_do::verify::SweepReport;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("dickson-do").chain(args.iter().copied());
    let code = dispatch(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn gen_prints_canonical_polynomial() {
    let (code, out, _) = run(&["gen", "--kind", "first", "--p", "3", "--n", "7", "--d", "2"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "2*x^2 + 2*x^4 + 2*x^6\n");
}

#[test]
fn classify_reports_rule() {
    let (code, out, _) = run(&[
        "classify", "--kind", "second", "--p", "5", "--n", "7", "--d", "2",
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("matched, rule T2.4-ii"), "{out}");

    let (_, out, _) = run(&[
        "classify", "--kind", "second", "--p", "7", "--n", "5", "--d", "2",
    ]);
    assert!(out.starts_with("not matched"), "{out}");
}

#[test]
fn check_reports_failing_exponent() {
    let (code, out, _) = run(&[
        "check", "--kind", "second", "--p", "3", "--n", "16", "--d", "1",
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("not DO, failing exponent 3"), "{out}");

    let (_, out, _) = run(&[
        "check", "--kind", "first", "--p", "3", "--n", "4", "--d", "2", "--format", "json",
    ]);
    let parsed: Checked = serde_json::from_str(&out).unwrap();
    assert!(parsed.verdict.is_do);
    assert_eq!(parsed.polynomial, "2*x^2 + 2*x^4");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["gen", "--kind", "first", "--p", "4", "--n", "3"][..],
        &["gen", "--kind", "first", "--p", "2", "--n", "3"],
        &["gen", "--kind", "third", "--p", "3", "--n", "3"],
        &["classify", "--kind", "first", "--p", "3", "--n", "1"],
        &["sweep", "--kind", "first", "--p", "3", "--jobs", "0"],
        &["frobnicate"],
        &[],
    ] {
        let (code, out, err) = run(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert!(out.is_empty(), "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
}

#[test]
fn help_goes_to_stdout() {
    let (code, out, err) = run(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("sweep") && err.is_empty());
}

#[test]
fn sweep_output_is_reproducible() {
    let args = [
        "sweep",
        "--kind",
        "second",
        "--p",
        "3",
        "--n-max",
        "25",
        "--d-max",
        "8",
        "--no-timing",
    ];
    let (code, first, _) = run(&args);
    assert_eq!(code, EXIT_OK);
    assert!(first.contains("mismatches: 0") && !first.contains("runtime"));
    let (_, second, _) = run(&args);
    assert_eq!(first, second);

    let mut parallel = args.to_vec();
    parallel.extend(["--jobs", "4"]);
    assert_eq!(run(&parallel).1, first);
}

#[test]
fn sweep_json_round_trips() {
    let (code, out, _) = run(&[
        "sweep", "--kind", "first", "--p", "5", "--n-max", "20", "--d-max", "10", "--format",
        "json",
    ]);
    assert_eq!(code, EXIT_OK);
    let report: SweepReport = serde_json::from_str(&out).unwrap();
    assert!(report.runtime.is_some());
    assert!(report.passed());
    assert!(out.contains("\"mismatches\": []"));
}

#[test]
fn sweep_csv_header() {
    let (_, out, _) = run(&[
        "sweep", "--kind", "first", "--p", "3", "--n-max", "10", "--d-max", "4", "--format", "csv",
    ]);
    assert_eq!(out.lines().next(), Some("n,d,rule_id,polynomial"));
    assert!(out.lines().skip(1).all(|l| l.split(',').count() == 4));
}

#[test]
fn identities_pass_and_report_lines() {
    let (code, out, _) = run(&["identities", "--p", "3", "--n-max", "20", "--e-list", "1,2"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 7);
    assert!(out.lines().all(|l| l.ends_with("PASS")), "{out}");
}

#[test]
fn identity_failure_code_is_distinct() {
    assert_ne!(EXIT_VIOLATION, EXIT_OK);
    assert_ne!(EXIT_VIOLATION, EXIT_USAGE);
}

#[test]
fn planar_survey_row() {
    let (code, out, _) = run(&[
        "planar", "--kind", "first", "--p", "3", "--e-list", "1,2", "--n-max", "10", "--d-max", "4",
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(
        out.contains("n=2 d=2 q=9 do=true planar=true permutation=false"),
        "{out}"
    );
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("dickson-do-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("gen.json");
    let (code, out, _) = run(&[
        "gen",
        "--kind",
        "second",
        "--p",
        "3",
        "--n",
        "13",
        "--d",
        "2",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.is_empty());
    let g: Generated = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(g.polynomial, "1*x^4 + 1*x^10 + 1*x^12");
    std::fs::remove_dir_all(&dir).unwrap();
}
