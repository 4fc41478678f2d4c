use josephus_core::fixed_points::FixedPointRecord;
use josephus_core::reference::TABLE2_CSV;
use std::process::{Command, Output};

fn josephus(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_josephus"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> &str {
    std::str::from_utf8(&o.stdout).unwrap()
}

fn stderr(o: &Output) -> &str {
    std::str::from_utf8(&o.stderr).unwrap()
}

#[test]
fn table2_csv_is_byte_exact() {
    let out = josephus(&["fixed-points", "--count", "20", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), TABLE2_CSV);
}

#[test]
fn exit_codes() {
    let cases: &[(&[&str], i32)] = &[
        (&["survivor", "--n", "13", "--k", "3"], 0),
        (&["survivor", "--n", "0", "--k", "3"], 2),
        (&["survivor", "--n", "4", "--k", "1"], 2),
        (
            &["survivor", "--n", "4", "--k", "3", "--method", "rotate2"],
            2,
        ),
        (&["survivor", "--n", "x"], 2),
        (&["no-such-command"], 2),
        (&["encode", "13", "--base", "2/4"], 2),
        (&["decode", "22"], 1),
        (&["decode", "0112"], 1),
        (&["decode", "210112"], 0),
        (&["verify", "--suite", "crt", "--ell-max", "1"], 2),
        (&["verify", "--suite", "tables"], 0),
        (
            &["fixed-points", "--count", "5", "--verify-bound", "100"],
            0,
        ),
        (&["fixed-points", "--count", "0"], 2),
        (&["--help"], 0),
    ];
    for (args, code) in cases {
        let out = josephus(args);
        assert_eq!(out.status.code(), Some(*code), "{args:?}: {}", stderr(&out));
    }
}

#[test]
fn decode_diagnostic_names_position() {
    let out = josephus(&["decode", "22", "--base", "3/2"]);
    assert!(stdout(&out).is_empty());
    assert!(stderr(&out).contains("position 1"), "{}", stderr(&out));
}

#[test]
fn json_lines_parse_back_into_records() {
    let out = josephus(&["fixed-points", "--count", "60", "--format", "json"]);
    let records: Vec<FixedPointRecord> = stdout(&out)
        .lines()
        .map(|l| serde_json::from_str(l).expect("one record per line"))
        .collect();
    assert_eq!(
        records,
        josephus_core::fixed_points::generate_sequence(60).unwrap()
    );
}

#[test]
fn output_is_deterministic() {
    let args = [
        "verify",
        "--suite",
        "all",
        "--ell-max",
        "40",
        "--format",
        "json",
    ];
    let first = josephus(&args);
    let second = josephus(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.stderr, second.stderr);
}

#[test]
fn theorem_suite_counts() {
    let out = josephus(&["verify", "--suite", "theorem", "--ell-max", "200"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(
        stdout(&out).contains("theorem: 199/199 passed"),
        "{}",
        stdout(&out)
    );
}

#[test]
fn crt_suite_reports_skips() {
    let out = josephus(&["verify", "--suite", "crt", "--ell-max", "20"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("SKIP crt-link ell=1 p=0 q=3"), "{text}");
    assert!(text.contains("PASS crt-link ell=13 p=1 q=5 a1=1 a2=10 z=10 modulus=96 quotient=1080"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn csv_verify_has_header() {
    let out = josephus(&["verify", "--suite", "tables", "--format", "csv"]);
    let text = stdout(&out);
    assert_eq!(text.lines().next(), Some("check,key,status,detail"));
    assert_eq!(text.lines().count(), 31);
}
