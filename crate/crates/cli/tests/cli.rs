use std::process::{Command, Output};

const FIXTURE: &str = concat!(
    env!("CARGO_MANIFEST_DIR"),
    "/../core/tests/fixtures/oeis_stripped_sample.txt"
);

fn fibhess(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fibhess"))
        .args(args)
        .env_remove("OEIS_STRIPPED_PATH")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = fibhess(args);
    assert!(
        o.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    stdout(&o)
}

fn code(args: &[&str]) -> i32 {
    fibhess(args).status.code().expect("exit code")
}

#[test]
fn det_is_symbolic_by_default() {
    assert_eq!(ok(&["det", "C", "--n", "3"]), "3t+2\n");
    assert_eq!(ok(&["det", "C", "--n", "3", "--t", "-1"]), "-1\n");
    assert_eq!(ok(&["det", "B", "--n", "6"]), "8\n");
}

#[test]
fn det_both_engines_never_differ_on_builtins() {
    for family in ["A", "B", "C", "D", "E", "F", "G", "H", "K"] {
        for n in ["1", "5", "11"] {
            let out = ok(&["det", family, "--n", n, "--engine", "both"]);
            assert!(out.ends_with("MATCH\n"), "{family} {n}: {out}");
        }
    }
    assert!(ok(&["det", "GH", "--n", "4", "--engine", "both"]).contains("lorentz-law"));
}

#[test]
fn seq_matches_the_table_row() {
    assert_eq!(
        ok(&["seq", "C", "--t", "1", "--n-max", "4"]),
        "2, 3, 5, 8\n"
    );
}

#[test]
fn table_three_includes_printed_row() {
    let out = ok(&["table", "3", "--n-max", "3"]);
    let row = out
        .lines()
        .skip_while(|l| !l.starts_with("|CD_n|"))
        .find(|l| l.trim_start().starts_with("t=2"))
        .unwrap();
    assert!(row.contains("-9  -35  -144"), "{row}");
}

#[test]
fn table_json_and_csv() {
    let json: serde_json::Value =
        serde_json::from_str(&ok(&["table", "1", "--n-max", "4", "--format", "json"])).unwrap();
    assert_eq!(json["table"], 1);
    let csv = ok(&["table", "2", "--n-max", "4", "--format", "csv"]);
    assert!(csv.starts_with("table,block,row,n,computed,printed,differs\n"));
}

#[test]
fn matrix_formats() {
    assert_eq!(
        ok(&["matrix", "C", "--n", "2", "--format", "csv"]),
        "2,1\n1,t+1\n"
    );
    let json: serde_json::Value =
        serde_json::from_str(&ok(&["matrix", "D", "--n", "2", "--format", "json"])).unwrap();
    assert_eq!(
        json,
        serde_json::json!({"order": 2, "tag": "poly", "rows": [["2", "-1"], ["1", "t+1"]]})
    );
    let basis = ok(&[
        "matrix", "C", "--n", "3", "--i", "2", "--mode", "basis", "--format", "csv",
    ]);
    assert_eq!(basis, "2,0,0\n1,1,1\n1,0,t+1\n");
    assert!(ok(&["matrix", "A", "--n", "2"]).contains('i'));
}

#[test]
fn lorentz_mul_cross_checks() {
    let out = ok(&["lorentz-mul", "C", "D", "--n", "3"]);
    assert!(out.contains("det: -15t^2-34t-16"));
    assert!(out.ends_with("MATCH\n"));
    let at = ok(&["lorentz-mul", "C", "D", "--n", "3", "--t", "2"]);
    assert!(at.contains("det: -144"));
}

#[test]
fn verify_writes_reports_and_honours_strict() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let path_s = path.to_str().unwrap();
    let args = [
        "verify", "--n-max", "8", "--out", path_s, "--format", "json",
    ];
    ok(&args);
    let first = std::fs::read_to_string(&path).unwrap();
    ok(&args);
    assert_eq!(first, std::fs::read_to_string(&path).unwrap());
    let json: serde_json::Value = serde_json::from_str(&first).unwrap();
    assert_eq!(json["n_max"], 8);
    assert!(json["claims"].as_array().unwrap().len() > 40);

    assert_eq!(code(&["verify", "--claims", "C-general,E-text-n2"]), 0);
    assert_eq!(
        code(&["verify", "--claims", "C-general,E-text-n2", "--strict"]),
        1
    );
    assert_eq!(code(&["verify", "--claims", "C-general", "--strict"]), 0);
    let csv = ok(&[
        "verify",
        "--claims",
        "GH-statement",
        "--t-samples",
        "-1,0,1",
        "--format",
        "csv",
    ]);
    assert!(csv.lines().nth(1).unwrap().starts_with("GH-statement,"));
}

#[test]
fn seq_identification() {
    let out = ok(&[
        "seq",
        "D",
        "--t",
        "0",
        "--n-max",
        "6",
        "--identify",
        "--oeis-file",
        FIXTURE,
    ]);
    assert_eq!(out, "1, 3, 8, 21, 55, 144\nA001906 offset 1\n");
    let via_env = Command::new(env!("CARGO_BIN_EXE_fibhess"))
        .args([
            "seq",
            "CD",
            "--t",
            "0",
            "--n-max",
            "3",
            "--identify",
            "--min-match",
            "3",
        ])
        .env("OEIS_STRIPPED_PATH", FIXTURE)
        .output()
        .unwrap();
    assert_eq!(
        stdout(&via_env),
        "-1, -3, -16\nA000272 offset 2 (negated)\n"
    );
}

#[test]
fn distinct_exit_codes() {
    assert_eq!(code(&["det", "Q", "--n", "3"]), 3);
    assert_eq!(code(&["verify", "--claims", "no-such-claim"]), 3);
    assert_eq!(code(&["det", "C", "--n", "0"]), 4);
    assert_eq!(code(&["det", "C", "--n", "3", "--i", "4"]), 4);
    assert_eq!(code(&["det", "CD", "--n", "25"]), 4);
    assert_eq!(code(&["table", "1", "--n-max", "2"]), 4);
    assert_eq!(
        code(&[
            "seq",
            "C",
            "--t",
            "1",
            "--n-max",
            "4",
            "--identify",
            "--oeis-file",
            "/no/such/file"
        ]),
        5
    );
    assert_eq!(
        code(&["seq", "C", "--t", "1", "--n-max", "4", "--identify"]),
        5
    );
    assert_eq!(
        code(&["det", "CD", "--n", "3", "--engine", "hessenberg"]),
        7
    );
    let o = fibhess(&["det", "Q", "--n", "3"]);
    assert_eq!(String::from_utf8(o.stderr).unwrap().lines().count(), 1);
}
