use std::fs;
use std::process::{Command, Output};

use wythoff_core::automatic::{sequences::g_table_def, walnut};
use wythoff_core::game::{cache, solve, GameSpec};

fn wythoff(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wythoff"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn solve_csv_rows() {
    let o = wythoff(&["solve", "--game", "K", "--ell", "2", "--bound", "100"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,a_n,b_n"));
    assert_eq!(lines.next(), Some("0,3,6"));

    let o = wythoff(&["solve", "--game", "K", "--ell", "0", "--bound", "20"]);
    let rows: Vec<String> = stdout(&o)
        .lines()
        .skip(1)
        .take(3)
        .map(String::from)
        .collect();
    assert_eq!(rows, ["0,1,2", "1,3,5", "2,4,7"]);

    let o = wythoff(&["solve", "--game", "W", "--k", "3", "--bound", "50"]);
    assert!(stdout(&o).lines().any(|l| l.ends_with(",0,0")));
}

#[test]
fn solve_json_and_cache() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("k1.json");
    let o = wythoff(&[
        "solve",
        "--game",
        "k",
        "--ell",
        "1",
        "--bound",
        "30",
        "--format",
        "json",
        "--out",
        json.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(fs::read_to_string(&json).unwrap().contains("\"ell\": 1"));

    let pn = dir.path().join("w2.pn");
    let o = wythoff(&[
        "solve",
        "--game",
        "W",
        "--k",
        "2",
        "--bound",
        "40",
        "--format",
        "cache",
        "--out",
        pn.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert_eq!(
        cache::load(&pn).unwrap(),
        solve(GameSpec::blocking(2).unwrap(), 40).unwrap()
    );
}

#[test]
fn verify_reports_and_exit_codes() {
    let o = wythoff(&["verify", "closed-forms", "--ell", "2", "--bound", "200"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("PASS  closed-forms/K2 set"));

    let o = wythoff(&["verify", "blocking", "--k", "2", "--bound", "150"]);
    assert!(o.status.success());

    let o = wythoff(&["verify", "mex", "--ell", "9", "--bound", "500"]);
    assert!(o.status.success());

    assert_eq!(wythoff(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(
        wythoff(&["verify", "closed-forms", "--ell", "9"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn usage_and_io_errors() {
    assert_eq!(
        wythoff(&["solve", "--game", "K", "--bound", "5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        wythoff(&["solve", "--game", "W", "--k", "0", "--bound", "5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(wythoff(&["frobnicate"]).status.code(), Some(2));
    let o = wythoff(&[
        "solve",
        "--game",
        "K",
        "--ell",
        "1",
        "--bound",
        "5",
        "--out",
        "/nonexistent-dir/x.csv",
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(
        wythoff(&["infer", "/nonexistent-dir/seq.txt"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn infer_g_prefix() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("g.txt");
    let text: Vec<String> = g_table_def(300).iter().map(u32::to_string).collect();
    fs::write(&input, text.join(" ")).unwrap();
    let out = dir.path().join("g.walnut");
    let o = wythoff(&[
        "infer",
        input.to_str().unwrap(),
        "--types",
        "3",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("0,2,3,5 ↦ 1; 1,4 ↦ 0"), "{err}");
    let d = walnut::import(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(d.state_count(), 6);

    let o = wythoff(&["eval-dfao", out.to_str().unwrap(), "--count", "21"]);
    assert_eq!(
        stdout(&o).trim(),
        "1 0 1 1 0 0 1 1 1 1 0 1 0 0 1 0 1 1 0 1 1"
    );
}

#[test]
fn infer_failure_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("short.txt");
    fs::write(&input, "0 1 1 0 2").unwrap();
    let o = wythoff(&["infer", input.to_str().unwrap(), "--types", "3"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn export_catalog_and_mex() {
    let o = wythoff(&["export", "g3"]);
    assert!(o.status.success());
    assert_eq!(walnut::import(&stdout(&o)).unwrap().state_count(), 12);

    let o = wythoff(&["export", "mex", "--ell", "3", "--count", "5"]);
    assert_eq!(
        stdout(&o),
        "n,a_n,b_n\n0,4,8\n1,5,10\n2,6,12\n3,7,14\n4,9,17\n"
    );

    assert_eq!(wythoff(&["export", "nope"]).status.code(), Some(2));
    assert_eq!(
        wythoff(&["eval-dfao", "g4", "--count", "10"]).status.code(),
        Some(0)
    );
}
