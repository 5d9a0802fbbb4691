use std::process::{Command, Output};

use jtlab::tables::FigureTable;

fn jtlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jtlab"))
        .args(args)
        .env_remove("JTLAB_SEED")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Data rows sorted, header and title kept in place.
fn normalized(s: &str) -> Vec<String> {
    let mut lines: Vec<String> = s.lines().map(|l| l.trim_end().to_string()).collect();
    let body = lines.split_off(2.min(lines.len()));
    let mut body = body;
    body.sort();
    lines.extend(body);
    lines
}

#[test]
fn table9_matches_golden() {
    let o = jtlab(&["table", "9"]);
    assert!(o.status.success());
    let golden = include_str!("golden/table9.txt");
    assert_eq!(normalized(&stdout(&o)), normalized(golden));
}

#[test]
fn json_round_trip() {
    for id in ["9", "2a-12321", "3a:3", "11:2"] {
        let o = jtlab(&["--format", "json", "table", id]);
        assert!(o.status.success(), "{id}");
        let text = stdout(&o);
        let parsed: FigureTable = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed, jtlab::tables::figure_table(id).unwrap());
        assert_eq!(
            serde_json::to_string_pretty(&parsed).unwrap().trim(),
            text.trim()
        );
    }
}

#[test]
fn enumerate_counts_and_errors() {
    let o = jtlab(&["enumerate", "1,2,3,3,2,1"]);
    assert_eq!(stdout(&o).lines().count(), 2 + 18);
    let o = jtlab(&["enumerate", "1,2^3,1", "--cijt-only", "--format", "csv"]);
    assert_eq!(stdout(&o).lines().count(), 1 + 4);
    let o = jtlab(&["enumerate", "1,3,1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    assert!(!o.stderr.is_empty());
}

#[test]
fn classify_examples() {
    let o = jtlab(&["--format", "json", "classify", "19^2,15^2,10^3,3^4"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["cijt"], true);
    assert_eq!(v["predicted_nonvanishing"], serde_json::json!([1, 3, 6]));
    let o = jtlab(&["--format", "json", "classify", "2,2,1,1"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(
        (v["cijt"].as_bool(), v["symmetric"].as_bool()),
        (Some(false), Some(true))
    );
    let o = jtlab(&["--format", "json", "classify", "1"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(
        (v["hilbert"].as_str(), v["cijt"].as_bool()),
        (Some("1"), Some(true))
    );
    assert_eq!(
        jtlab(&["classify", "4,2", "--hilbert", "1,2,1"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(jtlab(&["classify", "4,x"]).status.code(), Some(2));
}

#[test]
fn realize_examples() {
    let o = jtlab(&["realize", "6,2,2,2", "--alpha-zero"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("I = (x^2*y, y^4 + x^4)"));
    let o = jtlab(&["realize", "--all", "1,2,3,3,2,1", "--seed", "7"]);
    assert!(o.status.success());
    assert!(stdout(&o).ends_with("8/8 pass\n"));
    assert_eq!(jtlab(&["realize", "2,2,1,1"]).status.code(), Some(4));
    let with_env = Command::new(env!("CARGO_BIN_EXE_jtlab"))
        .args(["--format", "json", "realize", "6,4,2"])
        .env("JTLAB_SEED", "5")
        .output()
        .unwrap();
    let with_flag = jtlab(&["--format", "json", "realize", "6,4,2", "--seed", "5"]);
    assert_eq!(with_env.stdout, with_flag.stdout);
    // the variable wins over the flag
    let both = Command::new(env!("CARGO_BIN_EXE_jtlab"))
        .args(["--format", "json", "realize", "6,4,2", "--seed", "9"])
        .env("JTLAB_SEED", "5")
        .output()
        .unwrap();
    assert_eq!(both.stdout, with_flag.stdout);
    let bad = Command::new(env!("CARGO_BIN_EXE_jtlab"))
        .args(["realize", "6,4,2"])
        .env("JTLAB_SEED", "x")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn jordan_examples() {
    let o = jtlab(&["--format", "json", "jordan", "x*y, x^3+y^3", "--ell", "x"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["jordan_type"], "4,1^2");
    assert_eq!(v["nonvanishing"], serde_json::json!([0]));
    let o = jtlab(&[
        "--format", "json", "jordan", "--dual", "X^2*Y^3", "--ell", "x+y",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["jordan_type"], "6,4,2");
    assert_eq!(
        jtlab(&["jordan", "x^2", "--ell", "x"]).status.code(),
        Some(5)
    );
}

#[test]
fn table_ids() {
    let o = jtlab(&["table", "11:1"]);
    assert!(o.status.success());
    for line in stdout(&o).lines().skip(2) {
        let cols: Vec<&str> = line.split_whitespace().collect();
        assert_eq!(cols[0], cols[1]);
    }
    assert_eq!(jtlab(&["table", "3a:4"]).status.code(), Some(0));
    assert_eq!(jtlab(&["table", "13:2"]).status.code(), Some(2));
    assert_eq!(jtlab(&["table", "3a:x"]).status.code(), Some(2));
}
