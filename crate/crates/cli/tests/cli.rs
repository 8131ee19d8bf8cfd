use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

fn walkbij(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_walkbij"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn walkbij_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_walkbij"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_out(o: &Output) -> Value {
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(stdout(o).trim()).unwrap()
}

#[test]
fn count_examples() {
    let cases: [(&[&str], &str); 3] = [
        (
            &[
                "--model",
                "hesitating",
                "--domain",
                "quadrant",
                "--length",
                "2",
                "--end",
                "origin",
            ],
            "2",
        ),
        (
            &[
                "--model", "simple", "--domain", "octant", "--length", "4", "--end", "x-axis",
            ],
            "10",
        ),
        (
            &[
                "--model", "simple", "--domain", "quadrant", "--length", "0", "--end", "origin",
            ],
            "1",
        ),
    ];
    for (args, want) in cases {
        let o = walkbij(&[&["count"], args].concat());
        assert!(o.status.success());
        assert_eq!(stdout(&o).trim(), want, "{args:?}");
    }
}

#[test]
fn count_methods_agree() {
    for end in ["origin", "x-axis", "diagonal", "thick-diagonal", "anywhere"] {
        let base = [
            "count",
            "--model",
            "hesitating",
            "--domain",
            "octant",
            "--length",
            "6",
            "--end",
            end,
        ];
        let dp = stdout(&walkbij(&base));
        let en = stdout(&walkbij(&[&base[..], &["--method", "enumerate"]].concat()));
        assert_eq!(dp, en, "{end}");
    }
}

#[test]
fn count_from_a_start_point() {
    let o = walkbij(&[
        "count",
        "--domain",
        "tilted-quadrant",
        "--start",
        "(1/2,1/2)",
        "--length",
        "2",
        "--end",
        "(1/2,1/2)",
    ]);
    assert_eq!(stdout(&o).trim(), "2");
}

#[test]
fn enumerate_lists_walks() {
    let o = walkbij(&["enumerate", "--domain", "quadrant", "--length", "2", "--end", "origin"]);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines, ["EW", "NS"]);
    let o = walkbij(&[
        "--json",
        "enumerate",
        "--domain",
        "octant",
        "--length",
        "2",
        "--end",
        "origin",
    ]);
    let w: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(w, json!({"model": "simple", "dim": 2, "steps": "EW"}));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(
        walkbij(&["count", "--domain", "nowhere", "--length", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(walkbij(&["count", "--domain", "quadrant"]).status.code(), Some(2));
    assert_eq!(walkbij(&["verify", "--suite", "nonsense"]).status.code(), Some(2));
    assert_eq!(
        walkbij(&["map", "--bijection", "lem-mirror", "--text", "NXS"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        walkbij_stdin(&["map", "--bijection", "lem-mirror"], "{not json")
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn domain_violations_exit_3() {
    let o = walkbij(&["map", "--bijection", "lem-mirror", "--text", "WE"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("domain violation"));
    let o = walkbij(&["map", "--bijection", "thm-gouyou", "--text", "NS"]);
    assert_eq!(o.status.code(), Some(3));
    let o = walkbij(&["map", "--bijection", "cor-young", "--text", "1/2/3", "--k", "1"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("height"));
    let o = walkbij(&["count", "--domain", "octant", "--start", "(0,1)", "--length", "2"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn map_examples() {
    let o = walkbij(&["--json", "map", "--bijection", "lem-mirror", "--text", "NS"]);
    assert_eq!(
        json_out(&o),
        json!({"walk": {"model": "simple", "dim": 2, "steps": "EW"}, "marks": [1]})
    );
    let o = walkbij(&["--json", "map", "--bijection", "thm-gouyou", "--text", "EW"]);
    let pair = json_out(&o);
    assert_eq!(pair["p1"].as_str().unwrap().len(), 4);
    assert_eq!(pair["p2"].as_str().unwrap().len(), 2);
}

#[test]
fn map_then_inverse_is_identity() {
    let cases: [(&str, Value); 8] = [
        ("thm-gouyou", json!({"model": "simple", "steps": "ENSW"})),
        ("thm-mainsimple", json!({"model": "simple", "steps": "EENWSW"})),
        ("thm-mainbaxter", json!({"model": "hesitating", "steps": "E0N00S"})),
        ("lem-mirror", json!({"model": "simple", "steps": "NENWSS"})),
        ("thm-eliz", json!({"model": "simple", "steps": "NESW"})),
        ("thm-schhessym", json!({"lower": "UDUD", "upper": "UUDD"})),
        ("cor-young", json!([[1, 2, 5], [3], [4]])),
        ("vacillating-decomp", json!({"model": "vacillating", "steps": "0E000E"})),
    ];
    for (name, input) in cases {
        let out = json_out(&walkbij_stdin(
            &["--json", "map", "--bijection", name],
            &input.to_string(),
        ));
        let back = json_out(&walkbij_stdin(
            &["--json", "map", "--bijection", name, "--inverse"],
            &out.to_string(),
        ));
        let mut want = input.clone();
        if want.get("model").is_some() {
            want["dim"] = json!(2);
        }
        assert_eq!(back, want, "{name}");
    }
}

#[test]
fn map_trace_lists_stages() {
    let o = walkbij(&[
        "--json",
        "map",
        "--bijection",
        "thm-buco",
        "--text",
        "4:1-3 2-4",
        "--trace",
    ]);
    let v = json_out(&o);
    let stages: Vec<&str> = v["trace"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["stage"].as_str().unwrap())
        .collect();
    assert_eq!(stages, ["tableaux", "walk"]);
    assert_eq!(v["result"]["steps"].as_str().unwrap().len(), 4);
}

#[test]
fn verify_examples() {
    for suite in ["table1", "narayana", "baxter"] {
        let max = if suite == "table1" { "5" } else { "6" };
        let o = walkbij(&["verify", "--suite", suite, "--max-n", max]);
        assert!(o.status.success(), "{}", stdout(&o));
        assert!(stdout(&o).contains("PASS"));
    }
    let o = walkbij(&["--json", "verify", "--suite", "narayana"]);
    let r: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(r["status"], "PASS");
    assert!(r["checks"]
        .as_array()
        .unwrap()
        .iter()
        .any(|c| c["expected"] == "3" && c["actual"] == "3"));
}

#[test]
fn verify_all_in_parallel() {
    let o = Command::new(env!("CARGO_BIN_EXE_walkbij"))
        .args(["--json", "verify", "--suite", "all", "--max-n", "3"])
        .env("WALKBIJ_THREADS", "4")
        .output()
        .unwrap();
    assert!(o.status.success(), "{}", stdout(&o));
    assert_eq!(stdout(&o).lines().count(), 14);
}

#[test]
fn conjecture_table() {
    let o = walkbij(&["--json", "conjecture", "--max-n", "8"]);
    let rows: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 9);
    assert_eq!(
        rows[0],
        json!({"n": 0, "u": "1", "v": "0", "sum": "1", "baxter": "1", "equal": true})
    );
    assert_eq!(rows[1]["sum"], "2");
    assert!(rows.iter().all(|r| r["equal"] == true));
}

#[test]
fn vacillating_table() {
    let o = walkbij(&["--json", "vacillating", "--max-n", "6"]);
    assert!(o.status.success());
    let rows: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows[0]["quadrant_excursions"], "1");
    assert!(rows[..6].iter().all(|r| r["twice"] == true && r["formula"] == true));
    assert_eq!(rows[6]["status"], "PASS");
}

#[test]
fn gessel_and_narayana() {
    let o = walkbij(&["gessel", "--k", "2", "--order", "8"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().last(), Some("PASS"));
    assert!(walkbij(&["gessel", "--k", "1", "--order", "6", "--odd"])
        .status
        .success());
    let o = walkbij(&["narayana", "--n", "3", "--peaks", "2"]);
    assert_eq!(stdout(&o).trim(), "3");
    let o = walkbij(&["narayana", "--n", "4"]);
    assert!(stdout(&o).lines().nth(1).unwrap().starts_with("n\\p"));
}
