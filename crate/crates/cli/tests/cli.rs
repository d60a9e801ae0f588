use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mixed-eulerian"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn lines(args: &[&str]) -> Vec<String> {
    stdout(args).lines().map(str::to_owned).collect()
}

#[test]
fn compute_examples() {
    assert_eq!(
        stdout(&["compute", "--type", "A", "--c", "1,1,1", "--method", "all"]),
        "6,6,6 agree\n"
    );
    assert_eq!(stdout(&["compute", "--type", "B", "--c", "0,2"]), "8\n");
    assert_eq!(stdout(&["compute", "--type", "A", "--c", "2,0,1"]), "3\n");
    assert_eq!(
        stdout(&["compute", "--c", "201", "--method", "oracle"]),
        "3\n"
    );
    assert_eq!(
        stdout(&[
            "compute",
            "--type",
            "B",
            "--c",
            "0,2",
            "--method",
            "enumeration"
        ]),
        "8\n"
    );
}

#[test]
fn enumerate_examples() {
    let listing = lines(&["enumerate", "--division", "1|-|2,3|4|5"]);
    assert!(listing.iter().any(|w| w == "23154"));
    assert_eq!(lines(&["enumerate", "--c", "0,0,3"]), ["321"]);
    assert_eq!(
        lines(&["enumerate", "--c", "1,1", "--type", "B"]),
        ["12", "21"]
    );
}

#[test]
fn trace_shows_the_deletion_chain() {
    let out = stdout(&["enumerate", "--division", "1|-|2,3|4|5", "--trace"]);
    let expected = "23154\n  1|-|[2],3|4|5\n  1|-|[3],4|5\n  [1]|-|4,5\n  -|4,[5]\n  [4]\n";
    assert!(out.contains(expected), "{out}");
}

#[test]
fn verify_reports() {
    let report: Value =
        serde_json::from_str(&stdout(&["verify", "--n", "3", "--suite", "cycle"])).unwrap();
    let checks = report.as_array().unwrap();
    assert!(checks.iter().all(|c| c["status"] == "pass"));
    let at_three = |identity: &str| {
        checks
            .iter()
            .find(|c| c["identity"] == identity && c["params"]["n"] == 3)
            .cloned()
            .unwrap()
    };
    assert_eq!(at_three("cycle.class-count")["note"], "5 classes");
    assert_eq!(at_three("cycle.class-sums")["status"], "pass");

    let report: Value =
        serde_json::from_str(&stdout(&["verify", "--n", "2", "--suite", "5.2"])).unwrap();
    let checks = report.as_array().unwrap();
    assert!(checks.iter().all(|c| c["status"] != "fail"));
    assert!(checks
        .iter()
        .any(|c| c["identity"] == "type-b.binomial-unscaled" && c["status"] == "info"));
    assert!(checks.iter().all(|c| c.get("millis").is_none()));
}

#[test]
fn table_formats() {
    let json: Value = serde_json::from_str(&stdout(&["table", "--type", "A", "--n", "2"])).unwrap();
    assert_eq!(
        json,
        serde_json::json!([
            {"c": [0, 2], "value": "1"},
            {"c": [1, 1], "value": "2"},
            {"c": [2, 0], "value": "1"},
        ])
    );
    let csv = lines(&["table", "--n", "3", "--format", "csv"]);
    assert_eq!(csv[0], "c1,c2,c3,value");
    assert_eq!(csv.len(), 1 + 10);
    let total: u64 = csv[1..]
        .iter()
        .map(|r| r.rsplit(',').next().unwrap().parse::<u64>().unwrap())
        .sum();
    assert_eq!(total, 30);
}

#[test]
fn oracle_output() {
    assert_eq!(
        lines(&["oracle", "--type", "A", "--n", "2"]),
        ["2,0 : 1/2", "1,1 : 2/1", "0,2 : 1/2"]
    );
    assert_eq!(
        stdout(&["oracle", "--type", "A", "--n", "4", "--eval", "1,1,1,1"]),
        "125/1\n"
    );
    assert_eq!(stdout(&["oracle", "--type", "B", "--n", "1"]), "1 : 2/1\n");
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| run(args).status.code();
    assert_eq!(code(&["compute", "--c", "1,2"]), Some(2));
    assert_eq!(
        code(&["compute", "--c", "1,1", "--method", "guess"]),
        Some(2)
    );
    assert_eq!(code(&["oracle", "--n", "2", "--eval", "1,x"]), Some(2));
    assert_eq!(code(&["enumerate", "--division", "2|1"]), Some(2));
    assert_eq!(
        code(&["compute", "--c", "111111111", "--method", "enumeration"]),
        Some(3)
    );
    assert_eq!(code(&["verify", "--n", "8"]), Some(3));
    assert_eq!(code(&["table", "--n", "13"]), Some(3));
    assert_eq!(
        code(&["enumerate", "--c", "1,1,1", "--limit", "2"]),
        Some(3)
    );
    assert_eq!(code(&["--max-n", "1", "oracle", "--n", "2"]), Some(3));
    let out = run(&["compute", "--c", "1,2"]);
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
}

#[test]
fn max_n_raises_caps() {
    assert_eq!(
        stdout(&[
            "--max-n",
            "9",
            "compute",
            "--c",
            "9,0,0,0,0,0,0,0,0",
            "--method",
            "enumeration"
        ]),
        "1\n"
    );
}
