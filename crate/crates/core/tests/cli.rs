use std::process::{Command, Output};

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_reflection-verify"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn euler_two_records() {
    let o = cli(&["verify", "euler", "--max-n", "1", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<serde_json::Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 2);
    for (n, v) in lines.iter().enumerate() {
        assert_eq!(v["check"], format!("euler.prE[n={n}]"));
        assert_eq!(v["status"], "pass");
        assert_eq!(v["residual_terms"], 0);
        assert!(v["elapsed_ms"].is_u64());
        assert!(v["detail"].is_null());
    }
}

#[test]
fn tower_level0_passes() {
    let o = cli(&["verify", "tower", "--level", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for name in [
        "tower[0].reflection",
        "tower[0].delta",
        "tower[0].extraction",
    ] {
        assert!(out.contains(&format!("PASS  {name}")), "{out}");
    }
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(
        cli(&["verify", "tower", "--level", "4"]).status.code(),
        Some(2)
    );
    assert_eq!(cli(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(cli(&["verify", "rll", "--bogus"]).status.code(), Some(2));
    assert_eq!(cli(&["dump", "--level", "9"]).status.code(), Some(2));
    assert_eq!(
        cli(&["verify", "rll", "--time-budget-seconds", "-1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn failures_exit_1() {
    let o = cli(&[
        "verify",
        "tower",
        "--level",
        "1",
        "--json",
        "--max-detail-terms",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let failing: Vec<String> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap())
        .filter(|v| v["status"] == "fail")
        .map(|v| v["check"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(failing, ["tower[1].two-path", "tower[1].delta-recursion"]);
}

#[test]
fn budget_exit_3() {
    let o = cli(&["verify", "n2", "--time-budget-seconds", "0"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn fail_fast_skips() {
    let o = cli(&["verify", "all", "--fail-fast", "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let statuses: Vec<String> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap()["status"].to_string())
        .collect();
    let first_fail = statuses.iter().position(|s| s == "\"fail\"").unwrap();
    assert!(statuses[first_fail + 1..]
        .iter()
        .all(|s| s == "\"skipped\""));
}

#[test]
fn dump_matches_fixture() {
    let o = cli(&["dump", "--level", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), include_str!("../fixtures/level1.txt"));
}

#[test]
fn passing_commands_exit_0() {
    for args in [
        &["verify", "yang-baxter"][..],
        &["verify", "rll"],
        &["verify", "hahn"],
        &["verify", "euler"],
    ] {
        assert_eq!(cli(args).status.code(), Some(0), "{args:?}");
    }
}
