//! Runs every example binary that `cargo test` builds alongside this test.

use std::path::PathBuf;
use std::process::Command;

fn example(name: &str) -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    let dir = exe.parent().unwrap().parent().unwrap().join("examples");
    dir.join(format!("{name}{}", std::env::consts::EXE_SUFFIX))
}

fn run(name: &str) -> String {
    let path = example(name);
    assert!(path.exists(), "example binary {} not built", path.display());
    let out = Command::new(&path).output().unwrap();
    assert!(
        out.status.success(),
        "{name} failed:\n{}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn euler_identities() {
    assert!(run("euler_identities").contains("x(x-1)E_2 = 1 E_4 + 1 E_2 + 0 E_0"));
}

#[test]
fn sl2_normal_form() {
    assert!(run("sl2_normal_form").contains("[e1,f1] = h1"));
}

#[test]
fn yang_baxter() {
    assert!(run("yang_baxter").contains("Yang-Baxter residual terms: 0"));
}

#[test]
fn dress_tower() {
    let out = run("dress_tower");
    assert!(out.contains("h0 = mu0 + h1"));
    assert!(out.contains("1 -> 2: printed recursion off by 4 terms, corrected off by 0"));
}

#[test]
fn higgs_hahn() {
    let out = run("higgs_hahn");
    assert!(!out.contains("FAIL"));
}

#[test]
fn level_two() {
    assert!(run("level_two").contains("n2: 32 relations, 0 failing"));
}

#[test]
fn report_stream() {
    assert!(run("report_stream").contains("29 records, 0 failing"));
}
