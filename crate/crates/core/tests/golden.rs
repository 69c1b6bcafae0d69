//! Byte comparisons against `tests/golden/`. Run with `UPDATE_GOLDEN=1` to
//! rewrite the files after an intended change.

use std::fs;
use std::path::PathBuf;
use std::process::Command;

fn check(name: &str, args: &[&str]) {
    let out = Command::new(env!("CARGO_BIN_EXE_chi")).args(args).output().expect("binary runs");
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::write(&path, &out.stdout).unwrap();
        return;
    }
    let want = fs::read(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert!(out.stdout == want, "{name} differs from `chi {}`", args.join(" "));
}

#[test]
fn witt_tables() {
    check("witt-rank2-upto6.tsv", &["witt", "--rank", "2", "--upto", "6"]);
    check("witt-rank3-upto5.tsv", &["witt", "--rank", "3", "--upto", "5"]);
}

#[test]
fn regular_words() {
    check("lyndon-rank2-upto5.tsv", &["lyndon", "--rank", "2", "--upto", "5"]);
}

#[test]
fn relator_sets() {
    check("relators-m3-bound4.jsonl", &["relators", "--m", "3", "--bound", "4", "--format", "jsonl"]);
    check("relators-m3-bound5.jsonl", &["relators", "--m", "3", "--bound", "5", "--format", "jsonl"]);
}

#[test]
fn relator_counts() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let count = |name: &str| fs::read_to_string(dir.join(name)).unwrap().lines().count();
    assert_eq!(count("relators-m3-bound4.jsonl"), 9);
    assert_eq!(count("relators-m3-bound5.jsonl"), 45);
    assert_eq!(count("basis-m3-bound5.txt"), 2 * 36);
}

#[test]
fn completed_basis_dump() {
    check("basis-m3-bound5.txt", &["gs-complete", "--m", "3", "--relators", "chi:L:bound=5"]);
}

#[test]
fn f_elements() {
    check("f2.txt", &["fn", "--n", "2"]);
    check("f4.txt", &["fn", "--n", "4"]);
}

#[test]
fn dimension_reports() {
    for (m, c) in [("2", "2"), ("3", "2"), ("2", "3"), ("3", "3")] {
        check(&format!("report-m{m}-c{c}.json"), &["report", "--m", m, "--c", c, "--json"]);
    }
}

#[test]
fn verification_report() {
    check("verify-max-m3.json", &["verify", "--suite", "paper", "--max-m", "3", "--json"]);
}
