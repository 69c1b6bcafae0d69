use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn chi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chi")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli");
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn schema(name: &str) -> Value {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../schemas").join(name);
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

fn assert_valid(schema_name: &str, instance: &Value) {
    let mut registry = jsonschema::Registry::new();
    for dep in ["relator-line.v1.schema.json", "dim-report.v1.schema.json"] {
        let s = schema(dep);
        let id = s["$id"].as_str().unwrap().to_string();
        registry = registry.add(id, s).expect("valid id");
    }
    let registry = registry.prepare().expect("schemas resolve");
    let validator =
        jsonschema::options().with_registry(&registry).build(&schema(schema_name)).expect("schema compiles");
    let errors: Vec<String> = validator.iter_errors(instance).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{schema_name}: {errors:?}");
}

fn json(o: &Output) -> Value {
    assert_eq!(o.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).expect("valid json")
}

#[test]
fn witt_table_prints_dimensions() {
    let o = chi(&["witt", "--rank", "2", "--upto", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let dims: Vec<&str> = out.lines().skip(1).map(|l| l.split('\t').nth(1).unwrap()).collect();
    assert_eq!(dims, ["2", "1", "2", "3", "6", "9"]);
}

#[test]
fn f_two_is_not_a_member_of_the_degree_five_ideal() {
    let path = scratch("f2.txt");
    let f = chi(&["fn", "--n", "2"]);
    assert_eq!(f.status.code(), Some(0));
    fs::write(&path, &f.stdout).unwrap();
    let element = format!("@{}", path.display());
    let o = chi(&["gs-member", "--m", "3", "--element", &element, "--relators", "chi:L:bound=5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "NOT MEMBER\n");
}

#[test]
fn relators_are_members_of_their_own_ideal() {
    let o = chi(&["relators", "--m", "3", "--bound", "5", "--format", "jsonl"]);
    let last: Value = serde_json::from_str(stdout(&o).lines().last().unwrap()).unwrap();
    let element = last["element"].as_str().unwrap();
    let o = chi(&["gs-member", "--m", "3", "--element", element, "--relators", "chi:L:bound=5"]);
    assert_eq!(stdout(&o), "MEMBER\n");
}

#[test]
fn membership_over_an_explicit_alphabet_and_relator_file() {
    let rels = scratch("rels.txt");
    fs::write(&rels, "# abelianization\n[x1,x2]\n").unwrap();
    let source = format!("@{}", rels.display());
    let o = chi(&["gs-member", "--rank", "2", "--element", "[x1,[x1,x2]]", "--relators", &source]);
    assert_eq!(stdout(&o), "MEMBER\n");
    let o = chi(&["gs-nf", "--alphabet", "u:1,v:1", "--element", "[u,[u,v]]", "--relators", "[[u,v],v]"]);
    assert_eq!(stdout(&o), "[u,[u,v]]\n");
}

#[test]
fn exit_codes() {
    assert_eq!(chi(&["witt", "--rank", "2"]).status.code(), Some(2));
    assert_eq!(chi(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(chi(&["fn", "--n", "3"]).status.code(), Some(2));
    assert_eq!(chi(&["report", "--m", "2", "--c", "4"]).status.code(), Some(2));
    assert_eq!(chi(&["verify", "--suite", "other"]).status.code(), Some(2));
    let bad = chi(&["gs-nf", "--m", "3", "--element", "[a1,a9]", "--relators", "chi:L:bound=4"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("unknown letter `a9`"));
    let bad = chi(&["gs-member", "--m", "3", "--element", "a1", "--relators", "chi:L:class=2"]);
    assert_eq!(bad.status.code(), Some(2));
    let missing = chi(&["gs-member", "--m", "3", "--element", "@/nonexistent/f.txt", "--relators", "chi:L:bound=4"]);
    assert_eq!(missing.status.code(), Some(2));
    assert_eq!(chi(&["--help"]).status.code(), Some(0));
}

#[test]
fn verify_passes_at_rank_two() {
    let o = chi(&["verify", "--suite", "paper", "--max-m", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().skip(1).all(|l| !l.starts_with("FAIL")));
    assert!(out.ends_with(" 0 failed\n"));
}

#[test]
fn output_flag_writes_a_file() {
    let path = scratch("witt.json");
    let o = chi(&["witt", "--rank", "3", "--upto", "4", "--json", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(v["dims"], serde_json::json!([3, 3, 8, 18]));
}

#[test]
fn json_outputs_match_their_schemas() {
    assert_valid("witt.v1.schema.json", &json(&chi(&["witt", "--rank", "2", "--upto", "6", "--json"])));
    assert_valid(
        "regular-words.v1.schema.json",
        &json(&chi(&["lyndon", "--rank", "2", "--upto", "4", "--format", "json"])),
    );
    assert_valid("relators.v1.schema.json", &json(&chi(&["relators", "--m", "3", "--bound", "5", "--format", "json"])));
    let lines = chi(&["relators", "--m", "2", "--bound", "4", "--c", "2", "--variant", "direct", "--format", "jsonl"]);
    for line in stdout(&lines).lines() {
        assert_valid("relator-line.v1.schema.json", &serde_json::from_str(line).unwrap());
    }
    assert_valid(
        "gs-basis.v1.schema.json",
        &json(&chi(&["gs-complete", "--m", "2", "--relators", "chi:L:bound=5", "--json"])),
    );
    assert_valid(
        "membership.v1.schema.json",
        &json(&chi(&["gs-member", "--m", "3", "--element", "[b1.2,a1]", "--relators", "chi:L:bound=4", "--json"])),
    );
    assert_valid("f-element.v1.schema.json", &json(&chi(&["fn", "--n", "4", "--json"])));
    assert_valid("dim-report.v1.schema.json", &json(&chi(&["report", "--m", "3", "--c", "2", "--json"])));
    assert_valid("chi-class.v1.schema.json", &json(&chi(&["chi-class", "--m", "2", "--c", "3", "--json"])));
    assert_valid("verify-report.v1.schema.json", &json(&chi(&["verify", "--max-m", "2", "--json"])));
}

#[test]
fn every_subcommand_has_a_table_form() {
    for args in [
        &["lyndon", "--m", "2", "--upto", "3"][..],
        &["gs-complete", "--m", "2", "--relators", "chi:direct:bound=3,class=2"],
        &["chi-class", "--m", "2", "--c", "2"],
        &["chi-dims", "--m", "2", "--c", "2"],
    ] {
        let o = chi(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        assert!(!o.stdout.is_empty());
    }
}
