use flagorbits::cli::{run_args, EXIT_BUDGET, EXIT_OK, EXIT_PARSE};
use serde_json::Value;

fn run(args: &[&str]) -> flagorbits::cli::Outcome {
    let mut v = vec!["flagorbits"];
    v.extend_from_slice(args);
    run_args(v)
}

fn json(args: &[&str]) -> Value {
    let mut v = args.to_vec();
    v.extend_from_slice(&["--format", "json"]);
    let out = run(&v);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    let value: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(value["schema"], 1);
    value
}

#[test]
fn mwz_rows_in_json() {
    let v = json(&["mwz", "--family", "A", "--n", "4", "--triple", "3,1;1,1,1,1;1,1,1,1"]);
    assert_eq!(v["finite"], true);
    assert_eq!(v["matched_rows"][0], "S_{4,4}");
    let v = json(&["mwz", "--family", "C", "--n", "2", "--triple", "2,2;2,2;1,1,1,1"]);
    assert_eq!(v["matched_rows"][0], "SpD_6");
}

#[test]
fn mwz_infinite_text() {
    let out = run(&["mwz", "--family", "A", "--n", "3", "--triple", "1,1,1;1,1,1;1,1,1"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.starts_with("infinite"));
}

#[test]
fn classify_aiii_maximal_is_finite() {
    let v = json(&["classify", "--pair", "AIII:2,2", "--p", "2,2", "--q", "1,1;1,1"]);
    assert_eq!(v["status"], "FiniteProven");
}

#[test]
fn aiii_borel_cases() {
    let v = json(&["aiii-borel", "--pair", "AIII:2,2", "--q", "1,1;1,1"]);
    assert_eq!(v["case"], "Infinite");
    let v = json(&["aiii-borel", "--pair", "AIII:1,3", "--q", "1;1,1,1"]);
    assert_eq!(v["case"], "iii");
    let v = json(&["aiii-borel", "--pair", "AIII:3,1", "--q", "1,1,1;1"]);
    assert_eq!(v["case"], "iii");
    assert_eq!(v["swapped"], true);
}

#[test]
fn probe_orbits_tsv() {
    let out = run(&["probe-orbits", "--pair", "AIII:1,1", "--p", "1,1", "--q", "K", "--format", "tsv"]);
    assert_eq!(out.code, EXIT_OK);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines[0], "q\tpoints\torbits\thint");
    assert_eq!(lines[1], "2\t3\t3\tBounded");
    assert_eq!(lines[2], "3\t4\t3\tBounded");
}

#[test]
fn triple_orbits_pair_matches_bruhat() {
    let v = json(&["triple-orbits", "--family", "A", "--n", "3", "--triple", "1,1,1;2,1"]);
    assert_eq!(v["counts"][0]["orbits"], 3);
    assert_eq!(v["hint"], "Bounded");
    let v = json(&["bruhat", "--family", "A", "--n", "3", "--p", "1,1,1", "--q2", "2,1"]);
    assert_eq!(v["count"], 3);
}

#[test]
fn budget_exit_code() {
    let out = run(&["probe-orbits", "--pair", "AIII:2,2", "--p", "1,1,1,1", "--q", "B", "--budget", "100"]);
    assert_eq!(out.code, EXIT_BUDGET);
    assert!(out.stderr.contains("budget"));
}

#[test]
fn parse_errors_exit_one() {
    assert_eq!(run(&["mwz", "--family", "Q", "--n", "2", "--triple", "1,1;1,1;1,1"]).code, EXIT_PARSE);
    assert_eq!(run(&["classify", "--pair", "AIII:2,2", "--p", "2,x", "--q", "K"]).code, EXIT_PARSE);
    assert_eq!(run(&["no-such-command"]).code, EXIT_PARSE);
    assert_eq!(run(&["--format", "yaml", "clans", "--p", "1", "--q", "1"]).code, EXIT_PARSE);
}

#[test]
fn help_exits_zero() {
    let out = run(&["--help"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("Exit codes"));
}

#[test]
fn clans_and_involutions() {
    let v = json(&["clans", "--p", "2", "--q", "1"]);
    assert_eq!(v["count"], 6);
    let v = json(&["twisted-involutions", "--family", "A", "--n", "4"]);
    assert_eq!(v["count"], 10);
}

#[test]
fn branch_tensor_and_restriction() {
    let v = json(&["branch", "--lambda", "2,1", "--mu", "2,1", "--n", "3"]);
    assert_eq!(v["multiplicity_free"], false);
    let twice = v["terms"]
        .as_array()
        .unwrap()
        .iter()
        .find(|t| t["target"] == "3,2,1")
        .unwrap();
    assert_eq!(twice["multiplicity"], 2);
    let v = json(&["branch", "--lambda", "2,1", "--p", "2", "--q", "1"]);
    assert_eq!(v["multiplicity_free"], true);
    assert_eq!(run(&["branch", "--lambda", "2,1"]).code, EXIT_PARSE);
}

#[test]
fn spherical_probe_borel_fails() {
    let v = json(&["spherical-probe", "--pair", "AIII:2,2", "--p", "1,1,1,1", "--kmax", "1", "--lmax", "1"]);
    assert_eq!(v["restriction"]["holds"], false);
    assert_eq!(v["restriction"]["first_failure"]["constituent"], "(2,1)⊗(2,1)");
    assert_eq!(v["implication_holds"], true);
}

#[test]
fn report_agrees() {
    let v = json(&["report", "--pair", "CI", "--n", "1", "--p", "1,1", "--q", "K"]);
    assert_eq!(v["classification"]["status"], "FiniteProven");
    assert_eq!(v["oracle"]["hint"], "Bounded");
    assert_eq!(v["oracle_agrees"], true);
    let v = json(&["report", "--pair", "AIII:2,2", "--p", "1,1,1,1", "--q", "B"]);
    assert_eq!(v["classification"]["status"], "InfiniteProven");
    assert_eq!(v["oracle"]["counts"][0]["orbits"], 108);
    assert_eq!(v["oracle"]["counts"][1]["orbits"], 109);
}

#[test]
fn opposite_prefix() {
    let v = json(&["bruhat", "--family", "A", "--n", "2", "--p", "1,1", "--q2", "1,1"]);
    assert_eq!(v["count"], 2);
    let v = json(&["triple-orbits", "--family", "A", "--n", "3", "--triple", "2,1;op:2,1", "--qlist", "2"]);
    assert_eq!(v["counts"][0]["orbits"], 2);
}
