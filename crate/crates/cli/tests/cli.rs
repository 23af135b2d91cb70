use std::path::PathBuf;
use std::process::{Command, Output};

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_graphpot")).args(args).current_dir(root()).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn validator() -> jsonschema::Validator {
    let text = std::fs::read_to_string(root().join("schema/report.schema.json")).unwrap();
    jsonschema::draft202012::new(&serde_json::from_str(&text).unwrap()).unwrap()
}

#[test]
fn colored_theta_potential() {
    let o = run(&["potential", "--graph", "theta", "--colored", "v2"]);
    assert_eq!(o.status.code(), Some(0));
    let first = stdout(&o).lines().next().unwrap().to_string();
    assert_eq!(first.split(" + ").count(), 8);
    assert!(first.contains("x^-1*y^-1*z^-1") && first.contains("x*y*z"));
}

#[test]
fn necklace_decompositions_pass() {
    let o = run(&["potential", "--necklace", "3", "--check-decompositions"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("PASS beads") && out.contains("PASS strings"));
    assert!(!out.contains("FAIL"));
}

#[test]
fn bad_graph_file_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"vertices": 2, "edges": [{"id": "x", "ends": [0, 1]}], "coloring": [0, 0]}"#).unwrap();
    let o = run(&["potential", "--graph", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
    assert_eq!(run(&["potential", "--graph", "missing.json"]).status.code(), Some(2));
}

#[test]
fn genus_four_spectrum_has_seven_certified_rows() {
    let o = run(&["critical", "--genus", "4", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "genus,mode,k,value,modulus,dimension_expected,hessian_kernel_dim,certified");
    assert_eq!(lines.len(), 8);
    assert!(lines[1..].iter().all(|l| l.ends_with(",true")));
}

#[test]
fn hessian_column_matches_dimensions() {
    let o = run(&["critical", "--genus", "2..5", "--hessian", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    for line in stdout(&o).lines().skip(1) {
        let f: Vec<&str> = line.split(',').collect();
        assert_eq!(f[5], f[6], "{line}");
    }
}

#[test]
fn brute_force_is_seeded_and_clean() {
    let args = ["critical", "--genus", "2", "--brute", "--seeds", "10000", "--seed", "42", "--format", "json"];
    let a = run(&args);
    assert_eq!(a.status.code(), Some(0));
    let b = Command::new(env!("CARGO_BIN_EXE_graphpot"))
        .args(args)
        .env("GRAPHPOT_THREADS", "3")
        .current_dir(root())
        .output()
        .unwrap();
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let clusters = v["brute"][0]["clusters"].as_array().unwrap();
    assert_eq!(clusters.len(), 3);
    assert!(clusters.iter().all(|c| c["expected"] == true));
}

#[test]
fn out_of_range_requests_are_usage_errors() {
    for args in [
        vec!["critical", "--genus", "40", "--hessian"],
        vec!["critical", "--genus", "7", "--hessian"],
        vec!["critical", "--genus", "4", "--brute"],
        vec!["critical", "--genus", "9"],
        vec!["critical", "--genus", "2", "--brute", "--tolerance", "0"],
        vec!["critical", "--genus", "1"],
        vec!["critical"],
        vec!["k0", "verify", "--genus", "3..2"],
        vec!["critical", "--genus", "2", "--threads", "0"],
    ] {
        assert_eq!(run(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn k0_verify_range_passes() {
    let o = run(&["k0", "verify", "--genus", "2..10"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(!out.contains("FAIL"));
    assert!(out.trim_end().ends_with("checkpoints passed"));
}

#[test]
fn betti_genus_two() {
    let o = run(&["measure", "betti", "--genus", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1,0,1,4,1,0,1\n");
}

#[test]
fn count_fixture_routes_agree() {
    let o = run(&["measure", "count", "--curve", "fixtures/g2_q3.json"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let n: u64 = out.lines().next().unwrap().parse().unwrap();
    assert!(n > 0);
    assert!(out.contains("PASS routes agree"));
}

#[test]
fn zeta_checks() {
    assert_eq!(run(&["zeta", "--genus", "2..4"]).status.code(), Some(0));
    let o = run(&["zeta", "--curve", "fixtures/g2_q3.json", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "q,genus,numerator,functional_equation\n3,2,\"1,0,-2,0,9\",true\n");
    assert_eq!(run(&["zeta"]).status.code(), Some(2));
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("betti.csv");
    let o = run(&["measure", "betti", "--genus", "2", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(path).unwrap();
    assert!(text.starts_with("genus,degree,coefficient\n2,0,1\n"));
}

#[test]
fn json_reports_follow_the_schema() {
    let v = validator();
    let commands: [&[&str]; 10] = [
        &["potential", "--graph", "dumbbell", "--check-decompositions"],
        &["critical", "--genus", "2..3", "--hessian", "--brute", "--seeds", "300", "--seed", "7"],
        &["k0", "verify", "--genus", "2..3"],
        &["k0", "class", "--genus", "4"],
        &["measure", "betti", "--genus", "2..3"],
        &["measure", "hodge", "--genus", "3"],
        &["measure", "dg", "--genus", "2..4"],
        &["measure", "count", "--curve", "fixtures/g2_q3.json"],
        &["zeta", "--genus", "3"],
        &["zeta", "--curve", "fixtures/g2_q3.json"],
    ];
    for args in commands {
        let mut full = args.to_vec();
        full.extend(["--format", "json"]);
        let o = run(&full);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        let errors: Vec<String> = v.iter_errors(&doc).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{args:?}: {errors:?}");
    }
    let bogus = serde_json::json!({"command": "critical", "rows": []});
    assert!(!v.is_valid(&bogus));
}

#[test]
fn reports_are_byte_stable() {
    let args = ["critical", "--genus", "2..6", "--hessian", "--format", "json"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}
