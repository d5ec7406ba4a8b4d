use std::process::{Command, Output};

use serde_json::Value;

fn parkstat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_parkstat")).args(args).env_remove("PARKSTAT_THREADS").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn enumerate_pf_csv() {
    let o = parkstat(&["enumerate", "--family", "pf", "--n", "2", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "word\n1 1\n1 2\n2 1\n# count 3\n");
}

#[test]
fn enumerate_hess_and_errors() {
    let o = parkstat(&["enumerate", "--family", "hess", "--n", "3"]);
    assert_eq!(stdout(&o).lines().filter(|l| !l.starts_with("count")).count(), 5);
    assert_eq!(parkstat(&["enumerate", "--family", "dyck", "--n", "3"]).status.code(), Some(2));
    assert_eq!(parkstat(&["enumerate", "--family", "pf", "--n", "99"]).status.code(), Some(2));
    assert_eq!(parkstat(&["enumerate", "--family", "pf", "--n", "2", "--format", "xml"]).status.code(), Some(2));
}

#[test]
fn poly_examples() {
    assert_eq!(stdout(&parkstat(&["poly", "--which", "pf_q", "--n", "2"])), "2 + q\n");
    assert_eq!(stdout(&parkstat(&["poly", "--which", "upf_q", "--n", "3"])), "4 + 4*q + 4*q^2 + q^3\n");
    assert_eq!(stdout(&parkstat(&["poly", "--which", "upf_sym_t", "--n", "2"])), "h[1,1] + t*h[2]\n");
    let j: Value = serde_json::from_str(&stdout(&parkstat(&["poly", "--which", "pf_q", "--n", "3", "--format", "json"]))).unwrap();
    assert_eq!(j["value"], serde_json::json!(["5", "5", "5", "1"]));
}

#[test]
fn verify_all_covers_every_operation() {
    let o = parkstat(&["verify", "--suite", "all", "--max-n", "5", "--N", "6"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let j: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(j["summary"]["fail"], 0);
    let covered: Vec<&str> = j["covered"].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect();
    for op in parkstat::cli::ALL_OPS {
        assert!(covered.contains(op), "{op} not exercised");
    }
}

#[test]
fn verify_single_suites() {
    assert_eq!(parkstat(&["verify", "--suite", "table1", "--n", "4"]).status.code(), Some(0));
    assert_eq!(parkstat(&["verify", "--suite", "pf-gf", "--N", "1"]).status.code(), Some(0));
    assert_eq!(parkstat(&["verify", "--suite", "bogus"]).status.code(), Some(2));
    assert_eq!(parkstat(&["verify", "--suite", "pf-gf", "--N", "40"]).status.code(), Some(2));
}

#[test]
fn corrupted_input_exits_one_with_coordinate() {
    let o = parkstat(&["verify", "--suite", "upf-gf", "--N", "6", "--corrupt", "2"]);
    assert_eq!(o.status.code(), Some(1));
    let j: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(j["reports"][0]["first_mismatch"], "z^2");
}

#[test]
fn bfile_and_compare() {
    let o = parkstat(&["bfile", "--sequence", "fubini", "--max-n", "4"]);
    assert_eq!(stdout(&o), "0 1\n1 1\n2 3\n3 13\n4 75\n");
    let dir = std::env::temp_dir().join(format!("parkstat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("good.b");
    std::fs::write(&good, "# pf tie totals\n1 0\n2 1\n3 8\n4 75\n").unwrap();
    let bad = dir.join("bad.b");
    std::fs::write(&bad, "1 0\n2 1\n3 9\n").unwrap();
    let seq = ["bfile", "--sequence", "pf-tie-total", "--max-n", "4", "--compare"];
    assert_eq!(parkstat(&[&seq[..], &[good.to_str().unwrap()]].concat()).status.code(), Some(0));
    let o = parkstat(&[&seq[..], &[bad.to_str().unwrap()]].concat());
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("n=3"));
    let out = dir.join("out.b");
    parkstat(&["bfile", "--sequence", "catalan", "--max-n", "4", "--output", out.to_str().unwrap()]);
    assert_eq!(std::fs::read_to_string(&out).unwrap(), "0 1\n1 1\n2 2\n3 5\n4 14\n");
    assert_eq!(parkstat(&["bfile", "--sequence", "nope"]).status.code(), Some(2));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn output_is_independent_of_thread_count() {
    let run = |t: &str| stdout(&parkstat(&["verify", "--suite", "k-transitive", "--max-n", "4", "--threads", t]));
    assert_eq!(run("1"), run("4"));
    let env = Command::new(env!("CARGO_BIN_EXE_parkstat"))
        .args(["enumerate", "--family", "upf", "--n", "3"])
        .env("PARKSTAT_THREADS", "2")
        .output()
        .unwrap();
    assert!(stdout(&env).ends_with("count 13\n"));
}
