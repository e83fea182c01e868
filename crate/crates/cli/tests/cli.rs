use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hecke-bz"))
        .args(args)
        .env_remove("HECKEBZ_Q0")
        .env_remove("HECKEBZ_TOL")
        .env_remove("HECKEBZ_CLUSTER_TOL")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

fn shapes(v: &Value) -> Vec<(String, u64)> {
    v["results"]["computed"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| (t["shape"].as_str().unwrap().to_string(), t["multiplicity"].as_u64().unwrap()))
        .collect()
}

#[test]
fn derive_speh_examples() {
    let out = run(&["derive-speh", "--shape", "2,1", "--i", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(shapes(&v), vec![("1,1".into(), 1), ("2".into(), 1)]);
    assert_eq!(v["pass"], Value::Bool(true));

    let v = json(&run(&["derive-speh", "--shape", "3", "--i", "2"]));
    assert!(shapes(&v).is_empty());
    assert_eq!(v["results"]["dim"], 0);

    let out = run(&["derive-speh", "--shape", "2,2", "--i", "2", "--kappa", "-3/2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(shapes(&json(&out)), vec![("1,1".into(), 1)]);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["derive-speh", "--shape", "2,x", "--i", "1"][..],
        &["derive-speh", "--shape", "2,1", "--i", "4"],
        &["principal", "--n", "2", "--t", "1,0"],
        &["principal", "--n", "3", "--t", "1,2"],
        &["verify", "nonsense"],
        &["verify", "pieri", "--max-n", "40"],
        &["verify", "bridge", "--q", "0.5"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn principal_examples() {
    let v = json(&run(&["principal", "--n", "2", "--t", "1,4"]));
    assert_eq!(v["results"]["dim"], 2);
    assert_eq!(v["results"]["max_residual"], 0.0);

    let v = json(&run(&["principal", "--n", "3", "--t", "1,2,4", "--derive", "1"]));
    assert_eq!(v["results"]["derivative"]["dim"], 6);
    assert_eq!(v["pass"], Value::Bool(true));

    let v = json(&run(&["principal", "--n", "1", "--t", "5", "--matrices"]));
    assert_eq!(v["results"]["module"]["theta"][0][0][0], "5");

    // not generic: the dimension formula is not claimed
    let v = json(&run(&["principal", "--n", "2", "--t", "1,q", "--derive", "2"]));
    assert_eq!(v["results"]["generic"], Value::Bool(false));
    assert!(v["results"]["derivative"].get("expected_dim").is_none());
}

#[test]
fn verify_suites_pass() {
    for args in [
        &["verify", "pieri", "--max-n", "5"][..],
        &["verify", "finite-relations", "--n", "4"],
        &["verify", "affine-oracle", "--max-n", "2", "--samples", "20", "--module-max-n", "3"],
        &["verify", "graded-relations", "--max-n", "5"],
        &["verify", "leibniz", "--max-n", "3"],
        &["verify", "bridge", "--max-n", "3", "--q", "3.0", "--tol", "1e-8"],
        &["verify", "antispherical", "--max-n", "3", "--samples", "20"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stdout));
        let v = json(&out);
        assert_eq!(v["pass"], Value::Bool(true));
        assert!(v["results"]["cases"].as_u64().unwrap() > 0);
    }
}

#[test]
fn verification_failure_exits_one() {
    // relation residuals sit near machine epsilon, far above this bound
    let out = run(&["verify", "bridge", "--max-n", "3", "--tol", "1e-300"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["pass"], Value::Bool(false));
}

#[test]
fn exact_reports_are_byte_stable() {
    let args = ["verify", "affine-oracle", "--max-n", "2", "--samples", "10", "--module-max-n", "2"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["derive-speh", "--shape", "3,2,1", "--i", "2"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn environment_sets_defaults_and_flags_win() {
    let bin = env!("CARGO_BIN_EXE_hecke-bz");
    let out = Command::new(bin).args(["verify", "bridge", "--max-n", "1"]).env("HECKEBZ_Q0", "2.5").output().unwrap();
    assert_eq!(json(&out)["inputs"]["q0"], 2.5);
    let out = Command::new(bin).args(["verify", "bridge", "--max-n", "1", "--q", "3"]).env("HECKEBZ_Q0", "2.5").output().unwrap();
    assert_eq!(json(&out)["inputs"]["q0"], 3.0);
    let out = Command::new(bin).args(["verify", "pieri", "--max-n", "2"]).env("HECKEBZ_THREADS", "zero").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(bin).args(["verify", "pieri", "--max-n", "3"]).env("HECKEBZ_THREADS", "1").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn timings_only_on_request() {
    let plain = json(&run(&["derive-speh", "--shape", "2", "--i", "1"]));
    assert!(plain.get("timings").is_none());
    let timed = json(&run(&["derive-speh", "--shape", "2", "--i", "1", "--timings"]));
    assert!(timed["timings"]["total_s"].is_number());
}

#[test]
fn table_format_renders_the_same_report() {
    let out = run(&["derive-speh", "--shape", "2,1", "--i", "1", "--format", "table"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("results.predicted") && l.ends_with("[(1,1), 2]")));
    assert!(text.lines().any(|l| l.starts_with("pass") && l.ends_with("true")));
}
