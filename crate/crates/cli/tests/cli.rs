//! End-to-end command behaviour through `run` and the built binary.

use std::process::Command;

use powspec_cli::{run, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn invoke(args: &str) -> (i32, String, String) {
    let argv = std::iter::once("powspec").chain(args.split_whitespace());
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &str) -> Value {
    let (code, out, err) = invoke(args);
    assert_eq!(code, EXIT_OK, "{args}: {err}");
    serde_json::from_str(&out).unwrap()
}

fn spaces(report: &Value) -> Vec<(f64, u64)> {
    report["eigenspaces"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (e["value"].as_f64().unwrap(), e["multiplicity"].as_u64().unwrap()))
        .collect()
}

#[test]
fn cyclic_four_laplacian() {
    let r = json("spectrum --group zn --n 4 --preset laplacian");
    let s = spaces(&r);
    assert_eq!(s.len(), 2);
    assert!((s[0].0 - 4.0).abs() < 1e-12 && s[0].1 == 3);
    assert!(s[1].0.abs() < 1e-12 && s[1].1 == 1);
    assert_eq!(r["schema"], 1);
    assert_eq!(r["route"], "structural");
}

#[test]
fn d15_oracle_check_passes() {
    let r = json("spectrum --group dn --n 15 --preset laplacian --oracle-check");
    assert_eq!(r["route"], "structural");
    let v = &r["verification"];
    assert_eq!(v["pass"], true);
    assert!(v["max_residual"].as_f64().unwrap() < 1e-8);
    let total: u64 = spaces(&r).iter().map(|s| s.1).sum();
    assert_eq!(total, 30);
}

#[test]
fn alpha_zero_is_a_usage_error() {
    let (code, out, err) = invoke("spectrum --group zn --n 6 --params 0,1,0,0");
    assert_eq!(code, EXIT_USAGE);
    assert!(out.is_empty());
    assert!(err.contains("U is undefined"), "{err}");
}

#[test]
fn invalid_groups_are_usage_errors() {
    for args in [
        "spectrum --group qn --n 1",
        "verify --group zn --n 0",
        "spectrum --group zn",
        "spectrum --group xx --n 3",
    ] {
        assert_eq!(invoke(args).0, EXIT_USAGE, "{args}");
    }
}

#[test]
fn verify_examples() {
    let (code, out, _) = invoke("verify --group zn --n 30 --seed 7");
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.lines().last().unwrap().ends_with("0 failed"));
    let (code, out, _) = invoke("verify --group qn --n 6 --seed 1");
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(!out.contains("check=oracle-equivalence"));
    assert!(out.contains("check=dense-residual"));
}

#[test]
fn charpoly_examples() {
    let r = json("charpoly --group dn --n 15 --preset laplacian --quotient");
    let coeffs = r["coefficients"].as_array().unwrap();
    assert_eq!(r["degree"], 5);
    assert_eq!(coeffs.last().unwrap(), "0/1");

    let r = json("charpoly --group zn --n 4 --normalized --at 0");
    assert_eq!(r["value"].as_f64().unwrap(), 0.0);
    assert_eq!(r["exact"], "0/1");

    let roots = json("charpoly --group zn --n 6 --preset adjacency --quotient --roots");
    let mut got: Vec<f64> = Vec::new();
    for root in roots["roots"].as_array().unwrap() {
        for _ in 0..root["multiplicity"].as_u64().unwrap() {
            got.push(root["value"].as_f64().unwrap());
        }
    }
    let dense = json("spectrum --group zn --n 6 --preset adjacency");
    // Quotient roots are a sub-multiset of the full spectrum.
    let all: Vec<f64> = spaces(&dense).iter().map(|s| s.0).collect();
    for x in got {
        assert!(all.iter().any(|y| (x - y).abs() < 1e-8), "{x} not in {all:?}");
    }
}

#[test]
fn reruns_are_byte_identical() {
    for args in [
        "spectrum --group dn --n 12 --params 1/2,-3/4,1,2 --vectors --oracle-check",
        "spectrum --group zn --n 30 --preset seidel --complement --format csv",
        "verify --group dn --n 9 --seed 11",
        "charpoly --group qn --n 4 --preset signless --quotient --roots",
    ] {
        let a = invoke(args);
        let b = invoke(args);
        assert_eq!(a, b, "{args}");
        assert_eq!(a.0, EXIT_OK, "{args}: {}", a.2);
    }
}

#[test]
fn csv_schema() {
    let (code, out, _) = invoke("spectrum --group zn --n 6 --preset laplacian --format csv");
    assert_eq!(code, EXIT_OK);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("value,multiplicity,provenance"));
    let total: usize = lines
        .map(|l| l.split(',').nth(1).unwrap().parse::<usize>().unwrap())
        .sum();
    assert_eq!(total, 6);
}

#[test]
fn numbers_round_trip_through_json() {
    let (_, out, _) = invoke("spectrum --group zn --n 15 --preset adjacency --complement");
    let r: Value = serde_json::from_str(&out).unwrap();
    for e in r["eigenspaces"].as_array().unwrap() {
        let x = e["value"].as_f64().unwrap();
        let text = format!("{x:.16e}");
        assert_eq!(text.parse::<f64>().unwrap(), x);
    }
}

#[test]
fn vectors_include_vertex_order() {
    let r = json("spectrum --group dn --n 3 --preset laplacian --vectors");
    let order = r["vertex_order"].as_array().unwrap().len();
    assert_eq!(order, 6);
    for e in r["eigenspaces"].as_array().unwrap() {
        let vs = e["vectors"].as_array().unwrap();
        assert_eq!(vs.len() as u64, e["multiplicity"].as_u64().unwrap());
        assert!(vs.iter().all(|v| v.as_array().unwrap().len() == order));
    }
}

#[test]
fn unvalidated_structure_uses_oracle_route() {
    let r = json("spectrum --group qn --n 6 --preset adjacency");
    assert_eq!(r["route"], "oracle");
    assert!(r["route_note"].is_string());
    let total: u64 = spaces(&r).iter().map(|s| s.1).sum();
    assert_eq!(total, 24);
}

#[test]
fn graph_edge_list() {
    let (code, out, _) = invoke("graph --group zn --n 3 --labels");
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().filter(|l| !l.starts_with('#')).count(), 3);
}

#[test]
fn seed_falls_back_to_environment() {
    let bin = env!("CARGO_BIN_EXE_powspec");
    let with_env = Command::new(bin)
        .args(["verify", "--group", "zn", "--n", "10", "--samples", "2"])
        .env("POWSPEC_SEED", "42")
        .output()
        .unwrap();
    let with_flag = Command::new(bin)
        .args(["verify", "--group", "zn", "--n", "10", "--samples", "2", "--seed", "42"])
        .env_remove("POWSPEC_SEED")
        .output()
        .unwrap();
    let default = Command::new(bin)
        .args(["verify", "--group", "zn", "--n", "10", "--samples", "2"])
        .env_remove("POWSPEC_SEED")
        .output()
        .unwrap();
    assert_eq!(with_env.status.code(), Some(EXIT_OK));
    assert_eq!(with_env.stdout, with_flag.stdout);
    assert_ne!(with_env.stdout, default.stdout);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_powspec");
    let code = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(code(&["spectrum", "--group", "zn", "--n", "5"]), Some(EXIT_OK));
    assert_eq!(
        code(&["spectrum", "--group", "zn", "--n", "5", "--params", "0,0,0,0"]),
        Some(EXIT_USAGE)
    );
    assert_eq!(code(&["--help"]), Some(EXIT_OK));
    // A tolerance of zero cannot be met by floating-point residuals.
    assert_eq!(
        code(&[
            "spectrum",
            "--group",
            "dn",
            "--n",
            "7",
            "--preset",
            "laplacian",
            "--oracle-check",
            "--tol",
            "0"
        ]),
        Some(EXIT_MISMATCH)
    );
}
