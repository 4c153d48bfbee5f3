use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quat-mobius"))
        .args(args)
        .env_remove("MOBIUS_ORBITS_SEED")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn csv_rows(args: &[&str]) -> Vec<Vec<String>> {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0));
    String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|l| l.split(',').map(str::to_owned).collect())
        .collect()
}

#[test]
fn decompose_schema() {
    let v = json(&["decompose", "--quat", "0.3,-0.2,0.5,0.4"]);
    for key in [
        "zeta",
        "omega",
        "axis",
        "tau",
        "phi",
        "lambda",
        "W",
        "D",
        "fixed_points",
        "degenerate",
        "reconstruction_error",
    ] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["degenerate"], "none");
    assert!(v["reconstruction_error"].as_f64().unwrap() <= 1e-9);
}

#[test]
fn identity_has_no_fixed_points() {
    let v = json(&["decompose", "--quat", "1,0,0,0"]);
    assert_eq!(v["degenerate"], "identity");
    assert!(v["fixed_points"].is_null());
}

#[test]
fn polar_axis_fixed_points_include_infinity() {
    let v = json(&["decompose", "--zeta", "0.6,0.8", "--omega", "0,0"]);
    assert_eq!(v["degenerate"], "polar_axis");
    assert_eq!(v["fixed_points"][1]["is_infinity"], true);
}

#[test]
fn orbit_about_polar_axis_visits_quarter_points() {
    let rows = csv_rows(&["orbit", "--angles", "0,0,1", "--z0", "1,0", "--n", "4"]);
    assert_eq!(rows[0].join(","), "tau,re,im,is_infinity,eta1,eta2,eta3");
    let expected = [(1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0)];
    for (row, (re, im)) in rows[1..].iter().zip(expected) {
        let got: (f64, f64) = (row[1].parse().unwrap(), row[2].parse().unwrap());
        assert!(
            (got.0 - re).abs() < 1e-12 && (got.1 - im).abs() < 1e-12,
            "{row:?}"
        );
    }
}

#[test]
fn orbit_keeps_height_along_axis() {
    let axis = json(&["decompose", "--angles", "1.1,0.4,2.2"])["axis"].clone();
    let axis: Vec<f64> = axis
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_f64().unwrap())
        .collect();
    let rows = csv_rows(&[
        "orbit",
        "--angles",
        "1.1,0.4,2.2",
        "--z0",
        "0.3,-2",
        "--n",
        "12",
    ]);
    let heights: Vec<f64> = rows[1..]
        .iter()
        .map(|r| {
            (0..3)
                .map(|k| r[4 + k].parse::<f64>().unwrap() * axis[k])
                .sum()
        })
        .collect();
    assert!(heights.iter().all(|h| (h - heights[0]).abs() <= 1e-9));
}

#[test]
fn orbit_through_fixed_point_is_constant() {
    let v = json(&["decompose", "--angles", "1.1,0.4,2.2"]);
    let fp = &v["fixed_points"][0];
    let z0 = format!("{},{}", fp["re"], fp["im"]);
    let rows = json(&[
        "orbit",
        "--angles",
        "1.1,0.4,2.2",
        "--z0",
        &z0,
        "--n",
        "8",
        "--format",
        "json",
    ]);
    for row in rows.as_array().unwrap() {
        let dre = row["z"]["re"].as_f64().unwrap() - fp["re"].as_f64().unwrap();
        let dim = row["z"]["im"].as_f64().unwrap() - fp["im"].as_f64().unwrap();
        assert!(dre.hypot(dim) < 1e-12);
    }
}

#[test]
fn orbit_json_marks_infinity() {
    let rows = json(&[
        "orbit", "--angles", "0,0,1", "--z0", "inf", "--n", "2", "--format", "json",
    ]);
    assert_eq!(rows[0]["z"]["is_infinity"], true);
}

#[test]
fn rotmat_random_input_agrees() {
    let v = json(&["rotmat", "--quat", "0.1,0.7,-0.3,0.2"]);
    assert!(v["max_abs_diff"].as_f64().unwrap() <= 1e-11);
    assert!(v["generator"].is_array());
    assert!(json(&["rotmat", "--quat", "1,0,0,0"])["generator"].is_null());
}

#[test]
fn convert_round_trips_through_quaternion() {
    let v = json(&["convert", "--angles", "0.9,-1.2,1.4"]);
    let q: Vec<String> = v["quaternion"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.to_string())
        .collect();
    let w = json(&["convert", "--quat", &q.join(",")]);
    for key in ["phi", "lambda", "tau"] {
        assert!((v[key].as_f64().unwrap() - w[key].as_f64().unwrap()).abs() < 1e-12);
    }
    assert!((v["tau"].as_f64().unwrap() - 1.4).abs() < 1e-12);
}

#[test]
fn check_csv_and_seed_override() {
    let rows = csv_rows(&["check", "--iters", "10", "--format", "csv"]);
    assert_eq!(
        rows[0].join(","),
        "name,worst_error,tolerance,lower_bound,pass"
    );
    assert!(rows[1..].iter().all(|r| r[4] == "true"));
    let with_env = |seed: &str| {
        Command::new(env!("CARGO_BIN_EXE_quat-mobius"))
            .args(["check", "--iters", "10", "--seed", "1"])
            .env("MOBIUS_ORBITS_SEED", seed)
            .output()
            .unwrap()
    };
    let v: Value = serde_json::from_slice(&with_env("42").stdout).unwrap();
    assert_eq!(v["seed"], 42);
    assert_eq!(with_env("not-a-number").status.code(), Some(2));
}

#[test]
fn usage_errors() {
    for args in [
        &["decompose", "--omega", "0,1"][..],
        &["decompose", "--angles", "1,2"],
        &["orbit", "--quat", "1,0,0,0", "--n", "1"],
        &["rotmat"],
        &["check", "--iters", "x"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty() && !out.stderr.is_empty());
    }
}
