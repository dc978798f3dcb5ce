use std::path::Path;
use std::process::{Command, Output};

use expzero::catalog;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_expzero")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn classify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let nz = write(dir.path(), "nz.json", &catalog::sum_one_product_one().to_json_string());
    let o = run(&["classify", "--input", &nz]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["case"], "d1");
    assert_eq!(v["verdict"], "empty");

    let ex = write(dir.path(), "ex.json", &catalog::line_product_sum().to_json_string());
    let v = json(&run(&["classify", "--input", &ex]));
    assert_eq!(v["case"], "d32");
    assert!(v["witness"]["back_substitution"]["G"].is_object());

    let fermat = write(dir.path(), "f.json", &catalog::ninth_power_fermat().to_json_string());
    assert_eq!(json(&run(&["classify", "--input", &fermat]))["case"], "c");

    let unsupported = write(
        dir.path(),
        "u.json",
        r#"{"kind": "curve_pair", "generators": ["(E+1)*X1 + (E+1)*X2 - 1", "Xh1*Xh2 - 2"]}"#,
    );
    assert_eq!(code(&run(&["classify", "--input", &unsupported])), 3);

    let heuristic = write(
        dir.path(),
        "h.json",
        r#"{"kind": "curve_pair", "generators": ["X1 + X2 - 1", "Xh1*Xh2 - K"], "numeric_override": {"K": [2.718281828459045, 0.0]}}"#,
    );
    let o = run(&["classify", "--input", &heuristic]);
    assert_eq!(code(&o), 4);
    assert_eq!(json(&o)["case"], "d2");

    let broken = write(dir.path(), "b.json", r#"{"kind": "curve_pair", "generators": ["X1 +"]}"#);
    assert_eq!(code(&run(&["classify", "--input", &broken])), 2);
    assert_eq!(code(&run(&["classify", "--input", "/nonexistent/x.json"])), 2);
}

#[test]
fn solve_unit_circle_pair() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.json", &catalog::inverse_pair().to_json_string());
    let svg = dir.path().join("a.svg");
    let args = ["solve", "--input", &a, "--region", "annulus", "0", "0", "0.9", "1.1", "--emit-svg", svg.to_str().unwrap()];
    let o = run(&args);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v = json(&o);
    let certs = v["certificates"].as_array().unwrap();
    assert_eq!(certs.len(), 2);
    for c in certs {
        assert_eq!(c["status"], "isolated");
        let r = &c["roots"][0];
        assert!((r["re"].as_f64().unwrap() + 0.082_855_577_330_064_68).abs() < 1e-9);
        assert!((r["im"].as_f64().unwrap().abs() - 0.996_561_565_235_837_1).abs() < 1e-9);
    }
    assert!(std::fs::read_to_string(&svg).unwrap().starts_with("<svg"));

    // same seed, same bytes
    assert_eq!(run(&args).stdout, o.stdout);
}

#[test]
fn solve_reduced_line_equation_and_failures() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.json", &catalog::line_product_sum_reduced().to_json_string());
    let o = run(&["solve", "--input", &g, "--region", "disc", "0", "0", "20", "--max-zeros", "4"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v = json(&o);
    let isolated: Vec<&Value> = v["certificates"].as_array().unwrap().iter().filter(|c| c["status"] == "isolated").collect();
    assert!(!isolated.is_empty());
    assert!(isolated.iter().all(|c| c["roots"][0]["residual"].as_f64().unwrap() < 1e-9));

    // the essential singularity of e^(1/z) sits inside the disc
    let a = write(dir.path(), "a.json", &catalog::inverse_pair().to_json_string());
    assert_eq!(code(&run(&["solve", "--input", &a, "--region", "disc", "0", "0", "2"])), 2);
    // no zeros at all
    assert_eq!(code(&run(&["solve", "--input", &a, "--region", "annulus", "0", "0", "1.5", "2.5"])), 1);
    assert_eq!(code(&run(&["solve", "--input", &a, "--region", "triangle", "0", "0", "1"])), 2);
    assert_eq!(code(&run(&["solve", "--input", &a, "--region", "disc", "0", "0", "-1"])), 2);
}

#[test]
fn solve_square_pair_near_good_seed() {
    let dir = tempfile::tempdir().unwrap();
    let b = write(dir.path(), "b.json", &catalog::square_pair().to_json_string());
    let s = (100.0 * std::f64::consts::PI).sqrt();
    let v = json(&run(&["solve", "--input", &b, "--region", "disc", &format!("{}", -s), &format!("{}", -s), "0.5"]));
    let hit = v["certificates"].as_array().unwrap().iter().any(|c| {
        c["status"] == "isolated"
            && (c["roots"][0]["re"].as_f64().unwrap() + s).abs() < 1e-3
            && (c["roots"][0]["im"].as_f64().unwrap() + s).abs() < 1e-3
    });
    assert!(hit);
}

#[test]
fn winding_and_laurent() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.json", &catalog::inverse_pair().to_json_string());
    let o = run(&["winding", "--input", &a, "--region", "annulus", "0", "0", "0.5", "2"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["winding"], 2);

    let e = write(dir.path(), "e.json", &catalog::exp_minus_z().to_json_string());
    let o = run(&["laurent", "--input", &e, "--region", "disc", "0", "0", "0.5", "--order", "24"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v = json(&o);
    assert_eq!(v["m"], 0);
    assert_eq!(code(&run(&["laurent", "--input", &e, "--region", "rect", "0", "0", "1", "1"])), 2);
}

#[test]
fn elliptic_verify_report() {
    let o = run(&["elliptic-verify", "--omega1", "1,0", "--omega2", "0.3,1.1"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["pass"], true);
    assert!(v["checks"].as_array().unwrap().len() >= 10);
    assert_eq!(code(&run(&["elliptic-verify", "--omega2", "2,0"])), 2);
}

#[test]
fn acceptance_subcommand_filters_and_fails() {
    let o = run(&["verify-paper", "--only", "winding"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["criteria"].as_array().unwrap().len(), 1);
    assert_eq!(v["criteria"][0]["name"], "winding");

    let o = run(&["verify-paper", "--only", "unit_circle_pair", "--tol", "1e-30"]);
    assert_eq!(code(&o), 1);
    assert_eq!(json(&o)["pass"], false);
}

#[test]
fn acceptance_subcommand_is_deterministic() {
    let a = run(&["verify-paper"]);
    assert_eq!(code(&a), 0, "{}", String::from_utf8_lossy(&a.stderr));
    let b = run(&["verify-paper"]);
    assert_eq!(a.stdout, b.stdout);
}
