//! The ten numbered acceptance criteria, one line each, followed by a few
//! recomputations that do not go through the suite.

use std::f64::consts::E;

use expzero::analytic::{exp_minus_z_a2_bound, newton, AnalyticConfig, FnHolomorphic, NewtonStatus};
use expzero::reproduce::{criterion_names, run_suite, SuiteConfig, UNIT_CIRCLE_PAIR};
use num_complex::Complex64;

#[test]
fn acceptance_criteria() {
    let rep = run_suite(&SuiteConfig::default());
    assert_eq!(rep.criteria.len(), 10);
    for c in &rep.criteria {
        let timing = match c.time_limit_s {
            Some(limit) => format!("{:.3}s of {limit}s", c.elapsed.as_secs_f64()),
            None => format!("{:.3}s", c.elapsed.as_secs_f64()),
        };
        println!("criterion {:>2} {:<20} {} ({timing})", c.id, c.name, if c.pass { "PASS" } else { "FAIL" });
    }
    let failed: Vec<_> = rep.criteria.iter().filter(|c| !c.pass).map(|c| (c.name, &c.detail)).collect();
    assert!(failed.is_empty(), "{failed:#?}");
    assert!(rep.pass);
}

#[test]
fn every_criterion_runs_alone() {
    for (i, name) in criterion_names().into_iter().enumerate() {
        let rep = run_suite(&SuiteConfig { only: vec![name.to_string()], ..SuiteConfig::default() });
        assert_eq!(rep.criteria.len(), 1);
        assert_eq!(rep.criteria[0].id as usize, i + 1);
    }
}

// Phi(e^{it}) = 2 e^{cos t} cos(sin t) - 1, written out by hand.
#[test]
fn unit_circle_pair_from_closed_form() {
    let phi = FnHolomorphic::new(|z: Complex64| {
        let w = z.inv();
        (z.exp() + w.exp() - 1.0, z.exp() - w.exp() * w * w)
    })
    .excluding(&[Complex64::new(0.0, 0.0)]);
    let g = |t: f64| 2.0 * t.cos().exp() * t.sin().cos() - 1.0;
    assert!((g(0.0) - (2.0 * E - 1.0)).abs() < 1e-12 * (2.0 * E - 1.0));
    assert!((g(std::f64::consts::PI) - (2.0 / E - 1.0)).abs() < 1e-12);
    assert!(g(0.0) > 0.0 && g(std::f64::consts::PI) < 0.0);

    let (mut lo, mut hi) = (0.0, std::f64::consts::PI);
    while hi - lo > 1e-13 {
        let mid = 0.5 * (lo + hi);
        if g(mid) > 0.0 { lo = mid } else { hi = mid }
    }
    let out = newton(&phi, Complex64::from_polar(1.0, lo), &AnalyticConfig::default()).unwrap();
    assert_eq!(out.status, NewtonStatus::Converged);
    assert!((out.z.re - UNIT_CIRCLE_PAIR.0).abs() < 1e-9);
    assert!((out.z.im - UNIT_CIRCLE_PAIR.1).abs() < 1e-9);
}

#[test]
fn coefficient_bound_contradiction_at_seventeen() {
    let bound = 8.0 * (17f64.exp() + 17.0).ln() / (17.0 * 17.0);
    assert!((exp_minus_z_a2_bound(17.0) - bound).abs() < 1e-15);
    assert!(bound < 0.5);
    assert!(exp_minus_z_a2_bound(10.0) > 0.5);
}
