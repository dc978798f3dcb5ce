use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{EllipticData, EllipticError};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub name: String,
    /// Worst residual over the test points.
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub omega1: Complex64,
    pub omega2: Complex64,
    pub g2: Complex64,
    pub g3: Complex64,
    pub eta1: Complex64,
    pub eta2: Complex64,
    pub period_vector_omega1: (i64, i64),
    pub period_vector_omega2: (i64, i64),
    pub checks: Vec<IdentityCheck>,
    pub pass: bool,
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm().max(1.0)
}

/// Evaluates every identity at `points` seeded random points of the
/// fundamental cell, kept `0.1` cell-widths away from lattice points.
pub fn verify_identities(d: &EllipticData, points: usize, seed: u64, tol: f64) -> Result<IdentityReport, EllipticError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let zs: Vec<Complex64> = (0..points)
        .map(|_| d.omega1 * rng.gen_range(0.1..0.9) + d.omega2 * rng.gen_range(0.1..0.9))
        .collect();
    let h = 1e-5;
    let (w1, w2) = (d.omega1, d.omega2);
    let half = w1 / 2.0;
    let u = 0.31 * w1 + 0.17 * w2;
    let sigma_half = d.sigma(half);
    let wp_half = d.wp(half)?;
    let wp_u = d.wp(u)?;
    let wpp_u = d.wp_prime(u)?;
    let zeta_u = d.zeta(u)?;

    let mut worst = [0f64; 10];
    for &z in &zs {
        let p = d.wp(z)?;
        let dp = d.wp_prime(z)?;
        let zeta = d.zeta(z)?;
        let r = [
            rel(dp * dp, 4.0 * p * p * p - d.g2 * p - d.g3),
            rel((d.zeta(z + h)? - d.zeta(z - h)?) / (2.0 * h), -p),
            rel((d.sigma(z + h).ln() - d.sigma(z - h).ln()) / (2.0 * h), zeta),
            rel(d.zeta(z + w1)? - zeta, d.eta1),
            rel(d.baker_akhiezer_phi(w1, z + w1)? / d.baker_akhiezer_phi(w1, z)?, Complex64::new(1.0, 0.0))
                .max(rel(d.baker_akhiezer_phi(w1, z + w2)? / d.baker_akhiezer_phi(w1, z)?, Complex64::new(1.0, 0.0))),
            rel(d.baker_akhiezer_phi(w1 + w2, z + w2)? / d.baker_akhiezer_phi(w1 + w2, z)?, Complex64::new(1.0, 0.0)),
            rel(
                d.baker_akhiezer_psi(half, z)?.powi(2) / (sigma_half * sigma_half * d.baker_akhiezer_phi(w1, z)?),
                p - wp_half,
            ),
            rel(d.zeta(z - u)? - zeta, 0.5 * (dp + wpp_u) / (p - wp_u) - zeta_u),
            rel(
                (d.baker_akhiezer_psi(u, z + h)?.ln() - d.baker_akhiezer_psi(u, z - h)?.ln()) / (2.0 * h),
                d.zeta(z - u)? - zeta - u * p,
            ),
            rel(p, d.wp(-z)?),
        ];
        for (w, x) in worst.iter_mut().zip(r) {
            *w = w.max(x);
        }
    }
    let fd_tol = 1e-6_f64.max(tol);
    let names: [(&str, f64); 10] = [
        ("wp_differential_equation", tol),
        ("zeta_derivative_is_minus_wp", fd_tol),
        ("sigma_log_derivative_is_zeta", fd_tol),
        ("zeta_quasi_period", tol),
        ("phi_double_periodicity", tol),
        ("phi_sum_period_periodicity", tol),
        ("half_period_identity", tol),
        ("zeta_addition_theorem", tol),
        ("psi_log_derivative", fd_tol),
        ("wp_even", tol),
    ];
    let mut checks: Vec<IdentityCheck> = names
        .iter()
        .zip(worst)
        .map(|(&(name, tolerance), residual)| IdentityCheck {
            name: name.into(),
            residual,
            tolerance,
            pass: residual < tolerance,
        })
        .collect();
    let two_pi_i = Complex64::new(0.0, 2.0 * std::f64::consts::PI);
    let legendre = (d.legendre() - two_pi_i).norm().min((d.legendre() + two_pi_i).norm());
    checks.push(IdentityCheck {
        name: "legendre_relation".into(),
        residual: legendre,
        tolerance: tol,
        pass: legendre < tol,
    });
    checks.push(IdentityCheck {
        name: "half_period_critical".into(),
        residual: d.wp_prime(half)?.norm(),
        tolerance: tol,
        pass: d.wp_prime(half)?.norm() < tol,
    });
    let pv1 = d.period_vector_of_log_derivative(|z| d.baker_akhiezer_phi(w1, z).unwrap_or_default())?;
    let pv2 = d.period_vector_of_log_derivative(|z| d.baker_akhiezer_phi(w2, z).unwrap_or_default())?;
    let pattern = pv1.0 == 0 && pv1.1.abs() == 1 && pv2.0.abs() == 1 && pv2.1 == 0;
    checks.push(IdentityCheck {
        name: "period_vector_pattern".into(),
        residual: if pattern { 0.0 } else { 1.0 },
        tolerance: 0.5,
        pass: pattern,
    });
    let pass = checks.iter().all(|c| c.pass);
    Ok(IdentityReport {
        omega1: w1,
        omega2: w2,
        g2: d.g2,
        g3: d.g3,
        eta1: d.eta1,
        eta2: d.eta2,
        period_vector_omega1: pv1,
        period_vector_omega2: pv2,
        checks,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elliptic::{elliptic_from_lattice, DEFAULT_DEPTH};

    #[test]
    fn all_identities_hold_on_two_lattices() {
        for (w1, w2) in [
            (Complex64::new(2.0, 0.0), Complex64::new(0.0, 2.0)),
            (Complex64::new(1.0, 0.2), Complex64::new(0.3, 1.1)),
        ] {
            let d = elliptic_from_lattice(w1, w2, DEFAULT_DEPTH).unwrap();
            let rep = verify_identities(&d, 20, 0x5EED, 1e-8).unwrap();
            for c in &rep.checks {
                assert!(c.pass, "{c:?}");
            }
        }
    }

    #[test]
    fn absurd_tolerance_fails() {
        let d = elliptic_from_lattice(Complex64::new(1.0, 0.0), Complex64::new(0.2, 0.9), DEFAULT_DEPTH).unwrap();
        assert!(!verify_identities(&d, 5, 1, 1e-30).unwrap().pass);
    }
}
