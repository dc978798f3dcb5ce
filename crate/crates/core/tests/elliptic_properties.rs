use expzero::elliptic::{elliptic_from_lattice, EllipticData, DEFAULT_DEPTH};
use num_complex::Complex64;
use proptest::prelude::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn lattice() -> impl Strategy<Value = EllipticData> {
    (0.6f64..1.6, -0.5f64..0.5, -0.45f64..0.45, 0.8f64..1.6).prop_map(|(r, a, tr, ti)| {
        let w1 = Complex64::from_polar(r, a);
        elliptic_from_lattice(w1, w1 * c(tr, ti), DEFAULT_DEPTH).unwrap()
    })
}

/// A point whose distance to every lattice point is at least a tenth of the
/// shorter period.
fn regular(d: &EllipticData, s: f64, t: f64) -> Option<Complex64> {
    let z = d.omega1 * s + d.omega2 * t;
    let min_period = d.omega1.norm().min(d.omega2.norm());
    let far = (-2..=2).all(|m| (-2..=2).all(|n| (z - d.omega1 * m as f64 - d.omega2 * n as f64).norm() >= 0.1 * min_period));
    far.then_some(z)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn defining_identities(d in lattice(), s in -0.9f64..0.9, t in -0.9f64..0.9) {
        let Some(z) = regular(&d, s, t) else { return Ok(()) };
        let h = 1e-5 * d.omega1.norm();
        let wp = d.wp(z).unwrap();
        let wpp = d.wp_prime(z).unwrap();
        let scale = 1.0 + wp.norm().powi(3) + d.g2.norm() * wp.norm() + d.g3.norm();
        prop_assert!((wpp * wpp - (4.0 * wp.powi(3) - d.g2 * wp - d.g3)).norm() <= 1e-6 * scale);

        let dzeta = (d.zeta(z + h).unwrap() - d.zeta(z - h).unwrap()) / (2.0 * h);
        prop_assert!((dzeta + wp).norm() <= 1e-6 * (1.0 + wp.norm()));

        let dsigma = (d.sigma(z + h) - d.sigma(z - h)) / (2.0 * h);
        let zeta = d.zeta(z).unwrap();
        prop_assert!((dsigma / d.sigma(z) - zeta).norm() <= 1e-6 * (1.0 + zeta.norm()));

        let dwp = (d.wp(z + h).unwrap() - d.wp(z - h).unwrap()) / (2.0 * h);
        prop_assert!((dwp - wpp).norm() <= 1e-6 * (1.0 + wpp.norm()));
    }

    #[test]
    fn legendre_relation(d in lattice()) {
        prop_assert!((d.legendre() - c(0.0, -2.0 * std::f64::consts::PI)).norm() < 1e-8);
    }

    #[test]
    fn period_vector_of_factored_function(d in lattice(), a in -2i64..3, b in -2i64..3, k in -0.3f64..0.3) {
        prop_assume!(a != 0 || b != 0);
        let omega = d.omega1 * a as f64 + d.omega2 * b as f64;
        // exp(k*wp) is doubly periodic and finite along the offset paths
        let f = |z: Complex64| d.baker_akhiezer_phi(omega, z).unwrap() * (k * d.wp(z).unwrap()).exp();
        prop_assert_eq!(d.period_vector_of_log_derivative(f).unwrap(), (b, -a));
    }
}
