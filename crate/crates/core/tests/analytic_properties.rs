use std::f64::consts::PI;

use expzero::analytic::*;
use expzero::catalog;
use expzero::roots::ComplexPoly;
use num_complex::Complex64;
use proptest::prelude::*;

fn cfg() -> AnalyticConfig {
    AnalyticConfig::default()
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn planted() -> impl Strategy<Value = Vec<Complex64>> {
    prop::collection::vec((-2.0f64..2.0, -2.0f64..2.0).prop_map(|(a, b)| c(a, b)), 1..=8)
}

fn rect() -> impl Strategy<Value = (f64, f64, f64, f64)> {
    (-2.5f64..1.5, -2.5f64..1.5, 0.3f64..2.5, 0.3f64..2.5).prop_map(|(x, y, w, h)| (x, y, x + w, y + h))
}

fn clear_of_boundary(roots: &[Complex64], (x0, y0, x1, y1): (f64, f64, f64, f64)) -> bool {
    roots.iter().all(|z| {
        let dx = (z.re - x0).abs().min((z.re - x1).abs());
        let dy = (z.im - y0).abs().min((z.im - y1).abs());
        let inside_x = z.re > x0 - 1e-2 && z.re < x1 + 1e-2;
        let inside_y = z.im > y0 - 1e-2 && z.im < y1 + 1e-2;
        !((dx < 1e-2 && inside_y) || (dy < 1e-2 && inside_x))
    })
}

fn regular_point() -> impl Strategy<Value = Complex64> {
    (0.3f64..4.0, -PI..PI).prop_map(|(r, t)| Complex64::from_polar(r, t))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn planted_roots_are_counted_exactly(roots in planted(), r in rect()) {
        prop_assume!(clear_of_boundary(&roots, r));
        let p = ComplexPoly::from_roots(&roots);
        let inside = roots.iter().filter(|z| z.re > r.0 && z.re < r.2 && z.im > r.1 && z.im < r.3).count();
        let rep = count_zeros(&p, &Contour::rect(r.0, r.1, r.2, r.3), &cfg()).unwrap();
        prop_assert_eq!(rep.count, inside as i64);
        prop_assert!((rep.raw - rep.count as f64).abs() < 1e-6);
    }

    #[test]
    fn certificates_are_sound(roots in planted(), r in rect()) {
        prop_assume!(clear_of_boundary(&roots, r));
        let p = ComplexPoly::from_roots(&roots);
        let rep = isolate_zeros(&p, &Contour::rect(r.0, r.1, r.2, r.3), None, &cfg()).unwrap();
        let counted: i64 = rep.certificates.iter().map(|c| c.winding).sum();
        prop_assert_eq!(counted, rep.total);
        for cert in rep.isolated() {
            for root in &cert.roots {
                prop_assert!(p.eval(root.z()).norm() < 1e-9);
                prop_assert!(cert.cell.contains(root.z()));
            }
        }
    }

    #[test]
    fn winding_is_additive_over_sectors(cuts in prop::collection::btree_set(1u32..63, 1..6), t0 in 0.0f64..1.0) {
        let phi = catalog::inverse_pair_phi();
        let (r0, r1) = (1.3, 7.5);
        let whole = winding_number(&phi, &Contour::annulus(c(0.0, 0.0), r0, r1), &cfg()).unwrap();
        let mut angles: Vec<f64> = cuts.iter().map(|k| t0 + *k as f64 * 2.0 * PI / 64.0).collect();
        angles.insert(0, t0);
        angles.push(t0 + 2.0 * PI);
        let mut raw = 0.0;
        let mut total = 0;
        for w in angles.windows(2) {
            let s = Contour::Sector { center: c(0.0, 0.0), r0, r1, t0: w[0], t1: w[1] };
            let rep = winding_number(&phi, &s, &cfg()).unwrap();
            prop_assert!((rep.raw - rep.winding as f64).abs() < 1e-6);
            raw += rep.raw;
            total += rep.winding;
        }
        prop_assert_eq!(total, whole.winding);
        prop_assert!((raw - whole.raw).abs() < 1e-8);
    }

    #[test]
    fn inverse_pair_symmetries(z in regular_point()) {
        let phi = catalog::inverse_pair_phi();
        let v = phi.value(z).unwrap();
        let scale = v.norm().max(1.0);
        prop_assert!((phi.value(z.conj()).unwrap() - v.conj()).norm() < 1e-12 * scale);
        prop_assert!((phi.value(1.0 / z).unwrap() - v).norm() < 1e-12 * scale);
    }

    #[test]
    fn derivative_matches_central_differences(z in regular_point(), which in 0usize..4) {
        let phi = match which {
            0 => catalog::inverse_pair_phi(),
            1 => catalog::square_pair_phi(),
            2 => catalog::line_product_sum_phi(),
            _ => catalog::shifted_exponential_phi(),
        };
        let (_, d) = phi.value_and_derivative(z).unwrap();
        let h = 1e-6;
        let fd = (phi.value(z + h).unwrap() - phi.value(z - h).unwrap()) / (2.0 * h);
        prop_assert!((fd - d).norm() <= 1e-5 * d.norm().max(1.0), "z = {z}, fd = {fd}, d = {d}");
    }
}

#[test]
fn isolated_zeros_of_inverse_pair_are_symmetric() {
    let phi = catalog::inverse_pair_phi();
    let rep = isolate_zeros(&phi, &Contour::annulus(c(0.0, 0.0), 0.5, 9.0), None, &cfg()).unwrap();
    let zs: Vec<Complex64> = rep.isolated().flat_map(|c| c.roots.iter().map(|r| r.z())).collect();
    assert_eq!(zs.len(), rep.total as usize);
    let has = |w: Complex64| zs.iter().any(|z| (z - w).norm() < 1e-8);
    for z in &zs {
        assert!(has(z.conj()), "{z} has no conjugate partner");
        let inv = 1.0 / z;
        if inv.norm() > 0.5 && inv.norm() < 9.0 {
            assert!(has(inv), "{z} has no inverse partner");
        }
    }
}
