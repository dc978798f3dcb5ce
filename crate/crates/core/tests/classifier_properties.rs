use expzero::catalog;
use expzero::classifier::{back_substitute, classify_surface, detect_rational_slope, SurfaceSpec};
use expzero::exactpoly::{Coeff, ExactScalar, GaussRat, NumericValuation, Poly, Rational, SymMono, Vars};
use num_complex::Complex64;
use proptest::prelude::*;

fn cplx() -> impl Strategy<Value = Complex64> {
    (-3.0f64..3.0, -3.0f64..3.0).prop_map(|(a, b)| Complex64::new(a, b))
}

fn swap(p: &Poly) -> Poly {
    let v = Vars::surface();
    let imgs: Vec<Poly> = ["X2", "X1", "Xh2", "Xh1"].iter().map(|n| Poly::var(&v, n).unwrap()).collect();
    p.substitute(&imgs).unwrap()
}

fn scalar() -> impl Strategy<Value = ExactScalar> {
    (-4i64..5, -4i64..5, 1i64..4, -2i32..3)
        .prop_filter("nonzero", |(a, b, _, _)| *a != 0 || *b != 0)
        .prop_map(|(a, b, d, e)| {
            let g = GaussRat::new(Rational::new(a.into(), d.into()), Rational::new(b.into(), d.into()));
            ExactScalar::new(g, SymMono::power("E", e))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn d2_points_lie_on_the_surface(z in cplx()) {
        let spec = catalog::sum_one_product_e();
        let x = [z, 1.0 - z, z.exp(), (1.0 - z).exp()];
        let val = NumericValuation::standard();
        for g in &spec.generators {
            let scale: f64 = g.terms().map(|(e, c)| {
                let m = e.iter().zip(&x).fold(1.0, |acc, (k, v)| acc * v.norm().powi(*k));
                m * c.eval(&val).unwrap().norm()
            }).sum();
            prop_assert!(g.eval(&x, &val).unwrap().norm() <= 1e-10 * scale.max(1.0));
        }
    }

    #[test]
    fn back_substitution_round_trip(y in cplx(), t in 0.2f64..3.0, arg in -3.0f64..3.0,
                                    line in prop::sample::select(vec![(1i64, 1i64, 1i64), (2, -3, 0), (3, 5, 2), (0, 1, -1), (-4, 1, 3)])) {
        let v = Vars::surface();
        let f0 = Poly::parse(&format!("{}*X1 + {}*X2 - {}", line.0, line.1, line.2), &v).unwrap();
        let l = detect_rational_slope(&f0).unwrap();
        let yh = Complex64::from_polar(t, arg);
        let val = l.valuation(&NumericValuation::standard()).unwrap();
        let point: Vec<Complex64> = l.images().unwrap().iter().map(|p| p.eval(&[y, yh], &val).unwrap()).collect();
        let back: Vec<Complex64> = l.inverse_images().unwrap().iter().map(|p| p.eval(&point, &val).unwrap()).collect();
        prop_assert!((back[0] - y).norm() < 1e-12 * (1.0 + y.norm()));
        prop_assert!((back[1] - yh).norm() < 1e-12 * (1.0 + yh.norm()));

        // exactly: the composite images are Y and Yh themselves
        let imgs = l.images().unwrap();
        for (inv, name) in l.inverse_images().unwrap().iter().zip(["Y", "Yh"]) {
            prop_assert_eq!(inv.substitute(&imgs).unwrap(), Poly::var(&Vars::reduced(), name).unwrap());
        }
    }

    #[test]
    fn classification_ignores_scaling_and_swap(k in scalar(), which in 0usize..9) {
        let spec = catalog::surfaces().swap_remove(which);
        let base = classify_surface(&spec).unwrap();

        let mut scaled = spec.clone();
        let last = scaled.generators.len() - 1;
        scaled.generators[last] = scaled.generators[last].scale(&k).unwrap();
        prop_assert_eq!(classify_surface(&scaled).unwrap().case, base.case);

        let mut swapped: SurfaceSpec = spec.clone();
        swapped.generators = spec.generators.iter().map(swap).collect();
        let s = classify_surface(&swapped).unwrap();
        prop_assert_eq!(s.case, base.case);
        if let (Some(b), Some(sb)) = (&base.witness.back_substitution, &s.witness.back_substitution) {
            prop_assert_eq!((sb.line.m1, sb.line.m2), (b.line.m2, b.line.m1));
        }
    }
}

#[test]
fn substitution_of_torus_relation_is_constant() {
    let v = Vars::surface();
    let l = detect_rational_slope(&Poly::parse("X1 + X2 - 1", &v).unwrap()).unwrap();
    let r = back_substitute(&Poly::parse("Xh1*Xh2", &v).unwrap(), &l).unwrap();
    assert_eq!(r.raw().unwrap(), Poly::constant(&Vars::reduced(), Coeff::from_scalar(ExactScalar::symbol("E"))));
}
