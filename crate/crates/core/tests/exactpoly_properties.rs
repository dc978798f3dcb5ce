use expzero::exactpoly::{Coeff, ExactScalar, GaussRat, NumericValuation, Poly, SymMono, Vars};
use num_complex::Complex64;
use proptest::prelude::*;

type RawTerm = ([i32; 4], (i64, i64, i64), i32);

fn term() -> impl Strategy<Value = RawTerm> {
    (
        [0i32..3, 0i32..3, -2i32..3, -2i32..3],
        (-5i64..6, -5i64..6, 1i64..4),
        -1i32..2,
    )
}

fn build(terms: &[RawTerm]) -> Poly {
    let v = Vars::surface();
    let mut p = Poly::zero(&v);
    for (exps, (re, im, den), e) in terms {
        let g = GaussRat::new(
            num_rational::BigRational::new((*re).into(), (*den).into()),
            num_rational::BigRational::new((*im).into(), (*den).into()),
        );
        let c = Coeff::from_scalar(ExactScalar::new(g, SymMono::power("E", *e)));
        p.add_term(exps.to_vec(), &c).unwrap();
    }
    p
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(term(), 0..6).prop_map(|t| build(&t))
}

fn point() -> impl Strategy<Value = [Complex64; 4]> {
    let c = |lo: f64| (lo..1.5f64, -1.0f64..1.0).prop_map(|(a, b)| Complex64::new(a, b));
    [c(-1.5), c(-1.5), c(0.5), c(0.5)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn evaluation_is_multiplicative(a in poly(), b in poly(), x in point()) {
        let val = NumericValuation::standard();
        let pa = a.eval(&x, &val).unwrap();
        let pb = b.eval(&x, &val).unwrap();
        let pab = (&a * &b).eval(&x, &val).unwrap();
        let scale = 1.0 + pa.norm() * pb.norm();
        prop_assert!((pab - pa * pb).norm() <= 1e-10 * scale);
    }

    #[test]
    fn product_rule(a in poly(), b in poly(), var in prop::sample::select(vec!["X1", "X2", "Xh1", "Xh2"])) {
        let lhs = (&a * &b).diff(var).unwrap();
        let rhs = &(&a.diff(var).unwrap() * &b) + &(&a * &b.diff(var).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn normal_form_ignores_construction_order(mut terms in prop::collection::vec(term(), 0..8)) {
        let forward = build(&terms);
        terms.reverse();
        prop_assert_eq!(build(&terms), forward);
    }

    #[test]
    fn text_and_json_round_trip(a in poly()) {
        let v = Vars::surface();
        prop_assert_eq!(Poly::parse(&a.to_string(), &v).unwrap(), a.clone());
        prop_assert_eq!(Poly::from_json_str(&a.to_json_string()).unwrap(), a);
    }
}
