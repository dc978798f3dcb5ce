use num_complex::Complex64;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::exactpoly::{Coeff, ExactScalar, NumericValuation, Poly, PolyError, Vars};

/// The line `m1*X1 + m2*X2 = c` together with Bezout data and the matching
/// multiplicative constant `chat = e^c`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LineSpec {
    pub m1: i64,
    pub m2: i64,
    pub c: Coeff,
    pub a1: i64,
    pub a2: i64,
    pub chat: ExactScalar,
}

/// `(a1, a2)` with `a1*m1 + a2*m2 = 1`, `|a1|` minimal and ties broken
/// towards `a1 >= 0`. Requires `gcd(m1, m2) = 1`.
pub fn bezout_canonical(m1: i64, m2: i64) -> Option<(i64, i64)> {
    let g = m1.extended_gcd(&m2);
    if g.gcd != 1 {
        return None;
    }
    if m2 == 0 {
        // m1 = 1 after normalization; a2 is free, take 0
        return Some((m1.signum(), 0));
    }
    let period = m2.abs();
    let mut a1 = g.x.rem_euclid(period);
    if 2 * a1 > period {
        a1 -= period;
    }
    let a2 = (1 - a1 as i128 * m1 as i128) / m2 as i128;
    Some((a1, i64::try_from(a2).ok()?))
}

impl LineSpec {
    /// Builds the line from coprime `(m1, m2)` with the first nonzero entry
    /// positive. `chat` is `E^k` when `c` is the integer `k`, else `CHAT`.
    pub fn new(m1: i64, m2: i64, c: Coeff) -> Option<LineSpec> {
        let (a1, a2) = bezout_canonical(m1, m2)?;
        let chat = match c.as_integer() {
            Some(0) => ExactScalar::integer(1),
            Some(k) => ExactScalar::symbol_power("E", i32::try_from(k).ok()?),
            None => ExactScalar::symbol("CHAT"),
        };
        Some(LineSpec { m1, m2, c, a1, a2, chat })
    }

    fn exps(&self) -> Result<[i32; 4], PolyError> {
        let cv = |x: i64| i32::try_from(x).map_err(|_| PolyError::ExponentOverflow);
        Ok([cv(self.m1)?, cv(self.m2)?, cv(self.a1)?, cv(self.a2)?])
    }

    /// Values for `C` and `CHAT` derived from `c` under `base`.
    pub fn valuation(&self, base: &NumericValuation) -> Result<NumericValuation, PolyError> {
        let c = self.c.eval(base)?;
        Ok(base.clone().with("C", c).with("CHAT", c.exp()))
    }

    /// The four images `X1, X2, Xh1, Xh2` as polynomials in `(Y, Yh)`.
    pub fn images(&self) -> Result<Vec<Poly>, PolyError> {
        let v = Vars::reduced();
        let [m1, m2, a1, a2] = self.exps()?;
        let y = Poly::var(&v, "Y")?;
        let affine = |a: i64, m: i64| -> Result<Poly, PolyError> {
            let base = Poly::constant(&v, self.c.scale_rational(&num_rational::BigRational::from_integer(a.into())));
            base.checked_add(&y.scale(&ExactScalar::integer(m))?)
        };
        let x1 = affine(self.a1, self.m2)?;
        let x2 = affine(self.a2, -self.m1)?;
        let xh1 = Poly::monomial(&v, vec![0, m2], Coeff::from_scalar(self.chat.pow(a1)?))?;
        let xh2 = Poly::monomial(
            &v,
            vec![0, m1.checked_neg().ok_or(PolyError::ExponentOverflow)?],
            Coeff::from_scalar(self.chat.pow(a2)?),
        )?;
        Ok(vec![x1, x2, xh1, xh2])
    }

    /// `Y = a2*X1 - a1*X2` and `Yh = Xh1^a2 * Xh2^(-a1)` over the surface
    /// variables.
    pub fn inverse_images(&self) -> Result<Vec<Poly>, PolyError> {
        let v = Vars::surface();
        let [_, _, a1, a2] = self.exps()?;
        let y = Poly::var(&v, "X1")?
            .scale(&ExactScalar::integer(self.a2))?
            .checked_sub(&Poly::var(&v, "X2")?.scale(&ExactScalar::integer(self.a1))?)?;
        let yh = Poly::monomial(&v, vec![0, 0, a2, -a1], Coeff::one())?;
        Ok(vec![y, yh])
    }

    /// `(z1, z2)` on the line for the parameter value `y`.
    pub fn point(&self, y: Complex64, val: &NumericValuation) -> Result<(Complex64, Complex64), PolyError> {
        let c = self.c.eval(val)?;
        Ok((
            c * self.a1 as f64 + y * self.m2 as f64,
            c * self.a2 as f64 - y * self.m1 as f64,
        ))
    }
}

/// How a curve `F0(X1, X2) = 0` relates to lines of rational slope.
#[derive(Clone, Debug, PartialEq)]
pub(crate) enum Slope {
    NotLine,
    Irrational,
    Rational(LineSpec),
    /// A rational-slope line whose constant `c` cannot be written exactly.
    Inexact(String),
}

/// Linear coefficients `(alpha, beta, gamma)` of `alpha*X1 + beta*X2 + gamma`,
/// or `None` when `f0` is not of total degree one in `X1, X2`.
pub(crate) fn linear_parts(f0: &Poly) -> Option<(Coeff, Coeff, Coeff)> {
    let i1 = f0.vars().index_of("X1")?;
    let i2 = f0.vars().index_of("X2")?;
    let mut alpha = Coeff::zero();
    let mut beta = Coeff::zero();
    let mut gamma = Coeff::zero();
    for (e, c) in f0.terms() {
        let others = e
            .iter()
            .enumerate()
            .any(|(i, x)| i != i1 && i != i2 && *x != 0);
        if others {
            return None;
        }
        match (e[i1], e[i2]) {
            (0, 0) => gamma = c.clone(),
            (1, 0) => alpha = c.clone(),
            (0, 1) => beta = c.clone(),
            _ => return None,
        }
    }
    if alpha.is_zero() && beta.is_zero() {
        return None;
    }
    Some((alpha, beta, gamma))
}

pub(crate) fn analyse_slope(f0: &Poly) -> Slope {
    let Some((alpha, beta, gamma)) = linear_parts(f0) else {
        return Slope::NotLine;
    };
    let (mut m1, mut m2, mut kappa) = if alpha.is_zero() {
        (0i64, 1i64, beta)
    } else if beta.is_zero() {
        (1, 0, alpha)
    } else {
        let Some(q) = alpha.rational_ratio(&beta) else {
            return Slope::Irrational;
        };
        let (Some(p), Some(r)) = (q.numer().to_i64(), q.denom().to_i64()) else {
            return Slope::Inexact("slope numerator or denominator exceeds 64 bits".into());
        };
        // alpha = p*kappa, beta = r*kappa
        (p, r, beta.scale_rational(&num_rational::BigRational::new(1.into(), r.into())))
    };
    if m1 < 0 || (m1 == 0 && m2 < 0) {
        m1 = -m1;
        m2 = -m2;
        kappa = -&kappa;
    }
    // c = -gamma / kappa
    let c = if gamma.is_zero() {
        Coeff::zero()
    } else if let Some(k) = kappa.as_scalar() {
        match k.inv().and_then(|ki| gamma.mul_scalar(&ki).ok()) {
            Some(g) => -&g,
            None => return Slope::Inexact("line scale is not invertible".into()),
        }
    } else if let Some(q) = gamma.rational_ratio(&kappa) {
        Coeff::rational(-q)
    } else {
        return Slope::Inexact(format!(
            "constant term is not an exact multiple of the line scale {kappa}"
        ));
    };
    match LineSpec::new(m1, m2, c) {
        Some(line) => Slope::Rational(line),
        None => Slope::Inexact("Bezout coefficients out of range".into()),
    }
}

/// The rational-slope line cut out by `f0`, when there is one.
pub fn detect_rational_slope(f0: &Poly) -> Option<LineSpec> {
    match analyse_slope(f0) {
        Slope::Rational(l) => Some(l),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn surf(s: &str) -> Poly {
        Poly::parse(s, &Vars::surface()).unwrap()
    }

    #[test]
    fn unit_line() {
        let l = detect_rational_slope(&surf("X1 + X2 - 1")).unwrap();
        assert_eq!((l.m1, l.m2, l.a1, l.a2), (1, 1, 0, 1));
        assert_eq!(l.c, Coeff::one());
        assert_eq!(l.chat, ExactScalar::symbol("E"));
    }

    #[test]
    fn non_lines_and_irrational_slopes() {
        assert_eq!(detect_rational_slope(&surf("X1*X2 - 1")), None);
        assert_eq!(detect_rational_slope(&surf("X1 + SQRT2*X2")), None);
        assert_eq!(analyse_slope(&surf("X1 + I*X2")), Slope::Irrational);
        assert_eq!(analyse_slope(&surf("X1^2 + X2")), Slope::NotLine);
    }

    #[test]
    fn scaled_and_symbolic_lines() {
        let l = detect_rational_slope(&surf("-4*X1 + 6*X2 + 2")).unwrap();
        assert_eq!((l.m1, l.m2), (2, -3));
        assert_eq!(l.c, Coeff::one());
        assert_eq!(l.a1 * l.m1 + l.a2 * l.m2, 1);
        let l = detect_rational_slope(&surf("E*X1 + E*X2 - E")).unwrap();
        assert_eq!(l.c, Coeff::one());
        let l = detect_rational_slope(&surf("X1 + X2 - 1/2")).unwrap();
        assert_eq!(l.chat, ExactScalar::symbol("CHAT"));
        assert!(matches!(
            analyse_slope(&surf("(E+1)*X1 + (E+1)*X2 - 1")),
            Slope::Inexact(_)
        ));
        let l = detect_rational_slope(&surf("(E+1)*X1 + (E+1)*X2 - 2*E - 2")).unwrap();
        assert_eq!(l.c, Coeff::integer(2));
    }

    #[test]
    fn axis_lines() {
        let l = detect_rational_slope(&surf("X2 - 3")).unwrap();
        assert_eq!((l.m1, l.m2, l.a1, l.a2), (0, 1, 0, 1));
        let l = detect_rational_slope(&surf("-X1 + 3")).unwrap();
        assert_eq!((l.m1, l.m2, l.a1, l.a2), (1, 0, 1, 0));
        assert_eq!(l.c, Coeff::integer(3));
    }

    #[test]
    fn bezout_tie_breaks() {
        assert_eq!(bezout_canonical(1, 1), Some((0, 1)));
        assert_eq!(bezout_canonical(3, 2), Some((1, -1)));
        assert_eq!(bezout_canonical(1, 2), Some((1, 0)));
        assert_eq!(bezout_canonical(2, 3), Some((-1, 1)));
        assert_eq!(bezout_canonical(2, 4), None);
        for m1 in -12i64..=12 {
            for m2 in -12i64..=12 {
                let Some((a1, a2)) = bezout_canonical(m1, m2) else { continue };
                assert_eq!(a1 * m1 + a2 * m2, 1);
                // brute force the minimal |a1|
                if m2 != 0 {
                    let best = (-30i64..=30)
                        .filter(|a| (1 - a * m1) % m2 == 0)
                        .min_by_key(|a| (a.abs(), -a.signum()))
                        .unwrap();
                    assert_eq!(a1, best, "m = ({m1}, {m2})");
                }
            }
        }
    }
}
