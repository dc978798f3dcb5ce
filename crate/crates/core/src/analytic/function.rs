use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{c64, AnalyticError};
use crate::exactpoly::{NumericValuation, Poly, Vars};
use crate::roots::ComplexPoly;

/// `(value, derivative) * exp(-log_scale)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Scaled {
    pub value: Complex64,
    pub deriv: Complex64,
    pub log_scale: f64,
}

impl Scaled {
    pub fn unscaled(value: Complex64, deriv: Complex64) -> Self {
        Scaled {
            value,
            deriv,
            log_scale: 0.0,
        }
    }

    /// `ln |value|` including the scale.
    pub fn ln_abs(&self) -> f64 {
        self.value.norm().ln() + self.log_scale
    }

    pub fn log_derivative(&self) -> Complex64 {
        self.deriv / self.value
    }

    /// Unscaled value; may overflow to infinity.
    pub fn full_value(&self) -> Complex64 {
        self.value * self.log_scale.exp()
    }
}

/// Something analytic away from a finite set of excluded points.
pub trait Holomorphic: Sync {
    fn eval_scaled(&self, z: Complex64) -> Result<Scaled, AnalyticError>;

    fn excluded_points(&self) -> &[Complex64] {
        &[]
    }

    fn value(&self, z: Complex64) -> Result<Complex64, AnalyticError> {
        Ok(self.eval_scaled(z)?.full_value())
    }

    fn value_and_derivative(&self, z: Complex64) -> Result<(Complex64, Complex64), AnalyticError> {
        let s = self.eval_scaled(z)?;
        let k = s.log_scale.exp();
        Ok((s.value * k, s.deriv * k))
    }
}

impl Holomorphic for ComplexPoly {
    fn eval_scaled(&self, z: Complex64) -> Result<Scaled, AnalyticError> {
        let (p, dp) = self.eval_with_deriv(z);
        Ok(Scaled::unscaled(p, dp))
    }
}

/// A closure returning `(value, derivative)`.
pub struct FnHolomorphic<F> {
    f: F,
    excluded: Vec<Complex64>,
    clearance: f64,
}

impl<F> FnHolomorphic<F>
where
    F: Fn(Complex64) -> (Complex64, Complex64) + Sync,
{
    pub fn new(f: F) -> Self {
        FnHolomorphic {
            f,
            excluded: Vec::new(),
            clearance: 1e-6,
        }
    }

    pub fn excluding(mut self, points: &[Complex64]) -> Self {
        self.excluded.extend_from_slice(points);
        self
    }
}

impl<F> Holomorphic for FnHolomorphic<F>
where
    F: Fn(Complex64) -> (Complex64, Complex64) + Sync,
{
    fn eval_scaled(&self, z: Complex64) -> Result<Scaled, AnalyticError> {
        check_clear(z, &self.excluded, self.clearance)?;
        let (v, d) = (self.f)(z);
        Ok(Scaled::unscaled(v, d))
    }

    fn excluded_points(&self) -> &[Complex64] {
        &self.excluded
    }
}

fn check_clear(z: Complex64, excluded: &[Complex64], clearance: f64) -> Result<(), AnalyticError> {
    match excluded.iter().find(|p| (z - **p).norm() < clearance) {
        Some(p) => Err(AnalyticError::NearExcluded { z, point: *p }),
        None => Ok(()),
    }
}

/// `num(z) / den(z)` with exact coefficients in the single variable `z`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RationalFunction {
    pub num: Poly,
    pub den: Poly,
}

impl RationalFunction {
    pub fn polynomial(num: Poly) -> Self {
        let den = Poly::integer(num.vars(), 1);
        RationalFunction { num, den }
    }

    /// Parses numerator and denominator over the variable `z`.
    pub fn parse(num: &str, den: &str) -> Result<Self, AnalyticError> {
        let v = Vars::univariate("z");
        let num = Poly::parse(num, &v)?;
        let den = Poly::parse(den, &v)?;
        if den.is_zero() {
            return Err(AnalyticError::InvalidInput("zero denominator".into()));
        }
        Ok(RationalFunction { num, den })
    }

    fn numeric(p: &Poly, val: &NumericValuation) -> Result<ComplexPoly, AnalyticError> {
        if p.vars().len() != 1 {
            return Err(AnalyticError::InvalidInput(format!(
                "expected one variable, got {:?}",
                p.vars().names()
            )));
        }
        let deg = p.max_exp(0).unwrap_or(0).max(0) as usize;
        let mut c = vec![c64(0.0, 0.0); deg + 1];
        for (e, k) in p.terms() {
            c[e[0] as usize] = k.eval(val)?;
        }
        Ok(ComplexPoly::new(c))
    }
}

/// Rational coordinate functions `xi_1..xi_n` and the points to avoid.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurveParametrization {
    pub xi: Vec<RationalFunction>,
    pub excluded_points: Vec<Complex64>,
}

impl CurveParametrization {
    /// Adds every denominator root to `extra_excluded`.
    pub fn new(
        xi: Vec<RationalFunction>,
        extra_excluded: &[Complex64],
        val: &NumericValuation,
    ) -> Result<Self, AnalyticError> {
        let mut excluded = extra_excluded.to_vec();
        for r in &xi {
            let den = RationalFunction::numeric(&r.den, val)?;
            if den.degree().is_none() {
                return Err(AnalyticError::InvalidInput("zero denominator".into()));
            }
            for root in den.roots() {
                if !excluded.iter().any(|p| (p - root).norm() < 1e-10) {
                    excluded.push(root);
                }
            }
        }
        Ok(CurveParametrization {
            xi,
            excluded_points: excluded,
        })
    }

    /// Every denominator root lies within 1e-10 of an excluded point.
    pub fn check_excluded(&self, val: &NumericValuation) -> Result<(), AnalyticError> {
        for r in &self.xi {
            for root in RationalFunction::numeric(&r.den, val)?.roots() {
                if !self.excluded_points.iter().any(|p| (p - root).norm() < 1e-10) {
                    return Err(AnalyticError::InvalidInput(format!(
                        "pole {root} missing from excluded points"
                    )));
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
struct CompiledTerm {
    coeff: Complex64,
    x_exps: Vec<i32>,
    hat_exps: Vec<f64>,
}

/// `Phi(z) = F(xi(z), exp(xi(z)))` with `F` over `X1..Xn, Xh1..Xhn`.
#[derive(Clone, Debug)]
pub struct PhiFunction {
    pub f: Poly,
    pub param: CurveParametrization,
    pub valuation: NumericValuation,
    pub clearance: f64,
    terms: Vec<CompiledTerm>,
    num: Vec<(ComplexPoly, ComplexPoly)>,
    den: Vec<(ComplexPoly, ComplexPoly)>,
}

impl PhiFunction {
    pub fn new(
        f: Poly,
        param: CurveParametrization,
        valuation: NumericValuation,
    ) -> Result<Self, AnalyticError> {
        let n = param.xi.len();
        if f.vars().len() != 2 * n {
            return Err(AnalyticError::InvalidInput(format!(
                "F has {} variables but the parametrization has {n} coordinates",
                f.vars().len()
            )));
        }
        let f = f.relabel(&Vars::exponential(n))?;
        let terms = f
            .terms()
            .map(|(e, c)| {
                Ok(CompiledTerm {
                    coeff: c.eval(&valuation)?,
                    x_exps: e[..n].to_vec(),
                    hat_exps: e[n..].iter().map(|k| *k as f64).collect(),
                })
            })
            .collect::<Result<Vec<_>, AnalyticError>>()?;
        let with_deriv = |p: ComplexPoly| {
            let d = p.derivative();
            (p, d)
        };
        let num = param
            .xi
            .iter()
            .map(|r| RationalFunction::numeric(&r.num, &valuation).map(with_deriv))
            .collect::<Result<Vec<_>, _>>()?;
        let den = param
            .xi
            .iter()
            .map(|r| RationalFunction::numeric(&r.den, &valuation).map(with_deriv))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PhiFunction {
            f,
            param,
            valuation,
            clearance: 1e-6,
            terms,
            num,
            den,
        })
    }

    /// Builds `Phi` from infix strings: `F` over `X1..Xn, Xh1..Xhn` and each
    /// `xi_i` as a `(numerator, denominator)` pair in `z`.
    pub fn from_infix(f: &str, xi: &[(&str, &str)]) -> Result<Self, AnalyticError> {
        let val = NumericValuation::standard();
        let xi = xi
            .iter()
            .map(|(n, d)| RationalFunction::parse(n, d))
            .collect::<Result<Vec<_>, _>>()?;
        let f = Poly::parse(f, &Vars::exponential(xi.len()))?;
        let param = CurveParametrization::new(xi, &[], &val)?;
        PhiFunction::new(f, param, val)
    }

    pub fn with_clearance(mut self, clearance: f64) -> Self {
        self.clearance = clearance;
        self
    }

    pub fn n(&self) -> usize {
        self.param.xi.len()
    }

    /// `xi_i(z)` and `xi_i'(z)`.
    pub fn coordinates(&self, z: Complex64) -> Vec<(Complex64, Complex64)> {
        self.num
            .iter()
            .zip(&self.den)
            .map(|((n, dn), (d, dd))| {
                let (nv, dnv) = (n.eval(z), dn.eval(z));
                let (dv, ddv) = (d.eval(z), dd.eval(z));
                (nv / dv, (dnv * dv - nv * ddv) / (dv * dv))
            })
            .collect()
    }
}

impl Holomorphic for PhiFunction {
    fn eval_scaled(&self, z: Complex64) -> Result<Scaled, AnalyticError> {
        check_clear(z, &self.param.excluded_points, self.clearance)?;
        let xs = self.coordinates(z);
        let zero = c64(0.0, 0.0);

        // exponent of each term's exponential factor
        let b: Vec<Complex64> = self
            .terms
            .iter()
            .map(|t| {
                t.hat_exps
                    .iter()
                    .zip(&xs)
                    .map(|(k, (x, _))| x * *k)
                    .sum::<Complex64>()
            })
            .collect();
        let s = b.iter().map(|x| x.re).fold(f64::NEG_INFINITY, f64::max);
        let s = if s.is_finite() { s } else { 0.0 };

        let mut value = zero;
        let mut deriv = zero;
        for (t, bt) in self.terms.iter().zip(&b) {
            // monomial in the x's and its derivative, by the product rule
            let mut p = c64(1.0, 0.0);
            let mut dp = zero;
            for (k, (x, dx)) in t.x_exps.iter().zip(&xs) {
                if *k == 0 {
                    continue;
                }
                let xk = x.powi(*k);
                let dxk = x.powi(*k - 1) * *dx * (*k as f64);
                dp = dp * xk + p * dxk;
                p *= xk;
            }
            let db: Complex64 = t
                .hat_exps
                .iter()
                .zip(&xs)
                .map(|(k, (_, dx))| dx * *k)
                .sum();
            let e = (bt - s).exp() * t.coeff;
            value += p * e;
            deriv += (dp + p * db) * e;
        }
        Ok(Scaled {
            value,
            deriv,
            log_scale: s,
        })
    }

    fn excluded_points(&self) -> &[Complex64] {
        &self.param.excluded_points
    }
}

/// `Phi(z)` and `Phi'(z)`, unscaled.
pub fn phi_eval(phi: &PhiFunction, z: Complex64) -> Result<(Complex64, Complex64), AnalyticError> {
    phi.value_and_derivative(z)
}
