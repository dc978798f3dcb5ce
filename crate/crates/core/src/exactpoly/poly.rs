use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use super::scalar::{Coeff, ExactScalar};
use super::{add_exp, mul_exp, NumericValuation, PolyError};

/// Ordered variable names, some flagged as units.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vars {
    names: Vec<String>,
    units: Vec<bool>,
}

impl Vars {
    pub fn new(names: &[&str], unit_names: &[&str]) -> Self {
        Vars {
            names: names.iter().map(|s| s.to_string()).collect(),
            units: names.iter().map(|n| unit_names.contains(n)).collect(),
        }
    }

    pub fn from_parts(names: Vec<String>, units: Vec<bool>) -> Self {
        assert_eq!(names.len(), units.len());
        Vars { names, units }
    }

    /// `X1, X2, Xh1, Xh2` with the hatted pair as units.
    pub fn surface() -> Self {
        Vars::new(&["X1", "X2", "Xh1", "Xh2"], &["Xh1", "Xh2"])
    }

    /// `Y, Yh` with `Yh` a unit.
    pub fn reduced() -> Self {
        Vars::new(&["Y", "Yh"], &["Yh"])
    }

    /// `X1..Xn, Xh1..Xhn` with the hatted block as units.
    pub fn exponential(n: usize) -> Self {
        let mut names = Vec::with_capacity(2 * n);
        let mut units = Vec::with_capacity(2 * n);
        for i in 1..=n {
            names.push(format!("X{i}"));
            units.push(false);
        }
        for i in 1..=n {
            names.push(format!("Xh{i}"));
            units.push(true);
        }
        Vars { names, units }
    }

    /// A single non-unit variable.
    pub fn univariate(name: &str) -> Self {
        Vars::new(&[name], &[])
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn is_unit(&self, i: usize) -> bool {
        self.units[i]
    }

    pub fn unit_names(&self) -> Vec<String> {
        self.names
            .iter()
            .zip(&self.units)
            .filter(|(_, u)| **u)
            .map(|(n, _)| n.clone())
            .collect()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// Exact multivariate Laurent polynomial.
///
/// Invariants: no stored coefficient is zero; every exponent vector has one
/// entry per variable; negative entries only sit on unit variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    vars: Vars,
    terms: BTreeMap<Vec<i32>, Coeff>,
}

impl Poly {
    pub fn zero(vars: &Vars) -> Self {
        Poly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &Vars, c: Coeff) -> Self {
        let mut p = Poly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    pub fn scalar(vars: &Vars, s: ExactScalar) -> Self {
        Poly::constant(vars, Coeff::from_scalar(s))
    }

    pub fn integer(vars: &Vars, n: i64) -> Self {
        Poly::constant(vars, Coeff::integer(n))
    }

    pub fn var(vars: &Vars, name: &str) -> Result<Self, PolyError> {
        let i = vars
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        let mut exps = vec![0; vars.len()];
        exps[i] = 1;
        Poly::monomial(vars, exps, Coeff::one())
    }

    pub fn monomial(vars: &Vars, exps: Vec<i32>, c: Coeff) -> Result<Self, PolyError> {
        let mut p = Poly::zero(vars);
        p.add_term(exps, &c)?;
        Ok(p)
    }

    pub fn from_terms<I>(vars: &Vars, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (Vec<i32>, ExactScalar)>,
    {
        let mut p = Poly::zero(vars);
        for (exps, s) in terms {
            p.add_term(exps, &Coeff::from_scalar(s))?;
        }
        Ok(p)
    }

    /// Adds `c * x^exps`, validating the exponent vector.
    pub fn add_term(&mut self, exps: Vec<i32>, c: &Coeff) -> Result<(), PolyError> {
        if exps.len() != self.vars.len() {
            return Err(PolyError::Arity {
                expected: self.vars.len(),
                got: exps.len(),
            });
        }
        for (i, e) in exps.iter().enumerate() {
            if *e == i32::MIN {
                return Err(PolyError::ExponentOverflow);
            }
            if *e < 0 && !self.vars.is_unit(i) {
                return Err(PolyError::NegativeExponent(self.vars.names[i].clone()));
            }
        }
        if c.is_zero() {
            return Ok(());
        }
        let sum = match self.terms.get(&exps) {
            Some(old) => old + c,
            None => c.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&exps);
        } else {
            self.terms.insert(exps, sum);
        }
        Ok(())
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    /// `(exponents, coefficient)` in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&[i32], &Coeff)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    /// Flattened `(exponents, scalar)` pairs; this is the JSON term list.
    pub fn scalar_terms(&self) -> impl Iterator<Item = (&[i32], ExactScalar)> + '_ {
        self.terms
            .iter()
            .flat_map(|(e, c)| c.scalars().map(move |s| (e.as_slice(), s)))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.values().map(Coeff::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|x| *x == 0))
    }

    pub fn coeff(&self, exps: &[i32]) -> Coeff {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn constant_coeff(&self) -> Coeff {
        self.coeff(&vec![0; self.vars.len()])
    }

    pub fn total_degree(&self) -> Option<i64> {
        self.terms
            .keys()
            .map(|e| e.iter().map(|x| *x as i64).sum())
            .max()
    }

    pub fn max_exp(&self, i: usize) -> Option<i32> {
        self.terms.keys().map(|e| e[i]).max()
    }

    pub fn min_exp(&self, i: usize) -> Option<i32> {
        self.terms.keys().map(|e| e[i]).min()
    }

    pub fn depends_on(&self, i: usize) -> bool {
        self.terms.keys().any(|e| e[i] != 0)
    }

    pub fn depends_on_name(&self, name: &str) -> bool {
        self.vars.index_of(name).is_some_and(|i| self.depends_on(i))
    }

    pub fn has_symbols(&self) -> bool {
        self.terms.values().any(Coeff::has_symbols)
    }

    /// Largest term in graded-lexicographic order.
    pub fn leading_term(&self) -> Option<(&[i32], &Coeff)> {
        self.terms
            .iter()
            .max_by_key(|(e, _)| (e.iter().map(|x| *x as i64).sum::<i64>(), (*e).clone()))
            .map(|(e, c)| (e.as_slice(), c))
    }

    fn check_same_vars(&self, other: &Poly) -> Result<(), PolyError> {
        if self.vars != other.vars {
            return Err(PolyError::VarMismatch(
                self.vars.names.clone(),
                other.vars.names.clone(),
            ));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.check_same_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c)?;
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.check_same_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), &-c)?;
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.check_same_vars(other)?;
        let mut out = Poly::zero(&self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps = ea
                    .iter()
                    .zip(eb)
                    .map(|(a, b)| add_exp(*a, *b))
                    .collect::<Result<Vec<_>, _>>()?;
                out.add_term(exps, &ca.checked_mul(cb)?)?;
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: &ExactScalar) -> Result<Poly, PolyError> {
        let mut out = Poly::zero(&self.vars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), &c.mul_scalar(s)?)?;
        }
        Ok(out)
    }

    pub fn scale_coeff(&self, k: &Coeff) -> Result<Poly, PolyError> {
        let mut out = Poly::zero(&self.vars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), &c.checked_mul(k)?)?;
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Result<Poly, PolyError> {
        let mut result = Poly::integer(&self.vars, 1);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.checked_mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(result)
    }

    /// Multiplies by `v^k` for a unit variable `v`.
    pub fn shift_unit(&self, i: usize, k: i32) -> Result<Poly, PolyError> {
        if !self.vars.is_unit(i) && k < 0 {
            return Err(PolyError::NegativeExponent(self.vars.names[i].clone()));
        }
        let mut out = Poly::zero(&self.vars);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e[i] = add_exp(e[i], k)?;
            out.add_term(e, c)?;
        }
        Ok(out)
    }

    /// A unit is a single nonzero scalar times a monomial in unit variables.
    pub fn as_unit(&self) -> Option<(ExactScalar, &[i32])> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        if c.len() != 1 {
            return None;
        }
        let only_units = e
            .iter()
            .enumerate()
            .all(|(i, x)| *x == 0 || self.vars.is_unit(i));
        only_units.then(|| (c.scalars().next().unwrap(), e.as_slice()))
    }

    pub fn is_unit(&self) -> bool {
        self.as_unit().is_some()
    }

    /// `u^k` for a unit `u`; negative `k` allowed.
    pub fn unit_pow(&self, k: i32) -> Result<Poly, PolyError> {
        let (s, e) = self
            .as_unit()
            .ok_or_else(|| PolyError::NonUnitImage(self.to_string()))?;
        let exps = e
            .iter()
            .map(|x| mul_exp(*x, k))
            .collect::<Result<Vec<_>, _>>()?;
        Poly::monomial(&self.vars, exps, Coeff::from_scalar(s.pow(k)?))
    }

    /// Numeric value at `point` with symbols taken from `val`.
    pub fn eval(&self, point: &[Complex64], val: &NumericValuation) -> Result<Complex64, PolyError> {
        if point.len() != self.vars.len() {
            return Err(PolyError::Arity {
                expected: self.vars.len(),
                got: point.len(),
            });
        }
        for (i, x) in point.iter().enumerate() {
            if self.vars.is_unit(i) && *x == Complex64::new(0.0, 0.0) {
                return Err(PolyError::ZeroUnitValue(self.vars.names[i].clone()));
            }
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for (e, c) in &self.terms {
            let mut m = c.eval(val)?;
            for (x, k) in point.iter().zip(e) {
                if *k != 0 {
                    m *= x.powi(*k);
                }
            }
            acc += m;
        }
        Ok(acc)
    }

    /// Composition `p(images[0], ..., images[n-1])`.
    ///
    /// Every image lives over one common target variable list. Images for
    /// unit variables of `self` must be units in the target.
    pub fn substitute(&self, images: &[Poly]) -> Result<Poly, PolyError> {
        if images.len() != self.vars.len() {
            return Err(PolyError::Arity {
                expected: self.vars.len(),
                got: images.len(),
            });
        }
        let Some(target) = images.first().map(|p| p.vars.clone()) else {
            return Ok(self.clone());
        };
        for img in images {
            if img.vars != target {
                return Err(PolyError::VarMismatch(
                    target.names.clone(),
                    img.vars.names.clone(),
                ));
            }
        }
        for (i, img) in images.iter().enumerate() {
            if self.vars.is_unit(i) && !img.is_unit() {
                return Err(PolyError::NonUnitImage(self.vars.names[i].clone()));
            }
        }
        let mut cache: HashMap<(usize, i32), Poly> = HashMap::new();
        let mut out = Poly::zero(&target);
        for (e, c) in &self.terms {
            let mut term = Poly::constant(&target, c.clone());
            for (i, k) in e.iter().enumerate() {
                if *k == 0 {
                    continue;
                }
                let power = match cache.get(&(i, *k)) {
                    Some(p) => p.clone(),
                    None => {
                        let p = if *k > 0 {
                            images[i].pow(*k as u32)?
                        } else {
                            images[i].unit_pow(*k)?
                        };
                        cache.insert((i, *k), p.clone());
                        p
                    }
                };
                term = term.checked_mul(&power)?;
            }
            out = out.checked_add(&term)?;
        }
        Ok(out)
    }

    /// Formal partial derivative with respect to the named variable.
    pub fn diff(&self, name: &str) -> Result<Poly, PolyError> {
        let i = self
            .vars
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        self.diff_index(i)
    }

    pub fn diff_index(&self, i: usize) -> Result<Poly, PolyError> {
        let mut out = Poly::zero(&self.vars);
        for (e, c) in &self.terms {
            let k = e[i];
            if k == 0 {
                continue;
            }
            let mut e = e.clone();
            e[i] = add_exp(k, -1)?;
            out.add_term(e, &c.mul_scalar(&ExactScalar::integer(k as i64))?)?;
        }
        Ok(out)
    }

    /// Same terms over a renamed variable list of equal shape.
    pub fn relabel(&self, vars: &Vars) -> Result<Poly, PolyError> {
        if vars.len() != self.vars.len() {
            return Err(PolyError::VarMismatch(
                self.vars.names.clone(),
                vars.names.clone(),
            ));
        }
        let mut out = Poly::zero(vars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c)?;
        }
        Ok(out)
    }

    /// Re-expresses `self` over `vars`, matching variables by name. Variables
    /// of `self` missing from `vars` must not occur.
    pub fn embed(&self, vars: &Vars) -> Result<Poly, PolyError> {
        let map = self
            .vars
            .names
            .iter()
            .enumerate()
            .map(|(i, n)| (i, vars.index_of(n)))
            .collect::<Vec<_>>();
        let mut out = Poly::zero(vars);
        for (e, c) in &self.terms {
            let mut ne = vec![0; vars.len()];
            for (i, j) in &map {
                match j {
                    Some(j) => ne[*j] = e[*i],
                    None if e[*i] != 0 => {
                        return Err(PolyError::UnknownVariable(self.vars.names[*i].clone()))
                    }
                    None => {}
                }
            }
            out.add_term(ne, c)?;
        }
        Ok(out)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        self.checked_add(o).expect("polynomial addition")
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        self.checked_sub(o).expect("polynomial subtraction")
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        self.checked_mul(o).expect("polynomial multiplication")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (e, c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, k)| **k != 0)
                .map(|(i, k)| {
                    if *k == 1 {
                        self.vars.names[i].clone()
                    } else {
                        format!("{}^{}", self.vars.names[i], k)
                    }
                })
                .collect();
            let cs = c.to_string();
            parts.push(match (mono.is_empty(), cs.as_str()) {
                (true, _) => cs,
                (false, "1") => mono.join("*"),
                (false, "-1") => format!("-{}", mono.join("*")),
                _ => format!("{}*{}", cs, mono.join("*")),
            });
        }
        write!(f, "{}", join_signed(&parts))
    }
}

/// `a + b + -c` written as `a + b - c`.
pub(crate) fn join_signed(parts: &[String]) -> String {
    let mut out = String::new();
    for (i, p) in parts.iter().enumerate() {
        match (i, p.strip_prefix('-')) {
            (0, _) => out.push_str(p),
            (_, Some(rest)) => {
                out.push_str(" - ");
                out.push_str(rest);
            }
            (_, None) => {
                out.push_str(" + ");
                out.push_str(p);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::GaussRat;

    fn x(vars: &Vars, n: &str) -> Poly {
        Poly::var(vars, n).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let v = Vars::new(&["X1", "X2"], &[]);
        let (a, b) = (x(&v, "X1"), x(&v, "X2"));
        let lhs = &(&a + &b) * &(&a - &b);
        let rhs = &(&a * &a) - &(&b * &b);
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.num_terms(), 2);
    }

    #[test]
    fn adding_zero_is_identity() {
        let v = Vars::surface();
        let p = &(&x(&v, "X1") * &x(&v, "Xh2")) - &Poly::integer(&v, 3);
        assert_eq!(&p + &Poly::zero(&v), p);
    }

    #[test]
    fn laurent_monomial_shift() {
        let v = Vars::new(&["Xh1", "Xh2"], &["Xh1", "Xh2"]);
        let (a, b) = (x(&v, "Xh1"), x(&v, "Xh2"));
        let p = &(&a * &b) - &Poly::integer(&v, 1);
        let a_inv = a.unit_pow(-1).unwrap();
        let got = &p * &a_inv;
        assert_eq!(got, &b - &a_inv);
    }

    #[test]
    fn mismatched_variables_error() {
        let p = Poly::integer(&Vars::surface(), 1);
        let q = Poly::integer(&Vars::reduced(), 1);
        assert!(matches!(p.checked_add(&q), Err(PolyError::VarMismatch(..))));
    }

    #[test]
    fn negative_exponent_needs_unit() {
        let v = Vars::surface();
        let err = Poly::monomial(&v, vec![-1, 0, 0, 0], Coeff::one()).unwrap_err();
        assert_eq!(err, PolyError::NegativeExponent("X1".into()));
        assert!(Poly::monomial(&v, vec![0, 0, -1, 0], Coeff::one()).is_ok());
    }

    #[test]
    fn eval_rejects_zero_units() {
        let v = Vars::reduced();
        let p = x(&v, "Yh");
        let val = NumericValuation::standard();
        let zero = Complex64::new(0.0, 0.0);
        assert!(matches!(
            p.eval(&[zero, zero], &val),
            Err(PolyError::ZeroUnitValue(_))
        ));
    }

    #[test]
    fn eval_product_of_exponentials() {
        let v = Vars::new(&["Xh1", "Xh2"], &["Xh1", "Xh2"]);
        let p = &x(&v, "Xh1") * &x(&v, "Xh2");
        let z = Complex64::new(0.3, 0.0);
        let one = Complex64::new(1.0, 0.0);
        let got = p
            .eval(&[z.exp(), (one - z).exp()], &NumericValuation::standard())
            .unwrap();
        assert!((got - std::f64::consts::E).norm() < 1e-14);
    }

    #[test]
    fn diff_power_rules() {
        let v = Vars::reduced();
        let (y, yh) = (x(&v, "Y"), x(&v, "Yh"));
        let p = &(&y * &y) * &yh;
        let two = Poly::integer(&v, 2);
        assert_eq!(p.diff("Y").unwrap(), &(&two * &y) * &yh);
        let inv = yh.unit_pow(-1).unwrap();
        assert_eq!(inv.diff("Yh").unwrap(), -&yh.unit_pow(-2).unwrap());
        assert!(yh.diff("Y").unwrap().is_zero());
        assert!(matches!(p.diff("Z"), Err(PolyError::UnknownVariable(_))));
    }

    #[test]
    fn substitute_rejects_non_unit_images() {
        let src = Vars::new(&["A"], &["A"]);
        let tgt = Vars::univariate("Y");
        let p = x(&src, "A");
        let img = &x(&tgt, "Y") + &Poly::integer(&tgt, 1);
        assert!(matches!(
            p.substitute(&[img]),
            Err(PolyError::NonUnitImage(_))
        ));
    }

    #[test]
    fn identity_substitution() {
        let v = Vars::surface();
        let p = &(&x(&v, "X1") * &x(&v, "Xh2").unit_pow(-2).unwrap())
            - &Poly::scalar(&v, ExactScalar::symbol("E"));
        let images: Vec<Poly> = v.names().iter().map(|n| x(&v, n)).collect();
        assert_eq!(p.substitute(&images).unwrap(), p);
    }

    #[test]
    fn unit_pow_inverts_scalars() {
        let v = Vars::reduced();
        let u = Poly::monomial(
            &v,
            vec![0, 2],
            Coeff::from_scalar(ExactScalar::new(GaussRat::ratio(2, 3), crate::exactpoly::SymMono::symbol("E"))),
        )
        .unwrap();
        let back = &u * &u.unit_pow(-1).unwrap();
        assert_eq!(back, Poly::integer(&v, 1));
    }
}
