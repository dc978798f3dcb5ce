//! Exact coefficients: Gaussian rationals, monomials in transcendental
//! symbols, and finite sums of the two.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::eval::NumericValuation;
use super::{add_exp, mul_exp, PolyError};

pub type Rational = BigRational;

/// Parses `"p/q"` or `"p"` into a rational in lowest terms.
pub fn parse_rational(s: &str) -> Result<Rational, PolyError> {
    let s = s.trim();
    let bad = || PolyError::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Always `p/q`, with `q > 0`.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn rational_to_f64(r: &Rational) -> f64 {
    // numerator and denominator may individually overflow f64
    match (r.numer().to_f64(), r.denom().to_f64()) {
        (Some(p), Some(q)) if p.is_finite() && q.is_finite() => p / q,
        _ => {
            let shift = r.numer().bits().max(r.denom().bits()) as i64 - 60;
            let p = (r.numer() >> shift.max(0) as usize).to_f64().unwrap_or(0.0);
            let q = (r.denom() >> shift.max(0) as usize).to_f64().unwrap_or(1.0);
            p / q
        }
    }
}

/// An element of Q(i).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussRat {
    pub re: Rational,
    pub im: Rational,
}

impl GaussRat {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussRat { re, im }
    }

    pub fn zero() -> Self {
        GaussRat::new(Rational::zero(), Rational::zero())
    }

    pub fn one() -> Self {
        GaussRat::from_integer(1)
    }

    pub fn i() -> Self {
        GaussRat::new(Rational::zero(), Rational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        GaussRat::new(Rational::from_integer(n.into()), Rational::zero())
    }

    pub fn from_rational(r: Rational) -> Self {
        GaussRat::new(r, Rational::zero())
    }

    pub fn ratio(p: i64, q: i64) -> Self {
        GaussRat::from_rational(Rational::new(p.into(), q.into()))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRat::new(self.re.clone(), -self.im.clone())
    }

    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(GaussRat::new(&self.re / &n, -&self.im / &n))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        GaussRat::new(&self.re * r, &self.im * r)
    }

    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(rational_to_f64(&self.re), rational_to_f64(&self.im))
    }

    /// Exact conversion of a finite double pair (every finite f64 is dyadic).
    pub fn from_c64(z: Complex64) -> Option<Self> {
        Some(GaussRat::new(
            Rational::from_float(z.re)?,
            Rational::from_float(z.im)?,
        ))
    }
}

impl Add for &GaussRat {
    type Output = GaussRat;
    fn add(self, o: &GaussRat) -> GaussRat {
        GaussRat::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl Sub for &GaussRat {
    type Output = GaussRat;
    fn sub(self, o: &GaussRat) -> GaussRat {
        GaussRat::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl Mul for &GaussRat {
    type Output = GaussRat;
    fn mul(self, o: &GaussRat) -> GaussRat {
        GaussRat::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat::new(-&self.re, -&self.im)
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) if self.im.is_one() => write!(f, "I"),
            (true, false) if (-&self.im).is_one() => write!(f, "-I"),
            (true, false) => write!(f, "{}*I", self.im),
            (false, false) if self.im.is_one() => write!(f, "({} + I)", self.re),
            (false, false) if (-&self.im).is_one() => write!(f, "({} - I)", self.re),
            (false, false) if self.im.is_negative() => write!(f, "({} - {}*I)", self.re, -&self.im),
            (false, false) => write!(f, "({} + {}*I)", self.re, self.im),
        }
    }
}

/// Product of transcendental symbols with nonzero integer exponents.
///
/// Symbols are algebraically independent: `E` and `1` never compare equal,
/// nor do `CHAT` and `E`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymMono(BTreeMap<String, i32>);

impl SymMono {
    pub fn one() -> Self {
        SymMono::default()
    }

    pub fn symbol(name: &str) -> Self {
        SymMono::power(name, 1)
    }

    pub fn power(name: &str, exp: i32) -> Self {
        let mut m = BTreeMap::new();
        if exp != 0 {
            m.insert(name.to_string(), exp);
        }
        SymMono(m)
    }

    pub fn from_map(map: BTreeMap<String, i32>) -> Self {
        SymMono(map.into_iter().filter(|(_, e)| *e != 0).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn powers(&self) -> &BTreeMap<String, i32> {
        &self.0
    }

    pub fn symbols(&self) -> impl Iterator<Item = &str> {
        self.0.keys().map(String::as_str)
    }

    pub fn mul(&self, other: &SymMono) -> Result<SymMono, PolyError> {
        let mut out = self.0.clone();
        for (s, e) in &other.0 {
            let slot = out.entry(s.clone()).or_insert(0);
            *slot = add_exp(*slot, *e)?;
            if *slot == 0 {
                out.remove(s);
            }
        }
        Ok(SymMono(out))
    }

    pub fn pow(&self, k: i32) -> Result<SymMono, PolyError> {
        let mut out = BTreeMap::new();
        for (s, e) in &self.0 {
            let v = mul_exp(*e, k)?;
            if v != 0 {
                out.insert(s.clone(), v);
            }
        }
        Ok(SymMono(out))
    }

    pub fn inv(&self) -> SymMono {
        // i32::MIN is rejected at construction by the exponent bound
        SymMono(self.0.iter().map(|(s, e)| (s.clone(), -e)).collect())
    }

    pub fn eval(&self, val: &NumericValuation) -> Result<Complex64, PolyError> {
        let mut acc = Complex64::new(1.0, 0.0);
        for (s, e) in &self.0 {
            let v = val
                .get(s)
                .ok_or_else(|| PolyError::MissingSymbol(s.clone()))?;
            acc *= v.powi(*e);
        }
        Ok(acc)
    }
}

impl fmt::Display for SymMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (s, e) in &self.0 {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A Gaussian rational times a Laurent monomial in tracked symbols.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExactScalar {
    pub value: GaussRat,
    pub syms: SymMono,
}

impl ExactScalar {
    pub fn new(value: GaussRat, syms: SymMono) -> Self {
        ExactScalar { value, syms }
    }

    pub fn from_gauss(value: GaussRat) -> Self {
        ExactScalar::new(value, SymMono::one())
    }

    pub fn integer(n: i64) -> Self {
        ExactScalar::from_gauss(GaussRat::from_integer(n))
    }

    pub fn symbol(name: &str) -> Self {
        ExactScalar::new(GaussRat::one(), SymMono::symbol(name))
    }

    pub fn symbol_power(name: &str, exp: i32) -> Self {
        ExactScalar::new(GaussRat::one(), SymMono::power(name, exp))
    }

    pub fn re(&self) -> &Rational {
        &self.value.re
    }

    pub fn im(&self) -> &Rational {
        &self.value.im
    }

    pub fn sym_powers(&self) -> &BTreeMap<String, i32> {
        self.syms.powers()
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn mul(&self, o: &ExactScalar) -> Result<ExactScalar, PolyError> {
        Ok(ExactScalar::new(&self.value * &o.value, self.syms.mul(&o.syms)?))
    }

    pub fn inv(&self) -> Option<ExactScalar> {
        Some(ExactScalar::new(self.value.inv()?, self.syms.inv()))
    }

    pub fn pow(&self, k: i32) -> Result<ExactScalar, PolyError> {
        let base = if k < 0 {
            self.inv().ok_or(PolyError::DivisionByZero)?
        } else {
            self.clone()
        };
        let mut value = GaussRat::one();
        for _ in 0..k.unsigned_abs() {
            value = &value * &base.value;
        }
        Ok(ExactScalar::new(value, self.syms.pow(k)?))
    }

    pub fn eval(&self, val: &NumericValuation) -> Result<Complex64, PolyError> {
        Ok(self.value.to_c64() * self.syms.eval(val)?)
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syms.is_one() {
            write!(f, "{}", self.value)
        } else if self.value.is_one() {
            write!(f, "{}", self.syms)
        } else if (-&self.value).is_one() {
            write!(f, "-{}", self.syms)
        } else {
            write!(f, "{}*{}", self.value, self.syms)
        }
    }
}

/// Finite sum of [`ExactScalar`]s with distinct symbol monomials.
///
/// This is the coefficient ring of [`super::Poly`]: Q(i) adjoined the tracked
/// symbols and their inverses.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coeff(BTreeMap<SymMono, GaussRat>);

impl Coeff {
    pub fn zero() -> Self {
        Coeff::default()
    }

    pub fn one() -> Self {
        Coeff::from_scalar(ExactScalar::integer(1))
    }

    pub fn integer(n: i64) -> Self {
        Coeff::from_scalar(ExactScalar::integer(n))
    }

    pub fn rational(r: Rational) -> Self {
        Coeff::from_scalar(ExactScalar::from_gauss(GaussRat::from_rational(r)))
    }

    pub fn from_scalar(s: ExactScalar) -> Self {
        let mut m = BTreeMap::new();
        if !s.value.is_zero() {
            m.insert(s.syms, s.value);
        }
        Coeff(m)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Entries in symbol-monomial order.
    pub fn scalars(&self) -> impl Iterator<Item = ExactScalar> + '_ {
        self.0
            .iter()
            .map(|(s, v)| ExactScalar::new(v.clone(), s.clone()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The coefficient as a single scalar, if it is one.
    pub fn as_scalar(&self) -> Option<ExactScalar> {
        match self.0.len() {
            0 => Some(ExactScalar::integer(0)),
            1 => self.scalars().next(),
            _ => None,
        }
    }

    /// Symbol-free Gaussian rational value, if there are no symbols.
    pub fn as_gauss(&self) -> Option<GaussRat> {
        match self.0.len() {
            0 => Some(GaussRat::zero()),
            1 => self.0.get(&SymMono::one()).cloned(),
            _ => None,
        }
    }

    pub fn has_symbols(&self) -> bool {
        self.0.keys().any(|s| !s.is_one())
    }

    pub fn symbols(&self) -> impl Iterator<Item = &str> {
        self.0.keys().flat_map(|m| m.symbols())
    }

    /// The last entry in symbol-monomial order; used for normalization.
    pub fn last_scalar(&self) -> Option<ExactScalar> {
        self.0
            .iter()
            .next_back()
            .map(|(s, v)| ExactScalar::new(v.clone(), s.clone()))
    }

    pub fn add_scalar(&mut self, s: &ExactScalar) {
        if s.value.is_zero() {
            return;
        }
        let sum = match self.0.get(&s.syms) {
            Some(v) => v + &s.value,
            None => s.value.clone(),
        };
        if sum.is_zero() {
            self.0.remove(&s.syms);
        } else {
            self.0.insert(s.syms.clone(), sum);
        }
    }

    pub fn mul_scalar(&self, s: &ExactScalar) -> Result<Coeff, PolyError> {
        let mut out = Coeff::zero();
        for t in self.scalars() {
            out.add_scalar(&t.mul(s)?);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, o: &Coeff) -> Result<Coeff, PolyError> {
        let mut out = Coeff::zero();
        for a in self.scalars() {
            for b in o.scalars() {
                out.add_scalar(&a.mul(&b)?);
            }
        }
        Ok(out)
    }

    pub fn eval(&self, val: &NumericValuation) -> Result<Complex64, PolyError> {
        let mut acc = Complex64::new(0.0, 0.0);
        for s in self.scalars() {
            acc += s.eval(val)?;
        }
        Ok(acc)
    }

    /// `Some(q)` when `self == q * other` for a real rational `q`.
    pub fn rational_ratio(&self, other: &Coeff) -> Option<Rational> {
        let (key, lead) = other.0.iter().next()?;
        let num = self.0.get(key)?;
        // q = num / lead must be real
        let q = &num.clone() * &lead.inv()?;
        if !q.is_real() {
            return None;
        }
        let scaled = other.scale_rational(&q.re);
        (scaled == *self).then_some(q.re)
    }

    pub fn scale_rational(&self, r: &Rational) -> Coeff {
        if r.is_zero() {
            return Coeff::zero();
        }
        Coeff(self.0.iter().map(|(k, v)| (k.clone(), v.scale(r))).collect())
    }

    /// `Some(n)` when the coefficient is a rational integer.
    pub fn as_integer(&self) -> Option<i64> {
        let g = self.as_gauss()?;
        if g.is_real() && g.re.is_integer() {
            g.re.to_integer().to_i64()
        } else {
            None
        }
    }

    pub fn is_negative_rational(&self) -> bool {
        self.as_gauss()
            .map(|g| g.is_real() && g.re.is_negative())
            .unwrap_or(false)
    }
}

impl Add for &Coeff {
    type Output = Coeff;
    fn add(self, o: &Coeff) -> Coeff {
        let mut out = self.clone();
        for s in o.scalars() {
            out.add_scalar(&s);
        }
        out
    }
}

impl Sub for &Coeff {
    type Output = Coeff;
    fn sub(self, o: &Coeff) -> Coeff {
        self + &-o
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        Coeff(self.0.iter().map(|(k, v)| (k.clone(), -v)).collect())
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.scalars().map(|s| s.to_string()).collect();
        if parts.len() == 1 {
            write!(f, "{}", parts[0])
        } else {
            write!(f, "({})", super::poly::join_signed(&parts))
        }
    }
}
