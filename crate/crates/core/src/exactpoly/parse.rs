//! Infix syntax for polynomials, e.g. `X1*X2 - Xh1 - Xh2` or
//! `Yh^2 + E - Y*Yh*(1 - Y)`.
//!
//! Identifiers found in the variable list are variables, `I` is the
//! imaginary unit, and any other identifier is a transcendental symbol.
//! Decimal literals are read exactly (`0.25` is `1/4`). Division is only
//! allowed by invertible constants.

use num_bigint::BigInt;

use super::{Coeff, ExactScalar, GaussRat, Poly, PolyError, Rational, SymMono, Vars};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rational),
    Ident(String),
    Op(char),
}

fn tokenize(src: &str) -> Result<Vec<Tok>, PolyError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || c == '.' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                i += 1;
            }
            let lit: String = chars[start..i].iter().collect();
            out.push(Tok::Num(parse_decimal(&lit)?));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(PolyError::Parse(format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

fn parse_decimal(lit: &str) -> Result<Rational, PolyError> {
    let bad = || PolyError::Parse(format!("bad number {lit:?}"));
    let (int, frac) = lit.split_once('.').unwrap_or((lit, ""));
    if int.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    let digits = format!("{int}{frac}");
    let n: BigInt = digits.parse().map_err(|_| bad())?;
    let d = BigInt::from(10u8).pow(frac.len() as u32);
    Ok(Rational::new(n, d))
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    vars: &'a Vars,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly, PolyError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.checked_add(&self.term()?)?;
            } else if self.eat('-') {
                acc = acc.checked_sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly, PolyError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.checked_mul(&self.unary()?)?;
            } else if self.eat('/') {
                let d = self.unary()?;
                let inv = constant_inverse(&d)?;
                acc = acc.scale(&inv)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Poly, PolyError> {
        if self.eat('-') {
            Ok(-&self.unary()?)
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Poly, PolyError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let neg = self.eat('-');
        let k = match self.toks.get(self.pos) {
            Some(Tok::Num(r)) if r.is_integer() => {
                self.pos += 1;
                i32::try_from(r.to_integer()).map_err(|_| PolyError::ExponentOverflow)?
            }
            _ => return Err(PolyError::Parse("exponent must be an integer".into())),
        };
        let k = if neg { -k } else { k };
        if k >= 0 {
            base.pow(k as u32)
        } else if base.is_unit() {
            base.unit_pow(k)
        } else {
            let s = constant_scalar(&base)?;
            Ok(Poly::scalar(self.vars, s.pow(k)?))
        }
    }

    fn atom(&mut self) -> Result<Poly, PolyError> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(r)) => {
                self.pos += 1;
                Ok(Poly::constant(self.vars, Coeff::rational(r)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if self.vars.index_of(&name).is_some() {
                    Poly::var(self.vars, &name)
                } else if name == "I" {
                    Ok(Poly::scalar(self.vars, ExactScalar::from_gauss(GaussRat::i())))
                } else {
                    Ok(Poly::scalar(
                        self.vars,
                        ExactScalar::new(GaussRat::one(), SymMono::symbol(&name)),
                    ))
                }
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(PolyError::Parse("missing ')'".into()));
                }
                Ok(e)
            }
            other => Err(PolyError::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

fn constant_scalar(p: &Poly) -> Result<ExactScalar, PolyError> {
    if !p.is_constant() {
        return Err(PolyError::Parse("expected a constant".into()));
    }
    p.constant_coeff()
        .as_scalar()
        .ok_or_else(|| PolyError::Parse("expected a single-term constant".into()))
}

fn constant_inverse(p: &Poly) -> Result<ExactScalar, PolyError> {
    let s = constant_scalar(p)?;
    if s.value.is_zero() {
        return Err(PolyError::DivisionByZero);
    }
    s.inv().ok_or(PolyError::DivisionByZero)
}

impl Poly {
    /// Parses infix notation over `vars`; see the module docs.
    pub fn parse(src: &str, vars: &Vars) -> Result<Poly, PolyError> {
        let toks = tokenize(src)?;
        if toks.is_empty() {
            return Ok(Poly::zero(vars));
        }
        let mut p = Parser { toks, pos: 0, vars };
        let out = p.expr()?;
        if p.pos != p.toks.len() {
            return Err(PolyError::Parse(format!(
                "trailing input at token {}",
                p.pos
            )));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_ex_generator() {
        let v = Vars::surface();
        let p = Poly::parse("X1*X2 - Xh1 - Xh2", &v).unwrap();
        assert_eq!(p.num_terms(), 3);
        assert_eq!(p.coeff(&[1, 1, 0, 0]), Coeff::one());
        assert_eq!(p.coeff(&[0, 0, 1, 0]), Coeff::integer(-1));
    }

    #[test]
    fn exact_decimals_and_division() {
        let v = Vars::univariate("z");
        let p = Poly::parse("0.5*z + 0.25", &v).unwrap();
        let q = Poly::parse("z/2 + 1/4", &v).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn symbols_and_negative_powers() {
        let v = Vars::reduced();
        let p = Poly::parse("Y*(1-Y) - Yh - E*Yh^-1", &v).unwrap();
        assert_eq!(p.min_exp(1), Some(-1));
        assert!(p.has_symbols());
        assert!(Poly::parse("Y^-1", &v).is_err());
        assert!(Poly::parse("Y/(Y+1)", &v).is_err());
        assert!(Poly::parse("(Y", &v).is_err());
    }
}
