use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{AnalyticError, CurveParametrization, PhiFunction, RationalFunction};
use crate::exactpoly::{NumericValuation, Poly, PolyJson, Vars};

/// A polynomial given either as an infix string or in the JSON encoding.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PolyInput {
    Infix(String),
    Encoded(PolyJson),
}

impl PolyInput {
    fn build(&self, vars: &Vars) -> Result<Poly, AnalyticError> {
        Ok(match self {
            PolyInput::Infix(s) => Poly::parse(s, vars)?,
            PolyInput::Encoded(j) => Poly::try_from(j)?.embed(vars)?,
        })
    }
}

impl From<&str> for PolyInput {
    fn from(s: &str) -> Self {
        PolyInput::Infix(s.to_string())
    }
}

/// One coordinate `xi_i(z)`: a polynomial in `z` or a `[num, den]` pair.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum XiInput {
    Polynomial(PolyInput),
    Fraction([PolyInput; 2]),
}

/// File format for a one-variable problem `Phi(z) = F(xi(z), exp(xi(z)))`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PhiSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    /// `F` over `X1..Xn, Xh1..Xhn`.
    pub f: PolyInput,
    pub xi: Vec<XiInput>,
    /// Points to avoid besides the poles of `xi`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub excluded_points: Vec<Complex64>,
    /// Values of symbolic constants; `E` defaults to e.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub valuation: Option<NumericValuation>,
}

impl PhiSpec {
    pub fn new(name: &str, f: &str, xi: &[(&str, &str)]) -> Self {
        PhiSpec {
            name: Some(name.to_string()),
            f: f.into(),
            xi: xi
                .iter()
                .map(|(n, d)| {
                    if *d == "1" {
                        XiInput::Polynomial((*n).into())
                    } else {
                        XiInput::Fraction([(*n).into(), (*d).into()])
                    }
                })
                .collect(),
            excluded_points: Vec::new(),
            valuation: None,
        }
    }

    pub fn from_json_str(s: &str) -> Result<Self, AnalyticError> {
        serde_json::from_str(s).map_err(|e| AnalyticError::InvalidInput(e.to_string()))
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec serializes")
    }

    pub fn build(&self) -> Result<PhiFunction, AnalyticError> {
        let val = match &self.valuation {
            Some(v) => NumericValuation::standard().merged(v),
            None => NumericValuation::standard(),
        };
        let z = Vars::univariate("z");
        let one = Poly::integer(&z, 1);
        let xi = self
            .xi
            .iter()
            .map(|x| {
                let (num, den) = match x {
                    XiInput::Polynomial(p) => (p.build(&z)?, one.clone()),
                    XiInput::Fraction([n, d]) => (n.build(&z)?, d.build(&z)?),
                };
                if den.is_zero() {
                    return Err(AnalyticError::InvalidInput("zero denominator".into()));
                }
                Ok(RationalFunction { num, den })
            })
            .collect::<Result<Vec<_>, AnalyticError>>()?;
        let f = self.f.build(&Vars::exponential(xi.len()))?;
        let param = CurveParametrization::new(xi, &self.excluded_points, &val)?;
        PhiFunction::new(f, param, val)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::Holomorphic;

    #[test]
    fn json_forms_agree() {
        let a = PhiSpec::from_json_str(r#"{"f": "Xh1 + Xh2 - 1", "xi": ["z", ["1", "z"]]}"#)
            .unwrap()
            .build()
            .unwrap();
        let spec = PhiSpec::new("pair", "Xh1 + Xh2 - 1", &[("z", "1"), ("1", "z")]);
        let b = PhiSpec::from_json_str(&spec.to_json_string()).unwrap().build().unwrap();
        let z = Complex64::new(0.4, 1.3);
        assert_eq!(a.value(z).unwrap(), b.value(z).unwrap());
        assert_eq!(a.excluded_points(), &[Complex64::new(0.0, 0.0)]);
    }

    #[test]
    fn variable_count_mismatch_rejected() {
        let s = PhiSpec::from_json_str(r#"{"f": "Xh1 + Xh2 - 1", "xi": ["z"]}"#).unwrap();
        assert!(s.build().is_err());
    }
}
