//! The polynomial interchange encoding:
//!
//! ```json
//! {"vars": ["X1","X2","Xh1","Xh2"], "unit_vars": ["Xh1","Xh2"],
//!  "terms": [{"exps": [1,1,0,0], "re": "1/1", "im": "0/1", "syms": {"E": 1}}]}
//! ```
//!
//! Terms are emitted in lexicographic exponent order, then symbol-monomial
//! order, so encoding is deterministic.

use std::collections::BTreeMap;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{
    format_rational, parse_rational, Coeff, ExactScalar, GaussRat, Poly, PolyError, SymMono, Vars,
};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub exps: Vec<i64>,
    pub re: String,
    pub im: String,
    #[serde(default)]
    pub syms: BTreeMap<String, i64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    #[serde(default)]
    pub unit_vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

/// One exact scalar, `{"re": "p/q", "im": "p/q", "syms": {...}}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScalarJson {
    pub re: String,
    pub im: String,
    #[serde(default)]
    pub syms: BTreeMap<String, i64>,
}

impl From<&ExactScalar> for ScalarJson {
    fn from(s: &ExactScalar) -> Self {
        ScalarJson {
            re: format_rational(s.re()),
            im: format_rational(s.im()),
            syms: s
                .sym_powers()
                .iter()
                .map(|(k, v)| (k.clone(), *v as i64))
                .collect(),
        }
    }
}

impl TryFrom<&ScalarJson> for ExactScalar {
    type Error = PolyError;

    fn try_from(j: &ScalarJson) -> Result<ExactScalar, PolyError> {
        let syms = j
            .syms
            .iter()
            .map(|(k, v)| Ok((k.clone(), bounded(*v)?)))
            .collect::<Result<BTreeMap<_, _>, PolyError>>()?;
        let value = GaussRat::new(parse_rational(&j.re)?, parse_rational(&j.im)?);
        Ok(ExactScalar::new(value, SymMono::from_map(syms)))
    }
}

// Coefficients and scalars travel as lists / single objects of ScalarJson.
impl Serialize for ExactScalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ScalarJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExactScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<ExactScalar, D::Error> {
        let j = ScalarJson::deserialize(d)?;
        ExactScalar::try_from(&j).map_err(serde::de::Error::custom)
    }
}

impl Serialize for Coeff {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<ScalarJson> = self.scalars().map(|x| ScalarJson::from(&x)).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Coeff {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Coeff, D::Error> {
        let v = Vec::<ScalarJson>::deserialize(d)?;
        let mut out = Coeff::zero();
        for j in &v {
            out.add_scalar(&ExactScalar::try_from(j).map_err(serde::de::Error::custom)?);
        }
        Ok(out)
    }
}

fn bounded(e: i64) -> Result<i32, PolyError> {
    if e.unsigned_abs() > i32::MAX as u64 {
        return Err(PolyError::ExponentOverflow);
    }
    Ok(e as i32)
}

impl From<&Poly> for PolyJson {
    fn from(p: &Poly) -> Self {
        PolyJson {
            vars: p.vars().names().to_vec(),
            unit_vars: p.vars().unit_names(),
            terms: p
                .scalar_terms()
                .map(|(e, s)| TermJson {
                    exps: e.iter().map(|x| *x as i64).collect(),
                    re: format_rational(s.re()),
                    im: format_rational(s.im()),
                    syms: s
                        .sym_powers()
                        .iter()
                        .map(|(k, v)| (k.clone(), *v as i64))
                        .collect(),
                })
                .collect(),
        }
    }
}

impl TryFrom<&PolyJson> for Poly {
    type Error = PolyError;

    fn try_from(j: &PolyJson) -> Result<Poly, PolyError> {
        for u in &j.unit_vars {
            if !j.vars.contains(u) {
                return Err(PolyError::UnknownVariable(u.clone()));
            }
        }
        let vars = Vars::from_parts(
            j.vars.clone(),
            j.vars.iter().map(|v| j.unit_vars.contains(v)).collect(),
        );
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in &j.terms {
            let exps = t
                .exps
                .iter()
                .map(|e| bounded(*e))
                .collect::<Result<Vec<_>, _>>()?;
            let syms = t
                .syms
                .iter()
                .map(|(k, v)| Ok((k.clone(), bounded(*v)?)))
                .collect::<Result<BTreeMap<_, _>, PolyError>>()?;
            let value = GaussRat::new(parse_rational(&t.re)?, parse_rational(&t.im)?);
            terms.push((exps, ExactScalar::new(value, SymMono::from_map(syms))));
        }
        Poly::from_terms(&vars, terms)
    }
}

impl Poly {
    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(PolyJson::from(self)).expect("polynomial encodes")
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&PolyJson::from(self)).expect("polynomial encodes")
    }

    pub fn from_json_str(s: &str) -> Result<Poly, PolyError> {
        let j: PolyJson = serde_json::from_str(s).map_err(|e| PolyError::Parse(e.to_string()))?;
        Poly::try_from(&j)
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Poly, D::Error> {
        let j = PolyJson::deserialize(d)?;
        Poly::try_from(&j).map_err(serde::de::Error::custom)
    }
}
