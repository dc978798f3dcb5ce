use serde::{Deserialize, Deserializer, Serialize};

use super::ClassifyError;
use crate::exactpoly::{NumericValuation, Poly, PolyJson, Vars};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SurfaceKind {
    /// `X1 = p1, X2 = p2` plus optional extra relations.
    PointFiber,
    /// Generators only in the hatted variables.
    FullProjection,
    /// `[F0(X1, X2), F(X1, X2, Xh1, Xh2)]`.
    CurvePair,
}

/// A surface in `C^2 x C*^2` in reduced form.
///
/// Generators are read from JSON either as the polynomial encoding or as an
/// infix string over `X1, X2, Xh1, Xh2`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SurfaceSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub kind: SurfaceKind,
    #[serde(deserialize_with = "generators_de")]
    pub generators: Vec<Poly>,
    /// Values that may decide symbolic constants numerically; any decision
    /// taken this way is reported as a heuristic flag.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub numeric_override: Option<NumericValuation>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum GeneratorJson {
    Infix(String),
    Encoded(PolyJson),
}

fn generators_de<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Poly>, D::Error> {
    let raw = Vec::<GeneratorJson>::deserialize(d)?;
    let surface = Vars::surface();
    raw.into_iter()
        .map(|g| {
            let p = match g {
                GeneratorJson::Infix(s) => Poly::parse(&s, &surface),
                GeneratorJson::Encoded(j) => {
                    Poly::try_from(&j).and_then(|p| p.embed(&surface))
                }
            };
            p.map_err(serde::de::Error::custom)
        })
        .collect()
}

impl SurfaceSpec {
    pub fn new(kind: SurfaceKind, generators: Vec<Poly>) -> Self {
        SurfaceSpec {
            name: None,
            kind,
            generators,
            numeric_override: None,
        }
    }

    /// Parses infix generators over the surface variables.
    pub fn from_infix(kind: SurfaceKind, generators: &[&str]) -> Result<Self, ClassifyError> {
        let v = Vars::surface();
        let gens = generators
            .iter()
            .map(|g| Poly::parse(g, &v))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SurfaceSpec::new(kind, gens))
    }

    pub fn named(mut self, name: &str) -> Self {
        self.name = Some(name.to_string());
        self
    }

    pub fn with_override(mut self, val: NumericValuation) -> Self {
        self.numeric_override = Some(val);
        self
    }

    pub fn from_json_str(s: &str) -> Result<Self, ClassifyError> {
        serde_json::from_str(s).map_err(|e| ClassifyError::Malformed(e.to_string()))
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec encodes")
    }

    /// `(F0, F)` for curve pairs.
    pub fn curve_pair(&self) -> Option<(&Poly, &Poly)> {
        match (self.kind, self.generators.as_slice()) {
            (SurfaceKind::CurvePair, [f0, f]) => Some((f0, f)),
            _ => None,
        }
    }
}
