use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Numeric values assigned to transcendental symbols.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NumericValuation {
    values: BTreeMap<String, [f64; 2]>,
}

impl NumericValuation {
    pub fn empty() -> Self {
        NumericValuation::default()
    }

    /// `E ↦ e`.
    pub fn standard() -> Self {
        let mut v = NumericValuation::empty();
        v.set("E", Complex64::new(std::f64::consts::E, 0.0));
        v
    }

    pub fn with(mut self, name: &str, value: Complex64) -> Self {
        self.set(name, value);
        self
    }

    pub fn set(&mut self, name: &str, value: Complex64) {
        self.values.insert(name.to_string(), [value.re, value.im]);
    }

    pub fn get(&self, name: &str) -> Option<Complex64> {
        self.values.get(name).map(|v| Complex64::new(v[0], v[1]))
    }

    pub fn contains(&self, name: &str) -> bool {
        self.values.contains_key(name)
    }

    pub fn symbols(&self) -> impl Iterator<Item = &str> {
        self.values.keys().map(String::as_str)
    }

    /// Overlays `other` on top of `self`.
    pub fn merged(&self, other: &NumericValuation) -> NumericValuation {
        let mut out = self.clone();
        for (k, v) in &other.values {
            out.values.insert(k.clone(), *v);
        }
        out
    }

    /// When both `C` and `CHAT` are assigned, `|CHAT - exp(C)|` must be below
    /// `tol`. Returns the discrepancy on failure.
    pub fn check_consistency(&self, tol: f64) -> Result<(), f64> {
        if let (Some(c), Some(chat)) = (self.get("C"), self.get("CHAT")) {
            let gap = (chat - c.exp()).norm();
            if !(gap < tol) {
                return Err(gap);
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn consistency_flags_mismatched_chat() {
        let c = Complex64::new(0.5, 0.25);
        let ok = NumericValuation::standard()
            .with("C", c)
            .with("CHAT", c.exp());
        assert!(ok.check_consistency(1e-12).is_ok());
        let bad = ok.clone().with("CHAT", Complex64::new(1.0, 0.0));
        assert!(bad.check_consistency(1e-12).is_err());
        assert!(NumericValuation::standard().check_consistency(1e-12).is_ok());
    }
}
