use serde::Serialize;

use super::LineSpec;
use crate::exactpoly::{Coeff, GaussRat, Poly, PolyError, Vars};

/// `F` restricted to `L x K` and written in the line coordinates `(Y, Yh)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BackSubResult {
    pub line: LineSpec,
    /// The surface generator that was reduced.
    #[serde(rename = "F")]
    pub f: Poly,
    /// Normalized reduced polynomial.
    #[serde(rename = "G")]
    pub g: Poly,
    /// `G = Yh^k * F(images) / content` with this `k`.
    pub clearing_exponent: i32,
    #[serde(serialize_with = "gauss_as_str")]
    pub content: GaussRat,
    pub images: Vec<Poly>,
}

fn gauss_as_str<S: serde::Serializer>(g: &GaussRat, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&g.to_string())
}

/// Shifts `Yh` so its smallest exponent is zero and divides by the Gaussian
/// part of the last scalar in the leading coefficient.
pub(crate) fn normalize_reduced(raw: &Poly) -> Result<(Poly, i32, GaussRat), PolyError> {
    if raw.is_zero() {
        return Ok((raw.clone(), 0, GaussRat::one()));
    }
    let yh = raw.vars().index_of("Yh").expect("reduced variables");
    let k = raw
        .min_exp(yh)
        .expect("nonzero")
        .checked_neg()
        .ok_or(PolyError::ExponentOverflow)?;
    let shifted = raw.shift_unit(yh, k)?;
    let (_, lead) = shifted.leading_term().expect("nonzero");
    let content = lead.last_scalar().expect("nonzero").value;
    let inv = content.inv().ok_or(PolyError::DivisionByZero)?;
    let g = shifted.scale_coeff(&Coeff::from_scalar(crate::exactpoly::ExactScalar::from_gauss(inv)))?;
    Ok((g, k, content))
}

/// Substitutes the line/torus parametrization into `f` (over the surface
/// variables) and normalizes the result.
pub fn back_substitute(f: &Poly, line: &LineSpec) -> Result<BackSubResult, PolyError> {
    let f = f.embed(&Vars::surface())?;
    let images = line.images()?;
    let raw = f.substitute(&images)?;
    let (g, clearing_exponent, content) = normalize_reduced(&raw)?;
    Ok(BackSubResult {
        line: line.clone(),
        f,
        g,
        clearing_exponent,
        content,
        images,
    })
}

impl BackSubResult {
    /// `F(images)` before normalization.
    pub fn raw(&self) -> Result<Poly, PolyError> {
        self.f.substitute(&self.images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifier::detect_rational_slope;

    fn surf(s: &str) -> Poly {
        Poly::parse(s, &Vars::surface()).unwrap()
    }

    fn reduced(s: &str) -> Poly {
        Poly::parse(s, &Vars::reduced()).unwrap()
    }

    fn unit_line() -> LineSpec {
        detect_rational_slope(&surf("X1 + X2 - 1")).unwrap()
    }

    #[test]
    fn substitution_yields_reduced_exx_form() {
        let r = back_substitute(&surf("X1*X2 - Xh1 - Xh2"), &unit_line()).unwrap();
        assert_eq!(r.raw().unwrap(), reduced("Y*(1-Y) - Yh - E*Yh^-1"));
        assert_eq!(r.g, reduced("Yh^2 + E - Y*Yh*(1-Y)"));
        assert_eq!(r.clearing_exponent, 1);
    }

    #[test]
    fn nz_and_d2_constants() {
        let r = back_substitute(&surf("Xh1*Xh2 - 1"), &unit_line()).unwrap();
        assert_eq!(r.g, reduced("E - 1"));
        let r = back_substitute(&surf("Xh1*Xh2 - E"), &unit_line()).unwrap();
        assert!(r.g.is_zero());
    }

    #[test]
    fn torus_relation_collapses_to_chat() {
        let line = detect_rational_slope(&surf("X1 + X2 - 1/3")).unwrap();
        let r = back_substitute(&surf("Xh1*Xh2"), &line).unwrap();
        assert_eq!(r.raw().unwrap(), reduced("CHAT"));
    }

    #[test]
    fn inverse_map_recovers_coordinates_modulo_the_line() {
        let line = detect_rational_slope(&surf("2*X1 + 3*X2 - 5")).unwrap();
        let images = line.images().unwrap();
        let inv = line.inverse_images().unwrap();
        // Y and Yh pulled back then pushed forward
        let y = Poly::var(&Vars::reduced(), "Y").unwrap();
        let yh = Poly::var(&Vars::reduced(), "Yh").unwrap();
        assert_eq!(inv[0].substitute(&images).unwrap(), y);
        assert_eq!(inv[1].substitute(&images).unwrap(), yh);
        // X1 pushed forward then pulled back differs by a multiple of F0
        let x1_back = images[0].substitute(&inv).unwrap();
        let f0 = surf("2*X1 + 3*X2 - 5");
        let diff = &x1_back - &surf("X1");
        let a1 = Poly::integer(&Vars::surface(), -line.a1);
        assert_eq!(diff, &a1 * &f0);
    }
}
