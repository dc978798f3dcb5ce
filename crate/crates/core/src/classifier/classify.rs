use serde::{Deserialize, Serialize};

use super::backsub::normalize_reduced;
use super::points::{resolve_d31_points, WitnessPoint};
use super::slope::{analyse_slope, linear_parts, Slope};
use super::{back_substitute, BackSubResult, ClassifyError, SurfaceKind, SurfaceSpec};
use crate::exactpoly::{Coeff, NumericValuation, Poly, PolyError, Vars};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CaseLabel {
    #[serde(rename = "a")]
    A,
    #[serde(rename = "b")]
    B,
    #[serde(rename = "c")]
    C,
    #[serde(rename = "d1")]
    D1,
    #[serde(rename = "d2")]
    D2,
    #[serde(rename = "d31")]
    D31,
    #[serde(rename = "d32")]
    D32,
    #[serde(rename = "unsupported")]
    Unsupported,
}

impl CaseLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseLabel::A => "a",
            CaseLabel::B => "b",
            CaseLabel::C => "c",
            CaseLabel::D1 => "d1",
            CaseLabel::D2 => "d2",
            CaseLabel::D31 => "d31",
            CaseLabel::D32 => "d32",
            CaseLabel::Unsupported => "unsupported",
        }
    }

    /// What the case says about the projection of the exponential points.
    pub fn verdict(self) -> Option<Verdict> {
        match self {
            CaseLabel::A => Some(Verdict::SinglePoint),
            CaseLabel::D1 => Some(Verdict::Empty),
            CaseLabel::D31 => Some(Verdict::NonemptyFinite),
            CaseLabel::B | CaseLabel::C | CaseLabel::D2 | CaseLabel::D32 => {
                Some(Verdict::InfiniteDense)
            }
            CaseLabel::Unsupported => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Empty,
    SinglePoint,
    NonemptyFinite,
    InfiniteDense,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Witness {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub explanation: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub back_substitution: Option<BackSubResult>,
    /// For d31, the factor `h(Y)` with `G = unit * h`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h: Option<Poly>,
    /// Exact projection `(p1, p2)` for a point fibre.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub projection: Option<[Coeff; 2]>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub points: Vec<WitnessPoint>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassificationResult {
    pub case: CaseLabel,
    pub verdict: Option<Verdict>,
    pub witness: Witness,
    pub heuristic_flags: Vec<String>,
}

impl ClassificationResult {
    fn new(case: CaseLabel, witness: Witness, heuristic_flags: Vec<String>) -> Self {
        ClassificationResult {
            case,
            verdict: case.verdict(),
            witness,
            heuristic_flags,
        }
    }

    fn unsupported(why: String) -> Self {
        let w = Witness {
            explanation: Some(why),
            ..Witness::default()
        };
        ClassificationResult::new(CaseLabel::Unsupported, w, Vec::new())
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("result encodes")
    }
}

const X_ONLY: [usize; 2] = [0, 1];
const HATS: [usize; 2] = [2, 3];

fn uses_any(p: &Poly, idx: &[usize]) -> bool {
    idx.iter().any(|i| p.depends_on(*i))
}

fn invalid(msg: &str) -> ClassifyError {
    ClassifyError::InvalidSpec(msg.to_string())
}

/// `-gamma / alpha` for a generator `alpha * X_i + gamma` in one variable.
fn coordinate_value(g: &Poly, i: usize) -> Option<Coeff> {
    let others = (0..4).filter(|j| *j != i).any(|j| g.depends_on(j));
    if others || g.max_exp(i) != Some(1) {
        return None;
    }
    let mut e = vec![0; 4];
    e[i] = 1;
    let alpha = g.coeff(&e).as_scalar()?;
    let gamma = g.constant_coeff();
    Some(-&gamma.mul_scalar(&alpha.inv()?).ok()?)
}

/// Number of distinct hatted exponent pairs in `f` after eliminating one of
/// `X1, X2` with the linear relation `f0`.
fn hatted_groups_mod_line(f0: &Poly, f: &Poly) -> Result<usize, PolyError> {
    let v = Vars::surface();
    let mut reduced = f.clone();
    if let Some((alpha, beta, gamma)) = linear_parts(f0) {
        let x = [Poly::var(&v, "X1")?, Poly::var(&v, "X2")?];
        let pivot = [(0usize, &alpha, &beta), (1usize, &beta, &alpha)]
            .into_iter()
            .find_map(|(i, lead, other)| lead.as_scalar().and_then(|s| s.inv()).map(|inv| (i, inv, other)));
        if let Some((i, inv, other)) = pivot {
            // X_i = -(other * X_j + gamma) / lead
            let rest = Poly::constant(&v, gamma.clone())
                .checked_add(&x[1 - i].scale_coeff(other)?)?;
            let image = (-&rest).scale(&inv)?;
            let mut images: Vec<Poly> = ["X1", "X2", "Xh1", "Xh2"]
                .iter()
                .map(|n| Poly::var(&v, n))
                .collect::<Result<_, _>>()?;
            images[i] = image;
            reduced = f.substitute(&images)?;
        }
    }
    let mut groups: Vec<(i32, i32)> = reduced.terms().map(|(e, _)| (e[2], e[3])).collect();
    groups.sort();
    groups.dedup();
    Ok(groups.len())
}

fn validate(spec: &SurfaceSpec) -> Result<Vec<Poly>, ClassifyError> {
    let v = Vars::surface();
    let gens = spec
        .generators
        .iter()
        .map(|g| g.embed(&v))
        .collect::<Result<Vec<_>, _>>()?;
    if gens.is_empty() {
        return Err(invalid("no generators"));
    }
    match spec.kind {
        SurfaceKind::PointFiber => {}
        SurfaceKind::FullProjection => {
            if gens.iter().any(|g| uses_any(g, &X_ONLY)) {
                return Err(invalid("full_projection generators must not involve X1, X2"));
            }
        }
        SurfaceKind::CurvePair => {
            let [f0, f] = gens.as_slice() else {
                return Err(invalid("curve_pair needs exactly [F0, F]"));
            };
            if f0.is_constant() {
                return Err(invalid("F0 is constant"));
            }
            if uses_any(f0, &HATS) {
                return Err(invalid("F0 must only involve X1, X2"));
            }
            if !uses_any(f, &HATS) {
                return Err(invalid("F must involve Xh1 or Xh2"));
            }
            if linear_parts(f0).is_some() && hatted_groups_mod_line(f0, f)? <= 1 {
                return Err(invalid(
                    "F is a hatted monomial times a polynomial in X1, X2 modulo the line F0",
                ));
            }
        }
    }
    Ok(gens)
}

fn point_fiber(spec: &SurfaceSpec, gens: &[Poly]) -> Result<ClassificationResult, ClassifyError> {
    let find = |i: usize| gens.iter().find_map(|g| coordinate_value(g, i));
    let (Some(p1), Some(p2)) = (find(0), find(1)) else {
        return Err(invalid("point_fiber needs generators X1 - p1 and X2 - p2"));
    };
    let base = valuation_with(spec.numeric_override.as_ref());
    let mut w = Witness {
        projection: Some([p1.clone(), p2.clone()]),
        ..Witness::default()
    };
    match (p1.eval(&base), p2.eval(&base)) {
        (Ok(z1), Ok(z2)) => {
            let pt = [z1, z2, z1.exp(), z2.exp()];
            let residual = gens
                .iter()
                .map(|g| g.eval(&pt, &base).map(|x| x.norm()))
                .collect::<Result<Vec<_>, _>>()?
                .into_iter()
                .fold(0.0, f64::max);
            w.points.push(WitnessPoint::new(z1, z2, residual, false));
        }
        _ => w.explanation = Some("projection involves symbols without numeric values".into()),
    }
    Ok(ClassificationResult::new(CaseLabel::A, w, Vec::new()))
}

fn valuation_with(over: Option<&NumericValuation>) -> NumericValuation {
    match over {
        Some(o) => NumericValuation::standard().merged(o),
        None => NumericValuation::standard(),
    }
}

/// Drops symbolic coefficients of `g` that vanish under the override.
fn numeric_prune(
    g: &Poly,
    val: &NumericValuation,
    flags: &mut Vec<String>,
) -> Result<Poly, PolyError> {
    let mut out = Poly::zero(g.vars());
    for (e, c) in g.terms() {
        if c.has_symbols() {
            let value = c.eval(val)?;
            let scale: f64 = c
                .scalars()
                .map(|s| s.eval(val).map(|x| x.norm()))
                .collect::<Result<Vec<_>, _>>()?
                .into_iter()
                .sum();
            if value.norm() <= 1e-12 * scale.max(1.0) {
                flags.push(format!(
                    "coefficient {c} of Y^{} Yh^{} taken as zero numerically",
                    e[0], e[1]
                ));
                continue;
            }
        }
        out.add_term(e.to_vec(), c)?;
    }
    Ok(out)
}

fn curve_pair(spec: &SurfaceSpec, f0: &Poly, f: &Poly) -> Result<ClassificationResult, ClassifyError> {
    let line = match analyse_slope(f0) {
        Slope::NotLine => {
            let w = Witness {
                explanation: Some("F0 is not a line".into()),
                ..Witness::default()
            };
            return Ok(ClassificationResult::new(CaseLabel::C, w, Vec::new()));
        }
        Slope::Irrational => {
            let w = Witness {
                explanation: Some("F0 is a line of non-rational slope".into()),
                ..Witness::default()
            };
            return Ok(ClassificationResult::new(CaseLabel::C, w, Vec::new()));
        }
        Slope::Inexact(why) => return Ok(ClassificationResult::unsupported(why)),
        Slope::Rational(line) => line,
    };
    let mut bs = back_substitute(f, &line)?;
    let mut flags = Vec::new();

    if let Some(over) = &spec.numeric_override {
        if bs.g.has_symbols() {
            let val = line.valuation(&valuation_with(Some(over)))?;
            let pruned = numeric_prune(&bs.g, &val, &mut flags)?;
            if !flags.is_empty() {
                let (g, k, content) = normalize_reduced(&pruned)?;
                bs.g = g;
                bs.clearing_exponent += k;
                bs.content = &bs.content * &content;
            }
        }
    }

    let g = &bs.g;
    let case = if g.is_zero() {
        CaseLabel::D2
    } else if g.is_constant() {
        CaseLabel::D1
    } else if g.max_exp(1) == Some(0) {
        CaseLabel::D31
    } else {
        CaseLabel::D32
    };

    let mut w = Witness::default();
    if case == CaseLabel::D31 {
        w.h = Some(restrict_to_y(g)?);
        match resolve_d31_points(&bs, spec.numeric_override.as_ref()) {
            Ok(points) => {
                if points.iter().any(|p| p.heuristic) {
                    flags.push("d31 roots depend on overridden symbol values".into());
                }
                w.points = points;
            }
            Err(ClassifyError::Poly(PolyError::MissingSymbol(s))) => {
                w.explanation = Some(format!("points not computed: no numeric value for {s}"));
            }
            Err(e) => return Err(e),
        }
    }
    w.back_substitution = Some(bs);
    Ok(ClassificationResult::new(case, w, flags))
}

fn restrict_to_y(g: &Poly) -> Result<Poly, PolyError> {
    let v = Vars::univariate("Y");
    let mut h = Poly::zero(&v);
    for (e, c) in g.terms() {
        h.add_term(vec![e[0]], c)?;
    }
    Ok(h)
}

/// Runs the case analysis on a surface in reduced form.
pub fn classify_surface(spec: &SurfaceSpec) -> Result<ClassificationResult, ClassifyError> {
    let gens = validate(spec)?;
    match spec.kind {
        SurfaceKind::PointFiber => point_fiber(spec, &gens),
        SurfaceKind::FullProjection => Ok(ClassificationResult::new(
            CaseLabel::B,
            Witness::default(),
            Vec::new(),
        )),
        SurfaceKind::CurvePair => curve_pair(spec, &gens[0], &gens[1]),
    }
}

#[cfg(test)]
mod tests {
    use num_complex::Complex64;

    use super::*;
    use crate::catalog;

    fn case_of(s: &SurfaceSpec) -> CaseLabel {
        classify_surface(s).unwrap().case
    }

    #[test]
    fn canned_surfaces_land_in_their_cases() {
        assert_eq!(case_of(&catalog::origin_fiber()), CaseLabel::A);
        assert_eq!(case_of(&catalog::unit_torus_point()), CaseLabel::B);
        assert_eq!(case_of(&catalog::hyperbola_pair()), CaseLabel::C);
        assert_eq!(case_of(&catalog::sum_one_product_one()), CaseLabel::D1);
        assert_eq!(case_of(&catalog::sum_one_product_e()), CaseLabel::D2);
        assert_eq!(case_of(&catalog::single_point_on_line()), CaseLabel::D31);
        assert_eq!(case_of(&catalog::line_product_sum()), CaseLabel::D32);
        assert_eq!(case_of(&catalog::ninth_power_fermat()), CaseLabel::C);
    }

    #[test]
    fn origin_fiber_point() {
        let r = classify_surface(&catalog::origin_fiber()).unwrap();
        assert_eq!(r.verdict, Some(Verdict::SinglePoint));
        let p = &r.witness.points[0];
        assert_eq!(p.z1, Complex64::new(0.0, 0.0));
        assert_eq!(p.xh2, Complex64::new(1.0, 0.0));
    }

    #[test]
    fn d31_points() {
        let r = classify_surface(&catalog::single_point_on_line()).unwrap();
        assert!(r.heuristic_flags.is_empty());
        let pts = &r.witness.points;
        assert_eq!(pts.len(), 1);
        assert!((pts[0].z1).norm() < 1e-15 && (pts[0].z2 - 1.0).norm() < 1e-15);
        assert!((pts[0].xh2 - std::f64::consts::E).norm() < 1e-15);
        assert!(pts[0].residual < 1e-12);

        let r = classify_surface(&catalog::two_points_on_line()).unwrap();
        assert_eq!(r.case, CaseLabel::D31);
        let z1: Vec<f64> = r.witness.points.iter().map(|p| p.z1.re).collect();
        assert_eq!(z1.len(), 2);
        assert!(z1[0].abs() < 1e-12 && (z1[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn invalid_shapes_are_rejected() {
        let bad = |kind, g: &[&str]| classify_surface(&SurfaceSpec::from_infix(kind, g).unwrap());
        assert!(bad(SurfaceKind::CurvePair, &["X1 + X2 - 1"]).is_err());
        assert!(bad(SurfaceKind::CurvePair, &["3", "Xh1 - 1"]).is_err());
        assert!(bad(SurfaceKind::CurvePair, &["X1 + Xh1", "Xh1 - 1"]).is_err());
        assert!(bad(SurfaceKind::CurvePair, &["X1 + X2 - 1", "X1 - X2"]).is_err());
        // monomial in the hats times something vanishing modulo the line
        assert!(bad(SurfaceKind::CurvePair, &["X1 + X2 - 1", "Xh1*(X1 + X2) + Xh2*(X1 + X2 - 1)"]).is_err());
        assert!(bad(SurfaceKind::FullProjection, &["X1 - Xh1"]).is_err());
        assert!(bad(SurfaceKind::PointFiber, &["X1*X2"]).is_err());
    }

    #[test]
    fn symbolic_scale_without_exact_constant_is_unsupported() {
        let s = SurfaceSpec::from_infix(
            SurfaceKind::CurvePair,
            &["(E+1)*X1 + (E+1)*X2 - 1", "Xh1*Xh2 - 2"],
        )
        .unwrap();
        let r = classify_surface(&s).unwrap();
        assert_eq!(r.case, CaseLabel::Unsupported);
        assert_eq!(r.verdict, None);
    }

    #[test]
    fn numeric_override_is_flagged() {
        // Xh1*Xh2 = K with K numerically equal to e decides d2 only heuristically
        let s = SurfaceSpec::from_infix(SurfaceKind::CurvePair, &["X1 + X2 - 1", "Xh1*Xh2 - K"]).unwrap();
        assert_eq!(case_of(&s), CaseLabel::D1);
        let s = s.with_override(
            NumericValuation::empty().with("K", Complex64::new(std::f64::consts::E, 0.0)),
        );
        let r = classify_surface(&s).unwrap();
        assert_eq!(r.case, CaseLabel::D2);
        assert_eq!(r.heuristic_flags.len(), 1);
    }

    #[test]
    fn nz_decided_without_valuation() {
        let r = classify_surface(&catalog::sum_one_product_one()).unwrap();
        assert_eq!(r.verdict, Some(Verdict::Empty));
        assert!(r.heuristic_flags.is_empty());
        let g = &r.witness.back_substitution.as_ref().unwrap().g;
        assert_eq!(*g, Poly::parse("E - 1", &Vars::reduced()).unwrap());
    }
}
