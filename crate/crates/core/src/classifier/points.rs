use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{BackSubResult, ClassifyError};
use crate::exactpoly::{Coeff, GaussRat, NumericValuation};
use crate::roots::ComplexPoly;

/// A point `(z1, z2, e^z1, e^z2)` together with the generator residual.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WitnessPoint {
    pub z1: Complex64,
    pub z2: Complex64,
    pub xh1: Complex64,
    pub xh2: Complex64,
    pub residual: f64,
    /// True when a user-supplied numeric value for a symbol entered the root.
    pub heuristic: bool,
}

impl WitnessPoint {
    pub fn new(z1: Complex64, z2: Complex64, residual: f64, heuristic: bool) -> Self {
        WitnessPoint {
            z1,
            z2,
            xh1: z1.exp(),
            xh2: z2.exp(),
            residual,
            heuristic,
        }
    }
}

pub const D31_RESIDUAL_TOL: f64 = 1e-9;

// Dense univariate arithmetic over Q(i), lowest degree first.

fn trim(mut p: Vec<GaussRat>) -> Vec<GaussRat> {
    while p.last().is_some_and(GaussRat::is_zero) {
        p.pop();
    }
    p
}

fn divrem(a: &[GaussRat], b: &[GaussRat]) -> (Vec<GaussRat>, Vec<GaussRat>) {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    let lead_inv = b[db].inv().expect("nonzero divisor");
    let mut q = vec![GaussRat::zero(); r.len().saturating_sub(db).max(1)];
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1 - db;
        let f = &r[r.len() - 1] * &lead_inv;
        for (i, bi) in b.iter().enumerate() {
            r[k + i] = &r[k + i] - &(&f * bi);
        }
        q[k] = f;
        r = trim(r);
    }
    (trim(q), r)
}

fn gcd(a: &[GaussRat], b: &[GaussRat]) -> Vec<GaussRat> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let (_, r) = divrem(&a, &b);
        a = b;
        b = r;
    }
    a
}

fn derivative(a: &[GaussRat]) -> Vec<GaussRat> {
    a.iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * &GaussRat::from_integer(k as i64))
        .collect()
}

/// `h / gcd(h, h')`: same roots, all simple.
pub(crate) fn square_free(h: &[GaussRat]) -> Vec<GaussRat> {
    let g = gcd(h, &derivative(h));
    if g.len() <= 1 {
        return trim(h.to_vec());
    }
    divrem(h, &g).0
}

fn dedupe(mut roots: Vec<Complex64>, tol: f64) -> Vec<Complex64> {
    let mut out: Vec<Complex64> = Vec::new();
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    for r in roots.drain(..) {
        if !out.iter().any(|o| (o - r).norm() <= tol * (1.0 + r.norm())) {
            out.push(r);
        }
    }
    out
}

/// Points of `Z` over the roots of `h` when `G = unit * h(Y)`.
///
/// Symbols are valued by `E = e`, the line's `C`/`CHAT`, then
/// `numeric_override`; points depending on overridden symbols are marked
/// heuristic.
pub fn resolve_d31_points(
    r: &BackSubResult,
    numeric_override: Option<&NumericValuation>,
) -> Result<Vec<WitnessPoint>, ClassifyError> {
    let g = &r.g;
    let yh = g.vars().index_of("Yh").expect("reduced variables");
    let y = g.vars().index_of("Y").expect("reduced variables");
    if g.is_zero() || g.min_exp(yh) != g.max_exp(yh) {
        return Err(ClassifyError::NotD31("G involves Yh".into()));
    }
    let deg = g.max_exp(y).unwrap_or(0) as usize;
    if deg == 0 {
        return Err(ClassifyError::NotD31("h is constant".into()));
    }
    let mut h = vec![Coeff::zero(); deg + 1];
    for (e, c) in g.terms() {
        h[e[y] as usize] = c.clone();
    }

    let overridden: Vec<String> = numeric_override
        .map(|o| o.symbols().map(String::from).collect())
        .unwrap_or_default();
    let uses_override = |c: &Coeff| c.symbols().any(|s| overridden.iter().any(|o| o == s));
    let heuristic = h.iter().any(uses_override) || uses_override(&r.line.c);

    let base = match numeric_override {
        Some(o) => NumericValuation::standard().merged(o),
        None => NumericValuation::standard(),
    };
    let val = r.line.valuation(&base)?;

    let roots = match h.iter().map(Coeff::as_gauss).collect::<Option<Vec<_>>>() {
        Some(exact) => {
            let sf = square_free(&exact);
            ComplexPoly::new(sf.iter().map(GaussRat::to_c64).collect()).roots()
        }
        None => {
            let numeric = h
                .iter()
                .map(|c| c.eval(&val))
                .collect::<Result<Vec<_>, _>>()?;
            dedupe(ComplexPoly::new(numeric).roots(), 1e-8)
        }
    };

    let mut points = Vec::with_capacity(roots.len());
    for yv in roots {
        let (z1, z2) = r.line.point(yv, &val)?;
        let residual = r.f.eval(&[z1, z2, z1.exp(), z2.exp()], &val)?.norm();
        if !(residual < D31_RESIDUAL_TOL) {
            return Err(ClassifyError::Residual { residual, y: yv });
        }
        points.push(WitnessPoint::new(z1, z2, residual, heuristic));
    }
    points.sort_by(|a, b| {
        a.z1.re
            .total_cmp(&b.z1.re)
            .then(a.z1.im.total_cmp(&b.z1.im))
    });
    Ok(points)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> GaussRat {
        GaussRat::from_integer(n)
    }

    #[test]
    fn square_free_strips_repeats() {
        // (y - 1)^2 (y + 2) = y^3 - 3y + 2
        let h = vec![q(2), q(-3), q(0), q(1)];
        let sf = square_free(&h);
        // y^2 + y - 2 up to a scalar
        assert_eq!(sf.len(), 3);
        let lead = sf[2].inv().unwrap();
        let monic: Vec<_> = sf.iter().map(|c| c * &lead).collect();
        assert_eq!(monic, vec![q(-2), q(1), q(1)]);
    }

    #[test]
    fn division_is_exact() {
        let a = vec![q(-1), q(0), q(1)];
        let b = vec![q(1), q(1)];
        let (quo, rem) = divrem(&a, &b);
        assert_eq!(quo, vec![q(-1), q(1)]);
        assert!(rem.is_empty());
    }
}
