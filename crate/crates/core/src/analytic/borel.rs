use num_complex::Complex64;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BorelReport {
    /// `sup |phi0|` on `|w| <= r`.
    pub lhs: f64,
    /// `2r/(R-r) sup Re phi0 + (R+r)/(R-r) |phi0(0)|` over `|w| <= R`.
    pub rhs: f64,
    pub holds: bool,
    pub margin: f64,
}

/// Samples both sides of the Borel–Carathéodory inequality on the boundary
/// circles, where the maxima of `|phi0|` and `Re phi0` are attained.
pub fn borel_caratheodory_check<F>(phi0: F, r: f64, big_r: f64, samples: usize) -> BorelReport
where
    F: Fn(Complex64) -> Complex64,
{
    assert!(0.0 <= r && r < big_r, "need 0 <= r < R");
    let n = samples.max(16);
    let circle = |rad: f64| (0..n).map(move |j| Complex64::from_polar(rad, std::f64::consts::TAU * j as f64 / n as f64));
    let at0 = phi0(Complex64::new(0.0, 0.0));
    let lhs = if r == 0.0 {
        at0.norm()
    } else {
        circle(r).map(|w| phi0(w).norm()).fold(0.0, f64::max)
    };
    let sup_re = circle(big_r).map(|w| phi0(w).re).fold(f64::NEG_INFINITY, f64::max);
    let rhs = 2.0 * r / (big_r - r) * sup_re + (big_r + r) / (big_r - r) * at0.norm();
    BorelReport {
        lhs,
        rhs,
        holds: lhs <= rhs,
        margin: rhs - lhs,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_and_quadratic() {
        let a = borel_caratheodory_check(|w| w, 1.0, 2.0, 1024);
        assert!((a.lhs - 1.0).abs() < 1e-12 && (a.rhs - 4.0).abs() < 1e-12);
        let b = borel_caratheodory_check(|w| w * w, 1.0, 2.0, 1024);
        assert!((b.lhs - 1.0).abs() < 1e-12 && (b.rhs - 8.0).abs() < 1e-12);
    }

    #[test]
    fn log_of_exp_minus_w() {
        let rep = borel_caratheodory_check(|w: Complex64| (w.exp() - w).ln(), 0.25, 0.5, 4096);
        assert!(rep.holds && rep.margin > 0.0, "{rep:?}");
    }
}
