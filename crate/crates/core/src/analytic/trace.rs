use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{AnalyticConfig, AnalyticError, Holomorphic};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceReport {
    /// Zeros on the circle, upper half first, then mirrored conjugates.
    pub roots: Vec<Complex64>,
    /// `Phi(r)` and `Phi(-r)`.
    pub value_at_0: Complex64,
    pub value_at_pi: Complex64,
    /// Largest `|Im Phi| / max(1, |Phi|)` seen while sampling.
    pub max_imag: f64,
}

const REAL_TOL: f64 = 1e-10;
const T_TOL: f64 = 1e-12;

/// Restricts `Phi` to `z = r e^{it}`, `t` in `[0, pi]`, and bisects every sign
/// change of the real trace. Zeros in the open upper half are mirrored to
/// their conjugates, which is valid when `Phi(conj z) = conj Phi(z)`.
///
/// With `assume_real` the trace must be real to `1e-10` relative; otherwise
/// the real part is used and bisection endpoints that are not zeros of
/// `Phi` are dropped.
pub fn circle_trace_bisect<H: Holomorphic + ?Sized>(
    h: &H,
    radius: f64,
    assume_real: bool,
    cfg: &AnalyticConfig,
) -> Result<TraceReport, AnalyticError> {
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(AnalyticError::InvalidRegion(format!("radius {radius}")));
    }
    let at = |t: f64| Complex64::from_polar(radius, t);
    // sign of Re Phi; the positive scale factor does not change it
    let re = |t: f64| -> Result<(f64, f64), AnalyticError> {
        let s = h.eval_scaled(at(t))?;
        let mag = s.value.norm().max((-s.log_scale).exp());
        Ok((s.value.re, s.value.im.abs() / mag))
    };
    let n = cfg.sampling.max(64);
    let mut ts = Vec::with_capacity(n + 1);
    let mut vals = Vec::with_capacity(n + 1);
    let mut max_imag = 0f64;
    for j in 0..=n {
        let t = PI * j as f64 / n as f64;
        let (v, im) = re(t)?;
        max_imag = max_imag.max(im);
        ts.push(t);
        vals.push(v);
    }
    if assume_real && max_imag >= REAL_TOL {
        return Err(AnalyticError::TraceNotReal { max_imag });
    }
    let mut upper = Vec::new();
    for j in 0..n {
        let (mut a, mut b) = (ts[j], ts[j + 1]);
        let (mut fa, fb) = (vals[j], vals[j + 1]);
        if fa == 0.0 {
            upper.push(a);
            continue;
        }
        if fa.signum() == fb.signum() || fb == 0.0 {
            if fb == 0.0 && j + 1 == n {
                upper.push(b);
            }
            continue;
        }
        while b - a > T_TOL {
            let m = 0.5 * (a + b);
            let (fm, _) = re(m)?;
            if fm == 0.0 {
                a = m;
                b = m;
                break;
            }
            if fm.signum() == fa.signum() {
                a = m;
                fa = fm;
            } else {
                b = m;
            }
        }
        upper.push(0.5 * (a + b));
    }
    let mut roots: Vec<Complex64> = upper.iter().map(|&t| at(t)).collect();
    if !assume_real {
        roots.retain(|&z| {
            h.eval_scaled(z)
                .map(|s| s.value.norm() < 1e-6 * (1.0 + s.deriv.norm()))
                .unwrap_or(false)
        });
    }
    let mirrored: Vec<Complex64> = roots
        .iter()
        .filter(|z| z.im.abs() > T_TOL * radius)
        .map(|z| z.conj())
        .collect();
    roots.extend(mirrored);
    Ok(TraceReport {
        roots,
        value_at_0: h.value(at(0.0))?,
        value_at_pi: h.value(at(PI))?,
        max_imag,
    })
}
