use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_2, TAU};

use num_complex::Complex64;
use rustfft::FftPlanner;
use serde::{Deserialize, Serialize};

use super::{c64, count_zeros, winding_number, AnalyticConfig, AnalyticError, Contour, Holomorphic};

/// `8 ln(e^R + R) / R^2`: the Cauchy-estimate ceiling on `|a_2|` for a
/// zero-free `e^z - z` on `|z| <= R`.
pub fn exp_minus_z_a2_bound(big_r: f64) -> f64 {
    8.0 * (big_r.exp() + big_r).ln() / (big_r * big_r)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    /// `max |log(Phi (z-c)^{-m})|` on the sampling circle.
    pub max_abs_log: f64,
    /// Cauchy bounds `max_abs_log / r^k`, keyed by `k`.
    pub cauchy: BTreeMap<i64, f64>,
    /// Reference radius for [`exp_minus_z_a2_bound`].
    pub exp_minus_z_radius: f64,
    pub exp_minus_z_a2_bound: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LaurentProfile {
    pub center: Complex64,
    pub radius: f64,
    /// Winding number of `Phi` on the sampling circle.
    pub m: i64,
    /// `a_k` for `|k| <= K` in `Phi = (z-c)^m exp(sum a_k (z-c)^k)`.
    pub coeffs: BTreeMap<i64, Complex64>,
    pub samples: usize,
    /// Max relative error of the truncated reconstruction, measured between
    /// the FFT nodes.
    pub reconstruction_error: f64,
    pub bound_report: BoundReport,
}

impl LaurentProfile {
    pub fn coeff(&self, k: i64) -> Complex64 {
        self.coeffs.get(&k).copied().unwrap_or_default()
    }

    /// `log(Phi(z))` from the truncated series, up to `2 pi i`.
    pub fn log_phi(&self, z: Complex64) -> Complex64 {
        let w = z - self.center;
        let series: Complex64 = self.coeffs.iter().map(|(&k, &a)| a * w.powi(k as i32)).sum();
        series + w.ln() * self.m as f64
    }
}

const MAX_SAMPLES: usize = 1 << 22;

/// Continuous `log Phi` at `n` equally spaced points, or `None` if a phase
/// step reaches `pi/2`.
fn sample_log<H: Holomorphic + ?Sized>(
    h: &H,
    center: Complex64,
    radius: f64,
    n: usize,
) -> Result<Option<Vec<Complex64>>, AnalyticError> {
    let mut out = Vec::with_capacity(n);
    let mut prev: Option<(Complex64, f64)> = None;
    for j in 0..=n {
        let z = center + Complex64::from_polar(radius, TAU * j as f64 / n as f64);
        let s = h.eval_scaled(z)?;
        let phase = match prev {
            None => s.value.arg(),
            Some((pv, pa)) => {
                let d = (s.value / pv).arg();
                if d.abs() >= FRAC_PI_2 {
                    return Ok(None);
                }
                pa + d
            }
        };
        prev = Some((s.value, phase));
        if j < n {
            out.push(c64(s.ln_abs(), phase));
        }
    }
    Ok(Some(out))
}

/// Samples `log(Phi (z-c)^{-m})` on `|z - c| = radius` and reads off its
/// Laurent coefficients with an FFT.
pub fn laurent_profile<H: Holomorphic + ?Sized>(
    h: &H,
    center: Complex64,
    radius: f64,
    k_max: usize,
    cfg: &AnalyticConfig,
) -> Result<LaurentProfile, AnalyticError> {
    let thin = Contour::annulus(center, 0.95 * radius, 1.05 * radius);
    let inside = count_zeros(h, &thin, cfg)?;
    if inside.count != 0 {
        return Err(AnalyticError::ZerosInAnnulus { count: inside.count });
    }
    let m = winding_number(h, &Contour::circle(center, radius), cfg)?.winding;

    let mut n = cfg.sampling.max(8 * k_max).max(1024).next_power_of_two();
    let logs = loop {
        if let Some(v) = sample_log(h, center, radius, n)? {
            break v;
        }
        n *= 2;
        if n > MAX_SAMPLES {
            return Err(AnalyticError::BranchTracking(format!(
                "phase steps still >= pi/2 with {MAX_SAMPLES} samples"
            )));
        }
    };
    let mut buf: Vec<Complex64> = logs
        .iter()
        .enumerate()
        .map(|(j, l)| {
            let theta = TAU * j as f64 / n as f64;
            l - c64(m as f64 * radius.ln(), m as f64 * theta)
        })
        .collect();
    let max_abs_log = buf.iter().map(|v| v.norm()).fold(0.0, f64::max);
    FftPlanner::new().plan_fft_forward(n).process(&mut buf);

    let k_max = k_max as i64;
    let mut coeffs = BTreeMap::new();
    let mut cauchy = BTreeMap::new();
    for k in -k_max..=k_max {
        let idx = k.rem_euclid(n as i64) as usize;
        let rk = radius.powi(k as i32);
        coeffs.insert(k, buf[idx] / (n as f64 * rk));
        cauchy.insert(k, max_abs_log / rk);
    }
    let mut profile = LaurentProfile {
        center,
        radius,
        m,
        coeffs,
        samples: n,
        reconstruction_error: 0.0,
        bound_report: BoundReport {
            max_abs_log,
            cauchy,
            exp_minus_z_radius: 17.0,
            exp_minus_z_a2_bound: exp_minus_z_a2_bound(17.0),
        },
    };
    let mut err = 0f64;
    for j in 0..n {
        let z = center + Complex64::from_polar(radius, TAU * (j as f64 + 0.5) / n as f64);
        let s = h.eval_scaled(z)?;
        let ln_phi = c64(s.ln_abs(), s.value.arg());
        err = err.max(((profile.log_phi(z) - ln_phi).exp() - 1.0).norm());
    }
    profile.reconstruction_error = err;
    Ok(profile)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::FnHolomorphic;

    #[test]
    fn pure_exponential() {
        let f = FnHolomorphic::new(|z: Complex64| {
            let v = (0.5 * z + 0.25).exp();
            (v, 0.5 * v)
        });
        let p = laurent_profile(&f, c64(0.0, 0.0), 3.0, 5, &AnalyticConfig::default()).unwrap();
        assert_eq!(p.m, 0);
        assert!((p.coeff(0) - 0.25).norm() < 1e-10);
        assert!((p.coeff(1) - 0.5).norm() < 1e-10);
        for k in [-5, -4, -3, -2, -1, 2, 3, 4, 5] {
            assert!(p.coeff(k).norm() < 1e-10, "a_{k} = {}", p.coeff(k));
        }
        assert!(p.reconstruction_error < 1e-6);
    }

    #[test]
    fn exp_minus_z_bound_below_half_at_17() {
        let b = exp_minus_z_a2_bound(17.0);
        assert!(b < 0.5, "{b}");
        assert!(exp_minus_z_a2_bound(5.0) > 0.5);
    }
}
