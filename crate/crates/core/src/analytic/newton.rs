use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{AnalyticConfig, AnalyticError, Holomorphic};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NewtonStatus {
    Converged,
    Diverged,
    MaxIter,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct NewtonOutcome {
    pub z: Complex64,
    pub iters: usize,
    /// `|Phi(z)|` at the final iterate (unscaled, may be infinite).
    pub residual: f64,
    pub status: NewtonStatus,
}

/// Newton's method on `Phi`. The step `Phi/Phi'` is taken from the scaled
/// evaluation, so large exponentials do not overflow.
pub fn newton<H: Holomorphic + ?Sized>(
    h: &H,
    z0: Complex64,
    cfg: &AnalyticConfig,
) -> Result<NewtonOutcome, AnalyticError> {
    let mut z = z0;
    for k in 1..=cfg.newton_max_iter {
        let s = h.eval_scaled(z)?;
        let step = s.value / s.deriv;
        if !step.is_finite() {
            return Ok(NewtonOutcome {
                z,
                iters: k,
                residual: s.full_value().norm(),
                status: NewtonStatus::Diverged,
            });
        }
        z -= step;
        if !z.is_finite() || z.norm() > cfg.divergence_radius {
            return Ok(NewtonOutcome {
                z,
                iters: k,
                residual: f64::INFINITY,
                status: NewtonStatus::Diverged,
            });
        }
        if step.norm() < cfg.newton_tol * z.norm().max(1.0) {
            let residual = h.value(z).map(|v| v.norm()).unwrap_or(f64::INFINITY);
            return Ok(NewtonOutcome {
                z,
                iters: k,
                residual,
                status: NewtonStatus::Converged,
            });
        }
    }
    let residual = h.value(z).map(|v| v.norm()).unwrap_or(f64::INFINITY);
    Ok(NewtonOutcome {
        z,
        iters: cfg.newton_max_iter,
        residual,
        status: NewtonStatus::MaxIter,
    })
}
