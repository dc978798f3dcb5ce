//! Zeros of `Phi(z) = F(xi(z), exp(xi(z)))` for rational `xi`: winding
//! numbers, zero counts, isolation with Newton refinement, circle traces and
//! sampled Laurent data.
//!
//! Functions are evaluated in scaled form `(Phi, Phi') * exp(-s)` so that
//! e.g. `exp(z^2)` on `|z| = 30` never overflows; only the phase and the
//! logarithmic derivative are needed for counting.

mod borel;
mod contour;
mod count;
mod function;
mod isolate;
mod laurent;
mod newton;
mod spec;
mod trace;

pub use borel::{borel_caratheodory_check, BorelReport};
pub use contour::{winding_number, Contour, Piece, WindingReport};
pub use count::{count_zeros, CountReport};
pub use function::{
    phi_eval, CurveParametrization, FnHolomorphic, Holomorphic, PhiFunction, RationalFunction,
    Scaled,
};
pub use isolate::{isolate_zeros, CertStatus, IsolationReport, RefinedRoot, ZeroCertificate};
pub use laurent::{exp_minus_z_a2_bound, laurent_profile, BoundReport, LaurentProfile};
pub use newton::{newton, NewtonOutcome, NewtonStatus};
pub use spec::{PhiSpec, PolyInput, XiInput};
pub use trace::{circle_trace_bisect, TraceReport};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactpoly::PolyError;

/// Tolerances and budgets; every field has the documented default.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct AnalyticConfig {
    /// Initial sample count for a full closed contour.
    pub sampling: usize,
    /// Minimum distance from excluded points.
    pub clearance: f64,
    pub zero_on_contour_tol: f64,
    pub integer_tol: f64,
    pub newton_tol: f64,
    pub newton_max_iter: usize,
    pub divergence_radius: f64,
    pub residual_tol: f64,
    pub max_cells: usize,
    pub jitter_retries: usize,
    pub jitter_scale: f64,
    pub seed: u64,
    /// Smallest cell size relative to the region diameter.
    pub min_cell_rel: f64,
    pub max_bisect_depth: u32,
}

impl Default for AnalyticConfig {
    fn default() -> Self {
        AnalyticConfig {
            sampling: 1024,
            clearance: 1e-6,
            zero_on_contour_tol: 1e-8,
            integer_tol: 1e-6,
            newton_tol: 1e-12,
            newton_max_iter: 100,
            divergence_radius: 1e6,
            residual_tol: 1e-9,
            max_cells: 4096,
            jitter_retries: 8,
            jitter_scale: 1e-3,
            seed: 0x5EED,
            min_cell_rel: 1e-9,
            max_bisect_depth: 52,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AnalyticError {
    #[error("|Phi| = {modulus:e} below tolerance on the contour at {at}")]
    ZeroOnContour { at: Complex64, modulus: f64 },
    #[error("winding integral {raw} is not within tolerance of an integer")]
    NonIntegerWinding { raw: f64 },
    #[error("{z} is within clearance of excluded point {point}")]
    NearExcluded { z: Complex64, point: Complex64 },
    #[error("region contains excluded point {0}")]
    RegionContainsExcluded(Complex64),
    #[error("trace is not real: max |Im| = {max_imag:e}")]
    TraceNotReal { max_imag: f64 },
    #[error("{count} zeros near the sampling circle")]
    ZerosInAnnulus { count: i64 },
    #[error("branch tracking failed: {0}")]
    BranchTracking(String),
    #[error("cell budget of {0} exceeded")]
    BudgetExceeded(usize),
    #[error("invalid region: {0}")]
    InvalidRegion(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

pub(crate) fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Rayon pool honouring `EXPZERO_THREADS`.
pub(crate) fn thread_pool() -> rayon::ThreadPool {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(n) = std::env::var("EXPZERO_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|n| *n > 0)
    {
        b = b.num_threads(n);
    }
    b.build().expect("thread pool")
}
