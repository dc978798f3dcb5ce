//! Case analysis for surfaces in `C^2 x C*^2` given as a curve `F0(X1, X2)`
//! together with one further generator `F`, or as one of the two degenerate
//! shapes (a point fibre, or generators in the hatted variables only).
//!
//! Over a line `m1*X1 + m2*X2 = c` of rational slope the generator is pulled
//! back along
//!
//! ```text
//! X1 = a1*c + m2*Y,   X2 = a2*c - m1*Y,
//! Xh1 = chat^a1 * Yh^m2,   Xh2 = chat^a2 * Yh^(-m1)
//! ```
//!
//! and the shape of the resulting `G(Y, Yh)` decides the case.

mod backsub;
mod classify;
mod points;
mod slope;
mod spec;

pub use backsub::{back_substitute, BackSubResult};
pub use classify::{classify_surface, CaseLabel, ClassificationResult, Verdict, Witness};
pub use points::{resolve_d31_points, WitnessPoint, D31_RESIDUAL_TOL};
pub use slope::{bezout_canonical, detect_rational_slope, LineSpec};
pub use spec::{SurfaceKind, SurfaceSpec};

use num_complex::Complex64;
use thiserror::Error;

use crate::exactpoly::PolyError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ClassifyError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("invalid surface: {0}")]
    InvalidSpec(String),
    #[error("not a d31 reduction: {0}")]
    NotD31(String),
    #[error("residual {residual:e} at Y = {y} exceeds tolerance")]
    Residual { residual: f64, y: Complex64 },
}
