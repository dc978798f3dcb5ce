//! Exponential points on algebraic surfaces and zeros of exponential
//! polynomials.
//!
//! [`exactpoly`] does exact Laurent-polynomial arithmetic over `Q(i)` with
//! independent symbols such as `E`. [`classifier`] decides which case a
//! surface `F0(X1, X2) = F(X1, X2, Xh1, Xh2) = 0` falls into, reducing along
//! rational-slope lines to a polynomial `G(Y, Yh)`. [`analytic`] counts,
//! isolates and refines zeros of `Phi(z) = F(xi(z), e^xi(z))` with the
//! argument principle and Newton's method. [`elliptic`] evaluates the
//! Weierstrass functions and checks the genus-one identities numerically.
//! [`reproduce`] bundles the numbered acceptance checks used by the tests and
//! the CLI.

pub mod analytic;
pub mod catalog;
pub mod classifier;
pub mod cli;
pub mod elliptic;
pub mod exactpoly;
pub mod reproduce;
pub mod roots;
pub mod svg;
