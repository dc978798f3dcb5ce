//! Newton on `e^z + e^{z^2} - 1` from the two diagonal seeds of modulus
//! `sqrt(200 pi)`: one converges at once, the other wanders first.

use std::f64::consts::PI;

use expzero::analytic::{newton, AnalyticConfig, Holomorphic};
use expzero::catalog;
use num_complex::Complex64;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let phi = catalog::square_pair_phi();
    let s = (100.0 * PI).sqrt();
    for sign in [-1.0, 1.0] {
        let z0 = Complex64::new(sign * s, sign * s);
        let out = newton(&phi, z0, &AnalyticConfig::default())?;
        let res = phi.value(out.z)?.norm();
        println!("seed {z0:.4}: {:?} after {} steps at {:.10}, |Phi| = {res:.1e}", out.status, out.iters, out.z);
    }
    Ok(())
}
