//! Isolates the zeros of `e^z + e^{1/z} - 1` in `0.5 < |z| < 9` and writes
//! a plot to `zeros.svg` (or the path given).

use expzero::analytic::{isolate_zeros, AnalyticConfig, Contour, Holomorphic};
use expzero::{catalog, svg};
use num_complex::Complex64;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let out = std::env::args().nth(1).unwrap_or_else(|| "zeros.svg".into());
    let phi = catalog::inverse_pair_phi();
    let rep = isolate_zeros(&phi, &Contour::annulus(Complex64::new(0.0, 0.0), 0.5, 9.0), None, &AnalyticConfig::default())?;
    std::fs::write(&out, svg::render(&rep, phi.excluded_points()))?;
    println!("{} certificates, plot written to {out}", rep.certificates.len());
    Ok(())
}
