//! Isolates zeros in a region and prints the certificates as JSON.

use expzero::analytic::{isolate_zeros, AnalyticConfig, Contour};
use expzero::catalog;
use num_complex::Complex64;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = AnalyticConfig::default();
    let phi = catalog::inverse_pair_phi();
    let far = isolate_zeros(&phi, &Contour::annulus(Complex64::new(0.0, 0.0), 7.0, 8.0), None, &cfg)?;
    println!("e^z + e^(1/z) - 1 on 7 < |z| < 8: {} zeros", far.total);
    println!("{}", serde_json::to_string_pretty(&far.certificates)?);

    let phi = catalog::exp_minus_z_phi();
    let rep = isolate_zeros(&phi, &Contour::disc(2.0), None, &cfg)?;
    for c in rep.isolated() {
        let r = c.roots[0];
        println!("e^z = z at {:+.10} {:+.10}i  (|Phi| = {:.1e}, {} Newton steps)", r.re, r.im, r.residual, r.iters);
    }
    Ok(())
}
