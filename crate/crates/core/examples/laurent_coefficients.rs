//! Taylor data of `log(e^z - z)` near 0, and the coefficient bound it
//! contradicts at radius 17.

use expzero::analytic::{exp_minus_z_a2_bound, laurent_profile, AnalyticConfig};
use expzero::catalog;
use num_complex::Complex64;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = AnalyticConfig::default();
    let origin = Complex64::new(0.0, 0.0);
    let p = laurent_profile(&catalog::exp_minus_z_phi(), origin, 0.5, 24, &cfg)?;
    println!("e^z - z on |z| = 0.5: m = {}, {} samples, reconstruction error {:.1e}", p.m, p.samples, p.reconstruction_error);
    for k in 0..=4 {
        println!("  a_{k} = {:+.3e}", p.coeff(k));
    }
    for r in [5.0, 10.0, 17.0, 30.0] {
        println!("  bound on |a_2| for radius {r:>4}: {:.4}", exp_minus_z_a2_bound(r));
    }

    let q = laurent_profile(&catalog::square_times_exp_inverse_phi(), origin, 1.0, 5, &cfg)?;
    println!("z^2 e^(1/z) on |z| = 1: m = {}, a_-1 = {:.3e}", q.m, q.coeff(-1));
    Ok(())
}
