//! Winding numbers of `e^z + e^{1/z} - 1` on circles, including the failure
//! on the unit circle where the function has zeros.

use expzero::analytic::{count_zeros, winding_number, AnalyticConfig, Contour};
use expzero::catalog;
use num_complex::Complex64;

fn main() {
    let phi = catalog::inverse_pair_phi();
    let cfg = AnalyticConfig::default();
    for r in [0.5, 1.0, 2.0, 5.0, 8.0, 10.0] {
        match winding_number(&phi, &Contour::disc(r), &cfg) {
            Ok(w) => println!("|z| = {r:<4}  winding {:>3}  (raw {:+.9}, {} samples)", w.winding, w.raw, w.samples),
            Err(e) => println!("|z| = {r:<4}  {e}"),
        }
    }
    let a = Contour::annulus(Complex64::new(0.0, 0.0), 0.5, 2.0);
    println!("zeros in 0.5 < |z| < 2: {}", count_zeros(&phi, &a, &cfg).map(|c| c.count).unwrap_or(-1));
}
