//! On `|z| = 1`, `e^z + e^{1/z} - 1 = 2 e^{cos t} cos(sin t) - 1` is real.
//! Its sign change between `t = 0` and `t = pi` brackets a zero, which
//! Newton then polishes.

use expzero::analytic::{circle_trace_bisect, newton, AnalyticConfig};
use expzero::catalog;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let phi = catalog::inverse_pair_phi();
    let cfg = AnalyticConfig::default();
    let t = circle_trace_bisect(&phi, 1.0, true, &cfg)?;
    println!("Phi(1) = {:.15}, Phi(-1) = {:.15}, max |Im| = {:.1e}", t.value_at_0.re, t.value_at_pi.re, t.max_imag);
    for z in t.roots {
        let out = newton(&phi, z, &cfg)?;
        println!("bisected {z:.12}  ->  Newton {:.17} ({:?}, {} steps)", out.z, out.status, out.iters);
    }
    Ok(())
}
