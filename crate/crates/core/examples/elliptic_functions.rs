//! Weierstrass functions on a skew lattice and the identity checks.

use expzero::elliptic::{elliptic_from_lattice, verify_identities, DEFAULT_DEPTH};
use num_complex::Complex64;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d = elliptic_from_lattice(Complex64::new(1.0, 0.0), Complex64::new(0.3, 1.1), DEFAULT_DEPTH)?;
    println!("g2 = {:.12}\ng3 = {:.12}", d.g2, d.g3);
    println!("eta1 = {:.12}\neta2 = {:.12}", d.eta1, d.eta2);
    println!("omega1 eta2 - omega2 eta1 = {:.12}", d.legendre());
    let z = Complex64::new(0.37, 0.21);
    println!("wp(z) = {:.12}, zeta(z) = {:.12}, sigma(z) = {:.12}", d.wp(z)?, d.zeta(z)?, d.sigma(z));

    let rep = verify_identities(&d, 20, 0x5EED, 1e-8)?;
    for c in &rep.checks {
        println!("{:<30} {:.2e}  {}", c.name, c.residual, if c.pass { "ok" } else { "FAIL" });
    }
    println!("period vectors: {:?} {:?}", rep.period_vector_omega1, rep.period_vector_omega2);
    Ok(())
}
