//! Exact Laurent polynomials over Q(i) with symbolic constants.

use expzero::exactpoly::{NumericValuation, Poly, Vars};
use num_complex::Complex64;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let v = Vars::surface();
    let f = Poly::parse("X1 - X1^2 - E + Xh1*Xh2", &v)?;
    let g = Poly::parse("Xh1^-1*Xh2 + (1/2 + I)*X2", &v)?;
    let prod = &f * &g;
    println!("f       = {f}");
    println!("g       = {g}");
    println!("f*g     = {prod}");
    println!("df/dX1  = {}", f.diff("X1")?);

    let at = [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0), Complex64::new(std::f64::consts::E, 0.0)];
    println!("f(0, 1, 1, e) = {}", f.eval(&at, &NumericValuation::standard())?);

    let json = g.to_json_string();
    println!("{json}");
    assert_eq!(Poly::from_json_str(&json)?, g);
    Ok(())
}
