//! Reduces `X1*X2 = Xh1 + Xh2` on the line `X1 + X2 = 1` to a polynomial in
//! `Y, Yh`.

use expzero::catalog;
use expzero::classifier::{back_substitute, detect_rational_slope};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = catalog::line_product_sum();
    let (f0, f) = spec.curve_pair().expect("curve pair");
    let line = detect_rational_slope(f0).expect("a rational-slope line");
    println!("line: m = ({}, {}), c = {}, bezout = ({}, {})", line.m1, line.m2, line.c, line.a1, line.a2);
    let b = back_substitute(f, &line)?;
    println!("raw G       = {}", b.raw()?);
    println!("normalized  = {}", b.g);
    println!("Yh shift    = {}", b.clearing_exponent);
    println!("{}", serde_json::to_string_pretty(&b)?);
    Ok(())
}
