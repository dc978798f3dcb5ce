//! Both sides of the Borel–Carathéodory inequality for a few functions.

use expzero::analytic::borel_caratheodory_check;
use num_complex::Complex64;

fn main() {
    let cases: [(&str, Box<dyn Fn(Complex64) -> Complex64>, f64, f64); 3] = [
        ("w", Box::new(|w| w), 1.0, 2.0),
        ("w^2", Box::new(|w| w * w), 1.0, 2.0),
        ("log(e^w - w)", Box::new(|w: Complex64| (w.exp() - w).ln()), 0.25, 0.5),
    ];
    for (name, f, r, big_r) in cases {
        let rep = borel_caratheodory_check(f, r, big_r, 4096);
        println!("{name:<14} r = {r}, R = {big_r}: {:.6} <= {:.6}  ({})", rep.lhs, rep.rhs, rep.holds);
    }
}
