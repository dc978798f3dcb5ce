//! Case d31: the exponential points are finitely many, and are listed.

use expzero::catalog;
use expzero::classifier::classify_surface;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for spec in [catalog::single_point_on_line(), catalog::two_points_on_line()] {
        let r = classify_surface(&spec)?;
        println!("{}: case {}", spec.name.as_deref().unwrap_or("?"), r.case.as_str());
        for p in &r.witness.points {
            println!("  z = ({:.12}, {:.12})  residual {:.1e}", p.z1, p.z2, p.residual);
        }
    }
    Ok(())
}
