//! Classifies every canned surface and prints the case table.

use expzero::catalog;
use expzero::classifier::classify_surface;

fn main() {
    println!("{:<24} {:<12} verdict", "surface", "case");
    for spec in catalog::surfaces() {
        let name = spec.name.clone().unwrap_or_default();
        match classify_surface(&spec) {
            Ok(r) => println!(
                "{name:<24} {:<12} {}",
                r.case.as_str(),
                r.verdict.map(|v| format!("{v:?}")).unwrap_or_else(|| "-".into())
            ),
            Err(e) => println!("{name:<24} error: {e}"),
        }
    }
}
