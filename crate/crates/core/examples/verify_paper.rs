//! Runs the numbered acceptance checks and prints one line per check.

use expzero::reproduce::{run_suite, SuiteConfig};

fn main() {
    let rep = run_suite(&SuiteConfig::default());
    for c in &rep.criteria {
        println!("{:>2} {:<20} {}  ({:.3}s)", c.id, c.name, if c.pass { "pass" } else { "FAIL" }, c.elapsed.as_secs_f64());
    }
    std::process::exit(if rep.pass { 0 } else { 1 });
}
