//! The `expzero` command line.
//!
//! Exit codes: `classify` returns 0 when decided, 3 when unsupported, 4 when
//! a numeric override decided something; `solve` returns 0 iff at least one
//! zero was isolated; every command returns 2 on malformed input.

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use serde::Serialize;

use crate::analytic::{
    isolate_zeros, laurent_profile, AnalyticConfig, AnalyticError, Contour, Holomorphic, PhiSpec,
};
use crate::classifier::{classify_surface, CaseLabel, SurfaceSpec};
use crate::elliptic::{elliptic_from_lattice, verify_identities, DEFAULT_DEPTH};
use crate::reproduce::{run_suite, SuiteConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_BAD_INPUT: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;
pub const EXIT_HEURISTIC: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "expzero", version, about = "Exponential points on surfaces and zeros of exponential polynomials")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classify a surface given as JSON.
    Classify {
        #[arg(long)]
        input: PathBuf,
    },
    /// Count and isolate zeros of Phi in a region.
    Solve {
        #[command(flatten)]
        job: Job,
        #[arg(long)]
        max_zeros: Option<usize>,
        /// Write an SVG plot of the certificates.
        #[arg(long)]
        emit_svg: Option<PathBuf>,
    },
    /// Winding number of Phi around the region boundary.
    Winding {
        #[command(flatten)]
        job: Job,
    },
    /// Laurent data of log Phi on the circle `disc cx cy r`.
    Laurent {
        #[command(flatten)]
        job: Job,
        /// Largest |k| reported.
        #[arg(long, default_value_t = 8)]
        order: usize,
    },
    /// Check the Weierstrass-function identities on a lattice.
    EllipticVerify {
        /// First period as `re,im`.
        #[arg(long, default_value = "1,0", value_parser = parse_complex)]
        omega1: Complex64,
        #[arg(long, default_value = "0.3,1.1", value_parser = parse_complex)]
        omega2: Complex64,
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: usize,
        #[arg(long, default_value_t = 20)]
        points: usize,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[arg(long, value_parser = parse_seed)]
        seed: Option<u64>,
    },
    /// Run the numbered acceptance checks.
    VerifyPaper {
        /// Run only these checks (name or number); repeatable.
        #[arg(long)]
        only: Vec<String>,
        /// Replace every tolerance.
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, value_parser = parse_seed)]
        seed: Option<u64>,
    },
}

#[derive(Args, Debug)]
pub struct Job {
    /// Problem file: `{"f": ..., "xi": [...]}`.
    #[arg(long)]
    pub input: PathBuf,
    /// `disc cx cy r`, `annulus cx cy r1 r2` or `rect x1 y1 x2 y2`.
    #[arg(long, num_args = 4..=5, allow_negative_numbers = true, required = true)]
    pub region: Vec<String>,
    /// Residual tolerance for refined roots.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Jitter seed, hexadecimal.
    #[arg(long, value_parser = parse_seed)]
    pub seed: Option<u64>,
    /// JSON file overriding any analytic tolerance or budget.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

fn parse_seed(s: &str) -> Result<u64, String> {
    let t = s.trim_start_matches("0x").trim_start_matches("0X");
    u64::from_str_radix(t, 16).map_err(|e| format!("bad hex seed {s:?}: {e}"))
}

fn parse_complex(s: &str) -> Result<Complex64, String> {
    let parts: Vec<&str> = s.split(',').collect();
    let num = |p: &str| p.trim().parse::<f64>().map_err(|e| format!("{s:?}: {e}"));
    match parts.as_slice() {
        [re] => Ok(Complex64::new(num(re)?, 0.0)),
        [re, im] => Ok(Complex64::new(num(re)?, num(im)?)),
        _ => Err(format!("expected re,im, got {s:?}")),
    }
}

/// Parses the `--region` words.
pub fn parse_region(words: &[String]) -> Result<Contour, String> {
    let nums: Vec<f64> = words[1..]
        .iter()
        .map(|w| w.parse::<f64>().map_err(|e| format!("{w:?}: {e}")))
        .collect::<Result<_, _>>()?;
    let c = match (words[0].as_str(), nums.as_slice()) {
        ("disc", [cx, cy, r]) => Contour::circle(Complex64::new(*cx, *cy), *r),
        ("annulus", [cx, cy, r1, r2]) => Contour::annulus(Complex64::new(*cx, *cy), *r1, *r2),
        ("rect", [x1, y1, x2, y2]) => Contour::rect(*x1, *y1, *x2, *y2),
        _ => return Err(format!("unrecognized region {words:?}")),
    };
    c.validate().map_err(|e| e.to_string())?;
    Ok(c)
}

struct Failure {
    code: i32,
    message: String,
}

fn bad(message: impl std::fmt::Display) -> Failure {
    Failure {
        code: EXIT_BAD_INPUT,
        message: message.to_string(),
    }
}

fn print_json<T: Serialize>(v: &T) {
    emit(&serde_json::to_string_pretty(v).expect("output serializes"));
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| bad(format!("{}: {e}", path.display())))
}

struct Prepared {
    phi: crate::analytic::PhiFunction,
    region: Contour,
    cfg: AnalyticConfig,
}

fn prepare(job: &Job) -> Result<Prepared, Failure> {
    let spec = PhiSpec::from_json_str(&read(&job.input)?).map_err(bad)?;
    let phi = spec.build().map_err(bad)?;
    let region = parse_region(&job.region).map_err(bad)?;
    let mut cfg = match &job.config {
        Some(p) => serde_json::from_str::<AnalyticConfig>(&read(p)?).map_err(bad)?,
        None => AnalyticConfig::default(),
    };
    if let Some(t) = job.tol {
        if !(t > 0.0) {
            return Err(bad("--tol must be positive"));
        }
        cfg.residual_tol = t;
    }
    if let Some(s) = job.seed {
        cfg.seed = s;
    }
    Ok(Prepared { phi, region, cfg })
}

/// Input problems map to exit 2, numerical failures to exit 1.
fn analytic_failure(e: AnalyticError) -> Failure {
    let code = match e {
        AnalyticError::RegionContainsExcluded(_)
        | AnalyticError::NearExcluded { .. }
        | AnalyticError::InvalidRegion(_)
        | AnalyticError::InvalidInput(_)
        | AnalyticError::Poly(_) => EXIT_BAD_INPUT,
        _ => EXIT_FAIL,
    };
    Failure {
        code,
        message: e.to_string(),
    }
}

fn classify(input: &PathBuf) -> Result<i32, Failure> {
    let spec = SurfaceSpec::from_json_str(&read(input)?).map_err(bad)?;
    let res = classify_surface(&spec).map_err(bad)?;
    emit(&res.to_json_string());
    Ok(if !res.heuristic_flags.is_empty() {
        EXIT_HEURISTIC
    } else if res.case == CaseLabel::Unsupported {
        EXIT_UNSUPPORTED
    } else {
        EXIT_OK
    })
}

fn solve(job: &Job, max_zeros: Option<usize>, svg: Option<&PathBuf>) -> Result<i32, Failure> {
    let p = prepare(job)?;
    let rep = isolate_zeros(&p.phi, &p.region, max_zeros, &p.cfg).map_err(analytic_failure)?;
    print_json(&rep);
    if let Some(path) = svg {
        let doc = crate::svg::render(&rep, p.phi.excluded_points());
        fs::write(path, doc).map_err(|e| Failure {
            code: EXIT_FAIL,
            message: format!("{}: {e}", path.display()),
        })?;
    }
    Ok(if rep.isolated().next().is_some() { EXIT_OK } else { EXIT_FAIL })
}

fn winding(job: &Job) -> Result<i32, Failure> {
    let p = prepare(job)?;
    // no jitter: the winding number of exactly this boundary
    let cfg = AnalyticConfig {
        jitter_retries: 0,
        ..p.cfg
    };
    let c = crate::analytic::count_zeros(&p.phi, &p.region, &cfg).map_err(analytic_failure)?;
    print_json(&serde_json::json!({ "region": c.region, "winding": c.count, "raw": c.raw }));
    Ok(EXIT_OK)
}

fn laurent(job: &Job, order: usize) -> Result<i32, Failure> {
    let p = prepare(job)?;
    let Contour::Circle { center, radius } = p.region else {
        return Err(bad("laurent needs --region disc cx cy r"));
    };
    let prof = laurent_profile(&p.phi, center, radius, order, &p.cfg).map_err(analytic_failure)?;
    print_json(&prof);
    Ok(EXIT_OK)
}

fn run(cli: Cli) -> Result<i32, Failure> {
    match cli.command {
        Command::Classify { input } => classify(&input),
        Command::Solve { job, max_zeros, emit_svg } => solve(&job, max_zeros, emit_svg.as_ref()),
        Command::Winding { job } => winding(&job),
        Command::Laurent { job, order } => laurent(&job, order),
        Command::EllipticVerify {
            omega1,
            omega2,
            depth,
            points,
            tol,
            seed,
        } => {
            let d = elliptic_from_lattice(omega1, omega2, depth).map_err(bad)?;
            let rep = verify_identities(&d, points, seed.unwrap_or(0x5EED), tol).map_err(|e| Failure {
                code: EXIT_FAIL,
                message: e.to_string(),
            })?;
            print_json(&rep);
            Ok(if rep.pass { EXIT_OK } else { EXIT_FAIL })
        }
        Command::VerifyPaper { only, tol, seed } => {
            let rep = run_suite(&SuiteConfig { tol, only, seed });
            for c in &rep.criteria {
                eprintln!(
                    "{} {:>2} {:<20} {:.3}s",
                    if c.pass { "PASS" } else { "FAIL" },
                    c.id,
                    c.name,
                    c.elapsed.as_secs_f64()
                );
            }
            print_json(&rep);
            Ok(if rep.pass { EXIT_OK } else { EXIT_FAIL })
        }
    }
}

/// Parses `args` and runs the command; returns the process exit code.
/// Writes a line to stdout; a closed pipe is not an error worth a panic.
fn emit(s: &str) {
    use std::io::Write;
    let _ = writeln!(std::io::stdout().lock(), "{s}");
}

pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_BAD_INPUT } else { EXIT_OK };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}
