//! Weierstrass functions for a lattice `omega1 Z + omega2 Z`, quasi-periods,
//! and the Baker–Akhiezer style factors built from them.
//!
//! Everything is computed on the normalized lattice `Z + tau Z`
//! (`tau = omega2 / omega1`) by summing each horizontal row in closed form
//! (`sum_n 1/(u+n)^2 = pi^2 csc^2(pi u)` and friends), so the only
//! truncation is in the row index `|m| <= series_depth`, which converges
//! like `exp(-2 pi m Im tau)`.

mod report;

pub use report::{verify_identities, IdentityCheck, IdentityReport};

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EllipticError {
    #[error("degenerate lattice: Im(omega2/omega1) = {0}")]
    DegenerateLattice(f64),
    #[error("{0} is a lattice point")]
    LatticePoint(Complex64),
    #[error("{0} is not a lattice point")]
    NotLatticePoint(Complex64),
    #[error("function vanishes near {0} on the period path")]
    VanishingOnPath(Complex64),
    #[error("period integral {raw} is not an integer multiple of 2 pi i")]
    NonIntegerPeriod { raw: Complex64 },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EllipticData {
    pub omega1: Complex64,
    pub omega2: Complex64,
    pub eta1: Complex64,
    pub eta2: Complex64,
    pub g2: Complex64,
    pub g3: Complex64,
    pub series_depth: usize,
    tau: Complex64,
    /// `sum' 1/omega^2` on `Z + tau Z`, rows summed first.
    e2: Complex64,
}

pub const DEFAULT_DEPTH: usize = 40;

const LATTICE_TOL: f64 = 1e-12;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// `q = exp(2 i w)` or `exp(-2 i w)`, whichever is at most 1 in modulus,
/// and the sign telling which.
fn small_q(w: Complex64) -> (Complex64, f64) {
    if w.im >= 0.0 {
        ((c(0.0, 2.0) * w).exp(), 1.0)
    } else {
        ((c(0.0, -2.0) * w).exp(), -1.0)
    }
}

/// `cot w`, stable for large `|Im w|`.
fn cot(w: Complex64) -> Complex64 {
    let (q, s) = small_q(w);
    c(0.0, s) * (q + 1.0) / (q - 1.0)
}

/// `csc^2 w`, stable for large `|Im w|`.
fn csc2(w: Complex64) -> Complex64 {
    let (q, _) = small_q(w);
    -4.0 * q / ((1.0 - q) * (1.0 - q))
}

fn rows(depth: usize) -> impl Iterator<Item = i64> {
    let d = depth as i64;
    -d..=d
}

impl EllipticData {
    pub fn tau(&self) -> Complex64 {
        self.tau
    }

    /// `omega1 eta2 - omega2 eta1`, which should be `-2 pi i`.
    pub fn legendre(&self) -> Complex64 {
        self.omega1 * self.eta2 - self.omega2 * self.eta1
    }

    /// Real coordinates of `z` in the basis `omega1, omega2`.
    pub fn coordinates(&self, z: Complex64) -> (f64, f64) {
        let u = z / self.omega1;
        let b = u.im / self.tau.im;
        (u.re - b * self.tau.re, b)
    }

    /// `(a, b)` with `z = a omega1 + b omega2`, if `z` is a lattice point.
    pub fn lattice_index(&self, z: Complex64) -> Option<(i64, i64)> {
        let (x, y) = self.coordinates(z);
        let (a, b) = (x.round(), y.round());
        let off = (x - a) * self.omega1 + (y - b) * self.omega2;
        (off.norm() <= 1e-9 * self.omega1.norm().max(self.omega2.norm())).then_some((a as i64, b as i64))
    }

    /// Quasi-period of a lattice point.
    pub fn eta_of(&self, omega: Complex64) -> Result<Complex64, EllipticError> {
        let (a, b) = self
            .lattice_index(omega)
            .ok_or(EllipticError::NotLatticePoint(omega))?;
        Ok(self.eta1 * a as f64 + self.eta2 * b as f64)
    }

    fn check_regular(&self, z: Complex64) -> Result<(Complex64, i64, i64), EllipticError> {
        let (x, y) = self.coordinates(z);
        let (a, b) = (x.round(), y.round());
        let r = z - self.omega1 * a - self.omega2 * b;
        if r.norm() <= LATTICE_TOL * self.omega1.norm() {
            return Err(EllipticError::LatticePoint(z));
        }
        Ok((r / self.omega1, a as i64, b as i64))
    }

    fn wp_norm(&self, u: Complex64) -> Complex64 {
        rows(self.series_depth)
            .map(|m| csc2(PI * (u - self.tau * m as f64)))
            .sum::<Complex64>()
            * (PI * PI)
            - self.e2
    }

    fn wp_prime_norm(&self, u: Complex64) -> Complex64 {
        rows(self.series_depth)
            .map(|m| {
                let w = PI * (u - self.tau * m as f64);
                csc2(w) * cot(w)
            })
            .sum::<Complex64>()
            * (-2.0 * PI * PI * PI)
    }

    fn zeta_norm(&self, u: Complex64) -> Complex64 {
        let mut s = cot(PI * u);
        for m in 1..=self.series_depth as i64 {
            let mt = self.tau * m as f64;
            s += cot(PI * (u - mt)) + cot(PI * (u + mt));
        }
        self.e2 * u + PI * s
    }

    fn sigma_norm(&self, u: Complex64) -> Complex64 {
        let s = (PI * u).sin();
        let mut p = s / PI * (self.e2 * u * u * 0.5).exp();
        for m in 1..=self.series_depth as i64 {
            let r = s / (PI * self.tau * m as f64).sin();
            if !r.is_finite() {
                break;
            }
            p *= 1.0 - r * r;
        }
        p
    }

    /// `wp(z)`.
    pub fn wp(&self, z: Complex64) -> Result<Complex64, EllipticError> {
        let (u, _, _) = self.check_regular(z)?;
        Ok(self.wp_norm(u) / (self.omega1 * self.omega1))
    }

    pub fn wp_prime(&self, z: Complex64) -> Result<Complex64, EllipticError> {
        let (u, _, _) = self.check_regular(z)?;
        Ok(self.wp_prime_norm(u) / self.omega1.powi(3))
    }

    /// Weierstrass `zeta`, with `zeta(z + omega_i) = zeta(z) + eta_i`.
    pub fn zeta(&self, z: Complex64) -> Result<Complex64, EllipticError> {
        let (u, a, b) = self.check_regular(z)?;
        Ok(self.zeta_norm(u) / self.omega1 + self.eta1 * a as f64 + self.eta2 * b as f64)
    }

    /// Weierstrass `sigma`, evaluated without period reduction.
    pub fn sigma(&self, z: Complex64) -> Complex64 {
        self.omega1 * self.sigma_norm(z / self.omega1)
    }

    /// `exp(omega zeta(z) - eta z)` for a lattice point `omega`.
    pub fn baker_akhiezer_phi(&self, omega: Complex64, z: Complex64) -> Result<Complex64, EllipticError> {
        let eta = self.eta_of(omega)?;
        if omega == Complex64::new(0.0, 0.0) {
            return Ok(c(1.0, 0.0));
        }
        Ok((omega * self.zeta(z)? - eta * z).exp())
    }

    /// `sigma(z - u) / sigma(z) * exp(u zeta(z))`.
    pub fn baker_akhiezer_psi(&self, u: Complex64, z: Complex64) -> Result<Complex64, EllipticError> {
        if self.lattice_index(u).is_some() {
            return Err(EllipticError::LatticePoint(u));
        }
        self.check_regular(z - u)?;
        let zeta = self.zeta(z)?;
        Ok(self.sigma(z - u) / self.sigma(z) * (u * zeta).exp())
    }

    /// Start of the period paths: a fixed offset into the fundamental cell.
    pub fn path_origin(&self) -> Complex64 {
        0.37 * (self.omega1 + self.omega2) / 2.0
    }

    /// `(1/2 pi i)` times the integrals of `f'/f` along `z0 -> z0 + omega1`
    /// and `z0 -> z0 + omega2`, for a doubly periodic `f`.
    pub fn period_vector_of_log_derivative<F>(&self, f: F) -> Result<(i64, i64), EllipticError>
    where
        F: Fn(Complex64) -> Complex64,
    {
        let z0 = self.path_origin();
        let p = log_increment(&f, z0, z0 + self.omega1)?;
        let q = log_increment(&f, z0, z0 + self.omega2)?;
        let round = |raw: Complex64| {
            let k = raw / c(0.0, 2.0 * PI);
            if (k - k.re.round()).norm() < 1e-6 {
                Ok(k.re.round() as i64)
            } else {
                Err(EllipticError::NonIntegerPeriod { raw })
            }
        };
        Ok((round(p)?, round(q)?))
    }
}

/// Continuous change of `log f` along the segment `a -> b`.
fn log_increment<F: Fn(Complex64) -> Complex64>(f: &F, a: Complex64, b: Complex64) -> Result<Complex64, EllipticError> {
    let at = |s: f64| a + (b - a) * s;
    let eval = |s: f64| {
        let v = f(at(s));
        if !(v.norm() > 1e-300) || !v.is_finite() {
            Err(EllipticError::VanishingOnPath(at(s)))
        } else {
            Ok(v)
        }
    };
    let n = 256;
    let mut total = c(0.0, 0.0);
    let mut left = (0.0, eval(0.0)?);
    for i in 1..=n {
        let mut stack = vec![(i as f64 / n as f64, 0u32)];
        while let Some((s, depth)) = stack.pop() {
            let v = eval(s)?;
            let step = v / left.1;
            if step.arg().abs() < PI / 4.0 {
                total += step.ln();
                left = (s, v);
            } else if depth > 40 {
                return Err(EllipticError::VanishingOnPath(at(s)));
            } else {
                stack.push((s, depth + 1));
                stack.push((0.5 * (left.0 + s), depth + 1));
            }
        }
    }
    Ok(total)
}

/// Invariants and quasi-periods for `omega1 Z + omega2 Z`, with
/// `Im(omega2/omega1) > 0`.
pub fn elliptic_from_lattice(omega1: Complex64, omega2: Complex64, depth: usize) -> Result<EllipticData, EllipticError> {
    let tau = omega2 / omega1;
    if !(tau.im > 1e-9) || !tau.is_finite() {
        return Err(EllipticError::DegenerateLattice(tau.im));
    }
    let nonzero = || rows(depth).filter(|m| *m != 0);
    let e2 = PI * PI / 3.0 + nonzero().map(|m| csc2(PI * tau * m as f64)).sum::<Complex64>() * (PI * PI);
    let e4 = PI.powi(4) / 45.0
        + nonzero()
            .map(|m| {
                let s = csc2(PI * tau * m as f64);
                s * s - s * (2.0 / 3.0)
            })
            .sum::<Complex64>()
            * PI.powi(4);
    let e6 = 2.0 * PI.powi(6) / 945.0
        + nonzero()
            .map(|m| {
                let s = csc2(PI * tau * m as f64);
                s * s * s - s * s + s * (2.0 / 15.0)
            })
            .sum::<Complex64>()
            * PI.powi(6);
    let mut data = EllipticData {
        omega1,
        omega2,
        eta1: c(0.0, 0.0),
        eta2: c(0.0, 0.0),
        g2: 60.0 * e4 / omega1.powi(4),
        g3: 140.0 * e6 / omega1.powi(6),
        series_depth: depth,
        tau,
        e2,
    };
    // 2 zeta(omega_i / 2), without period reduction
    data.eta1 = 2.0 * data.zeta_norm(c(0.5, 0.0)) / omega1;
    data.eta2 = 2.0 * data.zeta_norm(tau * 0.5) / omega1;
    Ok(data)
}
