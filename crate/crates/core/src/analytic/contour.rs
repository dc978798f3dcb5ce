use std::f64::consts::{FRAC_PI_2, PI, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{c64, AnalyticConfig, AnalyticError, Holomorphic, Scaled};

/// A closed region with a counterclockwise boundary.
///
/// `Annulus` is bounded by its outer circle and its inner circle traversed
/// clockwise; `Sector` is the polar box `r0 <= |z - center| <= r1`,
/// `t0 <= arg(z - center) <= t1`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Contour {
    Circle {
        center: Complex64,
        radius: f64,
    },
    Rect {
        x0: f64,
        y0: f64,
        x1: f64,
        y1: f64,
    },
    Annulus {
        center: Complex64,
        r_inner: f64,
        r_outer: f64,
    },
    Sector {
        center: Complex64,
        r0: f64,
        r1: f64,
        t0: f64,
        t1: f64,
    },
}

/// One oriented boundary piece.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Piece {
    Arc {
        center: Complex64,
        radius: f64,
        t0: f64,
        t1: f64,
    },
    Segment {
        a: Complex64,
        b: Complex64,
    },
}

impl Piece {
    pub fn point(&self, s: f64) -> Complex64 {
        match *self {
            Piece::Arc {
                center,
                radius,
                t0,
                t1,
            } => center + Complex64::from_polar(radius, t0 + (t1 - t0) * s),
            Piece::Segment { a, b } => a + (b - a) * s,
        }
    }

    /// `dz/ds`.
    pub fn tangent(&self, s: f64) -> Complex64 {
        match *self {
            Piece::Arc {
                radius, t0, t1, ..
            } => {
                let t = t0 + (t1 - t0) * s;
                Complex64::from_polar(radius, t) * c64(0.0, t1 - t0)
            }
            Piece::Segment { a, b } => b - a,
        }
    }

    pub fn length(&self) -> f64 {
        match *self {
            Piece::Arc {
                radius, t0, t1, ..
            } => radius * (t1 - t0).abs(),
            Piece::Segment { a, b } => (b - a).norm(),
        }
    }
}

impl Contour {
    pub fn circle(center: Complex64, radius: f64) -> Self {
        Contour::Circle { center, radius }
    }

    pub fn disc(radius: f64) -> Self {
        Contour::circle(c64(0.0, 0.0), radius)
    }

    pub fn annulus(center: Complex64, r_inner: f64, r_outer: f64) -> Self {
        Contour::Annulus {
            center,
            r_inner,
            r_outer,
        }
    }

    pub fn rect(x0: f64, y0: f64, x1: f64, y1: f64) -> Self {
        Contour::Rect { x0, y0, x1, y1 }
    }

    pub fn validate(&self) -> Result<(), AnalyticError> {
        let ok = match *self {
            Contour::Circle { radius, .. } => radius > 0.0 && radius.is_finite(),
            Contour::Rect { x0, y0, x1, y1 } => x1 > x0 && y1 > y0 && (x1 - x0 + y1 - y0).is_finite(),
            Contour::Annulus {
                r_inner, r_outer, ..
            } => r_inner > 0.0 && r_outer > r_inner && r_outer.is_finite(),
            Contour::Sector { r0, r1, t0, t1, .. } => {
                r0 >= 0.0 && r1 > r0 && t1 > t0 && t1 - t0 < TAU && r1.is_finite()
            }
        };
        if ok {
            Ok(())
        } else {
            Err(AnalyticError::InvalidRegion(format!("{self:?}")))
        }
    }

    pub fn boundary(&self) -> Vec<Piece> {
        match *self {
            Contour::Circle { center, radius } => vec![Piece::Arc {
                center,
                radius,
                t0: 0.0,
                t1: TAU,
            }],
            Contour::Rect { x0, y0, x1, y1 } => {
                let p = [c64(x0, y0), c64(x1, y0), c64(x1, y1), c64(x0, y1)];
                (0..4)
                    .map(|i| Piece::Segment {
                        a: p[i],
                        b: p[(i + 1) % 4],
                    })
                    .collect()
            }
            Contour::Annulus {
                center,
                r_inner,
                r_outer,
            } => vec![
                Piece::Arc {
                    center,
                    radius: r_outer,
                    t0: 0.0,
                    t1: TAU,
                },
                Piece::Arc {
                    center,
                    radius: r_inner,
                    t0: TAU,
                    t1: 0.0,
                },
            ],
            Contour::Sector {
                center,
                r0,
                r1,
                t0,
                t1,
            } => {
                let at = |r: f64, t: f64| center + Complex64::from_polar(r, t);
                let mut v = vec![
                    Piece::Segment {
                        a: at(r0, t0),
                        b: at(r1, t0),
                    },
                    Piece::Arc {
                        center,
                        radius: r1,
                        t0,
                        t1,
                    },
                    Piece::Segment {
                        a: at(r1, t1),
                        b: at(r0, t1),
                    },
                ];
                if r0 > 0.0 {
                    v.push(Piece::Arc {
                        center,
                        radius: r0,
                        t0: t1,
                        t1: t0,
                    });
                }
                v
            }
        }
    }

    /// Strict interior test.
    pub fn contains(&self, z: Complex64) -> bool {
        match *self {
            Contour::Circle { center, radius } => (z - center).norm() < radius,
            Contour::Rect { x0, y0, x1, y1 } => z.re > x0 && z.re < x1 && z.im > y0 && z.im < y1,
            Contour::Annulus {
                center,
                r_inner,
                r_outer,
            } => {
                let r = (z - center).norm();
                r > r_inner && r < r_outer
            }
            Contour::Sector {
                center,
                r0,
                r1,
                t0,
                t1,
            } => {
                let w = z - center;
                let r = w.norm();
                if !(r > r0 && r < r1) {
                    return false;
                }
                let t = t0 + (w.arg() - t0).rem_euclid(TAU);
                t > t0 && t < t1
            }
        }
    }

    /// Closed-region test, with a margin.
    pub fn touches(&self, z: Complex64, margin: f64) -> bool {
        match *self {
            Contour::Circle { center, radius } => (z - center).norm() <= radius + margin,
            Contour::Rect { x0, y0, x1, y1 } => {
                z.re >= x0 - margin && z.re <= x1 + margin && z.im >= y0 - margin && z.im <= y1 + margin
            }
            Contour::Annulus {
                center,
                r_inner,
                r_outer,
            } => {
                let r = (z - center).norm();
                r >= r_inner - margin && r <= r_outer + margin
            }
            Contour::Sector { .. } => {
                self.contains(z)
                    || self
                        .boundary()
                        .iter()
                        .any(|p| distance_to_piece(p, z) <= margin)
            }
        }
    }

    pub fn diameter(&self) -> f64 {
        match *self {
            Contour::Circle { radius, .. } => 2.0 * radius,
            Contour::Rect { x0, y0, x1, y1 } => (x1 - x0).hypot(y1 - y0),
            Contour::Annulus { r_outer, .. } => 2.0 * r_outer,
            Contour::Sector { r0, r1, t0, t1, .. } => (r1 - r0).max(r1 * (t1 - t0).min(PI)),
        }
    }

    /// A point well inside, used as a Newton seed.
    pub fn center_point(&self) -> Complex64 {
        match *self {
            Contour::Circle { center, .. } => center,
            Contour::Rect { x0, y0, x1, y1 } => c64(0.5 * (x0 + x1), 0.5 * (y0 + y1)),
            Contour::Annulus {
                center,
                r_inner,
                r_outer,
            } => center + 0.5 * (r_inner + r_outer),
            Contour::Sector {
                center,
                r0,
                r1,
                t0,
                t1,
            } => center + Complex64::from_polar(0.5 * (r0 + r1), 0.5 * (t0 + t1)),
        }
    }

    /// Ordering key for deterministic output.
    pub fn sort_key(&self) -> [f64; 6] {
        match *self {
            Contour::Circle { center, radius } => [0.0, center.re, center.im, radius, 0.0, 0.0],
            Contour::Rect { x0, y0, x1, y1 } => [1.0, x0, y0, x1, y1, 0.0],
            Contour::Annulus {
                center,
                r_inner,
                r_outer,
            } => [2.0, center.re, center.im, r_inner, r_outer, 0.0],
            Contour::Sector { r0, r1, t0, t1, .. } => [3.0, t0, r0, t1, r1, 0.0],
        }
    }
}

fn distance_to_piece(p: &Piece, z: Complex64) -> f64 {
    match *p {
        Piece::Segment { a, b } => {
            let d = b - a;
            let t = (((z - a) * d.conj()).re / d.norm_sqr()).clamp(0.0, 1.0);
            (a + d * t - z).norm()
        }
        Piece::Arc {
            center,
            radius,
            t0,
            t1,
        } => {
            let (lo, hi) = if t0 < t1 { (t0, t1) } else { (t1, t0) };
            let w = z - center;
            let t = lo + (w.arg() - lo).rem_euclid(TAU);
            if t <= hi {
                (w.norm() - radius).abs()
            } else {
                let e0 = (center + Complex64::from_polar(radius, lo) - z).norm();
                let e1 = (center + Complex64::from_polar(radius, hi) - z).norm();
                e0.min(e1)
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct WindingReport {
    pub winding: i64,
    /// `(1/2 pi i) * integral of Phi'/Phi` by quadrature, real part.
    pub raw: f64,
    pub samples: usize,
}

const MIN_WIDTH: f64 = 1e-13;

/// Rounding noise in `log Phi`: cancellation among terms scaled to modulus
/// about 1, plus the rounding of the sample point itself.
fn noise(x: &Sample) -> f64 {
    1e-14 / x.f.value.norm() + 1e-15 * x.f.log_derivative().norm() * (1.0 + x.z.norm())
}

struct Sample {
    s: f64,
    z: Complex64,
    f: Scaled,
    g: Complex64,
}

fn sample<H: Holomorphic + ?Sized>(
    h: &H,
    piece: &Piece,
    s: f64,
    cfg: &AnalyticConfig,
) -> Result<Sample, AnalyticError> {
    let z = piece.point(s);
    let f = h.eval_scaled(z)?;
    let ln_abs = f.ln_abs();
    if !(ln_abs >= cfg.zero_on_contour_tol.ln()) {
        return Err(AnalyticError::ZeroOnContour {
            at: z,
            modulus: ln_abs.exp(),
        });
    }
    Ok(Sample {
        s,
        z,
        f,
        g: f.log_derivative() * piece.tangent(s),
    })
}

/// Accumulated change of `log Phi` along one piece: `(exact, quadrature)`.
fn track_piece<H: Holomorphic + ?Sized>(
    h: &H,
    piece: &Piece,
    n0: usize,
    cfg: &AnalyticConfig,
    count: &mut usize,
) -> Result<(Complex64, Complex64), AnalyticError> {
    let mut exact = c64(0.0, 0.0);
    let mut quad = c64(0.0, 0.0);
    let mut left = sample(h, piece, 0.0, cfg)?;
    *count += 1;
    for i in 0..n0 {
        let right = sample(h, piece, (i + 1) as f64 / n0 as f64, cfg)?;
        *count += 1;
        // explicit stack of pending right endpoints
        let mut stack: Vec<(Sample, u32)> = vec![(right, 0)];
        while let Some((r, depth)) = stack.pop() {
            let m = sample(h, piece, 0.5 * (left.s + r.s), cfg)?;
            *count += 1;
            let step = |a: &Sample, b: &Sample| {
                c64(b.f.ln_abs() - a.f.ln_abs(), (b.f.value / a.f.value).arg())
            };
            let d_lm = step(&left, &m);
            let d_mr = step(&m, &r);
            let d = d_lm + d_mr;
            let q = (r.s - left.s) / 6.0 * (left.g + m.g * 4.0 + r.g);
            let width = r.s - left.s;
            let noise = noise(&left) + noise(&m) + noise(&r);
            let ok = d_lm.im.abs() < FRAC_PI_2
                && d_mr.im.abs() < FRAC_PI_2
                && (q - d).norm() <= 1e-10 * d.norm() + 1e-8 * width + noise;
            if ok {
                exact += d;
                quad += q;
                left = r;
                continue;
            }
            if depth >= cfg.max_bisect_depth || width < MIN_WIDTH {
                // stuck next to a near-zero: treat it as one on the contour
                let low = [&left, &m, &r]
                    .into_iter()
                    .min_by(|a, b| a.f.ln_abs().total_cmp(&b.f.ln_abs()))
                    .expect("three samples");
                if low.f.ln_abs() < cfg.zero_on_contour_tol.sqrt().ln() {
                    return Err(AnalyticError::ZeroOnContour {
                        at: piece.point(low.s),
                        modulus: low.f.ln_abs().exp(),
                    });
                }
                let raw = (exact.im + d.im) / TAU;
                return Err(AnalyticError::NonIntegerWinding { raw });
            }
            stack.push((r, depth + 1));
            stack.push((m, depth + 1));
        }
    }
    Ok((exact, quad))
}

/// Winding number of `Phi` along an arbitrary list of pieces, assumed to
/// form a closed cycle.
pub(crate) fn winding_along<H: Holomorphic + ?Sized>(
    h: &H,
    pieces: &[Piece],
    cfg: &AnalyticConfig,
) -> Result<WindingReport, AnalyticError> {
    let total: f64 = pieces.iter().map(Piece::length).sum();
    let mut exact = c64(0.0, 0.0);
    let mut quad = c64(0.0, 0.0);
    let mut samples = 0usize;
    for p in pieces {
        let n0 = ((cfg.sampling as f64 * p.length() / total).ceil() as usize).max(8);
        let (e, q) = track_piece(h, p, n0, cfg, &mut samples)?;
        exact += e;
        quad += q;
    }
    let turns = exact.im / TAU;
    let winding = turns.round();
    let raw = quad.im / TAU;
    if (raw - winding).abs() > cfg.integer_tol || (turns - winding).abs() > cfg.integer_tol {
        return Err(AnalyticError::NonIntegerWinding { raw });
    }
    Ok(WindingReport {
        winding: winding as i64,
        raw,
        samples,
    })
}

/// `(1 / 2 pi i) * contour integral of Phi'/Phi` around the boundary.
pub fn winding_number<H: Holomorphic + ?Sized>(
    h: &H,
    contour: &Contour,
    cfg: &AnalyticConfig,
) -> Result<WindingReport, AnalyticError> {
    contour.validate()?;
    winding_along(h, &contour.boundary(), cfg)
}
