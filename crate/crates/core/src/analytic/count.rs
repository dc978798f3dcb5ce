use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{winding_number, AnalyticConfig, AnalyticError, Contour, Holomorphic};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CountReport {
    pub count: i64,
    pub raw: f64,
    /// The region actually integrated over, after any jitter.
    pub region: Contour,
    pub retries: usize,
}

/// Rejects regions whose closure meets an excluded point. The annulus hole
/// may hold excluded points.
pub(crate) fn check_region<H: Holomorphic + ?Sized>(
    h: &H,
    region: &Contour,
    margin: f64,
) -> Result<(), AnalyticError> {
    region.validate()?;
    for &p in h.excluded_points() {
        if region.touches(p, margin) {
            return Err(AnalyticError::RegionContainsExcluded(p));
        }
    }
    Ok(())
}

pub(crate) fn jitter(region: &Contour, rng: &mut impl Rng, scale: f64) -> Contour {
    let mut f = || 1.0 + scale * rng.gen_range(-1.0..1.0);
    match *region {
        Contour::Circle { center, radius } => Contour::Circle {
            center,
            radius: radius * f(),
        },
        Contour::Rect { x0, y0, x1, y1 } => {
            let (w, h) = (x1 - x0, y1 - y0);
            Contour::Rect {
                x0: x0 + w * (f() - 1.0),
                y0: y0 + h * (f() - 1.0),
                x1: x1 + w * (f() - 1.0),
                y1: y1 + h * (f() - 1.0),
            }
        }
        Contour::Annulus {
            center,
            r_inner,
            r_outer,
        } => Contour::Annulus {
            center,
            r_inner: r_inner * f(),
            r_outer: r_outer * f(),
        },
        Contour::Sector {
            center,
            r0,
            r1,
            t0,
            t1,
        } => {
            let dt = t1 - t0;
            Contour::Sector {
                center,
                r0: r0 * f(),
                r1: r1 * f(),
                t0: t0 + dt * (f() - 1.0),
                t1: t1 + dt * (f() - 1.0),
            }
        }
    }
}

/// Number of zeros (with multiplicity) inside `region`. When `Phi` comes too
/// close to zero on the boundary, the boundary is perturbed by a relative
/// `jitter_scale` and retried.
pub fn count_zeros<H: Holomorphic + ?Sized>(
    h: &H,
    region: &Contour,
    cfg: &AnalyticConfig,
) -> Result<CountReport, AnalyticError> {
    check_region(h, region, cfg.clearance)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut current = *region;
    let mut last_err = None;
    for retry in 0..=cfg.jitter_retries {
        if retry > 0 {
            current = jitter(region, &mut rng, cfg.jitter_scale);
            if check_region(h, &current, cfg.clearance).is_err() {
                continue;
            }
        }
        match winding_number(h, &current, cfg) {
            Ok(w) => {
                return Ok(CountReport {
                    count: w.winding,
                    raw: w.raw,
                    region: current,
                    retries: retry,
                })
            }
            Err(e @ (AnalyticError::ZeroOnContour { .. } | AnalyticError::NonIntegerWinding { .. })) => {
                last_err = Some(e)
            }
            Err(e) => return Err(e),
        }
    }
    Err(last_err.unwrap_or(AnalyticError::InvalidRegion(format!("{region:?}"))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::{c64, FnHolomorphic};
    use num_complex::Complex64;

    #[test]
    fn jitter_escapes_boundary_zero() {
        let f = FnHolomorphic::new(|z: Complex64| (z - 1.0, c64(1.0, 0.0)));
        let cfg = AnalyticConfig::default();
        let r = count_zeros(&f, &Contour::disc(1.0), &cfg).unwrap();
        assert!(r.retries >= 1);
        let Contour::Circle { radius, .. } = r.region else { panic!() };
        assert_eq!(r.count, if radius > 1.0 { 1 } else { 0 });
    }

    #[test]
    fn excluded_point_in_disc_rejected() {
        let f = FnHolomorphic::new(|z: Complex64| (z, c64(1.0, 0.0))).excluding(&[c64(0.0, 0.0)]);
        let cfg = AnalyticConfig::default();
        assert!(matches!(
            count_zeros(&f, &Contour::disc(1.0), &cfg),
            Err(AnalyticError::RegionContainsExcluded(_))
        ));
        let a = Contour::annulus(c64(0.0, 0.0), 0.5, 1.0);
        assert_eq!(count_zeros(&f, &a, &cfg).unwrap().count, 0);
    }
}
