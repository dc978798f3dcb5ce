use std::cmp::Ordering;
use std::f64::consts::TAU;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::count::check_region;
use super::{
    count_zeros, newton, thread_pool, winding_number, AnalyticConfig, AnalyticError, Contour,
    Holomorphic, NewtonStatus,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertStatus {
    Isolated,
    Cluster,
    ContourFailure,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RefinedRoot {
    pub re: f64,
    pub im: f64,
    pub residual: f64,
    pub iters: usize,
}

impl RefinedRoot {
    pub fn z(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZeroCertificate {
    #[serde(rename = "box")]
    pub cell: Contour,
    pub winding: i64,
    pub roots: Vec<RefinedRoot>,
    pub status: CertStatus,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IsolationReport {
    pub region: Contour,
    /// Zero count of the whole region.
    pub total: i64,
    pub certificates: Vec<ZeroCertificate>,
    /// Cells with zeros that were processed.
    pub cells: usize,
    /// Contours integrated, including empty children and retries.
    pub contours: usize,
    /// False when `max_zeros` stopped the search early.
    pub complete: bool,
}

impl IsolationReport {
    pub fn isolated(&self) -> impl Iterator<Item = &ZeroCertificate> {
        self.certificates
            .iter()
            .filter(|c| c.status == CertStatus::Isolated)
    }
}

#[derive(Clone, Copy, Debug)]
struct Cell {
    region: Contour,
    count: i64,
    /// Splits since the count first reached 1.
    single_splits: u32,
}

enum Outcome {
    Done(ZeroCertificate),
    Split(Vec<Cell>, usize),
}

const BATCH: usize = 32;
/// Extra splits of a one-zero cell, hoping for a better Newton seed.
const SINGLE_SPLITS: u32 = 6;

fn splitmix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

/// Deterministic split fraction near 1/2, different for every cell and attempt.
fn fraction(region: &Contour, seed: u64, attempt: usize, salt: u64) -> f64 {
    let mut h = seed ^ salt.wrapping_mul(0x1000_0000_01B3);
    for v in region.sort_key() {
        h = splitmix(h ^ v.to_bits());
    }
    h = splitmix(h ^ attempt as u64);
    let u = (h >> 11) as f64 / (1u64 << 53) as f64;
    let spread = 0.04 + 0.03 * attempt as f64;
    0.5 + spread * (2.0 * u - 1.0)
}

fn sectors(center: Complex64, r0: f64, r1: f64, t0: f64, t1: f64, n: usize, off: f64) -> Vec<Contour> {
    let dt = (t1 - t0) / n as f64;
    (0..n)
        .map(|k| {
            let a = if k == 0 { t0 } else { t0 + dt * (k as f64 + off) };
            let b = if k + 1 == n { t1 } else { t0 + dt * (k as f64 + 1.0 + off) };
            Contour::Sector {
                center,
                r0,
                r1,
                t0: a,
                t1: b,
            }
        })
        .collect()
}

fn split(region: &Contour, seed: u64, attempt: usize) -> Vec<Contour> {
    let f = |salt| fraction(region, seed, attempt, salt);
    match *region {
        Contour::Circle { center, radius } => {
            let ri = radius * f(1);
            let rot = TAU * (f(2) - 0.5);
            let mut v = vec![Contour::Circle { center, radius: ri }];
            v.extend(sectors(center, ri, radius, rot, rot + TAU, 4, 0.0));
            v
        }
        Contour::Annulus {
            center,
            r_inner,
            r_outer,
        } => {
            let mid = 0.5 * (r_inner + r_outer);
            let n = ((TAU * mid / (r_outer - r_inner)).ceil() as usize).clamp(4, 16);
            let rot = TAU / n as f64 * (f(2) - 0.5);
            sectors(center, r_inner, r_outer, rot, rot + TAU, n, 0.0)
        }
        Contour::Sector {
            center,
            r0,
            r1,
            t0,
            t1,
        } => {
            let arc = 0.5 * (r0 + r1) * (t1 - t0);
            let width = r1 - r0;
            let mut out = Vec::new();
            let radial = if arc > 2.0 * width {
                vec![(r0, r1)]
            } else {
                let rm = r0 + width * f(1);
                vec![(r0, rm), (rm, r1)]
            };
            for (a, b) in radial {
                if width > 2.0 * arc {
                    out.push(Contour::Sector {
                        center,
                        r0: a,
                        r1: b,
                        t0,
                        t1,
                    });
                } else {
                    let tm = t0 + (t1 - t0) * f(3);
                    out.push(Contour::Sector { center, r0: a, r1: b, t0, t1: tm });
                    out.push(Contour::Sector { center, r0: a, r1: b, t0: tm, t1 });
                }
            }
            out
        }
        Contour::Rect { x0, y0, x1, y1 } => {
            let (w, h) = (x1 - x0, y1 - y0);
            let xs = if w > 0.5 * h {
                vec![x0, x0 + w * f(1), x1]
            } else {
                vec![x0, x1]
            };
            let ys = if h > 0.5 * w {
                vec![y0, y0 + h * f(2), y1]
            } else {
                vec![y0, y1]
            };
            let mut out = Vec::new();
            for i in 0..xs.len() - 1 {
                for j in 0..ys.len() - 1 {
                    out.push(Contour::Rect {
                        x0: xs[i],
                        y0: ys[j],
                        x1: xs[i + 1],
                        y1: ys[j + 1],
                    });
                }
            }
            out
        }
    }
}

enum Refined {
    Root(RefinedRoot),
    /// Converged inside the cell, but the residual is above tolerance.
    Inexact,
    Failed,
}

fn refine<H: Holomorphic + ?Sized>(h: &H, cell: &Contour, cfg: &AnalyticConfig) -> Refined {
    let Ok(out) = newton(h, cell.center_point(), cfg) else {
        return Refined::Failed;
    };
    if out.status != NewtonStatus::Converged || !cell.contains(out.z) {
        return Refined::Failed;
    }
    match h.value(out.z).map(|v| v.norm()) {
        Ok(residual) if residual < cfg.residual_tol => Refined::Root(RefinedRoot {
            re: out.z.re,
            im: out.z.im,
            residual,
            iters: out.iters,
        }),
        _ => Refined::Inexact,
    }
}

fn process<H: Holomorphic + ?Sized>(h: &H, cell: Cell, min_size: f64, cfg: &AnalyticConfig) -> Outcome {
    let cluster = |roots: Vec<RefinedRoot>| {
        Outcome::Done(ZeroCertificate {
            cell: cell.region,
            winding: cell.count,
            roots,
            status: CertStatus::Cluster,
        })
    };
    if cell.count == 1 {
        match refine(h, &cell.region, cfg) {
            Refined::Root(root) => {
                return Outcome::Done(ZeroCertificate {
                    cell: cell.region,
                    winding: 1,
                    roots: vec![root],
                    status: CertStatus::Isolated,
                })
            }
            Refined::Inexact => return cluster(Vec::new()),
            Refined::Failed if cell.single_splits >= SINGLE_SPLITS => return cluster(Vec::new()),
            Refined::Failed => {}
        }
    }
    if cell.region.diameter() < min_size {
        let roots = match refine(h, &cell.region, cfg) {
            Refined::Root(r) => vec![r],
            _ => Vec::new(),
        };
        return cluster(roots);
    }
    let mut evaluated = 0;
    for attempt in 0..=cfg.jitter_retries {
        let parts = split(&cell.region, cfg.seed, attempt);
        let mut children = Vec::with_capacity(parts.len());
        let mut total = 0;
        let mut ok = true;
        for p in parts {
            evaluated += 1;
            match winding_number(h, &p, cfg) {
                Ok(w) => {
                    total += w.winding;
                    if w.winding != 0 {
                        children.push(Cell {
                            region: p,
                            count: w.winding,
                            single_splits: if cell.count == 1 { cell.single_splits + 1 } else { 0 },
                        });
                    }
                }
                Err(_) => {
                    ok = false;
                    break;
                }
            }
        }
        if ok && total == cell.count && children.iter().all(|c| c.count > 0) {
            return Outcome::Split(children, evaluated);
        }
    }
    Outcome::Done(ZeroCertificate {
        cell: cell.region,
        winding: cell.count,
        roots: Vec::new(),
        status: CertStatus::ContourFailure,
    })
}

fn cmp_regions(a: &Contour, b: &Contour) -> Ordering {
    a.sort_key()
        .iter()
        .zip(b.sort_key().iter())
        .map(|(x, y)| x.total_cmp(y))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

/// Subdivides `region` until every cell with zeros holds exactly one zero
/// confirmed by Newton (isolated), reaches the minimum size (cluster), or
/// cannot be split cleanly (contour failure). Cells with the fewest zeros
/// are refined first, so `max_zeros` yields results quickly.
pub fn isolate_zeros<H: Holomorphic + ?Sized>(
    h: &H,
    region: &Contour,
    max_zeros: Option<usize>,
    cfg: &AnalyticConfig,
) -> Result<IsolationReport, AnalyticError> {
    check_region(h, region, cfg.clearance)?;
    let root = count_zeros(h, region, cfg)?;
    let min_size = cfg.min_cell_rel * region.diameter();
    let mut cells_used = 0;
    let mut contours = 1 + root.retries;
    let mut pending = Vec::new();
    if root.count > 0 {
        pending.push(Cell {
            region: root.region,
            count: root.count,
            single_splits: 0,
        });
    } else if root.count < 0 {
        return Err(AnalyticError::InvalidRegion(format!(
            "negative zero count {} (pole inside?)",
            root.count
        )));
    }
    let pool = thread_pool();
    let mut certs = Vec::new();
    let limit = max_zeros.unwrap_or(usize::MAX);
    let mut isolated = 0;
    while !pending.is_empty() && isolated < limit {
        pending.sort_by(|a, b| b.count.cmp(&a.count).then_with(|| cmp_regions(&b.region, &a.region)));
        let take = pending.len().min(BATCH);
        let batch: Vec<Cell> = pending.split_off(pending.len() - take);
        cells_used += batch.len();
        if cells_used > cfg.max_cells {
            return Err(AnalyticError::BudgetExceeded(cfg.max_cells));
        }
        let outcomes: Vec<Outcome> =
            pool.install(|| batch.par_iter().map(|c| process(h, *c, min_size, cfg)).collect());
        for o in outcomes {
            match o {
                Outcome::Done(c) => {
                    if c.status == CertStatus::Isolated {
                        isolated += 1;
                    }
                    certs.push(c);
                }
                Outcome::Split(children, n) => {
                    contours += n;
                    pending.extend(children);
                }
            }
        }
    }
    let complete = pending.is_empty();
    certs.sort_by(|a, b| cmp_regions(&a.cell, &b.cell));
    Ok(IsolationReport {
        region: root.region,
        total: root.count,
        certificates: certs,
        cells: cells_used,
        contours,
        complete,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::{c64, FnHolomorphic};
    use crate::roots::ComplexPoly;

    #[test]
    fn planted_roots_isolated_in_rect() {
        let roots = [c64(0.3, 0.2), c64(-0.5, 0.1), c64(0.31, 0.21), c64(0.0, -0.7)];
        let p = ComplexPoly::from_roots(&roots);
        let rep = isolate_zeros(&p, &Contour::rect(-1.0, -1.0, 1.0, 1.0), None, &AnalyticConfig::default()).unwrap();
        assert_eq!(rep.total, 4);
        assert!(rep.complete);
        let found: Vec<Complex64> = rep.isolated().map(|c| c.roots[0].z()).collect();
        assert_eq!(found.len(), 4);
        for r in roots {
            assert!(found.iter().any(|f| (f - r).norm() < 1e-10));
        }
        for c in &rep.certificates {
            for r in &c.roots {
                assert!(c.cell.contains(r.z()));
                assert!(r.residual < 1e-9);
            }
        }
    }

    #[test]
    fn double_root_is_cluster() {
        let p = ComplexPoly::from_roots(&[c64(0.1, 0.1), c64(0.1, 0.1)]);
        let mut cfg = AnalyticConfig::default();
        cfg.min_cell_rel = 1e-3;
        let rep = isolate_zeros(&p, &Contour::disc(1.0), None, &cfg).unwrap();
        assert_eq!(rep.certificates.len(), 1);
        assert_eq!(rep.certificates[0].status, CertStatus::Cluster);
        assert_eq!(rep.certificates[0].winding, 2);
    }

    #[test]
    fn max_zeros_stops_early() {
        let roots: Vec<Complex64> = (0..6).map(|k| Complex64::from_polar(0.5, k as f64)).collect();
        let p = ComplexPoly::from_roots(&roots);
        let rep = isolate_zeros(&p, &Contour::disc(1.0), Some(1), &AnalyticConfig::default()).unwrap();
        assert!(rep.isolated().count() >= 1);
        assert!(!rep.complete);
    }

    #[test]
    fn certificate_json_shape() {
        let f = FnHolomorphic::new(|z: Complex64| (z - 0.25, c64(1.0, 0.0)));
        let rep = isolate_zeros(&f, &Contour::disc(1.0), None, &AnalyticConfig::default()).unwrap();
        let v = serde_json::to_value(&rep.certificates[0]).unwrap();
        for k in ["box", "winding", "roots", "status"] {
            assert!(v.get(k).is_some(), "{v}");
        }
        assert_eq!(v["status"], "isolated");
        assert_eq!(v["winding"], 1);
    }
}
