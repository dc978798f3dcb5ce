//! Static SVG plots of a region, its certificates and excluded points.

use std::fmt::Write;

use num_complex::Complex64;

use crate::analytic::{CertStatus, Contour, IsolationReport, Piece};

const SIZE: f64 = 600.0;
const PAD: f64 = 30.0;

struct Frame {
    x0: f64,
    y1: f64,
    scale: f64,
}

impl Frame {
    fn around(region: &Contour) -> Frame {
        let pts = outline(region);
        let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
        for p in &pts {
            x0 = x0.min(p.re);
            x1 = x1.max(p.re);
            y0 = y0.min(p.im);
            y1 = y1.max(p.im);
        }
        let span = (x1 - x0).max(y1 - y0).max(1e-12);
        Frame {
            x0,
            y1,
            scale: (SIZE - 2.0 * PAD) / span,
        }
    }

    fn map(&self, z: Complex64) -> (f64, f64) {
        (PAD + (z.re - self.x0) * self.scale, PAD + (self.y1 - z.im) * self.scale)
    }
}

/// Boundary polyline(s) of a contour, sampled.
fn pieces_points(pieces: &[Piece]) -> Vec<Complex64> {
    let mut out = Vec::new();
    for p in pieces {
        let n = match p {
            Piece::Arc { .. } => 96,
            Piece::Segment { .. } => 1,
        };
        for k in 0..=n {
            out.push(p.point(k as f64 / n as f64));
        }
    }
    out
}

fn outline(c: &Contour) -> Vec<Complex64> {
    pieces_points(&c.boundary())
}

fn path(frame: &Frame, c: &Contour) -> String {
    let mut d = String::new();
    let pieces = c.boundary();
    // annulus circles are drawn as separate subpaths
    let groups: Vec<Vec<Piece>> = match c {
        Contour::Annulus { .. } => pieces.iter().map(|p| vec![*p]).collect(),
        _ => vec![pieces],
    };
    for g in groups {
        for (i, z) in pieces_points(&g).into_iter().enumerate() {
            let (x, y) = frame.map(z);
            let _ = write!(d, "{}{x:.2},{y:.2} ", if i == 0 { "M" } else { "L" });
        }
        d.push('Z');
    }
    d
}

/// Renders the region outline, every certificate cell (isolated in green,
/// cluster in orange, contour failure in red), refined zeros as dots and
/// excluded points as crosses.
pub fn render(report: &IsolationReport, excluded: &[Complex64]) -> String {
    let frame = Frame::around(&report.region);
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<path d="{}" fill="none" stroke="black" stroke-width="1.5" fill-rule="evenodd"/>"#,
        path(&frame, &report.region)
    );
    for c in &report.certificates {
        let color = match c.status {
            CertStatus::Isolated => "seagreen",
            CertStatus::Cluster => "darkorange",
            CertStatus::ContourFailure => "crimson",
        };
        let _ = writeln!(
            s,
            r#"<path d="{}" fill="none" stroke="{color}" stroke-width="0.8"/>"#,
            path(&frame, &c.cell)
        );
        for r in &c.roots {
            let (x, y) = frame.map(r.z());
            let _ = writeln!(s, r#"<circle cx="{x:.2}" cy="{y:.2}" r="2.5" fill="{color}"/>"#);
        }
    }
    for p in excluded {
        let (x, y) = frame.map(*p);
        let _ = writeln!(
            s,
            r#"<path d="M{:.2},{:.2} L{:.2},{:.2} M{:.2},{:.2} L{:.2},{:.2}" stroke="black" stroke-width="1.2"/>"#,
            x - 4.0,
            y - 4.0,
            x + 4.0,
            y + 4.0,
            x - 4.0,
            y + 4.0,
            x + 4.0,
            y - 4.0
        );
    }
    s.push_str("</svg>\n");
    s
}
