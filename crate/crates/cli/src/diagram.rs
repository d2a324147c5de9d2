//! SVG sketch of a dual complex with an optional graph drawn on top. Display
//! only: coordinates are converted to floating point here and nowhere else.

use std::fmt::Write;

use num_traits::ToPrimitive;

use tropsplit::complex::Decomposition;
use tropsplit::exact::Rational;

use crate::report::{CliResult, InputError};

const SIZE: f64 = 480.0;
const MARGIN: f64 = 40.0;

/// Vertex positions and edges `(plus, minus, highlighted)` to draw.
#[derive(Clone, Debug, Default)]
pub struct Overlay {
    pub positions: Vec<(String, Vec<Rational>)>,
    pub edges: Vec<(String, String, bool)>,
}

type Pt = (f64, f64);

fn to_f64(v: &[Rational]) -> Vec<f64> {
    v.iter().map(|x| x.to_f64().unwrap_or(0.0)).collect()
}

/// Oblique projection for three dimensions.
fn project(p: &[f64]) -> Pt {
    match p.len() {
        2 => (p[0], p[1]),
        _ => (p[0] + 0.45 * p[2], p[1] + 0.28 * p[2]),
    }
}

fn hull(mut pts: Vec<Pt>) -> Vec<Pt> {
    pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    pts.dedup_by(|a, b| (a.0 - b.0).abs() < 1e-9 && (a.1 - b.1).abs() < 1e-9);
    if pts.len() < 3 {
        return pts;
    }
    let cross = |o: Pt, a: Pt, b: Pt| (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0);
    let mut lower: Vec<Pt> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0.0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Pt> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0.0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

struct Frame {
    min: Pt,
    scale: f64,
}

impl Frame {
    fn map(&self, p: Pt) -> Pt {
        (MARGIN + (p.0 - self.min.0) * self.scale, SIZE - MARGIN - (p.1 - self.min.1) * self.scale)
    }
}

fn points_attr(frame: &Frame, pts: &[Pt]) -> String {
    pts.iter()
        .map(|&p| {
            let (x, y) = frame.map(p);
            format!("{x:.2},{y:.2}")
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn svg(dec: &Decomposition, overlay: &Overlay) -> CliResult<String> {
    let n = dec.ambient_dim();
    if n != 2 && n != 3 {
        return Err(InputError(format!("diagrams need dimension 2 or 3, not {n}")));
    }
    let mut anchors: Vec<Pt> = Vec::new();
    for c in dec.cells() {
        if let Some(d) = &c.dual {
            anchors.extend(d.vertices().iter().map(|v| project(&to_f64(v))));
        }
    }
    anchors.extend(overlay.positions.iter().map(|(_, p)| project(&to_f64(p))));
    if anchors.is_empty() {
        anchors.push((0.0, 0.0));
    }
    let lo = anchors.iter().fold((f64::INFINITY, f64::INFINITY), |a, p| (a.0.min(p.0), a.1.min(p.1)));
    let hi = anchors.iter().fold((f64::NEG_INFINITY, f64::NEG_INFINITY), |a, p| (a.0.max(p.0), a.1.max(p.1)));
    let extent = (hi.0 - lo.0).max(hi.1 - lo.1).max(1.0);
    let ray_len = 0.35 * extent;
    let min = (lo.0 - ray_len, lo.1 - ray_len);
    let frame = Frame { min, scale: (SIZE - 2.0 * MARGIN) / (extent + 2.0 * ray_len) };

    // Dual cells by dimension, largest first so that points end up on top.
    let mut shapes: Vec<(usize, bool, Vec<Pt>)> = Vec::new();
    for c in dec.cells() {
        let Some(d) = &c.dual else { continue };
        let verts: Vec<Vec<f64>> = d.vertices().iter().map(|v| to_f64(v)).collect();
        let mut pts: Vec<Pt> = verts.iter().map(|v| project(v)).collect();
        for r in d.rays() {
            let r = to_f64(&r);
            let norm = r.iter().map(|x| x * x).sum::<f64>().sqrt().max(1e-9);
            for v in &verts {
                let tip: Vec<f64> = v.iter().zip(&r).map(|(a, b)| a + ray_len * b / norm).collect();
                pts.push(project(&tip));
            }
        }
        let split = dec.is_split(&c.id).unwrap_or(false);
        shapes.push((d.dim().unwrap_or(0), split, hull(pts)));
    }
    shapes.sort_by(|a, b| b.0.cmp(&a.0));

    let mut out = String::new();
    let _ = writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#);
    let _ = writeln!(out, r##"<rect width="100%" height="100%" fill="#ffffff"/>"##);
    for (dim, split, pts) in &shapes {
        let colour = if *split { "#d9822b" } else { "#4a5a6a" };
        match (dim, pts.len()) {
            (_, 0) => {}
            (_, 1) | (0, _) => {
                let (x, y) = frame.map(pts[0]);
                let _ = writeln!(out, r#"<circle cx="{x:.2}" cy="{y:.2}" r="3" fill="{colour}"/>"#);
            }
            (_, 2) | (1, _) => {
                let _ = writeln!(out, r#"<polyline points="{}" fill="none" stroke="{colour}" stroke-width="1.5"/>"#, points_attr(&frame, pts));
            }
            (2, _) if n == 2 || *split => {
                let fill = if *split { "#f6d3a8" } else { "#e4e9ee" };
                let _ = writeln!(
                    out,
                    r#"<polygon points="{}" fill="{fill}" fill-opacity="0.6" stroke="{colour}" stroke-width="0.5"/>"#,
                    points_attr(&frame, pts)
                );
            }
            _ => {}
        }
    }
    let pos = |id: &str| overlay.positions.iter().find(|(v, _)| v == id).map(|(_, p)| frame.map(project(&to_f64(p))));
    for (a, b, hl) in &overlay.edges {
        if let (Some(p), Some(q)) = (pos(a), pos(b)) {
            let style = if *hl { r##"stroke="#c0392b" stroke-width="2.5" stroke-dasharray="6 3""## } else { r##"stroke="#1f6fb2" stroke-width="2""## };
            let _ = writeln!(out, r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" {style}/>"#, p.0, p.1, q.0, q.1);
        }
    }
    for (id, _) in &overlay.positions {
        let (x, y) = pos(id).unwrap();
        let _ = writeln!(out, r##"<circle cx="{x:.2}" cy="{y:.2}" r="4.5" fill="#1f6fb2"/>"##);
        let _ = writeln!(out, r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="12">{id}</text>"#, x + 6.0, y - 6.0);
    }
    out.push_str("</svg>\n");
    Ok(out)
}
