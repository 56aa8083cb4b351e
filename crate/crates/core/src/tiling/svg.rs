//! Deterministic SVG rendering.

use super::Tiling;
use crate::exactnum::QuadraticNumber;
use crate::geometry::Point;
use std::fmt::Write;

/// Optional overlay layers.
#[derive(Clone, Debug, Default)]
pub struct Annotations {
    /// Directed edges drawn as arrows.
    pub hgraph_edges: Option<Vec<(Point, Point)>>,
    /// Segments drawn as thick lines.
    pub maximal_segments: Option<Vec<(Point, Point)>>,
    /// Text labels at points.
    pub vertex_patterns: Option<Vec<(Point, String)>>,
}

const SCALE: f64 = 100.0;
const MARGIN: f64 = 10.0;

/// Decimal with 12 significant digits, trailing zeros trimmed.
fn num(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return "0".into();
    }
    let magnitude = v.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).max(0) as usize;
    let mut s = format!("{v:.decimals$}");
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    if s == "-0" {
        s = "0".into();
    }
    s
}

fn coords(p: &Point, height: f64) -> (String, String) {
    let (x, y) = p.to_f64();
    (num(MARGIN + x * SCALE), num(MARGIN + (height - y) * SCALE))
}

fn qn(q: &QuadraticNumber) -> f64 {
    q.to_f64()
}

/// SVG of the tiling with optional overlays; byte-identical for equal input.
pub fn render_svg(t: &Tiling, ann: &Annotations) -> Vec<u8> {
    let w = qn(&t.region().width);
    let h = qn(&t.region().height);
    let mut s = String::new();
    let vw = num(w * SCALE + 2.0 * MARGIN);
    let vh = num(h * SCALE + 2.0 * MARGIN);
    writeln!(s, r##"<svg xmlns="http://www.w3.org/2000/svg" width="{vw}" height="{vh}" viewBox="0 0 {vw} {vh}">"##).unwrap();
    s.push_str(concat!(
        "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\">",
        "<path d=\"M0,0 L10,5 L0,10 z\" fill=\"#c0392b\"/></marker></defs>\n"
    ));
    let (ox, _) = coords(&Point::origin(t.radicand()), h);
    writeln!(
        s,
        r##"<rect class="region" x="{ox}" y="{}" width="{}" height="{}" fill="none" stroke="black" stroke-width="2"/>"##,
        num(MARGIN),
        num(w * SCALE),
        num(h * SCALE)
    )
    .unwrap();
    s.push_str("<g class=\"tiles\">\n");
    for (i, img) in t.images().iter().enumerate() {
        let pts: Vec<String> = img
            .points
            .iter()
            .map(|p| {
                let (x, y) = coords(p, h);
                format!("{x},{y}")
            })
            .collect();
        let fill = if t.tiles()[i].iso.reflect { "#a9cce3" } else { "#f9e79f" };
        writeln!(
            s,
            r##"<polygon data-tile="{i}" points="{}" fill="{fill}" stroke="#333" stroke-width="1"/>"##,
            pts.join(" ")
        )
        .unwrap();
    }
    s.push_str("</g>\n");
    if let Some(segs) = &ann.maximal_segments {
        s.push_str("<g class=\"segments\">\n");
        for (a, b) in segs {
            let ((x1, y1), (x2, y2)) = (coords(a, h), coords(b, h));
            writeln!(
                s,
                r##"<line class="segment" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="#1e8449" stroke-width="3" stroke-opacity="0.6"/>"##
            )
            .unwrap();
        }
        s.push_str("</g>\n");
    }
    if let Some(edges) = &ann.hgraph_edges {
        s.push_str("<g class=\"hgraph\">\n");
        for (k, (a, b)) in edges.iter().enumerate() {
            // antiparallel edges on one segment are drawn slightly apart
            let (ax, ay) = a.to_f64();
            let (bx, by) = b.to_f64();
            let len = ((bx - ax).powi(2) + (by - ay).powi(2)).sqrt().max(1e-12);
            let (nx, ny) = (-(by - ay) / len * 0.04, (bx - ax) / len * 0.04);
            let p = |x: f64, y: f64| (num(MARGIN + (x + nx) * SCALE), num(MARGIN + (h - (y + ny)) * SCALE));
            let ((x1, y1), (x2, y2)) = (p(ax, ay), p(bx, by));
            writeln!(
                s,
                r##"<line class="hedge" data-edge="{k}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="#c0392b" stroke-width="2" marker-end="url(#arrow)"/>"##
            )
            .unwrap();
        }
        s.push_str("</g>\n");
    }
    if let Some(labels) = &ann.vertex_patterns {
        s.push_str("<g class=\"patterns\">\n");
        for (p, text) in labels {
            let (x, y) = coords(p, h);
            let text = text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;");
            writeln!(s, r##"<text x="{x}" y="{y}" font-size="9" fill="#555">{text}</text>"##).unwrap();
        }
        s.push_str("</g>\n");
    }
    s.push_str("</svg>\n");
    s.into_bytes()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(num(1.7320508075688772), "1.73205080757");
        assert_eq!(num(173.20508075688772), "173.205080757");
        assert_eq!(num(10.0), "10");
        assert_eq!(num(-0.0), "0");
    }

    #[test]
    fn polygons_only_without_annotations() {
        let svg = String::from_utf8(render_svg(&catalog::trapezoid_pair(), &Annotations::default())).unwrap();
        assert_eq!(svg.matches("<polygon").count(), 2);
        assert_eq!(svg.matches("class=\"hedge\"").count(), 0);
    }

    #[test]
    fn deterministic() {
        let t = catalog::trapezoid_pair();
        assert_eq!(render_svg(&t, &Annotations::default()), render_svg(&t, &Annotations::default()));
    }
}
