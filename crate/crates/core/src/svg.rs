//! SVG overlay of HN polygons: the θ-polygon thick, D-polygons thin.

use std::fmt::Write;

use num_traits::ToPrimitive;

use crate::filtration::Polygon;
use crate::rational::{self, Q};

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 500.0;
const MARGIN: f64 = 50.0;

fn to_f64(x: &Q) -> f64 {
    x.to_f64().unwrap_or(0.0)
}

fn exact(p: &Polygon) -> String {
    p.points
        .iter()
        .map(|(r, w)| format!("{r}:{}", rational::fmt(w)))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Renders the θ-polygon and labelled D-polygons in an 800×500 viewport.
///
/// Exact breakpoints are kept in each polyline's `data-exact` attribute.
pub fn render(theta: Option<&Polygon>, d: &[(String, &Polygon)]) -> String {
    let all: Vec<&Polygon> = theta.into_iter().chain(d.iter().map(|(_, p)| *p)).collect();
    let x_max = all.iter().map(|p| p.end()).max().unwrap_or(1).max(1) as f64;
    let ys = all.iter().flat_map(|p| p.points.iter().map(|(_, w)| to_f64(w)));
    let (y_min, y_max) = ys.fold((0.0f64, 0.0f64), |(lo, hi), y| (lo.min(y), hi.max(y)));
    let y_span = if y_max > y_min { y_max - y_min } else { 1.0 };
    let sx = |r: u64| MARGIN + (r as f64) / x_max * (WIDTH - 2.0 * MARGIN);
    let sy = |w: f64| HEIGHT - MARGIN - (w - y_min) / y_span * (HEIGHT - 2.0 * MARGIN);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(out, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
    let (x0, y0) = (sx(0), sy(0.0));
    let _ = writeln!(
        out,
        r#"<line class="axis" x1="{x0:.2}" y1="{y0:.2}" x2="{:.2}" y2="{y0:.2}" stroke="black"/>"#,
        WIDTH - MARGIN / 2.0
    );
    let _ = writeln!(
        out,
        r#"<line class="axis" x1="{x0:.2}" y1="{:.2}" x2="{x0:.2}" y2="{:.2}" stroke="black"/>"#,
        HEIGHT - MARGIN / 2.0,
        MARGIN / 2.0
    );
    let _ = writeln!(out, r#"<text x="{:.2}" y="{:.2}">r</text>"#, WIDTH - MARGIN / 2.0, y0 + 15.0);
    let _ = writeln!(out, r#"<text x="{:.2}" y="{:.2}">w</text>"#, x0 + 5.0, MARGIN / 2.0);

    let mut draw = |p: &Polygon, class: &str, label: &str, width: u32, colour: &str| {
        let pts: Vec<String> = p
            .points
            .iter()
            .map(|(r, w)| format!("{:.2},{:.2}", sx(*r), sy(to_f64(w))))
            .collect();
        let _ = writeln!(
            out,
            r#"<polyline class="{class}" data-label="{label}" data-exact="{}" points="{}" fill="none" stroke="{colour}" stroke-width="{width}"/>"#,
            exact(p),
            pts.join(" ")
        );
        for (r, w) in &p.points {
            let _ = writeln!(
                out,
                r#"<circle cx="{:.2}" cy="{:.2}" r="{}" fill="{colour}"/>"#,
                sx(*r),
                sy(to_f64(w)),
                width + 2
            );
        }
    };
    for (label, p) in d {
        draw(p, "d", label, 1, "steelblue");
    }
    if let Some(p) = theta {
        draw(p, "theta", "theta", 4, "black");
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qi;

    #[test]
    fn theta_is_thick_and_exact() {
        let t = Polygon {
            points: vec![(0, qi(0)), (4, qi(4)), (5, qi(0))],
        };
        let d = Polygon {
            points: vec![(0, qi(0)), (2, qi(3)), (5, qi(0))],
        };
        let svg = render(Some(&t), &[("D[-3,3]".into(), &d)]);
        assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
        assert!(svg.contains(r#"width="800" height="500""#));
        assert!(svg.contains(r#"class="theta" data-label="theta" data-exact="0:0/1 4:4/1 5:0/1""#));
        assert!(svg.contains(r#"stroke-width="4""#) && svg.contains(r#"stroke-width="1""#));
        assert!(svg.contains(r#"data-label="D[-3,3]""#));
    }

    #[test]
    fn flat_polygon_renders() {
        let t = Polygon {
            points: vec![(0, qi(0)), (2, qi(0))],
        };
        assert!(!render(Some(&t), &[]).contains("NaN"));
    }
}
