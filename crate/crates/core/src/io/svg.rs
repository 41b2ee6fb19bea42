use std::fmt::Write as _;

use crate::geometry::{ConvexPolygon, IndexTuple, Point};
use crate::triangle::Checkpoint;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SvgOptions {
    /// Width of the drawing in pixels; the height follows the aspect ratio.
    pub width: u32,
    pub show_vertex_ids: bool,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions { width: 800, show_vertex_ids: true }
    }
}

/// Draws the polygon, the result tuple as a translucent fill and, if given,
/// the best-so-far checkpoints of a trace as dashed outlines.
///
/// The viewBox is the bounding box plus a 5% margin in polygon units, with y
/// negated so the picture is not upside down. Output depends only on the
/// arguments.
pub fn render_svg(
    poly: &ConvexPolygon,
    result: &IndexTuple,
    checkpoints: Option<&[Checkpoint]>,
    opts: SvgOptions,
) -> String {
    let vs = poly.vertices();
    let min_x = vs.iter().map(|p| p.x).min().unwrap_or(0);
    let max_x = vs.iter().map(|p| p.x).max().unwrap_or(0);
    let min_y = vs.iter().map(|p| p.y).min().unwrap_or(0);
    let max_y = vs.iter().map(|p| p.y).max().unwrap_or(0);
    let span = (max_x - min_x).max(max_y - min_y).max(1);
    let margin = (span / 20).max(1);
    let vb_w = max_x - min_x + 2 * margin;
    let vb_h = max_y - min_y + 2 * margin;
    let height = (u64::from(opts.width) * vb_h as u64 / vb_w as u64).max(1);
    let dot = span as f64 / 150.0;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{height}" viewBox="{} {} {vb_w} {vb_h}">"#,
        opts.width,
        min_x - margin,
        -max_y - margin,
    );
    let _ = writeln!(
        s,
        r#"  <polygon points="{}" fill="none" stroke="black" stroke-width="1.5" vector-effect="non-scaling-stroke"/>"#,
        path(vs.iter().copied())
    );
    if let Some(cps) = checkpoints {
        for cp in cps {
            let _ = writeln!(
                s,
                r##"  <polygon points="{}" fill="none" stroke="#1f77b4" stroke-width="1" stroke-dasharray="4 3" vector-effect="non-scaling-stroke"/>"##,
                path(cp.tuple.points(poly).into_iter())
            );
        }
    }
    let _ = writeln!(
        s,
        r##"  <polygon points="{}" fill="#d62728" fill-opacity="0.35" stroke="#d62728" stroke-width="2" vector-effect="non-scaling-stroke"/>"##,
        path(result.points(poly).into_iter())
    );
    for (i, p) in vs.iter().enumerate() {
        let _ = writeln!(s, r#"  <circle cx="{}" cy="{}" r="{dot:.3}"/>"#, p.x, -p.y);
        if opts.show_vertex_ids {
            let _ = writeln!(
                s,
                r#"  <text x="{:.3}" y="{:.3}" font-size="{:.3}">{i}</text>"#,
                p.x as f64 + dot,
                -p.y as f64 - dot,
                4.0 * dot
            );
        }
    }
    s.push_str("</svg>\n");
    s
}

fn path(points: impl Iterator<Item = Point>) -> String {
    points
        .map(|p| format!("{},{}", p.x, -p.y))
        .collect::<Vec<_>>()
        .join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse_polygon_file;

    #[test]
    fn deterministic_and_flipped() {
        let poly = parse_polygon_file(b"n 4 CCW\n0 0\n100 0\n100 50\n0 50\n").unwrap();
        let t = IndexTuple::triangle(0, 1, 2);
        let a = render_svg(&poly, &t, None, SvgOptions::default());
        let b = render_svg(&poly, &t, None, SvgOptions::default());
        assert_eq!(a, b);
        assert!(a.starts_with("<svg"));
        assert!(a.contains(r#"viewBox="-5 -55 110 60""#));
        assert!(a.contains(r#"points="0,0 100,0 100,-50""#));
        assert!(!a.contains("stroke-dasharray"));
    }
}
