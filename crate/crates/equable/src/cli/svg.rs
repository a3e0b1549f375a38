//! Standalone SVG figures for lattice drawings.
//!
//! Output is byte-deterministic: layout uses integer pixel arithmetic only,
//! and every attribute is a fixed string or a decimal integer.

use crate::intmath::Int;
use crate::lattice::{LatticeParallelogram, LatticePoint};
use crate::lep::LepPair;
use std::fmt::Write as _;

const CELL: u64 = 32;
const CAPTION_BAND: u64 = 40;

/// Render a drawing of a certified pair as a standalone SVG document with a
/// unit lattice grid, the parallelogram, labeled vertices, and a caption.
/// The drawing is translated into the first quadrant so that the least x and
/// least y coordinates are zero.
pub fn render_svg(p: &LepPair, lp: &LatticeParallelogram) -> String {
    let min_x = lp.vertices().iter().map(|v| v.x.clone()).min().unwrap();
    let min_y = lp.vertices().iter().map(|v| v.y.clone()).min().unwrap();
    let lp = lp.translated(&LatticePoint::new(-min_x, -min_y));
    let coord = |c: &Int| u64::try_from(c).expect("figure too large to render");
    let corners: Vec<(u64, u64)> = lp
        .vertices()
        .iter()
        .map(|v| (coord(&v.x), coord(&v.y)))
        .collect();
    let max_x = corners.iter().map(|&(x, _)| x).max().unwrap();
    let max_y = corners.iter().map(|&(_, y)| y).max().unwrap();

    let width = (max_x + 2) * CELL;
    let height = (max_y + 2) * CELL + CAPTION_BAND;
    let px = |x: u64| (x + 1) * CELL;
    let py = |y: u64| (max_y + 1 - y) * CELL;

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    );
    let _ = writeln!(out, "<rect width=\"{width}\" height=\"{height}\" fill=\"#ffffff\"/>");

    out.push_str("<g stroke=\"#d4d4d4\" stroke-width=\"1\">\n");
    for gx in 0..=max_x {
        let x = px(gx);
        let _ = writeln!(out, "<line x1=\"{x}\" y1=\"{}\" x2=\"{x}\" y2=\"{}\"/>", py(max_y), py(0));
    }
    for gy in 0..=max_y {
        let y = py(gy);
        let _ = writeln!(out, "<line x1=\"{}\" y1=\"{y}\" x2=\"{}\" y2=\"{y}\"/>", px(0), px(max_x));
    }
    out.push_str("</g>\n");

    let points: Vec<String> = corners
        .iter()
        .map(|&(x, y)| format!("{},{}", px(x), py(y)))
        .collect();
    let _ = writeln!(
        out,
        "<polygon points=\"{}\" fill=\"#bcd6f0\" fill-opacity=\"0.6\" stroke=\"#2b5d8a\" stroke-width=\"2\"/>",
        points.join(" ")
    );

    out.push_str("<g fill=\"#2b5d8a\">\n");
    for &(x, y) in &corners {
        let _ = writeln!(out, "<circle cx=\"{}\" cy=\"{}\" r=\"4\"/>", px(x), py(y));
    }
    out.push_str("</g>\n");

    out.push_str("<g font-family=\"monospace\" font-size=\"14\" fill=\"#111111\">\n");
    for &(x, y) in &corners {
        let _ = writeln!(
            out,
            "<text x=\"{}\" y=\"{}\">({x}, {y})</text>",
            px(x) + 6,
            py(y) - 6
        );
    }
    let _ = writeln!(
        out,
        "<text x=\"{}\" y=\"{}\">a = {}, b = {}, area = {}</text>",
        CELL,
        height - 14,
        p.a(),
        p.b(),
        p.area()
    );
    out.push_str("</g>\n</svg>\n");
    out
}
