//! Static SVG plot of a trajectory.

use std::fmt::Write;

use choreo_core::Trajectory;

const SIZE: f64 = 480.0;
const MARGIN: f64 = 24.0;
const COLORS: [&str; 6] = ["#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];

/// Draws every particle path as a closed polyline, with a marker at each
/// particle's position at `t = 0`.
pub fn render(traj: &Trajectory) -> String {
    let points = traj.positions.iter().flatten();
    let (mut lo_x, mut hi_x, mut lo_y, mut hi_y) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for z in points {
        lo_x = lo_x.min(z.re);
        hi_x = hi_x.max(z.re);
        lo_y = lo_y.min(z.im);
        hi_y = hi_y.max(z.im);
    }
    let span = (hi_x - lo_x).max(hi_y - lo_y).max(1e-12);
    let scale = (SIZE - 2.0 * MARGIN) / span;
    let (cx, cy) = (0.5 * (lo_x + hi_x), 0.5 * (lo_y + hi_y));
    // y grows downward in SVG
    let map = |re: f64, im: f64| (SIZE / 2.0 + (re - cx) * scale, SIZE / 2.0 - (im - cy) * scale);

    let mut out = String::new();
    let _ = writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#);
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    for (j, path) in traj.positions.iter().enumerate() {
        let color = COLORS[j % COLORS.len()];
        let pts: Vec<String> = path
            .iter()
            .map(|z| {
                let (x, y) = map(z.re, z.im);
                format!("{x:.2},{y:.2}")
            })
            .collect();
        let _ = writeln!(out, r#"<polygon points="{}" fill="none" stroke="{color}" stroke-width="1.2" stroke-opacity="0.6"/>"#, pts.join(" "));
    }
    for (j, path) in traj.positions.iter().enumerate() {
        let color = COLORS[j % COLORS.len()];
        let (x, y) = map(path[0].re, path[0].im);
        let _ = writeln!(out, r#"<circle cx="{x:.2}" cy="{y:.2}" r="5" fill="{color}"><title>particle {}</title></circle>"#, j + 1);
    }
    out.push_str("</svg>\n");
    out
}
