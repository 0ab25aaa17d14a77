//! SVG band diagrams: one horizontal bar per band over a real axis.

use std::fmt::Write as _;

use bandspec_core::SpectrumSet;

use crate::document::format_sig;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 140.0;
const MARGIN: f64 = 40.0;
const AXIS_Y: f64 = 90.0;
const BAR_HEIGHT: f64 = 24.0;
/// Atoms have no width on the axis; draw them as thin marks instead.
const ATOM_WIDTH: f64 = 3.0;

/// Renders `s` as a standalone SVG document. The output depends only on the
/// band endpoints, so identical spectra give byte-identical files.
pub fn render_svg(s: &SpectrumSet, title: &str) -> String {
    let (lo, hi) = (s.min(), s.max());
    let span = if hi > lo { hi - lo } else { 1.0 };
    let pad = 0.05 * span;
    let (x0, x1) = (lo - pad, hi + pad);
    let to_px = |x: f64| MARGIN + (x - x0) / (x1 - x0) * (WIDTH - 2.0 * MARGIN);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="11">"#
    );
    let _ = writeln!(out, "  <title>{}</title>", escape(title));
    let _ = writeln!(out, r#"  <rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
    let _ = writeln!(
        out,
        r#"  <line x1="{:.2}" y1="{AXIS_Y}" x2="{:.2}" y2="{AXIS_Y}" stroke="black"/>"#,
        MARGIN,
        WIDTH - MARGIN
    );
    let bar_y = AXIS_Y - BAR_HEIGHT - 4.0;
    let mut ticks: Vec<f64> = Vec::new();
    for b in s.bands() {
        let (a, z) = (to_px(b.lo), to_px(b.hi));
        let (x, w) = if z - a < ATOM_WIDTH { (0.5 * (a + z) - 0.5 * ATOM_WIDTH, ATOM_WIDTH) } else { (a, z - a) };
        let fill = if b.is_atom() { "#c0392b" } else { "#2c7fb8" };
        let _ = writeln!(
            out,
            r#"  <rect class="{}" x="{x:.2}" y="{bar_y:.2}" width="{w:.2}" height="{BAR_HEIGHT}" fill="{fill}"/>"#,
            if b.is_atom() { "atom" } else { "band" }
        );
        ticks.push(b.lo);
        if !b.is_atom() {
            ticks.push(b.hi);
        }
    }
    // labels alternate rows so neighbouring endpoints stay readable
    for (i, &t) in ticks.iter().enumerate() {
        let x = to_px(t);
        let _ = writeln!(out, r#"  <line x1="{x:.2}" y1="{AXIS_Y}" x2="{x:.2}" y2="{:.2}" stroke="black"/>"#, AXIS_Y + 5.0);
        let y = AXIS_Y + 18.0 + 13.0 * (i % 2) as f64;
        let _ = writeln!(out, r#"  <text x="{x:.2}" y="{y:.2}" text-anchor="middle">{}</text>"#, format_sig(t, 6));
    }
    out.push_str("</svg>\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
