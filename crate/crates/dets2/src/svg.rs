//! Standalone SVG drawings of reconstructed quadrilaterals.

use std::fmt::Write as _;
use std::path::Path;

use dets2_core::{Configuration, Pair, PointQuad, Rational};
use num_traits::ToPrimitive;

/// Shortest decimal for `x` after rounding to six places.
fn num(x: f64) -> String {
    let s = format!("{:.6}", x);
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_owned()
    } else {
        s.to_owned()
    }
}

/// Renders the four points as labelled markers and the six segments
/// `Q_i Q_j`, each titled with its direction `v_ij`. The y axis points up.
pub fn render_svg(quad: &PointQuad<Rational>, config: &Configuration<Rational>) -> String {
    let pts: Vec<(f64, f64)> = quad
        .points
        .iter()
        .map(|p| (p.alpha.to_f64().unwrap_or(0.0), -p.beta.to_f64().unwrap_or(0.0)))
        .collect();

    let fold =
        |f: fn(f64, f64) -> f64, sel: fn(&(f64, f64)) -> f64, init: f64| pts.iter().map(sel).fold(init, f);
    let (min_x, max_x) = (fold(f64::min, |p| p.0, f64::INFINITY), fold(f64::max, |p| p.0, f64::NEG_INFINITY));
    let (min_y, max_y) = (fold(f64::min, |p| p.1, f64::INFINITY), fold(f64::max, |p| p.1, f64::NEG_INFINITY));
    let (mut w, mut h) = (max_x - min_x, max_y - min_y);
    let (mut x0, mut y0) = (min_x, min_y);
    // A flat or empty extent borrows the other one; all coincident gives a unit box.
    let span = w.max(h);
    let span = if span > 0.0 { span } else { 1.0 };
    if w == 0.0 {
        w = span;
        x0 -= span / 2.0;
    }
    if h == 0.0 {
        h = span;
        y0 -= span / 2.0;
    }
    let (mx, my) = (0.1 * w, 0.1 * h);
    let (vx, vy, vw, vh) = (x0 - mx, y0 - my, w + 2.0 * mx, h + 2.0 * my);
    let unit = vw.max(vh);
    let radius = 0.015 * unit;
    let stroke = 0.004 * unit;
    let font = 0.04 * unit;

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"yes\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"480\" height=\"480\" viewBox=\"{} {} {} {}\">",
        num(vx),
        num(vy),
        num(vw),
        num(vh)
    );
    let _ = writeln!(out, "  <g id=\"segments\" stroke=\"#3a5f8f\" stroke-width=\"{}\">", num(stroke));
    for p in Pair::ALL {
        let (i, j) = p.indices();
        let (a, b) = (pts[usize::from(i - 1)], pts[usize::from(j - 1)]);
        let _ = writeln!(
            out,
            "    <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"><title>Q{i}Q{j} along v{p} = {}</title></line>",
            num(a.0),
            num(a.1),
            num(b.0),
            num(b.1),
            config.at(p)
        );
    }
    out.push_str("  </g>\n");
    let _ = writeln!(
        out,
        "  <g id=\"points\" fill=\"#b03a2e\" font-family=\"sans-serif\" font-size=\"{}\">",
        num(font)
    );
    for (k, (x, y)) in pts.iter().enumerate() {
        let _ = writeln!(out, "    <circle cx=\"{}\" cy=\"{}\" r=\"{}\"/>", num(*x), num(*y), num(radius));
        let _ = writeln!(
            out,
            "    <text x=\"{}\" y=\"{}\">Q{}</text>",
            num(x + 1.5 * radius),
            num(y - 1.5 * radius),
            k + 1
        );
    }
    out.push_str("  </g>\n</svg>\n");
    out
}

pub fn write_svg(
    quad: &PointQuad<Rational>,
    config: &Configuration<Rational>,
    path: &Path,
) -> std::io::Result<()> {
    std::fs::write(path, render_svg(quad, config))
}
