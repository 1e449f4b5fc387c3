//! SVG figures of configurations on an `N × N` grid.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use riderlab_core::{Config, Piece, Point, Rat};

const CANVAS: f64 = 600.0;
const MARGIN: f64 = 20.0;
/// Grid lines are drawn only up to this side; larger boards get the frame.
pub const MAX_GRID: u64 = 100;

fn fmt(v: f64) -> String {
    let s = format!("{v:.3}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" { "0".into() } else { s.into() }
}

fn coord(r: &Rat, n: &BigInt) -> f64 {
    let v = r * Rat::from_integer(n.clone());
    v.numer().to_f64().unwrap_or(0.0) / v.denom().to_f64().unwrap_or(1.0)
}

fn attack(piece: &Piece, a: &Point, b: &Point) -> bool {
    if a == b {
        return false;
    }
    piece.moves().iter().any(|m| a.on_line(b, m))
}

/// Renders `cfg`, given in unit-square form, at scale `denominator` (so its
/// points sit at `cfg·denominator`). Attack segments are drawn when the
/// piece is known. The output depends only on the arguments.
pub fn render_svg(cfg: &Config, denominator: &BigInt, piece: Option<&Piece>) -> String {
    let n = if denominator.is_zero() { BigInt::from(1) } else { denominator.clone() };
    let side = n.to_f64().unwrap_or(1.0);
    let cell = CANVAS / side;
    let total = CANVAS + 2.0 * MARGIN;
    // board y grows upward
    let px = |x: f64| fmt(MARGIN + x * cell);
    let py = |y: f64| fmt(MARGIN + CANVAS - y * cell);
    let mut s = String::new();
    let t = fmt(total);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{t}" height="{t}" viewBox="0 0 {t} {t}">"#
    );
    let _ = writeln!(s, r#"<rect x="0" y="0" width="{t}" height="{t}" fill="white"/>"#);
    if n.to_u64().is_some_and(|v| v <= MAX_GRID) {
        let _ = writeln!(s, r##"<g stroke="#cccccc" stroke-width="1">"##);
        for k in 0..=n.to_u64().unwrap_or(1) {
            let k = k as f64;
            let _ = writeln!(s, r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#, px(k), py(0.0), px(k), py(side));
            let _ = writeln!(s, r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#, px(0.0), py(k), px(side), py(k));
        }
        let _ = writeln!(s, "</g>");
    }
    let _ = writeln!(
        s,
        r#"<rect x="{}" y="{}" width="{}" height="{}" fill="none" stroke="black" stroke-width="2"/>"#,
        px(0.0),
        py(side),
        fmt(CANVAS),
        fmt(CANVAS)
    );
    let pts: Vec<(f64, f64)> = cfg.points.iter().map(|p| (coord(&p.x, &n), coord(&p.y, &n))).collect();
    if let Some(piece) = piece {
        let _ = writeln!(s, r##"<g stroke="#c0392b" stroke-width="1.5">"##);
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                if attack(piece, &cfg.points[i], &cfg.points[j]) {
                    let _ = writeln!(
                        s,
                        r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                        px(pts[i].0),
                        py(pts[i].1),
                        px(pts[j].0),
                        py(pts[j].1)
                    );
                }
            }
        }
        let _ = writeln!(s, "</g>");
    }
    let r = fmt((cell * 0.35).clamp(3.0, 14.0));
    let font = fmt((cell * 0.4).clamp(6.0, 14.0));
    for (i, (x, y)) in pts.iter().enumerate() {
        let _ = writeln!(
            s,
            r##"<circle cx="{}" cy="{}" r="{r}" fill="#2c3e50"/>"##,
            px(*x),
            py(*y)
        );
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" font-size="{font}" fill="white" text-anchor="middle" dominant-baseline="central">{}</text>"#,
            px(*x),
            py(*y),
            i + 1
        );
    }
    s.push_str("</svg>\n");
    s
}
