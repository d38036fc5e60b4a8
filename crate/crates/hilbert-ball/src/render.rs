//! SVG and CSV emitters for ball boundaries and the illustrative figures.
//!
//! Output is deterministic: coordinates are written with fixed precision and
//! the SVG viewBox is pinned to [-1.1, 1.1]^2 with the mathematical (y-up)
//! orientation.

use std::fmt::Write;

use crate::balls::{hilbert_ball_boundary, BallBoundary2D};
use crate::error::Result;
use crate::geom::{chord_through, PointInBall};
use crate::metrics::hilbert_oracle;

const SVG_HEADER: &str = concat!(
    "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.1 -1.1 2.2 2.2\">\n",
    "<g transform=\"scale(1,-1)\">\n",
    "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"black\" stroke-width=\"0.008\"/>\n"
);
const SVG_FOOTER: &str = "</g>\n</svg>\n";

fn push_polygon(out: &mut String, points: &[[f64; 2]], stroke: &str) {
    let mut attr = String::new();
    for p in points {
        let _ = write!(attr, "{:.6},{:.6} ", p[0], p[1]);
    }
    let _ = writeln!(
        out,
        "<polygon points=\"{}\" fill=\"none\" stroke=\"{stroke}\" stroke-width=\"0.006\"/>",
        attr.trim_end()
    );
}

fn push_line(out: &mut String, a: [f64; 2], b: [f64; 2], stroke: &str, dashed: bool) {
    let dash = if dashed {
        " stroke-dasharray=\"0.03,0.02\""
    } else {
        ""
    };
    let _ = writeln!(
        out,
        "<line x1=\"{:.6}\" y1=\"{:.6}\" x2=\"{:.6}\" y2=\"{:.6}\" stroke=\"{stroke}\" stroke-width=\"0.006\"{dash}/>",
        a[0], a[1], b[0], b[1]
    );
}

fn push_circle(out: &mut String, center: [f64; 2], r: f64, stroke: &str, dashed: bool) {
    let dash = if dashed {
        " stroke-dasharray=\"0.03,0.02\""
    } else {
        ""
    };
    let _ = writeln!(
        out,
        "<circle cx=\"{:.6}\" cy=\"{:.6}\" r=\"{:.6}\" fill=\"none\" stroke=\"{stroke}\" stroke-width=\"0.006\"{dash}/>",
        center[0], center[1], r
    );
}

fn push_dot(out: &mut String, p: [f64; 2]) {
    let _ = writeln!(
        out,
        "<circle cx=\"{:.6}\" cy=\"{:.6}\" r=\"0.015\" fill=\"black\"/>",
        p[0], p[1]
    );
}

fn push_label(out: &mut String, p: [f64; 2], text: &str) {
    // Labels live in the flipped group; flip them back locally so the text
    // renders upright.
    let _ = writeln!(
        out,
        "<text x=\"{:.6}\" y=\"{:.6}\" font-size=\"0.09\" transform=\"scale(1,-1)\">{text}</text>",
        p[0] + 0.02,
        -(p[1] + 0.02)
    );
}

/// SVG of a Hilbert-ball boundary: the unit circle, the center mark, and the
/// closed boundary polyline.
pub fn ball_svg(boundary: &BallBoundary2D) -> String {
    let mut out = String::from(SVG_HEADER);
    let points: Vec<[f64; 2]> = boundary.samples().iter().map(|&(_, y)| y).collect();
    push_polygon(&mut out, &points, "crimson");
    let c = boundary.center().coords();
    push_dot(&mut out, [c[0], c[1]]);
    out.push_str(SVG_FOOTER);
    out
}

/// CSV of a Hilbert-ball boundary with columns `psi,y1,y2,h_check`, where
/// `h_check` re-derives the level through the chord/cross-ratio oracle.
pub fn ball_csv(boundary: &BallBoundary2D) -> String {
    let mut out = String::from("psi,y1,y2,h_check\r\n");
    for &(psi, y) in boundary.samples() {
        let yp = PointInBall::new(y.to_vec()).expect("boundary points lie inside the ball");
        let h = hilbert_oracle(boundary.center(), &yp);
        let _ = write!(out, "{psi},{},{},{h}\r\n", y[0], y[1]);
    }
    out
}

/// The four illustrative figures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Figure {
    /// A chord with its boundary points u, v and an interior pair x, y.
    ChordConfiguration,
    /// Rotating the inner point of a pair around the outer one.
    FarPointRotation,
    /// Rotating a pair around its Euclidean midpoint.
    MidpointRotation,
    /// A metric ball of the Hilbert distance (center 0.75, level 1.5).
    HilbertBall,
}

impl Figure {
    pub fn from_index(i: u8) -> Option<Figure> {
        match i {
            1 => Some(Figure::ChordConfiguration),
            2 => Some(Figure::FarPointRotation),
            3 => Some(Figure::MidpointRotation),
            4 => Some(Figure::HilbertBall),
            _ => None,
        }
    }
}

/// Renders one of the illustrative figures as a standalone SVG.
pub fn figure_svg(figure: Figure) -> Result<String> {
    Ok(match figure {
        Figure::ChordConfiguration => chord_configuration_svg(),
        Figure::FarPointRotation => far_point_rotation_svg()?,
        Figure::MidpointRotation => midpoint_rotation_svg()?,
        Figure::HilbertBall => {
            let center = PointInBall::from_xy(0.75, 0.0)?;
            ball_svg(&hilbert_ball_boundary(&center, 1.5, 512)?)
        }
    })
}

/// u = 1 on the circle, v = e^(i mu), x and y between them on the chord
/// (mu = 3pi/5, x at 1/3, y at 5/6 of the way).
fn chord_configuration_svg() -> String {
    let mu = 3.0 * std::f64::consts::PI / 5.0;
    let u = [1.0, 0.0];
    let v = [mu.cos(), mu.sin()];
    let at = |k: f64| [u[0] + k * (v[0] - u[0]), u[1] + k * (v[1] - u[1])];
    let x = at(1.0 / 3.0);
    let y = at(5.0 / 6.0);
    let mut out = String::from(SVG_HEADER);
    push_line(&mut out, u, [0.0, 0.0], "black", false);
    push_line(&mut out, [0.0, 0.0], v, "black", false);
    push_line(&mut out, u, v, "black", false);
    for (p, name) in [(u, "u"), (x, "x"), (y, "y"), (v, "v"), ([0.0, 0.0], "0")] {
        push_dot(&mut out, p);
        push_label(&mut out, p, name);
    }
    out.push_str(SVG_FOOTER);
    out
}

/// x = 1/2 on the real axis, the chord toward u = e^(i pi/6), y on it at
/// distance 1/3 from x, with the circles |z| = |x| and |z - x| = |x - y|.
fn far_point_rotation_svg() -> Result<String> {
    let x = [0.5, 0.0];
    let psi = std::f64::consts::PI / 6.0;
    let u = [psi.cos(), psi.sin()];
    let ux = ((u[0] - x[0]).powi(2) + (u[1] - x[1]).powi(2)).sqrt();
    let d = 1.0 / 3.0;
    let k = d / ux;
    let y = [x[0] + k * (x[0] - u[0]), x[1] + k * (x[1] - u[1])];
    let l = (1.0 - 0.25) / (ux * ux);
    let v = [x[0] + l * (x[0] - u[0]), x[1] + l * (x[1] - u[1])];
    let mut out = String::from(SVG_HEADER);
    push_line(&mut out, u, v, "black", false);
    push_line(&mut out, u, [0.0, 0.0], "black", false);
    push_line(&mut out, [0.0, 0.0], x, "black", false);
    push_circle(&mut out, [0.0, 0.0], 0.5, "gray", true);
    push_circle(&mut out, x, d, "gray", true);
    for (p, name) in [(u, "u"), (x, "x"), (y, "y"), (v, "v"), ([0.0, 0.0], "0")] {
        push_dot(&mut out, p);
        push_label(&mut out, p, name);
    }
    out.push_str(SVG_FOOTER);
    Ok(out)
}

/// q = 1/3, d = 7/15, nu = pi/3: the rotation circle S(q, d) with the pair
/// x, y on it and the chord through them extended to u, v.
fn midpoint_rotation_svg() -> Result<String> {
    let q = [1.0 / 3.0, 0.0];
    let d = 7.0 / 15.0;
    let nu = std::f64::consts::PI / 3.0;
    let x = PointInBall::from_xy(q[0] + d * nu.cos(), q[1] + d * nu.sin())?;
    let y = PointInBall::from_xy(q[0] - d * nu.cos(), q[1] - d * nu.sin())?;
    let chord = chord_through(&x, &y)?;
    let (u, v) = (chord.u(), chord.v());
    let mut out = String::from(SVG_HEADER);
    push_line(&mut out, [u[0], u[1]], [v[0], v[1]], "black", false);
    push_line(&mut out, q, [1.0, 0.0], "black", false);
    push_circle(&mut out, q, d, "gray", false);
    let pts = [
        ([u[0], u[1]], "u"),
        ([x.coords()[0], x.coords()[1]], "x"),
        (q, "q"),
        ([y.coords()[0], y.coords()[1]], "y"),
        ([v[0], v[1]], "v"),
        ([0.0, 0.0], "0"),
    ];
    for (p, name) in pts {
        push_dot(&mut out, p);
        push_label(&mut out, p, name);
    }
    out.push_str(SVG_FOOTER);
    Ok(out)
}
