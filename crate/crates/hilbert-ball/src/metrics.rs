//! The three metrics on the unit ball and the closed-form rotation bounds.
//!
//! The Hilbert distance `h` has four evaluation paths that must agree:
//!
//! ```text
//! oracle      h = log |u,x,y,v|                      (chord + cross-ratio)
//! ch form     ch(h/2) = (1 - x.y) / sqrt((1-|x|^2)(1-|y|^2))
//! sh identity sh(h/2) = sqrt(1 - m1^2) sh(rho/2)
//! equal norm  h = 2 log((sqrt(4(1-|x|^2)+|x-y|^2)+|x-y|) / (... - |x-y|)),  |x|=|y|
//! ```
//!
//! where `rho` is the hyperbolic (Poincaré) distance and `m1` the Euclidean
//! distance from the origin to the line through the points. The ch form is
//! the cheapest and is the default evaluation path; the oracle is kept as the
//! geometric ground truth for tests and the CLI.

use crate::error::{HilbertError, Result};
use crate::geom::{
    self, chord_through, dist_origin_to_line, PointInBall, COINCIDENT_EPS,
};

/// Arguments of arcosh within this margin below 1 are clamped to 1; anything
/// further below indicates inconsistent inputs and panics.
const CH_CLAMP_EPS: f64 = 1e-12;

/// Evaluation path of a Hilbert distance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HilbertMethod {
    CrossRatioOracle,
    ChClosedForm,
    ShIdentity,
    EqualNormForm,
}

/// A metric distance tagged with the path that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricValue {
    pub value: f64,
    pub method: HilbertMethod,
}

/// Two-sided bound on a distance; `upper` is `None` when the bound blows up.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundPair {
    pub lower: f64,
    pub upper: Option<f64>,
}

impl BoundPair {
    pub fn upper_or_inf(&self) -> f64 {
        self.upper.unwrap_or(f64::INFINITY)
    }

    /// True when `value` lies in `[lower - tol, upper + tol]`.
    pub fn brackets(&self, value: f64, tol: f64) -> bool {
        value >= self.lower - tol && value <= self.upper_or_inf() + tol
    }
}

fn coincident(x: &PointInBall, y: &PointInBall) -> bool {
    geom::dist(x.coords(), y.coords()) <= COINCIDENT_EPS
}

/// sh(rho/2) = |x-y| / sqrt((1-|x|^2)(1-|y|^2))
pub(crate) fn sh_rho_half(x: &PointInBall, y: &PointInBall) -> f64 {
    geom::dist(x.coords(), y.coords()) / (x.gap() * y.gap()).sqrt()
}

/// Hyperbolic distance on raw coordinates (callers guarantee |z| < 1).
pub(crate) fn hyperbolic_coords(x: &[f64], y: &[f64]) -> f64 {
    2.0 * (geom::dist(x, y) / (geom::gap(x) * geom::gap(y)).sqrt()).asinh()
}

/// Hyperbolic (Poincaré) distance: rho = 2 arsh(|x-y| / sqrt((1-|x|^2)(1-|y|^2))).
pub fn hyperbolic(x: &PointInBall, y: &PointInBall) -> f64 {
    2.0 * sh_rho_half(x, y).asinh()
}

/// Distance-ratio metric: j = log(1 + |x-y| / min(1-|x|, 1-|y|)).
pub fn distance_ratio(x: &PointInBall, y: &PointInBall) -> f64 {
    let d = geom::dist(x.coords(), y.coords());
    let min_gap = (1.0 - x.norm()).min(1.0 - y.norm());
    (1.0 + d / min_gap).ln()
}

/// Hilbert distance through the defining chord construction:
/// h = log |u,x,y,v| with the chord endpoints ordered so |u-x| < |u-y|,
/// the cross-ratio taken in the chord's line parameter.
pub fn hilbert_oracle(x: &PointInBall, y: &PointInBall) -> f64 {
    if coincident(x, y) {
        return 0.0;
    }
    let chord = chord_through(x, y).expect("distinct interior points have a chord");
    chord.cross_ratio().ln()
}

/// Hilbert distance through the closed form
/// ch(h/2) = (1 - x.y) / sqrt((1-|x|^2)(1-|y|^2)).
///
/// Evaluated as 2 acosh(1 + w) with
/// w = (|x-y|^2 - (|x|^2|y|^2 - (x.y)^2)) / (sqrt(gx gy)(1 - x.y + sqrt(gx gy))),
/// which keeps full accuracy as the points approach each other. Arguments
/// within 1e-12 below 1 are clamped to 1; anything lower panics as an
/// internal inconsistency.
pub fn hilbert_ch_form(x: &PointInBall, y: &PointInBall) -> f64 {
    if coincident(x, y) {
        return 0.0;
    }
    let sqrt_g = (x.gap() * y.gap()).sqrt();
    let n = geom::one_minus_dot(x.coords(), y.coords());
    let num = geom::dist_sq(x.coords(), y.coords()) - geom::cross_norm_sq(x.coords(), y.coords());
    let w = num / (sqrt_g * (n + sqrt_g));
    assert!(
        w >= -CH_CLAMP_EPS,
        "ch-form argument {} below 1: inconsistent inputs",
        1.0 + w
    );
    let w = w.max(0.0);
    2.0 * (w + (w * (w + 2.0)).sqrt()).ln_1p()
}

/// Hilbert distance through sh(h/2) = sqrt(1 - m1^2) sh(rho/2).
pub fn hilbert_sh_identity(x: &PointInBall, y: &PointInBall) -> f64 {
    if coincident(x, y) {
        return 0.0;
    }
    let m1 = dist_origin_to_line(x, y).expect("points are distinct");
    let factor = (1.0 - m1 * m1).max(0.0).sqrt();
    2.0 * (factor * sh_rho_half(x, y)).asinh()
}

/// Hilbert distance for a pair with equal norms:
///
/// ```text
/// h = 2 log((sqrt(4(1-|x|^2) + |x-y|^2) + |x-y|) / (sqrt(4(1-|x|^2) + |x-y|^2) - |x-y|))
/// ```
///
/// Errors with [`HilbertError::UnequalNorms`] when | |x| - |y| | > 1e-10.
pub fn hilbert_equal_norm(x: &PointInBall, y: &PointInBall) -> Result<f64> {
    geom::check_same_dim(x.coords(), y.coords())?;
    if (x.norm() - y.norm()).abs() > 1e-10 {
        return Err(HilbertError::UnequalNorms);
    }
    if coincident(x, y) {
        return Ok(0.0);
    }
    let d = geom::dist(x.coords(), y.coords());
    Ok(log_ratio_from_gap(4.0 * x.gap(), d))
}

/// 2 log((sqrt(g + d^2) + d) / (sqrt(g + d^2) - d)) computed without the
/// cancellation in the denominator: the subtraction equals g / (sqrt(g+d^2)+d).
pub(crate) fn log_ratio_from_gap(g: f64, d: f64) -> f64 {
    let s = (g + d * d).sqrt();
    2.0 * ((s + d) * (s + d) / g).ln()
}

/// Dispatches a Hilbert evaluation path; `hilbert_dist` is the plain default.
pub fn hilbert(x: &PointInBall, y: &PointInBall, method: HilbertMethod) -> Result<MetricValue> {
    let value = match method {
        HilbertMethod::CrossRatioOracle => hilbert_oracle(x, y),
        HilbertMethod::ChClosedForm => hilbert_ch_form(x, y),
        HilbertMethod::ShIdentity => hilbert_sh_identity(x, y),
        HilbertMethod::EqualNormForm => hilbert_equal_norm(x, y)?,
    };
    Ok(MetricValue { value, method })
}

/// Default Hilbert evaluation (the ch closed form; no chord solve).
pub fn hilbert_dist(x: &PointInBall, y: &PointInBall) -> f64 {
    hilbert_ch_form(x, y)
}

/// Bounds on h obtained by rotating the point closer to the origin around
/// the other point, in terms of t = max(|x|, |y|) and d = |x - y| only:
///
/// ```text
/// lower = log((1-t^2) sqrt(d^2+1-t^2) /
///             ((sqrt(d^2+1-t^2) - d)(1-t^2 - d(sqrt(d^2+1-t^2) - d))))
/// upper = max(log((1+t)(1-t+d) / ((1-t)(1+t-d))),
///             2 log((sqrt(4(1-t^2)+d^2) + d) / (sqrt(4(1-t^2)+d^2) - d)))
/// ```
///
/// The first upper expression is attained for pairs collinear with the
/// origin, the second at the equal-norm position. `upper` is `None` when
/// `1 + t - d <= 0` (unreachable for interior points, kept for safety).
pub fn rotation_bounds_far_point(x: &PointInBall, y: &PointInBall) -> Result<BoundPair> {
    geom::check_same_dim(x.coords(), y.coords())?;
    let d = geom::dist(x.coords(), y.coords());
    if d <= COINCIDENT_EPS {
        return Err(HilbertError::CoincidentPoints);
    }
    let t = x.norm().max(y.norm());
    let gt = 1.0 - t * t;
    // The lower expression telescopes to log((sqrt(d^2 + 1 - t^2) + d)^2 / (1 - t^2)).
    let r = (d * d + gt).sqrt();
    let lower = ((r + d) * (r + d) / gt).ln();
    let upper = if 1.0 + t - d <= 0.0 {
        None
    } else {
        let boundary = rotation_upper_boundary_expr(t, d);
        let equal_norm = rotation_upper_equal_norm_expr(t, d);
        Some(boundary.max(equal_norm))
    };
    Ok(BoundPair { lower, upper })
}

/// log((1+t)(1-t+d) / ((1-t)(1+t-d))), the rotation maximum with the near
/// chord endpoint at distance 1-t.
pub(crate) fn rotation_upper_boundary_expr(t: f64, d: f64) -> f64 {
    ((1.0 + t) * (1.0 - t + d) / ((1.0 - t) * (1.0 + t - d))).ln()
}

/// The rotation maximum at the equal-norm position (the equal-norm closed
/// form evaluated with gap 1 - t^2).
pub(crate) fn rotation_upper_equal_norm_expr(t: f64, d: f64) -> f64 {
    log_ratio_from_gap(4.0 * (1.0 - t * t), d)
}

/// Bounds on h obtained by rotating the pair around its Euclidean midpoint:
///
/// ```text
/// lower = 2 log((sqrt(4-|x+y|^2) + |x-y|) / (sqrt(4-|x+y|^2) - |x-y|))
/// upper = log(((2+|x-y|)^2 - |x+y|^2) / ((2-|x-y|)^2 - |x+y|^2))   if |x-y| < 2-|x+y|
/// ```
///
/// The lower bound is attained exactly when |x| = |y|, the upper exactly for
/// pairs collinear with the origin; `upper` is `None` when the rotated pair
/// would leave the ball.
pub fn midpoint_rotation_bounds(x: &PointInBall, y: &PointInBall) -> Result<BoundPair> {
    geom::check_same_dim(x.coords(), y.coords())?;
    let d = geom::dist(x.coords(), y.coords());
    if d <= COINCIDENT_EPS {
        return Err(HilbertError::CoincidentPoints);
    }
    // 4 - |x+y|^2 - |x-y|^2 = 2(1-|x|^2) + 2(1-|y|^2), free of cancellation.
    let g = 2.0 * (x.gap() + y.gap());
    let lower = log_ratio_from_gap(g, d);
    let q: Vec<f64> = x.coords().iter().zip(y.coords()).map(|(a, b)| a + b).collect();
    let qn = geom::norm(&q);
    let upper = if d < 2.0 - qn {
        let q2 = qn * qn;
        Some((((2.0 + d).powi(2) - q2) / ((2.0 - d).powi(2) - q2)).ln())
    } else {
        None
    };
    Ok(BoundPair { lower, upper })
}
