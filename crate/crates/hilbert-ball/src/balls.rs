//! Metric balls in the Hilbert metric: inclusion radii against Euclidean and
//! hyperbolic balls, and the exact boundary parametrization in the disk.
//!
//! For a center x and direction angle ψ measured from x/|x|, the Hilbert
//! sphere of level l around x consists of the points
//!
//! ```text
//! y(ψ) = x + k1(ψ) (x - u),   u = (x/|x|) e^(iψ),
//! k1(ψ) = (1-|x|^2)(e^l - 1) / (1-|x|^2 + e^l (1 + |x|^2 - 2|x| cos ψ))
//! ```
//!
//! which is what the drawing code samples.

use crate::error::{HilbertError, Result};
use crate::geom::PointInBall;
use crate::metrics::rotation_upper_boundary_expr;

/// Which metric a [`BallSpec`] radius refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MetricKind {
    Euclidean,
    Hilbert,
    Hyperbolic,
}

/// A metric ball: center, radius (or level), and the metric it lives in.
#[derive(Debug, Clone)]
pub struct BallSpec {
    pub center: PointInBall,
    pub radius: f64,
    pub kind: MetricKind,
}

impl BallSpec {
    /// Euclidean balls used in inclusion statements must stay inside the
    /// unit ball; the other kinds only need a positive radius.
    pub fn validate(&self) -> Result<()> {
        if !(self.radius > 0.0) {
            return Err(HilbertError::ArgumentOutOfRange("radius must be positive"));
        }
        if self.kind == MetricKind::Euclidean && self.radius >= 1.0 - self.center.norm() {
            return Err(HilbertError::RadiusTooLarge {
                radius: self.radius,
                limit: 1.0 - self.center.norm(),
            });
        }
        Ok(())
    }
}

/// Largest l0 with B_h(x, l0) ⊆ B(x, r) and smallest l1 with
/// B(x, r) ⊆ B_h(x, l1), for 0 < r < 1 - |x|:
///
/// ```text
/// l0 = log((1+|x|)(1-|x|+r) / ((1-|x|)(1+|x|-r)))            if |x| <= r
/// l0 = log((1-|x|^2) sqrt(r^2+1-|x|^2) / ((sqrt(r^2+1-|x|^2)-r)
///          (1-|x|^2 - r(sqrt(r^2+1-|x|^2)-r))))              if |x| > r
/// l1 = log((1-|x|)(1+|x|+r) / ((1+|x|)(1-|x|-r)))
/// ```
///
/// l0 is the minimum and l1 the maximum of h(x, .) over the sphere S(x, r).
pub fn euclidean_to_hilbert_radii(x: &PointInBall, r: f64) -> Result<(f64, f64)> {
    if !(r > 0.0) {
        return Err(HilbertError::ArgumentOutOfRange("radius must be positive"));
    }
    let t = x.norm();
    if r >= 1.0 - t {
        return Err(HilbertError::RadiusTooLarge {
            radius: r,
            limit: 1.0 - t,
        });
    }
    let l0 = if t <= r {
        rotation_upper_boundary_expr(t, r)
    } else {
        // Telescopes to log((sqrt(r^2 + 1 - t^2) + r)^2 / (1 - t^2)).
        let gt = 1.0 - t * t;
        let s = (r * r + gt).sqrt();
        ((s + r) * (s + r) / gt).ln()
    };
    let l1 = ((1.0 - t) * (1.0 + t + r) / ((1.0 + t) * (1.0 - t - r))).ln();
    Ok((l0, l1))
}

/// Largest r0 with B(x, r0) ⊆ B_h(x, l) and smallest r1 with
/// B_h(x, l) ⊆ B(x, r1), for l > 0:
///
/// ```text
/// r0 = (e^l - 1)(1 - |x|^2) / (1 - |x| + e^l (1 + |x|))
/// r1 = (e^l - 1)(1 - |x|^2) / (1 + |x| + e^l (1 - |x|))   if l >= log((1+|x|)/(1-|x|))
/// r1 = (1/2) sqrt((1 - |x|^2)/e^l) (e^l - 1)              otherwise
/// ```
///
/// The r1 branches invert the two l0 branches above; the switch is the level
/// at which the enclosing radius reaches |x| (so that "|x| <= r1" holds
/// self-consistently), and both branches agree there.
pub fn hilbert_to_euclidean_radii(x: &PointInBall, l: f64) -> Result<(f64, f64)> {
    if !(l > 0.0) {
        return Err(HilbertError::InvalidLevel(l));
    }
    let t = x.norm();
    let e = l.exp();
    let g = 1.0 - t * t;
    let r0 = (e - 1.0) * g / (1.0 - t + e * (1.0 + t));
    let l_star = ((1.0 + t) / (1.0 - t)).ln();
    let r1 = if l >= l_star {
        (e - 1.0) * g / (1.0 + t + e * (1.0 - t))
    } else {
        0.5 * (g / e).sqrt() * (e - 1.0)
    };
    Ok((r0, r1))
}

/// Largest l0 with B_h(x, l0) ⊆ B_rho(x, r) and smallest l1 with
/// B_rho(x, r) ⊆ B_h(x, l1):
///
/// ```text
/// l0 = 2 arsh(sqrt(1 - |x|^2) sh(r/2)),   l1 = r
/// ```
///
/// Both are tight on the hyperbolic sphere; at x = 0 they coincide.
pub fn hyperbolic_to_hilbert_radii(x: &PointInBall, r: f64) -> Result<(f64, f64)> {
    if !(r > 0.0) {
        return Err(HilbertError::ArgumentOutOfRange("radius must be positive"));
    }
    let l0 = 2.0 * (x.gap().sqrt() * (r / 2.0).sinh()).asinh();
    Ok((l0, r))
}

/// Sampled boundary of the disk-model Hilbert ball B_h(x, l): strictly
/// increasing angles ψ in [0, 2π) with the boundary point for each.
#[derive(Debug, Clone)]
pub struct BallBoundary2D {
    center: PointInBall,
    level: f64,
    samples: Vec<(f64, [f64; 2])>,
}

impl BallBoundary2D {
    pub fn center(&self) -> &PointInBall {
        &self.center
    }

    pub fn level(&self) -> f64 {
        self.level
    }

    pub fn samples(&self) -> &[(f64, [f64; 2])] {
        &self.samples
    }
}

/// k1(ψ) for a center x and level l.
pub fn boundary_scale(x: &PointInBall, l: f64, psi: f64) -> f64 {
    let g = x.gap();
    let t = x.norm();
    g * (l.exp() - 1.0) / (g + l.exp() * (1.0 + t * t - 2.0 * t * psi.cos()))
}

/// Samples the boundary of B_h(x, l) in the disk at `num_samples` uniformly
/// spaced angles.
///
/// For x = 0 the ball is the Euclidean disk of radius th(l/2) and the
/// direction reference x/|x| is undefined, so the circle is returned
/// directly.
pub fn hilbert_ball_boundary(
    x: &PointInBall,
    l: f64,
    num_samples: usize,
) -> Result<BallBoundary2D> {
    if x.dim() != 2 {
        return Err(HilbertError::ArgumentOutOfRange(
            "ball drawing is planar; reduce to a plane section first",
        ));
    }
    if !(l > 0.0) {
        return Err(HilbertError::InvalidLevel(l));
    }
    if num_samples < 3 {
        return Err(HilbertError::ArgumentOutOfRange(
            "need at least 3 boundary samples",
        ));
    }
    let t = x.norm();
    let c = x.coords();
    let mut samples = Vec::with_capacity(num_samples);
    if t < 1e-13 {
        let r = (l / 2.0).tanh();
        for i in 0..num_samples {
            let psi = i as f64 * std::f64::consts::TAU / num_samples as f64;
            samples.push((psi, [r * psi.cos(), r * psi.sin()]));
        }
    } else {
        let (dir_x, dir_y) = (c[0] / t, c[1] / t);
        for i in 0..num_samples {
            let psi = i as f64 * std::f64::consts::TAU / num_samples as f64;
            // u = (x/|x|) e^(i psi)
            let u = [
                dir_x * psi.cos() - dir_y * psi.sin(),
                dir_x * psi.sin() + dir_y * psi.cos(),
            ];
            let k = boundary_scale(x, l, psi);
            samples.push((psi, [c[0] + k * (c[0] - u[0]), c[1] + k * (c[1] - u[1])]));
        }
    }
    Ok(BallBoundary2D {
        center: x.clone(),
        level: l,
        samples,
    })
}
