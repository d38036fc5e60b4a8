//! Möbius automorphisms of the ball, sphere inversions orthogonal to the
//! unit sphere, and the distortion of the Hilbert metric under them.
//!
//! `T_a` is the canonical automorphism sending `a` to the origin: in the
//! plane `T_a(z) = (z - a) / (1 - conj(a) z)`, in higher dimensions the
//! composition `p_a ∘ σ_a` of the inversion `σ_a` in the sphere
//! `S(a*, sqrt(1/|a|^2 - 1))` with the reflection `p_a` in the hyperplane
//! through the origin orthogonal to `a`.
//!
//! Image-side metric evaluations go through the bracket
//!
//! ```text
//! br(a, z)^2 = |z - a|^2 + (1 - |a|^2)(1 - |z|^2)
//! ```
//!
//! which gives the boundary gap of an image exactly:
//! `1 - |T_a z|^2 = (1 - |a|^2)(1 - |z|^2) / br(a, z)^2`. Subtracting |T_a z|^2
//! from 1 in coordinates cannot resolve that gap near the boundary, and the
//! distortion checks run at tolerances that require it.

use num_complex::Complex64;

use crate::error::{HilbertError, Result};
use crate::geom::{
    self, as_complex, chord_through, dist_origin_to_line, from_complex, one_minus_line_dist_sq,
    reduce_to_plane, PointInBall, COINCIDENT_EPS,
};
use crate::metrics::{hilbert_dist, hyperbolic_coords};

/// br(a, z)^2 = |z - a|^2 + (1 - |a|^2)(1 - |z|^2); strictly positive for
/// interior points.
pub(crate) fn bracket_sq(a: &[f64], z: &[f64]) -> f64 {
    geom::dist_sq(a, z) + geom::gap(a) * geom::gap(z)
}

/// Boundary gap 1 - |T_a z|^2 of the image, from the bracket identity.
pub fn image_gap(a: &PointInBall, z: &PointInBall) -> f64 {
    image_gap_coords(a.coords(), z.coords())
}

pub(crate) fn image_gap_coords(a: &[f64], z: &[f64]) -> f64 {
    geom::gap(a) * geom::gap(z) / bracket_sq(a, z)
}

/// Raw image coordinates of `T_a(z)`; no validity check on the result.
pub(crate) fn t_a_coords(a: &[f64], z: &[f64]) -> Vec<f64> {
    let a_norm_sq = geom::norm_sq(a);
    if a_norm_sq == 0.0 {
        return z.to_vec();
    }
    if a.len() == 2 {
        let (ca, cz) = (as_complex(a), as_complex(z));
        return from_complex((cz - ca) / (Complex64::new(1.0, 0.0) - ca.conj() * cz));
    }
    // sigma_a: inversion in S(a*, sqrt(1/|a|^2 - 1)), then p_a: reflection in
    // the hyperplane through 0 orthogonal to a.
    let a_star = geom::scale(a, 1.0 / a_norm_sq);
    let r_sq = 1.0 / a_norm_sq - 1.0;
    let zc = geom::sub(z, &a_star);
    let sigma = geom::axpy(&a_star, r_sq / geom::norm_sq(&zc), &zc);
    let unit_a = geom::scale(a, 1.0 / a_norm_sq.sqrt());
    geom::axpy(&sigma, -2.0 * geom::dot(&sigma, &unit_a), &unit_a)
}

/// The Möbius automorphism T_a of the unit ball with T_a(a) = 0.
///
/// Fails only when the image lands within the construction margin of the
/// boundary, which requires both `a` and `z` to hug the boundary; the
/// image-side evaluators below avoid constructing image points at all.
pub fn t_a(a: &PointInBall, z: &PointInBall) -> Result<PointInBall> {
    geom::check_same_dim(a.coords(), z.coords())?;
    PointInBall::new(t_a_coords(a.coords(), z.coords()))
}

/// T_a as a value, carrying the parameter and the reflection normal.
#[derive(Debug, Clone)]
pub struct MoebiusAuto {
    a: PointInBall,
}

impl MoebiusAuto {
    pub fn new(a: PointInBall) -> Self {
        Self { a }
    }

    pub fn parameter(&self) -> &PointInBall {
        &self.a
    }

    /// Unit normal a/|a| of the reflection hyperplane; `None` for a = 0.
    pub fn reflection_normal(&self) -> Option<Vec<f64>> {
        let n = self.a.norm();
        (n > 0.0).then(|| geom::scale(self.a.coords(), 1.0 / n))
    }

    pub fn apply(&self, z: &PointInBall) -> Result<PointInBall> {
        t_a(&self.a, z)
    }
}

/// Squared image separation |T_a x - T_a y|^2 through the exact identity
/// |T_a x - T_a y| = (1 - |a|^2) |x - y| / (br(a,x) br(a,y)). Subtracting
/// the computed image coordinates instead would round the separation at the
/// absolute 1e-16 level, which the distortion tolerances cannot absorb when
/// the map contracts strongly. (Coordinate-route agreement is pinned on
/// well-conditioned configurations by the unit tests.)
pub(crate) fn image_dist_sq(a: &PointInBall, x: &PointInBall, y: &PointInBall) -> f64 {
    let ga = a.gap();
    let d_sq = geom::dist_sq(x.coords(), y.coords());
    ga * ga * d_sq / (bracket_sq(a.coords(), x.coords()) * bracket_sq(a.coords(), y.coords()))
}

/// Hyperbolic distance of the two images rho(T_a x, T_a y).
pub fn rho_image(a: &PointInBall, x: &PointInBall, y: &PointInBall) -> f64 {
    let gx = image_gap(a, x);
    let gy = image_gap(a, y);
    2.0 * ((image_dist_sq(a, x, y) / (gx * gy)).sqrt()).asinh()
}

/// Hilbert distance of the two images h(T_a x, T_a y).
///
/// Uses the polarization identity 2(1 - u.v) = (1-|u|^2) + (1-|v|^2) + |u-v|^2
/// so the ch-form numerator never cancels.
pub fn hilbert_image(a: &PointInBall, x: &PointInBall, y: &PointInBall) -> f64 {
    let gx = image_gap(a, x);
    let gy = image_gap(a, y);
    let n = 0.5 * (gx + gy + image_dist_sq(a, x, y));
    let arg = (n / (gx * gy).sqrt()).max(1.0);
    2.0 * arg.acosh()
}

/// 1 - m2^2 where m2 is the distance from the origin to the image line
/// L(T_a x, T_a y), computed through d^2 (1 - m2^2) = (1 - u.v)^2 - gap gap.
pub(crate) fn one_minus_m2_sq(a: &PointInBall, x: &PointInBall, y: &PointInBall) -> f64 {
    let gx = image_gap(a, x);
    let gy = image_gap(a, y);
    let d_sq = image_dist_sq(a, x, y);
    let n = 0.5 * (gx + gy + d_sq);
    ((n * n - gx * gy) / d_sq).clamp(0.0, 1.0)
}

/// The distortion identity
///
/// ```text
/// h(T_a x, T_a y) = 2 arsh(sqrt((1 - m2^2)/(1 - m1^2)) sh(h(x,y)/2))
/// ```
///
/// with m1, m2 the origin-line distances of the source and image pairs.
/// The returned value agrees with [`hilbert_image`] to 1e-10.
pub fn distortion_identity(a: &PointInBall, x: &PointInBall, y: &PointInBall) -> Result<f64> {
    geom::check_same_dim(x.coords(), y.coords())?;
    if geom::dist(x.coords(), y.coords()) <= COINCIDENT_EPS {
        return Err(HilbertError::CoincidentPoints);
    }
    let factor_sq =
        one_minus_m2_sq(a, x, y) / one_minus_line_dist_sq(x.coords(), y.coords());
    let h = hilbert_dist(x, y);
    Ok(2.0 * (factor_sq.sqrt() * (h / 2.0).sinh()).asinh())
}

/// Closed form for the image-line distance m2 in the plane:
///
/// ```text
/// m2 = |Im((x-a)(conj(y)-conj(a))(1-a conj(x))(1-conj(a) y))| / |A - B|
/// A = (x-a)(1-a conj(x)) |1-a conj(y)|^2
/// B = (y-a)(1-a conj(y)) |1-a conj(x)|^2
/// ```
///
/// Must agree with `dist_origin_to_line(T_a x, T_a y)` to 1e-9; the bar
/// grouping of the denominator is validated against that geometric oracle.
pub fn m2_complex_form(a: &PointInBall, x: &PointInBall, y: &PointInBall) -> Result<f64> {
    if a.dim() != 2 || x.dim() != 2 || y.dim() != 2 {
        return Err(HilbertError::DegenerateConfiguration(
            "the closed form for m2 is planar",
        ));
    }
    let (ca, cx, cy) = (
        as_complex(a.coords()),
        as_complex(x.coords()),
        as_complex(y.coords()),
    );
    let one = Complex64::new(1.0, 0.0);
    let num = ((cx - ca) * (cy.conj() - ca.conj()) * (one - ca * cx.conj()) * (one - ca.conj() * cy))
        .im
        .abs();
    let a_term = (cx - ca) * (one - ca * cx.conj()) * (one - ca * cy.conj()).norm_sqr();
    let b_term = (cy - ca) * (one - ca * cy.conj()) * (one - ca * cx.conj()).norm_sqr();
    let den = (a_term - b_term).norm();
    if den < 1e-15 {
        return Err(HilbertError::DegenerateConfiguration(
            "image points coincide",
        ));
    }
    Ok(num / den)
}

/// Upper bounds on h(T_a x, T_a y).
#[derive(Debug, Clone, Copy)]
pub struct DistortionBounds {
    /// 2 arsh(sh(h/2) / sqrt(1 - min(|x|, |y|, |x+y|/2)^2)); always valid.
    pub minxy_bound: f64,
    /// 2 arsh(sh(h/2) / sqrt(1 - |a|^2/4)); present only when both points lie
    /// in B(0, |a|/2).
    pub half_a_bound: Option<f64>,
    /// sqrt((1-m2^2)/(1-m1^2)) h(x,y); an upper bound only when m2 <= m1.
    pub linear_bound: f64,
    pub linear_bound_valid: bool,
}

pub fn distortion_upper_bounds(
    a: &PointInBall,
    x: &PointInBall,
    y: &PointInBall,
) -> Result<DistortionBounds> {
    geom::check_same_dim(x.coords(), y.coords())?;
    if geom::dist(x.coords(), y.coords()) <= COINCIDENT_EPS {
        return Err(HilbertError::CoincidentPoints);
    }
    let h = hilbert_dist(x, y);
    let sh_half = (h / 2.0).sinh();
    let mid_norm = 0.5
        * x.coords()
            .iter()
            .zip(y.coords())
            .map(|(p, q)| (p + q) * (p + q))
            .sum::<f64>()
            .sqrt();
    let min_norm = x.norm().min(y.norm()).min(mid_norm);
    let minxy_bound = 2.0 * (sh_half / (1.0 - min_norm * min_norm).sqrt()).asinh();
    let half_a = a.norm() / 2.0;
    let half_a_bound = (x.norm() < half_a && y.norm() < half_a)
        .then(|| 2.0 * (sh_half / (1.0 - half_a * half_a).sqrt()).asinh());
    let one_minus_m1_sq = one_minus_line_dist_sq(x.coords(), y.coords());
    let one_minus_m2_sq = one_minus_m2_sq(a, x, y);
    let linear_bound = (one_minus_m2_sq / one_minus_m1_sq).sqrt() * h;
    let m1 = (1.0 - one_minus_m1_sq).clamp(0.0, 1.0).sqrt();
    let m2 = (1.0 - one_minus_m2_sq).clamp(0.0, 1.0).sqrt();
    Ok(DistortionBounds {
        minxy_bound,
        half_a_bound,
        linear_bound,
        linear_bound_valid: m2 <= m1,
    })
}

/// Inversion in a sphere S(c, sqrt(|c|^2 - 1)) orthogonal to the unit
/// sphere; such inversions preserve the unit ball and the cross-ratio.
#[derive(Debug, Clone)]
pub struct SphereInversion {
    center: Vec<f64>,
}

impl SphereInversion {
    pub fn new(center: Vec<f64>) -> Result<Self> {
        if geom::norm(&center) <= 1.0 + 1e-12 {
            return Err(HilbertError::DegenerateConfiguration(
                "inversion center must lie outside the closed unit ball",
            ));
        }
        Ok(Self { center })
    }

    pub fn center(&self) -> &[f64] {
        &self.center
    }

    /// Squared inversion radius |c|^2 - 1.
    pub fn radius_sq(&self) -> f64 {
        geom::norm_sq(&self.center) - 1.0
    }

    /// f(z) = c + (|c|^2 - 1)(z - c) / |z - c|^2
    pub fn apply(&self, z: &[f64]) -> Result<Vec<f64>> {
        geom::check_same_dim(z, &self.center)?;
        let zc = geom::sub(z, &self.center);
        let zc_sq = geom::norm_sq(&zc);
        if zc_sq.sqrt() < 1e-14 {
            return Err(HilbertError::PoleHit);
        }
        Ok(geom::axpy(&self.center, self.radius_sq() / zc_sq, &zc))
    }

    pub fn apply_point(&self, z: &PointInBall) -> Result<PointInBall> {
        PointInBall::new(self.apply(z.coords())?)
    }
}

fn intersect_lines_2d(p: [f64; 2], u: [f64; 2], q: [f64; 2], w: [f64; 2]) -> Result<[f64; 2]> {
    // p + s u = q + t w, solved by Cramer; reject nearly parallel lines.
    let det = w[0] * u[1] - u[0] * w[1];
    let fro = u[0] * u[0] + u[1] * u[1] + w[0] * w[0] + w[1] * w[1];
    if det.abs() * 1e12 <= fro {
        return Err(HilbertError::DegenerateConfiguration(
            "nearly parallel lines",
        ));
    }
    let rhs = [q[0] - p[0], q[1] - p[1]];
    let s = (-rhs[0] * w[1] + w[0] * rhs[1]) / det;
    Ok([p[0] + s * u[0], p[1] + s * u[1]])
}

fn invert_2d(p: [f64; 2]) -> [f64; 2] {
    let n = p[0] * p[0] + p[1] * p[1];
    [p[0] / n, p[1] / n]
}

/// The inversion f with f(x) = y, centered at the intersection
/// L(x, y) ∩ L(x*, y*) with x* = x/|x|^2.
///
/// Requires both points nonzero, non-collinear with the origin, and of
/// different norms (otherwise the two lines are parallel or coincide).
pub fn inversion_swapping(x: &PointInBall, y: &PointInBall) -> Result<SphereInversion> {
    geom::check_same_dim(x.coords(), y.coords())?;
    if x.norm() < 1e-12 || y.norm() < 1e-12 {
        return Err(HilbertError::DegenerateConfiguration(
            "both points must be nonzero",
        ));
    }
    if (x.norm() - y.norm()).abs() < 1e-12 {
        return Err(HilbertError::DegenerateConfiguration(
            "equal norms: the lines L(x,y) and L(x*,y*) are parallel",
        ));
    }
    if dist_origin_to_line(x, y)? < 1e-12 {
        return Err(HilbertError::DegenerateConfiguration(
            "points collinear with the origin",
        ));
    }
    let frame = reduce_to_plane(x, y)?;
    let px = frame.project(x.coords());
    let py = frame.project(y.coords());
    let (pxs, pys) = (invert_2d(px), invert_2d(py));
    let c = intersect_lines_2d(
        px,
        [py[0] - px[0], py[1] - px[1]],
        pxs,
        [pys[0] - pxs[0], pys[1] - pxs[1]],
    )?;
    SphereInversion::new(frame.embed(c))
}

/// Hyperbolic midpoint of the segment [x, y]: the point w with
/// rho(x, w) = rho(w, y), found by bisection in the segment parameter.
pub fn hyperbolic_midpoint(x: &PointInBall, y: &PointInBall) -> Result<PointInBall> {
    geom::check_same_dim(x.coords(), y.coords())?;
    if geom::dist(x.coords(), y.coords()) <= COINCIDENT_EPS {
        return Err(HilbertError::CoincidentPoints);
    }
    let point_at = |t: f64| -> Vec<f64> {
        x.coords()
            .iter()
            .zip(y.coords())
            .map(|(p, q)| p + t * (q - p))
            .collect()
    };
    let imbalance = |t: f64| -> f64 {
        let w = point_at(t);
        hyperbolic_coords(x.coords(), &w) - hyperbolic_coords(&w, y.coords())
    };
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    while hi - lo > 1e-14 {
        let mid = 0.5 * (lo + hi);
        if imbalance(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    PointInBall::new(point_at(0.5 * (lo + hi)))
}

/// The inversion of the ball that maps the chord of L(x, y) onto itself and
/// equalizes the two norms: |f(x)| = |f(y)|, with h(x, y) preserved.
///
/// Built from the hyperbolic midpoint w of [x, y] and the chord midpoint
/// m = (u + v)/2 as the inversion centered at L(w, m) ∩ L(w*, m*).
pub fn symmetrizing_inversion(x: &PointInBall, y: &PointInBall) -> Result<SphereInversion> {
    geom::check_same_dim(x.coords(), y.coords())?;
    if geom::dist(x.coords(), y.coords()) <= COINCIDENT_EPS {
        return Err(HilbertError::CoincidentPoints);
    }
    if (x.norm() - y.norm()).abs() < 1e-12 {
        return Err(HilbertError::DegenerateConfiguration(
            "norms already equal: the identity suffices",
        ));
    }
    let chord = chord_through(x, y)?;
    let m = chord.midpoint();
    let w = hyperbolic_midpoint(x, y)?;
    if geom::norm(&m) < 1e-13 || w.norm() < 1e-13 {
        return Err(HilbertError::DegenerateConfiguration(
            "chord through the origin: no finite symmetrizing center",
        ));
    }
    let frame = reduce_to_plane(x, y)?;
    let pw = frame.project(w.coords());
    let pm = frame.project(&m);
    let (pws, pms) = (invert_2d(pw), invert_2d(pm));
    // L(w, m) is the chord line itself; use the chord direction for stability.
    let px = frame.project(x.coords());
    let py = frame.project(y.coords());
    let c = intersect_lines_2d(
        pw,
        [py[0] - px[0], py[1] - px[1]],
        pws,
        [pms[0] - pws[0], pms[1] - pws[1]],
    )?;
    SphereInversion::new(frame.embed(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::{hilbert_oracle, hyperbolic};
    use proptest::prelude::*;

    fn pt(coords: &[f64]) -> PointInBall {
        PointInBall::new(coords.to_vec()).unwrap()
    }

    #[test]
    fn inversion_fixes_its_sphere_and_involutes() {
        let inv = SphereInversion::new(vec![2.0, 0.0]).unwrap();
        // Point on the inversion sphere: |z - c|^2 = |c|^2 - 1 = 3.
        let z = [2.0 - 3f64.sqrt(), 0.0];
        let fz = inv.apply(&z).unwrap();
        assert!(geom::dist(&fz, &z) < 1e-14);

        let z = [0.3, -0.2];
        let once = inv.apply(&z).unwrap();
        let twice = inv.apply(&once).unwrap();
        assert!(geom::dist(&twice, &z) < 1e-13);

        // f(0) = c + (|c|^2-1)(0-c)/|c|^2 = (0.5, 0).
        let f0 = inv.apply(&[0.0, 0.0]).unwrap();
        assert!(geom::dist(&f0, &[0.5, 0.0]) < 1e-15);
    }

    #[test]
    fn inversion_preserves_unit_sphere() {
        let inv = SphereInversion::new(vec![1.7, -0.9]).unwrap();
        for k in 0..32 {
            let th = k as f64 * std::f64::consts::TAU / 32.0;
            let z = [th.cos(), th.sin()];
            let fz = inv.apply(&z).unwrap();
            assert!((geom::norm(&fz) - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn swapping_inversion_sends_x_to_y() {
        let x = pt(&[0.5, 0.2]);
        let y = pt(&[0.1, 0.6]);
        let inv = inversion_swapping(&x, &y).unwrap();
        let fx = inv.apply(x.coords()).unwrap();
        assert!(geom::dist(&fx, y.coords()) < 1e-10);
        let fy = inv.apply(y.coords()).unwrap();
        assert!(geom::dist(&fy, x.coords()) < 1e-10);
    }

    #[test]
    fn swapping_inversion_degenerate_inputs() {
        // Equal norms: parallel lines.
        let x = pt(&[0.5, 0.0]);
        let y = pt(&[0.0, 0.5]);
        assert!(matches!(
            inversion_swapping(&x, &y),
            Err(HilbertError::DegenerateConfiguration(_))
        ));
        // Collinear with the origin.
        let x = pt(&[0.3, 0.0]);
        let y = pt(&[0.6, 0.0]);
        assert!(matches!(
            inversion_swapping(&x, &y),
            Err(HilbertError::DegenerateConfiguration(_))
        ));
    }

    #[test]
    fn t_a_examples() {
        let a = pt(&[0.5, 0.0]);
        assert!(t_a(&a, &a).unwrap().norm() < 1e-12);

        let img = t_a(&a, &pt(&[0.0, 0.0])).unwrap();
        assert!(geom::dist(img.coords(), &[-0.5, 0.0]) < 1e-15);

        let img = t_a(&a, &pt(&[0.0, 0.5])).unwrap();
        assert!(geom::dist(img.coords(), &[-0.5882352941176471, 0.35294117647058826]) < 1e-15);
    }

    #[test]
    fn t_a_composition_matches_complex_form() {
        // Run the sigma/reflection composition on a 3-D embedding of planar
        // data and compare against the complex formula.
        let a3 = pt(&[0.4, -0.2, 0.0]);
        let z3 = pt(&[0.1, 0.55, 0.0]);
        let img3 = t_a(&a3, &z3).unwrap();
        let img2 = t_a_coords(&[0.4, -0.2], &[0.1, 0.55]);
        assert!((img3.coords()[0] - img2[0]).abs() < 1e-14);
        assert!((img3.coords()[1] - img2[1]).abs() < 1e-14);
        assert!(img3.coords()[2].abs() < 1e-14);
    }

    #[test]
    fn t_a_inverse_round_trip() {
        // Planar inverse: T_a^{-1}(w) = (w + a) / (1 + conj(a) w), checked in
        // both compositions.
        let a = pt(&[0.3, -0.45]);
        let ca = as_complex(a.coords());
        let one = Complex64::new(1.0, 0.0);
        let inverse = |w: Complex64| (w + ca) / (one + ca.conj() * w);
        for z in [pt(&[0.2, 0.2]), pt(&[-0.7, 0.1]), pt(&[0.0, 0.9])] {
            let w = t_a(&a, &z).unwrap();
            let back = inverse(as_complex(w.coords()));
            assert!(geom::dist(&from_complex(back), z.coords()) < 1e-12);
        }
        for w in [pt(&[0.1, -0.3]), pt(&[0.6, 0.5]), pt(&[-0.2, 0.0])] {
            let pre = from_complex(inverse(as_complex(w.coords())));
            let fwd = t_a_coords(a.coords(), &pre);
            assert!(geom::dist(&fwd, w.coords()) < 1e-12);
        }
    }

    #[test]
    fn involution_on_a_thousand_points() {
        let inv = SphereInversion::new(vec![1.4, -1.1]).unwrap();
        let mut rng = crate::sweep::sample::stream_rng(17, 0);
        for _ in 0..1000 {
            let z = crate::sweep::sample::uniform_in_ball(&mut rng, 2);
            let twice = inv.apply(&inv.apply(z.coords()).unwrap()).unwrap();
            assert!(geom::dist(&twice, z.coords()) <= 1e-10);
        }
    }

    #[test]
    fn image_identities_match_coordinates() {
        // On well-conditioned configurations the bracket-identity route and
        // the plain coordinate route agree; the identities are only doing
        // the same computation without the boundary cancellation.
        let a = pt(&[0.3, 0.1]);
        let z = pt(&[-0.2, 0.6]);
        let img = t_a(&a, &z).unwrap();
        let direct = 1.0 - img.norm() * img.norm();
        assert!((image_gap(&a, &z) - direct).abs() < 1e-14);

        let w = pt(&[0.5, -0.3]);
        let img_w = t_a(&a, &w).unwrap();
        let d_coords = geom::dist(img.coords(), img_w.coords());
        assert!((image_dist_sq(&a, &z, &w).sqrt() - d_coords).abs() < 1e-14);
        assert!(
            (rho_image(&a, &z, &w) - hyperbolic(&img, &img_w)).abs() < 1e-13
        );
        assert!(
            (hilbert_image(&a, &z, &w) - hilbert_oracle(&img, &img_w)).abs() < 1e-13
        );
    }

    #[test]
    fn distortion_identity_examples() {
        // a = 0: the identity map, so the value is h itself.
        let zero = PointInBall::origin(2);
        let x = pt(&[0.5, 0.0]);
        let y = pt(&[0.0, 0.5]);
        let v = distortion_identity(&zero, &x, &y).unwrap();
        assert!((v - hilbert_dist(&x, &y)).abs() < 1e-13);

        // a = 0.5, x = 0, y = 0.5i: agrees with the oracle on the images.
        let a = pt(&[0.5, 0.0]);
        let x = pt(&[0.0, 0.0]);
        let y = pt(&[0.0, 0.5]);
        let v = distortion_identity(&a, &x, &y).unwrap();
        let direct = hilbert_oracle(&t_a(&a, &x).unwrap(), &t_a(&a, &y).unwrap());
        assert!((v - direct).abs() < 1e-12);
        assert!((v - hilbert_image(&a, &x, &y)).abs() < 1e-12);

        // Everything on one diameter: images stay on it and h = rho is kept.
        let a = pt(&[0.3, 0.0]);
        let x = pt(&[-0.2, 0.0]);
        let y = pt(&[0.6, 0.0]);
        let v = distortion_identity(&a, &x, &y).unwrap();
        assert!((v - hyperbolic(&x, &y)).abs() < 1e-12);
        assert!((hilbert_dist(&x, &y) - hyperbolic(&x, &y)).abs() < 1e-13);
    }

    #[test]
    fn m2_complex_form_examples() {
        // a = 0 reduces to the origin-line distance of the pair itself.
        let zero = PointInBall::origin(2);
        let x = pt(&[0.5, 0.2]);
        let y = pt(&[0.1, 0.6]);
        let m2 = m2_complex_form(&zero, &x, &y).unwrap();
        assert!((m2 - dist_origin_to_line(&x, &y).unwrap()).abs() < 1e-13);

        let a = pt(&[0.5, 0.0]);
        let x = pt(&[0.0, 0.0]);
        let y = pt(&[0.0, 0.5]);
        let m2 = m2_complex_form(&a, &x, &y).unwrap();
        let geometric =
            dist_origin_to_line(&t_a(&a, &x).unwrap(), &t_a(&a, &y).unwrap()).unwrap();
        assert!((m2 - geometric).abs() < 1e-12);

        // Real axis maps to itself: the image line passes through the origin.
        let a = pt(&[0.3, 0.0]);
        let x = pt(&[-0.4, 0.0]);
        let y = pt(&[0.7, 0.0]);
        assert!(m2_complex_form(&a, &x, &y).unwrap() < 1e-14);
    }

    #[test]
    fn distortion_bounds_examples() {
        let a = pt(&[0.6, 0.2]);
        let x = pt(&[0.1, -0.15]);
        let y = pt(&[-0.2, 0.05]);
        let bounds = distortion_upper_bounds(&a, &x, &y).unwrap();
        let h_img = hilbert_image(&a, &x, &y);
        assert!(h_img <= bounds.minxy_bound + 1e-12);
        // Both points lie in B(0, |a|/2 = 0.316...): the half-a bound applies.
        let half = bounds.half_a_bound.expect("points inside B(0, |a|/2)");
        assert!(h_img <= half + 1e-12);
        assert!(bounds.minxy_bound <= half + 1e-12);
        if bounds.linear_bound_valid {
            assert!(h_img <= bounds.linear_bound + 1e-12);
        }

        // a = 0 with x = -y: min norm factor is 0 and the bound is h itself.
        let zero = PointInBall::origin(2);
        let x = pt(&[0.4, 0.3]);
        let y = pt(&[-0.4, -0.3]);
        let bounds = distortion_upper_bounds(&zero, &x, &y).unwrap();
        assert!((bounds.minxy_bound - hilbert_dist(&x, &y)).abs() < 1e-12);
        assert!(bounds.half_a_bound.is_none());
    }

    #[test]
    fn symmetrizing_inversion_equalizes_norms() {
        let x = pt(&[0.6, 0.0]);
        let y = pt(&[0.2, 0.3]);
        let inv = symmetrizing_inversion(&x, &y).unwrap();
        let fx = inv.apply_point(&x).unwrap();
        let fy = inv.apply_point(&y).unwrap();
        assert!((fx.norm() - fy.norm()).abs() < 1e-11);
        assert!((hilbert_oracle(&fx, &fy) - hilbert_oracle(&x, &y)).abs() < 1e-11);

        assert!(matches!(
            symmetrizing_inversion(&pt(&[0.5, 0.0]), &pt(&[0.0, 0.5])),
            Err(HilbertError::DegenerateConfiguration(_))
        ));
    }

    #[test]
    fn symmetrizing_inversion_reverses_chord() {
        let x = pt(&[0.6, 0.0]);
        let y = pt(&[0.2, 0.3]);
        let inv = symmetrizing_inversion(&x, &y).unwrap();
        let chord = chord_through(&x, &y).unwrap();
        let fu = inv.apply(chord.u()).unwrap();
        let fv = inv.apply(chord.v()).unwrap();
        // Chord endpoints are exchanged, i.e. the chord maps onto itself.
        let chord_img = chord_through(
            &inv.apply_point(&x).unwrap(),
            &inv.apply_point(&y).unwrap(),
        )
        .unwrap();
        assert!(geom::dist(&fu, chord_img.v()).min(geom::dist(&fu, chord_img.u())) < 1e-10);
        assert!(geom::dist(&fv, chord_img.u()).min(geom::dist(&fv, chord_img.v())) < 1e-10);
        assert!((geom::norm(&fu) - 1.0).abs() < 1e-10);
        assert!((geom::norm(&fv) - 1.0).abs() < 1e-10);
    }

    #[test]
    fn hyperbolic_midpoint_balances() {
        let x = pt(&[0.6, 0.0]);
        let y = pt(&[0.2, 0.3]);
        let w = hyperbolic_midpoint(&x, &y).unwrap();
        assert!((hyperbolic(&x, &w) - hyperbolic(&w, &y)).abs() < 1e-12);
    }

    fn in_ball() -> impl Strategy<Value = PointInBall> {
        (0.0..0.95f64, 0.0..std::f64::consts::TAU)
            .prop_map(|(r, th)| pt(&[r * th.cos(), r * th.sin()]))
    }

    proptest! {
        #[test]
        fn inversion_involutes_everywhere(z in in_ball(), cx in 1.2..3.0f64, cth in 0.0..std::f64::consts::TAU) {
            let inv = SphereInversion::new(vec![cx * cth.cos(), cx * cth.sin()]).unwrap();
            let twice = inv.apply(&inv.apply(z.coords()).unwrap()).unwrap();
            prop_assert!(geom::dist(&twice, z.coords()) <= 1e-10);
        }

        #[test]
        fn t_a_preserves_ball_and_rho(a in in_ball(), x in in_ball(), y in in_ball()) {
            prop_assume!(geom::dist(x.coords(), y.coords()) > 1e-6);
            let tx = t_a(&a, &x).unwrap();
            let ty = t_a(&a, &y).unwrap();
            prop_assert!(tx.norm() < 1.0);
            prop_assert!((hyperbolic(&tx, &ty) - hyperbolic(&x, &y)).abs() <= 1e-10);
            prop_assert!((rho_image(&a, &x, &y) - hyperbolic(&x, &y)).abs() <= 1e-10);
        }

        #[test]
        fn distortion_identity_two_paths(a in in_ball(), x in in_ball(), y in in_ball()) {
            prop_assume!(geom::dist(x.coords(), y.coords()) > 1e-6);
            let via_identity = distortion_identity(&a, &x, &y).unwrap();
            let direct = hilbert_image(&a, &x, &y);
            prop_assert!((via_identity - direct).abs() <= 1e-10);
        }

        #[test]
        fn symmetrization_preserves_h(x in in_ball(), y in in_ball()) {
            prop_assume!(geom::dist(x.coords(), y.coords()) > 1e-4);
            prop_assume!((x.norm() - y.norm()).abs() > 1e-4);
            prop_assume!(x.norm() > 1e-3 && y.norm() > 1e-3);
            let inv = symmetrizing_inversion(&x, &y).unwrap();
            let fx = inv.apply_point(&x).unwrap();
            let fy = inv.apply_point(&y).unwrap();
            prop_assert!((fx.norm() - fy.norm()).abs() <= 1e-10);
            prop_assert!((hilbert_oracle(&fx, &fy) - hilbert_oracle(&x, &y)).abs() <= 1e-10);
        }
    }
}
