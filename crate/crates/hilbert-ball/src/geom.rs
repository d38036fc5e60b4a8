//! Euclidean primitives on the unit ball: points, chords, cross-ratios,
//! distance from the origin to a line, and the reduction of a point pair
//! to the 2-plane through the origin.
//!
//! All distances between two interior points depend only on how the points
//! sit in the plane spanned by them and the origin, so everything downstream
//! can be computed in two dimensions; [`reduce_to_plane`] provides the frame.

use num_complex::Complex64;

use crate::error::{HilbertError, Result};

/// Points closer to the boundary than this are rejected at construction.
/// The metrics diverge on the boundary itself.
pub const BOUNDARY_EPS: f64 = 1e-12;

/// Two points closer than this are treated as coincident.
pub const COINCIDENT_EPS: f64 = 1e-14;

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(p, q)| p * q).sum()
}

pub(crate) fn norm_sq(a: &[f64]) -> f64 {
    dot(a, a)
}

pub(crate) fn norm(a: &[f64]) -> f64 {
    norm_sq(a).sqrt()
}

pub(crate) fn dist_sq(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(p, q)| (p - q) * (p - q)).sum()
}

pub(crate) fn dist(a: &[f64], b: &[f64]) -> f64 {
    dist_sq(a, b).sqrt()
}

pub(crate) fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(p, q)| p - q).collect()
}

pub(crate) fn scale(a: &[f64], s: f64) -> Vec<f64> {
    a.iter().map(|p| p * s).collect()
}

/// `a + s * d`
pub(crate) fn axpy(a: &[f64], s: f64, d: &[f64]) -> Vec<f64> {
    a.iter().zip(d).map(|(p, q)| p + s * q).collect()
}

const SPLIT: f64 = 134_217_729.0; // 2^27 + 1, Dekker splitting constant

/// 1 - |z|^2, the squared-norm gap to the boundary, with the squares taken
/// exactly (Dekker splitting) and accumulated with compensation. A plain
/// `1.0 - norm_sq(z)` only knows the gap to the absolute rounding of |z|^2,
/// which costs ~1e-16/gap in relative terms near the sphere; several
/// acceptance tolerances need the gap at full relative accuracy there.
pub(crate) fn gap(z: &[f64]) -> f64 {
    let mut sum = 1.0f64;
    let mut comp = 0.0f64;
    for &c in z {
        let p = c * c;
        let t = SPLIT * c;
        let hi = t - (t - c);
        let lo = c - hi;
        let tail = ((hi * hi - p) + 2.0 * hi * lo) + lo * lo; // c*c = p + tail, exactly
        let term = -p;
        let next = sum + term;
        comp += if sum.abs() >= p {
            (sum - next) + term
        } else {
            (term - next) + sum
        };
        comp -= tail;
        sum = next;
    }
    sum + comp
}

/// 1 - x . y through the polarization identity
/// 2 (1 - x . y) = (1 - |x|^2) + (1 - |y|^2) + |x - y|^2,
/// which keeps relative accuracy when both points crowd the same boundary
/// region and the direct subtraction cancels.
pub(crate) fn one_minus_dot(x: &[f64], y: &[f64]) -> f64 {
    0.5 * (gap(x) + gap(y) + dist_sq(x, y))
}

/// |x|^2 |y|^2 - (x . y)^2 evaluated as the Lagrange sum
/// sum_{i<j} (x_i y_j - x_j y_i)^2, which is a sum of squares and therefore
/// exact at zero for collinear pairs instead of cancellation noise.
pub(crate) fn cross_norm_sq(x: &[f64], y: &[f64]) -> f64 {
    let mut acc = 0.0;
    for i in 0..x.len() {
        for j in (i + 1)..x.len() {
            let det = x[i] * y[j] - x[j] * y[i];
            acc += det * det;
        }
    }
    acc
}

pub(crate) fn as_complex(z: &[f64]) -> Complex64 {
    debug_assert_eq!(z.len(), 2);
    Complex64::new(z[0], z[1])
}

pub(crate) fn from_complex(z: Complex64) -> Vec<f64> {
    vec![z.re, z.im]
}

pub(crate) fn check_same_dim(a: &[f64], b: &[f64]) -> Result<()> {
    if a.len() != b.len() {
        return Err(HilbertError::DimensionMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(())
}

/// A point strictly inside the unit ball, the universal input type.
///
/// Construction enforces dimension >= 2, finite coordinates, and
/// `|x| < 1 - BOUNDARY_EPS`.
#[derive(Debug, Clone, PartialEq)]
pub struct PointInBall {
    coords: Vec<f64>,
}

impl PointInBall {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(HilbertError::DimensionTooSmall { dim: coords.len() });
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(HilbertError::NonFiniteCoordinates);
        }
        let norm = norm(&coords);
        if norm >= 1.0 - BOUNDARY_EPS {
            return Err(HilbertError::PointOutsideBall { norm });
        }
        Ok(Self { coords })
    }

    pub fn from_xy(x: f64, y: f64) -> Result<Self> {
        Self::new(vec![x, y])
    }

    pub fn origin(dim: usize) -> Self {
        Self {
            coords: vec![0.0; dim],
        }
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn norm(&self) -> f64 {
        norm(&self.coords)
    }

    /// 1 - |x|^2
    pub(crate) fn gap(&self) -> f64 {
        gap(&self.coords)
    }
}

/// Cross-ratio |u,x,y,v| = |u-y||x-v| / (|u-x||y-v|) of four points.
///
/// The four points are not required to be collinear here; the metric code
/// always calls this with the chord endpoints of the line through `x, y`.
pub fn cross_ratio(u: &[f64], x: &[f64], y: &[f64], v: &[f64]) -> Result<f64> {
    let ux = dist(u, x);
    let yv = dist(y, v);
    if ux < 1e-15 || yv < 1e-15 {
        return Err(HilbertError::DegenerateConfiguration(
            "cross-ratio denominator vanishes",
        ));
    }
    Ok(dist(u, y) * dist(x, v) / (ux * yv))
}

/// The chord of the unit ball cut by the line through a pair of interior
/// points, with endpoints ordered so that `|u - x| < |u - y|`.
#[derive(Debug, Clone)]
pub struct Chord {
    u: Vec<f64>,
    v: Vec<f64>,
    x: PointInBall,
    y: PointInBall,
    // Endpoint parameters measured from x (u at t_u, v at t_v in
    // x + t (y - x)) and from y (u at s_u, v at s_v in y + s (y - x)).
    // Each endpoint's small parameter comes from the quadratic anchored at
    // the nearer interior point, where it is a well-conditioned root.
    t_u: f64,
    t_v: f64,
    s_u: f64,
    s_v: f64,
}

impl Chord {
    /// Boundary endpoint on the `x` side.
    pub fn u(&self) -> &[f64] {
        &self.u
    }

    /// Boundary endpoint on the `y` side.
    pub fn v(&self) -> &[f64] {
        &self.v
    }

    pub fn x(&self) -> &PointInBall {
        &self.x
    }

    pub fn y(&self) -> &PointInBall {
        &self.y
    }

    /// Line parameters of u and v in `x + t (y - x)` (so x is at 0, y at 1).
    pub fn endpoint_params(&self) -> (f64, f64) {
        (self.t_u, self.t_v)
    }

    /// Cross-ratio |u, x, y, v| evaluated in the chord's own line parameter:
    /// the four points are collinear by construction, every distance is a
    /// parameter difference times |y - x|, and those factors cancel. The
    /// x-anchored parameters supply |u-x|, |x-v| and the y-anchored ones
    /// |u-y|, |y-v|, so every distance keeps full relative accuracy near the
    /// sphere, where re-subtracting coordinates would round it at the
    /// absolute 1e-16 level.
    pub fn cross_ratio(&self) -> f64 {
        (self.s_u.abs() * self.t_v.abs()) / (self.t_u.abs() * self.s_v.abs())
    }

    /// Chord midpoint (u + v) / 2, the point of the line closest to the origin.
    pub fn midpoint(&self) -> Vec<f64> {
        self.u
            .iter()
            .zip(&self.v)
            .map(|(a, b)| 0.5 * (a + b))
            .collect()
    }
}

/// Intersects the line through `x, y` with the unit sphere by solving
/// `|x + t(y - x)|^2 = 1`.
///
/// The quadratic is solved in the cancellation-free form
/// `q = -(b + sign(b) sqrt(disc)) / 2`, roots `q/a` and `c/q`, which stays
/// accurate when the line is nearly tangent to the sphere.
pub fn chord_through(x: &PointInBall, y: &PointInBall) -> Result<Chord> {
    check_same_dim(x.coords(), y.coords())?;
    let d = sub(y.coords(), x.coords());
    if norm(&d) <= COINCIDENT_EPS {
        return Err(HilbertError::CoincidentPoints);
    }
    // Roots of |p + t d|^2 = 1 for an interior anchor p: c < 0 forces one
    // root of each sign; the numerically stable q-form avoids cancellation
    // when the line is nearly tangent.
    let solve = |p: &[f64]| -> (f64, f64) {
        let a = norm_sq(&d);
        let b = 2.0 * dot(p, &d);
        let c = -gap(p); // |p|^2 - 1
        let disc = b * b - 4.0 * a * c;
        let sign_b = if b >= 0.0 { 1.0 } else { -1.0 };
        let q = -0.5 * (b + sign_b * disc.sqrt());
        let (t1, t2) = (q / a, c / q);
        if t1 < t2 {
            (t1, t2)
        } else {
            (t2, t1)
        }
    };
    let (t_u, t_v) = solve(x.coords());
    let (s_u, s_v) = solve(y.coords());
    Ok(Chord {
        u: axpy(x.coords(), t_u, &d),
        v: axpy(x.coords(), t_v, &d),
        x: x.clone(),
        y: y.clone(),
        t_u,
        t_v,
        s_u,
        s_v,
    })
}

/// Euclidean distance from the origin to the line through `x, y`:
///
/// ```text
/// m1 = sqrt(|x|^2 |y|^2 - (x . y)^2) / |x - y|
/// ```
///
/// Returns 0 whenever the line passes through the origin (in particular when
/// either point is the origin).
pub fn dist_origin_to_line(x: &PointInBall, y: &PointInBall) -> Result<f64> {
    check_same_dim(x.coords(), y.coords())?;
    let d = dist(x.coords(), y.coords());
    if d <= COINCIDENT_EPS {
        return Err(HilbertError::CoincidentPoints);
    }
    Ok(cross_norm_sq(x.coords(), y.coords()).sqrt() / d)
}

/// 1 - m1^2 for the line through `x, y`, with the near-tangent case computed
/// through the identity d^2 (1 - m1^2) = (1 - x.y)^2 - (1-|x|^2)(1-|y|^2),
/// which keeps the complement accurate when m1 is close to 1.
pub(crate) fn one_minus_line_dist_sq(x: &[f64], y: &[f64]) -> f64 {
    let d2 = dist_sq(x, y);
    let m1_sq = (cross_norm_sq(x, y) / d2).min(1.0);
    if m1_sq < 0.5 {
        1.0 - m1_sq
    } else {
        let n = one_minus_dot(x, y);
        ((n * n - gap(x) * gap(y)) / d2).clamp(0.0, 1.0)
    }
}

/// An origin-anchored orthonormal basis of the 2-plane spanned by a point
/// pair (together with the origin). Projecting into the frame and embedding
/// back is the identity on that plane.
#[derive(Debug, Clone)]
pub struct PlaneFrame {
    e1: Vec<f64>,
    e2: Vec<f64>,
}

impl PlaneFrame {
    pub fn e1(&self) -> &[f64] {
        &self.e1
    }

    pub fn e2(&self) -> &[f64] {
        &self.e2
    }

    /// Planar coordinates (p . e1, p . e2).
    pub fn project(&self, p: &[f64]) -> [f64; 2] {
        [dot(p, &self.e1), dot(p, &self.e2)]
    }

    /// Embeds planar coordinates back into the ambient space.
    pub fn embed(&self, q: [f64; 2]) -> Vec<f64> {
        self.e1
            .iter()
            .zip(&self.e2)
            .map(|(a, b)| q[0] * a + q[1] * b)
            .collect()
    }
}

/// Builds an orthonormal frame for the plane containing `x`, `y`, and the
/// origin.
///
/// When the pair is collinear with the origin the plane is not unique; the
/// second basis vector is then taken deterministically from the coordinate
/// axis least aligned with the first (smallest index on ties).
pub fn reduce_to_plane(x: &PointInBall, y: &PointInBall) -> Result<PlaneFrame> {
    check_same_dim(x.coords(), y.coords())?;
    if dist(x.coords(), y.coords()) <= COINCIDENT_EPS {
        return Err(HilbertError::CoincidentPoints);
    }
    let (base, other) = if x.norm() > 1e-13 {
        (x.coords(), y.coords())
    } else {
        (y.coords(), x.coords())
    };
    let e1 = scale(base, 1.0 / norm(base));
    let residual = axpy(other, -dot(other, &e1), &e1);
    let r = norm(&residual);
    let e2 = if r > 1e-15 {
        scale(&residual, 1.0 / r)
    } else {
        // Collinear with the origin: project out the least-aligned axis.
        let k = (0..e1.len())
            .min_by(|&i, &j| e1[i].abs().partial_cmp(&e1[j].abs()).unwrap())
            .unwrap();
        let mut axis = vec![0.0; e1.len()];
        axis[k] = 1.0;
        let res = axpy(&axis, -e1[k], &e1);
        scale(&res, 1.0 / norm(&res))
    };
    Ok(PlaneFrame { e1, e2 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pt(coords: &[f64]) -> PointInBall {
        PointInBall::new(coords.to_vec()).unwrap()
    }

    #[test]
    fn point_construction_limits() {
        assert!(PointInBall::new(vec![0.3]).is_err());
        assert!(PointInBall::new(vec![0.3, f64::NAN]).is_err());
        assert!(PointInBall::new(vec![1.0, 0.0]).is_err());
        assert!(PointInBall::new(vec![1.0 - 1e-13, 0.0]).is_err());
        assert!(PointInBall::new(vec![1.0 - 1e-9, 0.0]).is_ok());
    }

    #[test]
    fn cross_ratio_examples() {
        let cr = cross_ratio(&[-1.0, 0.0], &[0.0, 0.0], &[0.5, 0.0], &[1.0, 0.0]).unwrap();
        assert!((cr - 3.0).abs() < 1e-15);

        // x = y gives exactly 1 whatever the endpoints.
        let cr = cross_ratio(&[-1.0, 0.0], &[0.2, 0.1], &[0.2, 0.1], &[1.0, 0.0]).unwrap();
        assert!((cr - 1.0).abs() < 1e-15);

        let cr = cross_ratio(&[-1.0, 0.0], &[-0.5, 0.0], &[0.5, 0.0], &[1.0, 0.0]).unwrap();
        assert!((cr - 9.0).abs() < 1e-14);

        assert!(matches!(
            cross_ratio(&[0.5, 0.0], &[0.5, 0.0], &[0.7, 0.0], &[1.0, 0.0]),
            Err(HilbertError::DegenerateConfiguration(_))
        ));
    }

    #[test]
    fn chord_through_diameter() {
        let chord = chord_through(&pt(&[0.0, 0.0]), &pt(&[0.5, 0.0])).unwrap();
        assert!(dist(chord.u(), &[-1.0, 0.0]) < 1e-14);
        assert!(dist(chord.v(), &[1.0, 0.0]) < 1e-14);
    }

    #[test]
    fn chord_through_oblique() {
        // Line x1 + x2 = 1/2 against the unit circle.
        let chord = chord_through(&pt(&[0.5, 0.0]), &pt(&[0.0, 0.5])).unwrap();
        let s7 = 7f64.sqrt();
        let expected_u = [(1.0 + s7) / 4.0, (1.0 - s7) / 4.0];
        let expected_v = [(1.0 - s7) / 4.0, (1.0 + s7) / 4.0];
        assert!(dist(chord.u(), &expected_u) < 1e-14);
        assert!(dist(chord.v(), &expected_v) < 1e-14);
        assert!((norm(chord.u()) - 1.0).abs() < 1e-14);
    }

    #[test]
    fn chord_ordering_puts_u_on_x_side() {
        let chord = chord_through(&pt(&[0.75, 0.0]), &pt(&[0.25, 0.0])).unwrap();
        assert!(dist(chord.u(), &[1.0, 0.0]) < 1e-14);
        assert!(dist(chord.v(), &[-1.0, 0.0]) < 1e-14);
    }

    #[test]
    fn chord_coincident_points_rejected() {
        let p = pt(&[0.1, 0.2]);
        assert!(matches!(
            chord_through(&p, &p),
            Err(HilbertError::CoincidentPoints)
        ));
    }

    #[test]
    fn dist_origin_examples() {
        let m1 = dist_origin_to_line(&pt(&[0.5, 0.0]), &pt(&[0.0, 0.5])).unwrap();
        assert!((m1 - 0.5 / 2f64.sqrt()).abs() < 1e-15);

        let m1 = dist_origin_to_line(&pt(&[0.3, 0.0]), &pt(&[0.8, 0.0])).unwrap();
        assert!(m1.abs() < 1e-15);

        let m1 = dist_origin_to_line(&pt(&[0.0, 0.0]), &pt(&[0.4, 0.2])).unwrap();
        assert!(m1.abs() < 1e-15);
    }

    #[test]
    fn dist_origin_matches_complex_form_in_2d() {
        let cases = [
            ([0.5f64, 0.2], [0.1f64, 0.6]),
            ([0.3, -0.4], [-0.2, 0.55]),
            ([0.65, 0.1], [0.6, -0.35]),
        ];
        for (a, b) in cases {
            let x = as_complex(&a);
            let y = as_complex(&b);
            let complex_form = (x.conj() * y - x * y.conj()).norm() / (2.0 * (x - y).norm());
            let m1 = dist_origin_to_line(&pt(&a), &pt(&b)).unwrap();
            assert!(
                (m1 - complex_form).abs() < 1e-14,
                "m1 {m1} vs complex {complex_form}"
            );
        }
    }

    #[test]
    fn plane_frame_keeps_planar_points() {
        let x = pt(&[0.5, 0.0, 0.0]);
        let y = pt(&[0.0, 0.5, 0.0]);
        let frame = reduce_to_plane(&x, &y).unwrap();
        let px = frame.project(x.coords());
        let py = frame.project(y.coords());
        let d = ((px[0] - py[0]).powi(2) + (px[1] - py[1]).powi(2)).sqrt();
        assert!((d - dist(x.coords(), y.coords())).abs() < 1e-14);
        assert!(dist(&frame.embed(px), x.coords()) < 1e-14);
        assert!(dist(&frame.embed(py), y.coords()) < 1e-14);
    }

    #[test]
    fn plane_frame_collinear_with_origin() {
        let x = pt(&[0.2, 0.2, 0.2]);
        let y = pt(&[0.4, 0.4, 0.4]);
        let frame = reduce_to_plane(&x, &y).unwrap();
        assert!((norm(frame.e1()) - 1.0).abs() < 1e-14);
        assert!((norm(frame.e2()) - 1.0).abs() < 1e-14);
        assert!(dot(frame.e1(), frame.e2()).abs() < 1e-14);
        assert!(dist(&frame.embed(frame.project(x.coords())), x.coords()) < 1e-14);
        assert!(dist(&frame.embed(frame.project(y.coords())), y.coords()) < 1e-14);
    }

    #[test]
    fn plane_frame_generic_3d() {
        let x = pt(&[0.1, 0.2, 0.3]);
        let y = pt(&[0.3, 0.1, 0.2]);
        let frame = reduce_to_plane(&x, &y).unwrap();
        let px = PointInBall::new(frame.project(x.coords()).to_vec()).unwrap();
        let py = PointInBall::new(frame.project(y.coords()).to_vec()).unwrap();
        let direct = dist_origin_to_line(&x, &y).unwrap();
        let planar = dist_origin_to_line(&px, &py).unwrap();
        assert!((direct - planar).abs() < 1e-13);
    }

    fn in_ball() -> impl Strategy<Value = PointInBall> {
        (0.0..0.95f64, 0.0..std::f64::consts::TAU)
            .prop_map(|(r, th)| pt(&[r * th.cos(), r * th.sin()]))
    }

    proptest! {
        #[test]
        fn chord_endpoints_on_sphere_and_line(x in in_ball(), y in in_ball()) {
            prop_assume!(dist(x.coords(), y.coords()) > 1e-6);
            let chord = chord_through(&x, &y).unwrap();
            prop_assert!((norm(chord.u()) - 1.0).abs() <= 1e-12);
            prop_assert!((norm(chord.v()) - 1.0).abs() <= 1e-12);
            // Both endpoints lie on the line through x, y.
            let d = sub(y.coords(), x.coords());
            for p in [chord.u(), chord.v()] {
                let r = sub(p, x.coords());
                let cross = (r[0] * d[1] - r[1] * d[0]).abs() / norm(&d);
                prop_assert!(cross <= 1e-10);
            }
            // Ordering convention.
            prop_assert!(dist(chord.u(), x.coords()) < dist(chord.u(), y.coords()));
        }

        #[test]
        fn cross_ratio_reversal_symmetry(x in in_ball(), y in in_ball()) {
            prop_assume!(dist(x.coords(), y.coords()) > 1e-6);
            let chord = chord_through(&x, &y).unwrap();
            let a = cross_ratio(chord.u(), x.coords(), y.coords(), chord.v()).unwrap();
            let b = cross_ratio(chord.v(), y.coords(), x.coords(), chord.u()).unwrap();
            prop_assert!((a - b).abs() <= 1e-12 * a.max(1.0));
            // The parameter form is the same number as the point form.
            prop_assert!((chord.cross_ratio() - a).abs() <= 1e-10 * a.max(1.0));
        }

        #[test]
        fn line_dist_rotation_invariant(x in in_ball(), y in in_ball(), th in 0.0..std::f64::consts::TAU) {
            prop_assume!(dist(x.coords(), y.coords()) > 1e-6);
            let rot = |p: &PointInBall| {
                let c = p.coords();
                pt(&[c[0] * th.cos() - c[1] * th.sin(), c[0] * th.sin() + c[1] * th.cos()])
            };
            let before = dist_origin_to_line(&x, &y).unwrap();
            let after = dist_origin_to_line(&rot(&x), &rot(&y)).unwrap();
            prop_assert!((before - after).abs() <= 1e-12);
        }
    }
}
