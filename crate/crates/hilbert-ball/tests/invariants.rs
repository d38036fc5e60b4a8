//! Cross-module property tests: the structural facts that tie the modules
//! together, sampled by proptest.

use proptest::prelude::*;

use hilbert_ball::geom::{dist_origin_to_line, reduce_to_plane, PointInBall};
use hilbert_ball::metrics::{
    distance_ratio, hilbert_dist, hilbert_oracle, hilbert_sh_identity, hyperbolic,
    midpoint_rotation_bounds, rotation_bounds_far_point,
};
use hilbert_ball::moebius::{distortion_identity, hilbert_image, rho_image, t_a};
use hilbert_ball::special::qr_sh_bound;

fn euclid(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(p, q)| (p - q) * (p - q)).sum::<f64>().sqrt()
}

fn ball_point(dim: usize) -> impl Strategy<Value = PointInBall> {
    prop::collection::vec(-1.0f64..1.0, dim)
        .prop_filter_map("inside the ball", |coords| {
            let norm_sq: f64 = coords.iter().map(|c| c * c).sum();
            (norm_sq < 0.95 * 0.95).then(|| PointInBall::new(coords).unwrap())
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn plane_reduction_preserves_all_metrics(x in ball_point(3), y in ball_point(3)) {
        prop_assume!(euclid(x.coords(), y.coords()) > 1e-4);
        let frame = reduce_to_plane(&x, &y).unwrap();
        let px = PointInBall::new(frame.project(x.coords()).to_vec()).unwrap();
        let py = PointInBall::new(frame.project(y.coords()).to_vec()).unwrap();
        prop_assert!((hilbert_dist(&px, &py) - hilbert_dist(&x, &y)).abs() <= 1e-12);
        prop_assert!((hyperbolic(&px, &py) - hyperbolic(&x, &y)).abs() <= 1e-12);
        prop_assert!((distance_ratio(&px, &py) - distance_ratio(&x, &y)).abs() <= 1e-12);
        let m_direct = dist_origin_to_line(&x, &y).unwrap();
        let m_plane = dist_origin_to_line(&px, &py).unwrap();
        prop_assert!((m_direct - m_plane).abs() <= 1e-12);
    }

    #[test]
    fn identity_and_inequalities_in_3d(x in ball_point(3), y in ball_point(3)) {
        prop_assume!(euclid(x.coords(), y.coords()) > 1e-4);
        let h = hilbert_oracle(&x, &y);
        prop_assert!((hilbert_sh_identity(&x, &y) - h).abs() <= 1e-11);
        let rho = hyperbolic(&x, &y);
        let j = distance_ratio(&x, &y);
        prop_assert!(h <= rho + 1e-11);
        prop_assert!(h <= 2.0 * j + 1e-11);
        prop_assert!(j <= rho + 1e-11 && rho <= 2.0 * j + 1e-11);
        prop_assert!(rotation_bounds_far_point(&x, &y).unwrap().brackets(h, 1e-11));
        prop_assert!(midpoint_rotation_bounds(&x, &y).unwrap().brackets(h, 1e-11));
    }

    #[test]
    fn moebius_identities_in_3d(a in ball_point(3), x in ball_point(3), y in ball_point(3)) {
        prop_assume!(euclid(x.coords(), y.coords()) > 1e-4);
        // rho is invariant and h transforms by the distortion identity,
        // in any dimension.
        prop_assert!((rho_image(&a, &x, &y) - hyperbolic(&x, &y)).abs() <= 1e-11);
        let identity = distortion_identity(&a, &x, &y).unwrap();
        prop_assert!((identity - hilbert_image(&a, &x, &y)).abs() <= 1e-11);
        // And the stable image evaluation matches the actual mapped points.
        let tx = t_a(&a, &x).unwrap();
        let ty = t_a(&a, &y).unwrap();
        prop_assert!((hilbert_image(&a, &x, &y) - hilbert_oracle(&tx, &ty)).abs() <= 1e-10);
    }

    #[test]
    fn schwarz_pick_for_the_squaring_map(x in ball_point(2), y in ball_point(2)) {
        prop_assume!(euclid(x.coords(), y.coords()) > 1e-4);
        // z -> z^2 is analytic, so the K = 1 bound applies.
        let sq = |p: &PointInBall| {
            let c = p.coords();
            PointInBall::from_xy(c[0] * c[0] - c[1] * c[1], 2.0 * c[0] * c[1]).unwrap()
        };
        let rho_img = hyperbolic(&sq(&x), &sq(&y));
        let bound = qr_sh_bound(1.0, hyperbolic(&x, &y)).unwrap();
        prop_assert!((rho_img / 2.0).sinh() <= bound * (1.0 + 1e-12) + 1e-12);
    }
}
