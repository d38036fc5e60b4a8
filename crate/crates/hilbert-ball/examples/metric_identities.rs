//! The identities and inequalities tying the three metrics together,
//! measured over random samples:
//!
//! - sh(h/2) = sqrt(1 - m1^2) sh(rho/2)
//! - ch(h/2) = (1 - x.y) / sqrt((1-|x|^2)(1-|y|^2))
//! - h <= rho (equality iff the pair is collinear with the origin)
//! - j <= rho <= 2j and h <= 2j (equality at x = -y)
//! - the two-sided rotation bounds bracket h
//!
//!     cargo run --example metric_identities

use hilbert_ball::metrics::{
    distance_ratio, hilbert_dist, hilbert_oracle, hilbert_sh_identity, hyperbolic,
    midpoint_rotation_bounds, rotation_bounds_far_point,
};
use hilbert_ball::sweep::sample::{stream_rng, uniform_in_ball};
use hilbert_ball::PointInBall;

fn main() -> hilbert_ball::Result<()> {
    let mut rng = stream_rng(2024, 0);
    let n = 50_000;
    let mut max_identity_dev: f64 = 0.0;
    let mut max_h_over_rho: f64 = 0.0;
    let mut max_h_over_2j: f64 = 0.0;
    let mut bracket_failures = 0u32;
    for _ in 0..n {
        let x = uniform_in_ball(&mut rng, 2);
        let y = uniform_in_ball(&mut rng, 2);
        let h = hilbert_oracle(&x, &y);
        if h < 1e-9 {
            continue;
        }
        max_identity_dev = max_identity_dev.max((hilbert_sh_identity(&x, &y) - h).abs());
        max_h_over_rho = max_h_over_rho.max(h / hyperbolic(&x, &y));
        max_h_over_2j = max_h_over_2j.max(h / (2.0 * distance_ratio(&x, &y)));
        let far = rotation_bounds_far_point(&x, &y)?;
        let mid = midpoint_rotation_bounds(&x, &y)?;
        if !far.brackets(h, 1e-11) || !mid.brackets(h, 1e-11) {
            bracket_failures += 1;
        }
    }
    println!("over {n} random pairs:");
    println!("  max |sh-identity - oracle|   {max_identity_dev:.3e}");
    println!("  max h / rho                  {max_h_over_rho:.12}   (never above 1)");
    println!("  max h / 2j                   {max_h_over_2j:.12}   (never above 1)");
    println!("  rotation-bound bracket fails {bracket_failures}");

    // Both equality cases, constructed exactly.
    let x = PointInBall::from_xy(0.2, 0.0)?;
    let y = PointInBall::from_xy(0.7, 0.0)?;
    println!("\ncollinear with the origin: h - rho = {:+.3e}",
        hilbert_dist(&x, &y) - hyperbolic(&x, &y));
    let x = PointInBall::from_xy(0.4, 0.3)?;
    let y = PointInBall::from_xy(-0.4, -0.3)?;
    println!("antipodal pair:            h - 2j  = {:+.3e}",
        hilbert_dist(&x, &y) - 2.0 * distance_ratio(&x, &y));
    Ok(())
}
