//! Distortion of the Hilbert metric under T_a: the exact identity, the
//! closed-form m2, the upper bounds, and the configurations where the
//! distortion ratio h(T_a x, T_a y) / h(x, y) exceeds 1 + |a|.
//!
//!     cargo run --example distortion_bounds

use hilbert_ball::geom::dist_origin_to_line;
use hilbert_ball::metrics::hilbert_dist;
use hilbert_ball::moebius::{
    distortion_identity, distortion_upper_bounds, hilbert_image, m2_complex_form, t_a,
};
use hilbert_ball::PointInBall;

fn main() -> hilbert_ball::Result<()> {
    let a = PointInBall::from_xy(0.6, 0.2)?;
    let x = PointInBall::from_xy(0.1, -0.15)?;
    let y = PointInBall::from_xy(-0.2, 0.05)?;

    let h = hilbert_dist(&x, &y);
    let h_img = hilbert_image(&a, &x, &y);
    println!("h(x, y)           = {h:.15}");
    println!("h(T_a x, T_a y)   = {h_img:.15}");
    println!("identity form     = {:.15}", distortion_identity(&a, &x, &y)?);

    let (tx, ty) = (t_a(&a, &x)?, t_a(&a, &y)?);
    println!("\nm2 (closed form)  = {:.15}", m2_complex_form(&a, &x, &y)?);
    println!("m2 (geometric)    = {:.15}", dist_origin_to_line(&tx, &ty)?);

    let bounds = distortion_upper_bounds(&a, &x, &y)?;
    println!("\nupper bounds on h(T_a x, T_a y):");
    println!("  min-norm bound        {:.15}", bounds.minxy_bound);
    if let Some(half) = bounds.half_a_bound {
        println!("  |a|/2 bound           {half:.15}   (both points in B(0, |a|/2))");
    }
    println!(
        "  linear bound          {:.15}   (valid: {})",
        bounds.linear_bound, bounds.linear_bound_valid
    );

    // The ratio h_img / h is NOT bounded by 1 + |a|: with a = x the images
    // are {0, T_x(y)}, where the Hilbert and hyperbolic distances agree, so
    // the ratio becomes rho/h -- and that grows without bound on chords that
    // pass close to the unit circle.
    println!("\ndistortion ratio vs 1 + |a| with a = x on near-tangent chords:");
    for exp in [2, 4, 6] {
        let m1 = 1.0 - 10f64.powi(-exp);
        let half = ((1.0 - m1) * (1.0 + m1)).sqrt();
        let x = PointInBall::from_xy(m1, 0.4 * half)?;
        let y = PointInBall::from_xy(m1, -0.4 * half)?;
        let ratio = hilbert_image(&x, &x, &y) / hilbert_dist(&x, &y);
        println!(
            "  1 - m1 = 1e-{exp}: ratio = {ratio:7.3}   1 + |a| = {:.6}",
            1.0 + x.norm()
        );
    }
    Ok(())
}
