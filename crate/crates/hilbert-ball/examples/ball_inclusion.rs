//! Inclusion radii between Hilbert balls and Euclidean / hyperbolic balls,
//! with a brute-force check that the radii are tight.
//!
//!     cargo run --example ball_inclusion

use hilbert_ball::balls::{
    euclidean_to_hilbert_radii, hilbert_to_euclidean_radii, hyperbolic_to_hilbert_radii,
};
use hilbert_ball::metrics::hilbert_dist;
use hilbert_ball::PointInBall;

fn main() -> hilbert_ball::Result<()> {
    let x = PointInBall::from_xy(0.5, 0.0)?;
    let r = 0.25;
    let (l0, l1) = euclidean_to_hilbert_radii(&x, r)?;
    println!("Euclidean ball B(x, {r}) at |x| = 0.5:");
    println!("  largest Hilbert ball inside:   l0 = {l0:.12}");
    println!("  smallest Hilbert ball around:  l1 = {l1:.12}");

    // Tightness: h over the circle S(x, r) really spans [l0, l1].
    let n = 100_000;
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for i in 0..n {
        let th = i as f64 * std::f64::consts::TAU / n as f64;
        let y = PointInBall::from_xy(0.5 + r * th.cos(), r * th.sin())?;
        let h = hilbert_dist(&x, &y);
        lo = lo.min(h);
        hi = hi.max(h);
    }
    println!("  sampled h range over S(x, r): [{lo:.12}, {hi:.12}]");

    let (r0, r1) = hilbert_to_euclidean_radii(&x, l0)?;
    println!("\ninverting l0 back: Hilbert ball B_h(x, {l0:.6})");
    println!("  inscribed Euclidean radius  r0 = {r0:.12}");
    println!("  enclosing Euclidean radius  r1 = {r1:.12}   (recovers r = {r})");

    let (l0, l1) = hyperbolic_to_hilbert_radii(&x, 1.0)?;
    println!("\nhyperbolic ball B_rho(x, 1):");
    println!("  Hilbert levels l0 = {l0:.12}, l1 = {l1:.12}");
    let origin = PointInBall::origin(2);
    let (l0, l1) = hyperbolic_to_hilbert_radii(&origin, 1.0)?;
    println!("  centered at 0 both collapse:   {l0} = {l1}");
    Ok(())
}
