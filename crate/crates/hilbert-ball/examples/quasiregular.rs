//! The Schwarz-type bound for K-quasiregular self-maps of the disk,
//! instantiated at K = 1: Möbius maps attain it with equality and the
//! analytic squaring map stays below it.
//!
//!     cargo run --example quasiregular

use hilbert_ball::geom::dist_origin_to_line;
use hilbert_ball::metrics::{hilbert_dist, hyperbolic};
use hilbert_ball::moebius::rho_image;
use hilbert_ball::special::{hilbert_qr_bound, qr_sh_bound};
use hilbert_ball::sweep::sample::{stream_rng, uniform_in_ball};
use hilbert_ball::PointInBall;

fn main() -> hilbert_ball::Result<()> {
    let mut rng = stream_rng(7, 0);
    let n = 20_000;
    let mut max_moebius_dev: f64 = 0.0;
    let mut max_square_usage: f64 = 0.0;
    for _ in 0..n {
        let a = uniform_in_ball(&mut rng, 2);
        let x = uniform_in_ball(&mut rng, 2);
        let y = uniform_in_ball(&mut rng, 2);
        let rho = hyperbolic(&x, &y);
        if rho < 1e-9 {
            continue;
        }
        let bound = qr_sh_bound(1.0, rho)?;
        // Möbius: equality.
        let s = (rho_image(&a, &x, &y) / 2.0).sinh();
        max_moebius_dev = max_moebius_dev.max((s - bound).abs() / bound.max(1.0));
        // Squaring map: strictly below.
        let sq = |p: &PointInBall| {
            let c = p.coords();
            PointInBall::from_xy(c[0] * c[0] - c[1] * c[1], 2.0 * c[0] * c[1]).unwrap()
        };
        let s = (hyperbolic(&sq(&x), &sq(&y)) / 2.0).sinh();
        max_square_usage = max_square_usage.max(s / bound);
    }
    println!("K = 1 instances over {n} samples:");
    println!("  Möbius equality deviation (scaled): {max_moebius_dev:.3e}");
    println!("  squaring-map bound usage maximum:   {max_square_usage:.6}  (stays below 1)");

    // The Hilbert-metric version of the bound along a Möbius map, where the
    // image line distance plays the role of m3.
    let a = PointInBall::from_xy(0.3, 0.2)?;
    let x = PointInBall::from_xy(0.5, 0.0)?;
    let y = PointInBall::from_xy(0.0, 0.5)?;
    let m1 = dist_origin_to_line(&x, &y)?;
    let tx = hilbert_ball::moebius::t_a(&a, &x)?;
    let ty = hilbert_ball::moebius::t_a(&a, &y)?;
    let m3 = dist_origin_to_line(&tx, &ty)?;
    let lhs = (hilbert_dist(&tx, &ty) / 2.0).sinh();
    println!("\nHilbert form at K = 1:");
    println!("  sh(h(f x, f y)/2) = {lhs:.12}");
    println!("  bound             = {:.12}", hilbert_qr_bound(1.0, &x, &y, m1, m3)?);
    Ok(())
}
