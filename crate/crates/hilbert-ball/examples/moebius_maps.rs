//! Möbius automorphisms and sphere inversions: T_a, the inversion swapping
//! two points, and the symmetrizing inversion that equalizes norms while
//! preserving the Hilbert distance.
//!
//!     cargo run --example moebius_maps

use hilbert_ball::geom::chord_through;
use hilbert_ball::metrics::{hilbert_oracle, hyperbolic};
use hilbert_ball::moebius::{inversion_swapping, symmetrizing_inversion, t_a};
use hilbert_ball::PointInBall;

fn main() -> hilbert_ball::Result<()> {
    let a = PointInBall::from_xy(0.5, 0.0)?;
    let z = PointInBall::from_xy(0.0, 0.5)?;
    println!("T_a with a = (0.5, 0):");
    println!("  T_a(a) = {:?}", t_a(&a, &a)?.coords());
    println!("  T_a(0) = {:?}", t_a(&a, &PointInBall::origin(2))?.coords());
    println!("  T_a(0.5i) = {:?}", t_a(&a, &z)?.coords());

    // rho is invariant; h is not.
    let x = PointInBall::from_xy(0.3, -0.2)?;
    let y = PointInBall::from_xy(-0.1, 0.6)?;
    let (tx, ty) = (t_a(&a, &x)?, t_a(&a, &y)?);
    println!("\ninvariance under T_a:");
    println!("  rho before {:.15}", hyperbolic(&x, &y));
    println!("  rho after  {:.15}", hyperbolic(&tx, &ty));
    println!("  h   before {:.15}", hilbert_oracle(&x, &y));
    println!("  h   after  {:.15}   (h is not Möbius invariant)", hilbert_oracle(&tx, &ty));

    // The inversion with f(x) = y.
    let x = PointInBall::from_xy(0.5, 0.2)?;
    let y = PointInBall::from_xy(0.1, 0.6)?;
    let inv = inversion_swapping(&x, &y)?;
    println!("\nswapping inversion, center {:?}:", inv.center());
    println!("  f(x) = {:?}  (= y)", inv.apply(x.coords())?);
    println!("  f(f(x)) - x = {:?}", {
        let back = inv.apply(&inv.apply(x.coords())?)?;
        [back[0] - x.coords()[0], back[1] - x.coords()[1]]
    });

    // The symmetrizing inversion: equal norms, h preserved, chord reversed.
    let x = PointInBall::from_xy(0.6, 0.0)?;
    let y = PointInBall::from_xy(0.2, 0.3)?;
    let inv = symmetrizing_inversion(&x, &y)?;
    let fx = inv.apply_point(&x)?;
    let fy = inv.apply_point(&y)?;
    println!("\nsymmetrizing inversion for |x| != |y|:");
    println!("  |f(x)| = {:.15}", fx.norm());
    println!("  |f(y)| = {:.15}", fy.norm());
    println!("  h before {:.15}", hilbert_oracle(&x, &y));
    println!("  h after  {:.15}", hilbert_oracle(&fx, &fy));
    let chord = chord_through(&x, &y)?;
    let fu = inv.apply(chord.u())?;
    println!("  chord endpoint u maps onto the chord again: |f(u)| = {:.15}",
        fu.iter().map(|c| c * c).sum::<f64>().sqrt());
    Ok(())
}
