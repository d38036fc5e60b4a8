//! The three distances on the unit ball, and the four evaluation paths of
//! the Hilbert metric.
//!
//!     cargo run --example distances

use hilbert_ball::metrics::{
    distance_ratio, hilbert_ch_form, hilbert_equal_norm, hilbert_oracle, hilbert_sh_identity,
    hyperbolic,
};
use hilbert_ball::PointInBall;

fn main() -> hilbert_ball::Result<()> {
    let pairs = [
        ([0.0, 0.0], [0.5, 0.0]),
        ([0.5, 0.0], [0.0, 0.5]),
        ([0.5, 0.0], [-0.5, 0.0]),
        ([0.2, 0.1], [0.85, -0.3]),
    ];
    for (px, py) in pairs {
        let x = PointInBall::new(px.to_vec())?;
        let y = PointInBall::new(py.to_vec())?;
        println!("x = {px:?}, y = {py:?}");
        println!("  hilbert (oracle)      {:.15}", hilbert_oracle(&x, &y));
        println!("  hilbert (ch form)     {:.15}", hilbert_ch_form(&x, &y));
        println!("  hilbert (sh identity) {:.15}", hilbert_sh_identity(&x, &y));
        if let Ok(h) = hilbert_equal_norm(&x, &y) {
            println!("  hilbert (equal norm)  {h:.15}");
        }
        println!("  hyperbolic            {:.15}", hyperbolic(&x, &y));
        println!("  distance ratio        {:.15}", distance_ratio(&x, &y));
        println!();
    }
    Ok(())
}
