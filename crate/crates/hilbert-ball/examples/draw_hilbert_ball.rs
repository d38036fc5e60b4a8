//! Draws a metric ball of the Hilbert distance in the disk (center 0.75,
//! level 1.5) as SVG and CSV, and prints the exact boundary parametrization
//! at a few angles.
//!
//!     cargo run --example draw_hilbert_ball

use hilbert_ball::balls::{boundary_scale, hilbert_ball_boundary};
use hilbert_ball::metrics::hilbert_oracle;
use hilbert_ball::render::{ball_csv, ball_svg};
use hilbert_ball::PointInBall;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let center = PointInBall::from_xy(0.75, 0.0)?;
    let level = 1.5;
    let boundary = hilbert_ball_boundary(&center, level, 512)?;

    std::fs::write("hilbert_ball.svg", ball_svg(&boundary))?;
    std::fs::write("hilbert_ball.csv", ball_csv(&boundary))?;
    println!("wrote hilbert_ball.svg and hilbert_ball.csv");

    println!("\nboundary scale k1(psi) and the oracle check h(x, y(psi)):");
    for &(psi, y) in boundary.samples().iter().step_by(64) {
        let yp = PointInBall::new(y.to_vec())?;
        println!(
            "  psi {psi:7.4}  k1 {:9.6}  y ({:+.6}, {:+.6})  h {:.12}",
            boundary_scale(&center, level, psi),
            y[0],
            y[1],
            hilbert_oracle(&center, &yp)
        );
    }
    Ok(())
}
