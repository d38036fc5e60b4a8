//! Writes the four illustrative figures as SVG files in the working
//! directory.
//!
//!     cargo run --example figures

use hilbert_ball::render::{figure_svg, Figure};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let figures = [
        (Figure::ChordConfiguration, "figure1_chord.svg"),
        (Figure::FarPointRotation, "figure2_far_point.svg"),
        (Figure::MidpointRotation, "figure3_midpoint.svg"),
        (Figure::HilbertBall, "figure4_ball.svg"),
    ];
    for (figure, path) in figures {
        std::fs::write(path, figure_svg(figure)?)?;
        println!("wrote {path}");
    }
    Ok(())
}
