//! Deterministic samplers for the sweep harness.
//!
//! Every chunk of a sweep derives its own ChaCha stream from
//! (seed, chunk index), so parallel and serial runs see identical draws.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::geom::PointInBall;

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Independent RNG stream for one (seed, chunk) pair.
pub fn stream_rng(seed: u64, chunk: u64) -> ChaCha12Rng {
    let mut state = seed ^ chunk.wrapping_mul(0xD6E8_FEB8_6659_FD93);
    let mut key = [0u8; 32];
    for word in 0..4 {
        key[word * 8..(word + 1) * 8].copy_from_slice(&splitmix64(&mut state).to_le_bytes());
    }
    ChaCha12Rng::from_seed(key)
}

/// Uniform point in the ball by rejection from the bounding cube, kept a
/// hair inside the boundary so every draw is constructible.
pub fn uniform_in_ball<R: Rng>(rng: &mut R, dim: usize) -> PointInBall {
    loop {
        let coords: Vec<f64> = (0..dim).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let norm_sq: f64 = coords.iter().map(|c| c * c).sum();
        if norm_sq < (1.0 - 1e-9) * (1.0 - 1e-9) {
            return PointInBall::new(coords).expect("rejection sampling stays inside");
        }
    }
}

/// Uniform direction on the unit sphere (Box-Muller normals, normalized).
pub fn unit_direction<R: Rng>(rng: &mut R, dim: usize) -> Vec<f64> {
    loop {
        let mut v = Vec::with_capacity(dim + 1);
        while v.len() < dim {
            let u1: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
            let u2: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
            let r = (-2.0 * u1.ln()).sqrt();
            v.push(r * u2.cos());
            v.push(r * u2.sin());
        }
        v.truncate(dim);
        let n: f64 = v.iter().map(|c| c * c).sum::<f64>().sqrt();
        if n > 1e-6 {
            return v.iter().map(|c| c / n).collect();
        }
    }
}

/// Radially boundary-biased point: |x| = 1 - 10^(-u) with u uniform in
/// [1, 8], direction uniform. Extremal behavior of the metrics lives near
/// the boundary, which plain rejection sampling almost never reaches.
pub fn boundary_biased<R: Rng>(rng: &mut R, dim: usize) -> PointInBall {
    let u: f64 = rng.gen_range(1.0..8.0);
    let radius = 1.0 - 10f64.powf(-u);
    let dir = unit_direction(rng, dim);
    PointInBall::new(dir.iter().map(|c| c * radius).collect())
        .expect("radius stays below the construction margin")
}

/// Uniform point in a ball of the given radius around the origin.
pub fn uniform_in_scaled_ball<R: Rng>(rng: &mut R, dim: usize, radius: f64) -> PointInBall {
    let p = uniform_in_ball(rng, dim);
    PointInBall::new(p.coords().iter().map(|c| c * radius).collect())
        .expect("scaling by r < 1 stays inside")
}

/// A pair whose chord passes within 10^(-u) of the boundary, u uniform in
/// [1, 8]: both points sit on a common near-tangent line, which drives the
/// origin-line distance toward 1 and the ratio rho/h toward infinity.
pub fn near_tangent_pair<R: Rng>(rng: &mut R, dim: usize) -> (PointInBall, PointInBall) {
    let u: f64 = rng.gen_range(1.0..8.0);
    let m1 = 1.0 - 10f64.powf(-u);
    let e = unit_direction(rng, dim);
    // Orthonormal companion to e.
    let f = loop {
        let g = unit_direction(rng, dim);
        let proj: f64 = g.iter().zip(&e).map(|(a, b)| a * b).sum();
        let res: Vec<f64> = g.iter().zip(&e).map(|(a, b)| a - proj * b).collect();
        let n: f64 = res.iter().map(|c| c * c).sum::<f64>().sqrt();
        if n > 1e-3 {
            break res.iter().map(|c| c / n).collect::<Vec<f64>>();
        }
    };
    let half_chord = ((1.0 - m1) * (1.0 + m1)).sqrt();
    // Log-uniform separation along the chord: small offsets keep h of order
    // the separation while rho and j stay pinned to the tangency scale.
    let center: f64 = rng.gen_range(-0.6..0.6);
    let delta = 10f64.powf(-rng.gen_range(0.5..3.0));
    let (sx, sy) = (
        (center - 0.5 * delta) * half_chord,
        (center + 0.5 * delta) * half_chord,
    );
    let mk = |s: f64| {
        PointInBall::new(
            e.iter()
                .zip(&f)
                .map(|(ec, fc)| m1 * ec + s * fc)
                .collect(),
        )
        .expect("offsets keep the pair strictly inside")
    };
    (mk(sx), mk(sy))
}
