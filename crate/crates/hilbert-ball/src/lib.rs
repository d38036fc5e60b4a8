//! Hilbert metric on the unit ball, with everything needed to study it:
//! the hyperbolic and distance-ratio metrics, Möbius automorphisms and
//! sphere inversions, metric-ball inclusion radii and exact ball boundaries,
//! the planar quasiconformal distortion functions, and a deterministic
//! sweep harness that verifies the identities and inequalities relating all
//! of the above.
//!
//! # Modules
//!
//! - [`geom`] — points, chords, cross-ratios, plane reduction
//! - [`metrics`] — the Hilbert distance (four evaluation paths), the
//!   hyperbolic and distance-ratio metrics, rotation bounds
//! - [`moebius`] — ball automorphisms `T_a`, sphere inversions orthogonal to
//!   the unit sphere, distortion identities and bounds
//! - [`balls`] — inclusion radii between Euclidean / Hilbert / hyperbolic
//!   balls and the exact Hilbert-ball boundary in the disk
//! - [`special`] — complete elliptic integrals, the ring modulus, and the
//!   quasiregular distortion bound
//! - [`sweep`] — seeded, chunk-deterministic property sweeps with replayable
//!   witnesses, plus the acceptance checks behind `hilbert-ball verify`
//! - [`render`] — SVG/CSV output for ball boundaries and the illustrative
//!   figures
//!
//! # Example
//!
//! ```
//! use hilbert_ball::PointInBall;
//! use hilbert_ball::metrics::{hilbert_dist, hyperbolic};
//!
//! let x = PointInBall::from_xy(0.5, 0.0)?;
//! let y = PointInBall::from_xy(0.0, 0.5)?;
//! assert!(hilbert_dist(&x, &y) <= hyperbolic(&x, &y));
//! # Ok::<(), hilbert_ball::HilbertError>(())
//! ```
//!
//! Runnable demonstrations of each capability live under `examples/`.

pub mod balls;
pub mod error;
pub mod geom;
pub mod metrics;
pub mod moebius;
pub mod render;
pub mod special;
pub mod sweep;

pub use error::{HilbertError, Result};
pub use geom::PointInBall;
