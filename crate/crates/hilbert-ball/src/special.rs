//! Complete elliptic integrals and the planar quasiconformal distortion
//! functions built on them.
//!
//! ```text
//! K(r)    = ∫_0^1 dx / sqrt((1-x^2)(1-r^2 x^2))      (modulus convention)
//! mu(r)   = (pi/2) K(sqrt(1-r^2)) / K(r)             ring modulus, decreasing
//! gamma2(s) = 2 pi / mu(1/s)                          capacity, s > 1
//! phi_{K,2}(r): mu(phi) = mu(r) / K                   distortion function
//! lambda(K) = (phi_{K,2}(1/sqrt 2) / phi_{1/K,2}(1/sqrt 2))^2
//! eta_{K,2}(t) = phi^2 / (1 - phi^2),  phi = phi_{K,2}(sqrt(t/(1+t)))
//! ```
//!
//! K is evaluated with the arithmetic-geometric mean, so it converges
//! quadratically to machine precision; the defining integral survives only as
//! a quadrature oracle in the tests. mu is inverted by bisection: it is far
//! too steep near the endpoints for Newton to be trustworthy there.

use crate::error::{HilbertError, Result};
use crate::geom::PointInBall;
use crate::metrics::hilbert_dist;
use std::f64::consts::{FRAC_PI_2, PI};

const AGM_MAX_ITER: usize = 12;

/// AGM(1, b) for b in (0, 1]; returns the limit and the iteration count.
fn agm1(b: f64) -> (f64, usize) {
    if b == 1.0 {
        return (1.0, 0);
    }
    let mut a: f64 = 1.0;
    let mut b = b;
    for i in 1..=AGM_MAX_ITER {
        let next_a = 0.5 * (a + b);
        let next_b = (a * b).sqrt();
        if (next_a - next_b).abs() <= 1e-15 * next_a {
            return (next_a, i);
        }
        a = next_a;
        b = next_b;
    }
    (0.5 * (a + b), AGM_MAX_ITER)
}

/// Complete elliptic integral of the first kind, modulus convention,
/// via K(r) = pi / (2 AGM(1, sqrt(1 - r^2))).
pub fn elliptic_k(r: f64) -> Result<f64> {
    Ok(elliptic_k_with_iters(r)?.0)
}

pub(crate) fn elliptic_k_with_iters(r: f64) -> Result<(f64, usize)> {
    if !(0.0..1.0).contains(&r) {
        return Err(HilbertError::ModulusOutOfRange(r));
    }
    if r == 0.0 {
        return Ok((FRAC_PI_2, 0));
    }
    let (agm, iters) = agm1(((1.0 - r) * (1.0 + r)).sqrt());
    Ok((PI / (2.0 * agm), iters))
}

/// Ring modulus mu(r) = (pi/2) K(sqrt(1 - r^2)) / K(r); strictly decreasing
/// from +inf to 0 on (0, 1).
///
/// Computed as (pi/2) AGM(1, sqrt(1 - r^2)) / AGM(1, r): with both AGMs
/// started from the moduli themselves, nothing rounds to the singular
/// endpoint even for r within a few ulps of 0 or 1.
pub fn mu(r: f64) -> Result<f64> {
    if !(r > 0.0 && r < 1.0) {
        return Err(HilbertError::ModulusOutOfRange(r));
    }
    let r_comp = ((1.0 - r) * (1.0 + r)).sqrt();
    Ok(FRAC_PI_2 * agm1(r_comp).0 / agm1(r).0)
}

/// The unique r in (0, 1) with mu(r) = t, by bisection on the clipped
/// interval [1e-15, 1 - 1e-15].
///
/// Targets outside [mu(1 - 1e-15), mu(1e-15)] ~= [0.135, 35.9] saturate at
/// the clipped endpoint: their true preimages sit closer to 0 or 1 than any
/// binary64 value. The bisection always resolves r itself to one ulp; the
/// residual |mu(r) - t| is then limited by the ulp granularity of mu near
/// r = 1 (about 1e-13 for t near 0.4, vanishing for larger t).
pub fn mu_inverse(t: f64) -> Result<f64> {
    if !(t > 0.0) {
        return Err(HilbertError::ArgumentOutOfRange(
            "mu_inverse needs a positive argument",
        ));
    }
    let (mut lo, mut hi) = (1e-15f64, 1.0 - 1e-15);
    if mu(lo)? <= t {
        return Ok(lo);
    }
    if mu(hi)? >= t {
        return Ok(hi);
    }
    loop {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            return Ok(mid);
        }
        if mu(mid)? > t {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}

/// Capacity gamma2(s) = 2 pi / mu(1/s) for s > 1; a decreasing homeomorphism.
pub fn gamma2(s: f64) -> Result<f64> {
    if !(s > 1.0) {
        return Err(HilbertError::ArgumentOutOfRange("gamma2 needs s > 1"));
    }
    Ok(2.0 * PI / mu(1.0 / s)?)
}

/// Distortion function phi_{K,2}(r) = mu^{-1}(mu(r)/K): increasing in r,
/// the identity at K = 1.
pub fn phi_k2(k: f64, r: f64) -> Result<f64> {
    if !(k > 0.0) {
        return Err(HilbertError::ArgumentOutOfRange("phi_k2 needs K > 0"));
    }
    if !(r > 0.0 && r < 1.0) {
        return Err(HilbertError::ModulusOutOfRange(r));
    }
    mu_inverse(mu(r)? / k)
}

/// lambda(K) = (phi_{K,2}(1/sqrt 2) / phi_{1/K,2}(1/sqrt 2))^2; equals 1 at
/// K = 1 and stays below e^(pi (K - 1/K)).
pub fn lambda_k(k: f64) -> Result<f64> {
    if !(k >= 1.0) {
        return Err(HilbertError::ArgumentOutOfRange("lambda_k needs K >= 1"));
    }
    let s = std::f64::consts::FRAC_1_SQRT_2;
    Ok((phi_k2(k, s)? / phi_k2(1.0 / k, s)?).powi(2))
}

/// eta_{K,2}(t) = phi^2 / (1 - phi^2) with phi = phi_{K,2}(sqrt(t / (1 + t))).
///
/// The substitution is the hyperbolic identity sh = th / sqrt(1 - th^2):
/// t = sh^2(u/2) corresponds to s = th(u/2). At K = 1 this is the identity
/// on [0, inf); in general eta_{K,2}(t) <= lambda(K) max(t^K, t^(1/K)).
pub fn eta_k2(k: f64, t: f64) -> Result<f64> {
    if !(k >= 1.0) {
        return Err(HilbertError::ArgumentOutOfRange("eta_k2 needs K >= 1"));
    }
    if !(t >= 0.0) {
        return Err(HilbertError::ArgumentOutOfRange("eta_k2 needs t >= 0"));
    }
    if t == 0.0 {
        return Ok(0.0);
    }
    let s = (t / (1.0 + t)).sqrt();
    let phi = phi_k2(k, s)?;
    Ok(phi * phi / ((1.0 - phi) * (1.0 + phi)))
}

/// Right-hand side of the quasiregular Schwarz-type bound: for a
/// non-constant K-quasiregular self-map f of the disk,
///
/// ```text
/// sh(rho(f x, f y)/2) <= lambda(K)^(1/2) max(sh(rho/2)^K, sh(rho/2)^(1/K))
/// ```
///
/// with equality at K = 1 for Möbius maps.
pub fn qr_sh_bound(k: f64, rho_xy: f64) -> Result<f64> {
    if !(k >= 1.0) {
        return Err(HilbertError::ArgumentOutOfRange("qr_sh_bound needs K >= 1"));
    }
    if !(rho_xy >= 0.0) {
        return Err(HilbertError::ArgumentOutOfRange(
            "qr_sh_bound needs rho >= 0",
        ));
    }
    let s = (rho_xy / 2.0).sinh();
    Ok(lambda_k(k)?.sqrt() * s.powf(k).max(s.powf(1.0 / k)))
}

/// The Hilbert-metric version of the quasiregular bound:
///
/// ```text
/// sh(h(f x, f y)/2) <= lambda(K)^(1/2) sqrt(1 - m3^2)
///                      max((sh(h/2)/sqrt(1-m1^2))^K, (sh(h/2)/sqrt(1-m1^2))^(1/K))
/// ```
///
/// where m1, m3 are the origin-line distances of the source and image pairs.
/// For K = 1 and m1 = m3 the bound collapses to sh(h(x,y)/2) itself.
pub fn hilbert_qr_bound(
    k: f64,
    x: &PointInBall,
    y: &PointInBall,
    m1: f64,
    m3: f64,
) -> Result<f64> {
    if !(k >= 1.0) {
        return Err(HilbertError::ArgumentOutOfRange(
            "hilbert_qr_bound needs K >= 1",
        ));
    }
    if !(0.0..1.0).contains(&m1) || !(0.0..1.0).contains(&m3) {
        return Err(HilbertError::ArgumentOutOfRange(
            "line distances must lie in [0, 1)",
        ));
    }
    let h = hilbert_dist(x, y);
    if h == 0.0 {
        return Err(HilbertError::CoincidentPoints);
    }
    let base = (h / 2.0).sinh() / (1.0 - m1 * m1).sqrt();
    Ok(lambda_k(k)?.sqrt() * (1.0 - m3 * m3).sqrt() * base.powf(k).max(base.powf(1.0 / k)))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// 64-point Gauss-Legendre nodes/weights on [-1, 1], by Newton iteration
    /// on the Legendre recurrence.
    fn gauss_legendre_64() -> Vec<(f64, f64)> {
        let n = 64usize;
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            for _ in 0..100 {
                let (mut p0, mut p1) = (1.0f64, x);
                for k in 2..=n {
                    let kf = k as f64;
                    let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                    p0 = p1;
                    p1 = p2;
                }
                let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (mut p0, mut p1) = (1.0f64, x);
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            out.push((x, w));
        }
        out
    }

    /// Quadrature oracle: K(r) as the integral over [0, pi/2] of
    /// 1 / sqrt(1 - r^2 sin^2 θ) (the defining integral after x = sin θ,
    /// which removes the endpoint singularity).
    fn elliptic_k_quadrature(r: f64) -> f64 {
        gauss_legendre_64()
            .iter()
            .map(|&(x, w)| {
                let theta = FRAC_PI_2 * 0.5 * (x + 1.0);
                let s = r * theta.sin();
                FRAC_PI_2 * 0.5 * w / (1.0 - s * s).sqrt()
            })
            .sum()
    }

    #[test]
    fn elliptic_k_endpoints_and_symmetry() {
        assert_eq!(elliptic_k(0.0).unwrap(), FRAC_PI_2);
        assert!(elliptic_k(1.0).is_err());
        assert!(elliptic_k(-0.1).is_err());

        // Lemniscatic point: K(r) = K(sqrt(1 - r^2)) at r = 1/sqrt(2).
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let k = elliptic_k(r).unwrap();
        let k_comp = elliptic_k(((1.0 - r) * (1.0 + r)).sqrt()).unwrap();
        assert!((k - k_comp).abs() < 1e-15);
    }

    #[test]
    fn elliptic_k_matches_quadrature() {
        for r in [0.1, 0.3, 0.5, 0.7, 0.9] {
            let agm = elliptic_k(r).unwrap();
            let quad = elliptic_k_quadrature(r);
            assert!((agm - quad).abs() < 1e-12, "r={r}: {agm} vs {quad}");
        }
    }

    #[test]
    fn agm_converges_in_eight_iterations() {
        for r in [0.0, 0.1, 0.5, 0.9, 0.999, 1.0 - 1e-10] {
            let (_, iters) = elliptic_k_with_iters(r).unwrap();
            assert!(iters <= 8, "r={r} took {iters} AGM iterations");
        }
    }

    #[test]
    fn mu_values_and_identity() {
        let r = std::f64::consts::FRAC_1_SQRT_2;
        assert!((mu(r).unwrap() - FRAC_PI_2).abs() < 1e-13);

        // mu(r) mu(sqrt(1 - r^2)) = pi^2 / 4
        for i in 1..40 {
            let r = i as f64 / 40.0;
            let m = mu(r).unwrap();
            let m_comp = mu(((1.0 - r) * (1.0 + r)).sqrt()).unwrap();
            assert!((m * m_comp - PI * PI / 4.0).abs() < 1e-12);
        }

        // Asymptotic sanity band only: mu(r) ~ log(4/r) up to O(r^2).
        assert!((mu(0.1).unwrap() - (4.0f64 / 0.1).ln()).abs() < 1e-2);

        // Strictly decreasing.
        let mut prev = f64::INFINITY;
        for i in 1..60 {
            let m = mu(i as f64 / 60.0).unwrap();
            assert!(m < prev);
            prev = m;
        }
    }

    #[test]
    fn mu_inverse_round_trips() {
        assert!((mu_inverse(FRAC_PI_2).unwrap() - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-13);
        for i in 1..30 {
            let r = i as f64 / 30.0;
            let back = mu_inverse(mu(r).unwrap()).unwrap();
            assert!((back - r).abs() < 1e-12, "round trip at r={r}: {back}");
        }
        for t in [0.6, FRAC_PI_2, 3.0, 8.0, 20.0] {
            let r = mu_inverse(t).unwrap();
            assert!((mu(r).unwrap() - t).abs() < 1e-13);
        }
        // Below mu(1 - 1e-15) the preimage is unrepresentable; the clipped
        // endpoint is returned instead.
        assert_eq!(mu_inverse(0.05).unwrap(), 1.0 - 1e-15);
        // t = pi/4: the modulus with K'/K = 1/2.
        let r = mu_inverse(PI / 4.0).unwrap();
        let ratio = elliptic_k(((1.0 - r) * (1.0 + r)).sqrt()).unwrap() / elliptic_k(r).unwrap();
        assert!((ratio - 0.5).abs() < 1e-13);
        assert!(mu_inverse(0.0).is_err());
    }

    #[test]
    fn gamma2_values() {
        assert!((gamma2(2f64.sqrt()).unwrap() - 4.0).abs() < 1e-12);
        assert!(gamma2(1.0).is_err());

        let mut prev = f64::INFINITY;
        for i in 1..40 {
            let s = 1.0 + i as f64 * 0.25;
            let g = gamma2(s).unwrap();
            assert!(g < prev);
            prev = g;
        }

        // Round trip through mu_inverse: gamma2(1/mu_inverse(2 pi / g)) = g.
        for s in [1.2, 1.7, 2.5, 4.0] {
            let g = gamma2(s).unwrap();
            let s_back = 1.0 / mu_inverse(2.0 * PI / g).unwrap();
            assert!((gamma2(s_back).unwrap() - g).abs() < 1e-11);
        }
    }

    #[test]
    fn phi_k2_properties() {
        for i in 1..20 {
            let r = i as f64 / 20.0;
            assert!((phi_k2(1.0, r).unwrap() - r).abs() < 1e-12);
        }
        // Composition round trip phi_{K}(phi_{1/K}(r)) = r.
        for r in [0.2, 0.5, std::f64::consts::FRAC_1_SQRT_2, 0.9] {
            for k in [1.5, 2.0, 3.0] {
                let back = phi_k2(k, phi_k2(1.0 / k, r).unwrap()).unwrap();
                assert!((back - r).abs() < 1e-11);
            }
        }
        // K = 2 at the lemniscatic point: mu(phi) = pi/4 by definition.
        let phi = phi_k2(2.0, std::f64::consts::FRAC_1_SQRT_2).unwrap();
        assert!((mu(phi).unwrap() - PI / 4.0).abs() < 1e-13);
        assert!((phi - mu_inverse(PI / 4.0).unwrap()).abs() < 1e-13);

        // Increasing in r.
        let mut prev = 0.0;
        for i in 1..30 {
            let v = phi_k2(2.0, i as f64 / 30.0).unwrap();
            assert!(v > prev);
            prev = v;
        }
    }

    #[test]
    fn lambda_k_properties() {
        assert_eq!(lambda_k(1.0).unwrap(), 1.0);
        let l2 = lambda_k(2.0).unwrap();
        assert!(l2 > 1.0 && l2 < (PI * 1.5).exp());
        // lambda(K) < e^(pi (K - 1/K)) and increasing on [1, 4].
        let mut prev = 1.0;
        for i in 1..=12 {
            let k = 1.0 + i as f64 * 0.25;
            let l = lambda_k(k).unwrap();
            assert!(l < (PI * (k - 1.0 / k)).exp());
            assert!(l >= prev);
            prev = l;
        }
        assert!(lambda_k(0.5).is_err());
    }

    #[test]
    fn eta_k2_properties() {
        // Identity at K = 1.
        for t in [0.01, 0.5, 1.0, 4.0, 10.0] {
            assert!((eta_k2(1.0, t).unwrap() - t).abs() < 1e-10 * t.max(1.0));
        }
        assert_eq!(eta_k2(2.0, 0.0).unwrap(), 0.0);
        assert!(eta_k2(2.0, 1.0).unwrap() <= lambda_k(2.0).unwrap());

        // eta_{K,2}(t) <= lambda(K) max(t^K, t^(1/K)) over 1e4 random samples
        // with K in [1, 4] and t in (0, 10].
        use rand::Rng;
        let mut rng = crate::sweep::sample::stream_rng(23, 0);
        for _ in 0..10_000 {
            let k: f64 = rng.gen_range(1.0..4.0);
            let t: f64 = rng.gen_range(1e-3..10.0);
            let eta = eta_k2(k, t).unwrap();
            let bound = lambda_k(k).unwrap() * t.powf(k).max(t.powf(1.0 / k));
            assert!(eta <= bound * (1.0 + 1e-12), "K={k} t={t}: {eta} > {bound}");
        }
    }

    #[test]
    fn qr_bound_reduces_at_k1() {
        for rho in [0.0, 0.3, 1.0, 4.0] {
            let b = qr_sh_bound(1.0, rho).unwrap();
            assert_eq!(b, (rho / 2.0).sinh());
        }
        assert!(qr_sh_bound(0.9, 1.0).is_err());
        assert!(qr_sh_bound(2.0, -1.0).is_err());
    }

    #[test]
    fn hilbert_qr_bound_equality_case() {
        let x = PointInBall::from_xy(0.5, 0.0).unwrap();
        let y = PointInBall::from_xy(0.0, 0.5).unwrap();
        let m1 = crate::geom::dist_origin_to_line(&x, &y).unwrap();
        let b = hilbert_qr_bound(1.0, &x, &y, m1, m1).unwrap();
        let h = hilbert_dist(&x, &y);
        assert!((b - (h / 2.0).sinh()).abs() < 1e-15);

        // m3 = 0 keeps only the sqrt(1 - m1^2) scaling inside the max.
        let b0 = hilbert_qr_bound(1.0, &x, &y, m1, 0.0).unwrap();
        assert!((b0 - (h / 2.0).sinh() / (1.0 - m1 * m1).sqrt()).abs() < 1e-14);

        assert!(hilbert_qr_bound(1.0, &x, &x, m1, m1).is_err());
    }
}
