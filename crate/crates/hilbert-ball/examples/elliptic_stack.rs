//! The elliptic-integral stack: K(r), the ring modulus mu(r) and its
//! inverse, the capacity gamma2, the distortion function phi_{K,2}, and
//! lambda(K).
//!
//!     cargo run --example elliptic_stack

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use hilbert_ball::special::{elliptic_k, eta_k2, gamma2, lambda_k, mu, mu_inverse, phi_k2};

fn main() -> hilbert_ball::Result<()> {
    println!("complete elliptic integral:");
    for r in [0.0, 0.5, FRAC_1_SQRT_2, 0.9, 0.99] {
        println!("  K({r:4}) = {:.15}", elliptic_k(r)?);
    }
    println!("  K(0) - pi/2 = {:+.3e}", elliptic_k(0.0)? - PI / 2.0);

    println!("\nring modulus:");
    println!("  mu(1/sqrt2) - pi/2 = {:+.3e}", mu(FRAC_1_SQRT_2)? - PI / 2.0);
    for r in [0.1, 0.3, 0.6, 0.9] {
        let product = mu(r)? * mu(((1.0 - r) * (1.0 + r)).sqrt())?;
        println!("  mu({r}) mu(r') - pi^2/4 = {:+.3e}", product - PI * PI / 4.0);
    }
    println!("  mu_inverse(pi/2) = {:.15}", mu_inverse(PI / 2.0)?);
    println!("  gamma2(sqrt 2)   = {:.15}", gamma2(2f64.sqrt())?);

    println!("\ndistortion function phi_K,2 and lambda(K):");
    for k in [1.0, 1.5, 2.0, 3.0, 4.0] {
        let phi = phi_k2(k, FRAC_1_SQRT_2)?;
        let lam = lambda_k(k)?;
        let cap = (PI * (k - 1.0 / k)).exp();
        println!(
            "  K = {k:3}: phi(1/sqrt2) = {phi:.12}  lambda = {lam:14.6}  < e^(pi(K-1/K)) = {cap:.4e}"
        );
    }

    println!("\neta_K,2 against its bound lambda(K) max(t^K, t^(1/K)):");
    for (k, t) in [(1.0, 0.5), (2.0, 0.5), (2.0, 2.0), (4.0, 2.0)] {
        let eta = eta_k2(k, t)?;
        let bound = lambda_k(k)? * t.powf(k).max(t.powf(1.0 / k));
        println!("  eta_{{{k},2}}({t}) = {eta:12.6}  bound {bound:12.6}");
    }
    Ok(())
}
