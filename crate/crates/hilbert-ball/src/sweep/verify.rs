//! The acceptance checks behind `hilbert-ball verify` and the acceptance
//! test suite: each check pins one verifiable claim about the crate at a
//! fixed tolerance and sample budget, and reports a one-line detail string.

use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::time::Instant;

use rand::Rng;

use super::sample::{stream_rng, uniform_in_ball};
use super::{
    equality_case_probe, eval_witness, run_sweep, sh_half_rho_of_squares, CheckId, SweepConfig,
};
use crate::balls::{euclidean_to_hilbert_radii, hilbert_ball_boundary, hyperbolic_to_hilbert_radii};
use crate::geom::{self, reduce_to_plane, PointInBall};
use crate::metrics::{
    distance_ratio, hilbert_ch_form, hilbert_equal_norm, hilbert_oracle, hilbert_sh_identity,
    hyperbolic, midpoint_rotation_bounds, hilbert_dist,
};
use crate::moebius::{
    distortion_identity, distortion_upper_bounds, hilbert_image, m2_complex_form, rho_image,
    symmetrizing_inversion, t_a,
};
use crate::special::{elliptic_k, lambda_k, mu, phi_k2, qr_sh_bound};

/// One acceptance check: a name, a category for `--only` filtering, and a
/// runner returning a detail string or a failure description.
pub struct AcceptanceCheck {
    pub name: &'static str,
    pub category: &'static str,
    pub run: fn() -> Result<String, String>,
}

/// Outcome of one executed check.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub category: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed_s: f64,
}

pub fn all_checks() -> Vec<AcceptanceCheck> {
    vec![
        AcceptanceCheck {
            name: "sh_identity_agreement",
            category: "metrics",
            run: check_sh_identity_agreement,
        },
        AcceptanceCheck {
            name: "hilbert_four_way",
            category: "metrics",
            run: check_hilbert_four_way,
        },
        AcceptanceCheck {
            name: "inequality_suite",
            category: "metrics",
            run: check_inequality_suite,
        },
        AcceptanceCheck {
            name: "equality_cases",
            category: "metrics",
            run: check_equality_cases,
        },
        AcceptanceCheck {
            name: "ball_boundary_level",
            category: "balls",
            run: check_ball_boundary_level,
        },
        AcceptanceCheck {
            name: "ball_inclusion_tightness",
            category: "balls",
            run: check_ball_inclusion_tightness,
        },
        AcceptanceCheck {
            name: "special_function_values",
            category: "special",
            run: check_special_function_values,
        },
        AcceptanceCheck {
            name: "moebius_suite",
            category: "moebius",
            run: check_moebius_suite,
        },
        AcceptanceCheck {
            name: "quasiregular_instances",
            category: "special",
            run: check_quasiregular_instances,
        },
        AcceptanceCheck {
            name: "conjecture_search",
            category: "sweep",
            run: check_conjecture_search,
        },
        AcceptanceCheck {
            name: "unbounded_ratios",
            category: "sweep",
            run: check_unbounded_ratios,
        },
    ]
}

pub fn run_check(check: &AcceptanceCheck) -> CheckOutcome {
    let started = Instant::now();
    let result = (check.run)();
    let elapsed_s = started.elapsed().as_secs_f64();
    match result {
        Ok(detail) => CheckOutcome {
            name: check.name,
            category: check.category,
            passed: true,
            detail,
            elapsed_s,
        },
        Err(detail) => CheckOutcome {
            name: check.name,
            category: check.category,
            passed: false,
            detail,
            elapsed_s,
        },
    }
}

/// Runs every check whose category or name matches the filter (all checks
/// when no filter is given).
pub fn run_filtered(filter: Option<&str>) -> Vec<CheckOutcome> {
    all_checks()
        .iter()
        .filter(|c| filter.is_none_or(|f| c.category.starts_with(f) || c.name.contains(f)))
        .map(run_check)
        .collect()
}

fn random_pair<R: Rng>(rng: &mut R, dim: usize) -> (PointInBall, PointInBall) {
    loop {
        let x = uniform_in_ball(rng, dim);
        let y = uniform_in_ball(rng, dim);
        if geom::dist(x.coords(), y.coords()) > 1e-10 {
            return (x, y);
        }
    }
}

fn check_sh_identity_agreement() -> Result<String, String> {
    let started = Instant::now();
    let mut max_dev: f64 = 0.0;
    let mut rng = stream_rng(1001, 0);
    for _ in 0..100_000 {
        let (x, y) = random_pair(&mut rng, 2);
        max_dev = max_dev.max((hilbert_sh_identity(&x, &y) - hilbert_oracle(&x, &y)).abs());
    }
    let mut max_dev5: f64 = 0.0;
    let mut max_plane_dev: f64 = 0.0;
    for _ in 0..10_000 {
        let (x, y) = random_pair(&mut rng, 5);
        max_dev5 = max_dev5.max((hilbert_sh_identity(&x, &y) - hilbert_oracle(&x, &y)).abs());
        // The 5-D evaluation must agree with the planar reduction.
        let frame = reduce_to_plane(&x, &y).map_err(|e| e.to_string())?;
        let px = PointInBall::new(frame.project(x.coords()).to_vec()).map_err(|e| e.to_string())?;
        let py = PointInBall::new(frame.project(y.coords()).to_vec()).map_err(|e| e.to_string())?;
        max_plane_dev =
            max_plane_dev.max((hilbert_oracle(&px, &py) - hilbert_oracle(&x, &y)).abs());
    }
    let elapsed = started.elapsed().as_secs_f64();
    if max_dev >= 1e-10 || max_dev5 >= 1e-10 {
        return Err(format!(
            "identity deviation {max_dev:.3e} (B2) / {max_dev5:.3e} (B5) reached 1e-10"
        ));
    }
    // Projection rounds coordinates at the absolute 1e-16 level, which the
    // boundary tail of the 5-D sample amplifies by 1/gap; the criterion's
    // own tolerance is the right bound here.
    if max_plane_dev >= 1e-10 {
        return Err(format!("plane reduction deviation {max_plane_dev:.3e}"));
    }
    if elapsed >= 10.0 {
        return Err(format!("runtime {elapsed:.1}s exceeded the 10s budget"));
    }
    Ok(format!(
        "max |sh-identity - oracle| {max_dev:.2e} over 1e5 pairs in B2, {max_dev5:.2e} over 1e4 in B5; plane reduction {max_plane_dev:.2e} ({elapsed:.1}s)"
    ))
}

fn check_hilbert_four_way() -> Result<String, String> {
    let mut rng = stream_rng(1002, 0);
    let mut max_dev: f64 = 0.0;
    for _ in 0..100_000 {
        let (x, y) = random_pair(&mut rng, 2);
        let oracle = hilbert_oracle(&x, &y);
        max_dev = max_dev.max((hilbert_ch_form(&x, &y) - oracle).abs());
        max_dev = max_dev.max((hilbert_sh_identity(&x, &y) - oracle).abs());
    }
    // Equal-norm pairs bring the fourth path into play.
    let mut max_dev_eq: f64 = 0.0;
    for _ in 0..10_000 {
        let r: f64 = rng.gen_range(0.01..0.95);
        let t1: f64 = rng.gen_range(0.0..TAU);
        let t2: f64 = rng.gen_range(0.0..TAU);
        if (t1 - t2).abs() < 1e-6 {
            continue;
        }
        let x = PointInBall::from_xy(r * t1.cos(), r * t1.sin()).unwrap();
        let y = PointInBall::from_xy(r * t2.cos(), r * t2.sin()).unwrap();
        let oracle = hilbert_oracle(&x, &y);
        let eq = hilbert_equal_norm(&x, &y).map_err(|e| e.to_string())?;
        max_dev_eq = max_dev_eq.max((eq - oracle).abs());
        max_dev_eq = max_dev_eq.max((hilbert_ch_form(&x, &y) - oracle).abs());
        max_dev_eq = max_dev_eq.max((hilbert_sh_identity(&x, &y) - oracle).abs());
    }
    if max_dev >= 1e-10 || max_dev_eq >= 1e-10 {
        return Err(format!(
            "four-way deviation {max_dev:.3e} (random) / {max_dev_eq:.3e} (equal-norm) reached 1e-10"
        ));
    }
    Ok(format!(
        "oracle/ch/sh agree to {max_dev:.2e} on 1e5 pairs; all four paths to {max_dev_eq:.2e} on 1e4 equal-norm pairs"
    ))
}

fn check_inequality_suite() -> Result<String, String> {
    let mut lines = Vec::new();
    for check in [
        CheckId::Cor3_7,
        CheckId::Thm4_1,
        CheckId::Thm4_3,
        CheckId::Thm4_5,
        CheckId::Lemma5_4,
        CheckId::Cor6_4,
        CheckId::Cor6_5,
    ] {
        let report = run_sweep(&SweepConfig::new(check, 100_000).with_seed(1003));
        if report.violations > 0 {
            return Err(format!(
                "{check}: {} violations at 1e-9, max ratio {}",
                report.violations, report.max_ratio
            ));
        }
        lines.push(format!("{check} max {:.6}", report.max_ratio));
    }
    // j <= rho <= 2j on the same budget.
    let mut rng = stream_rng(1003, 1);
    for _ in 0..100_000 {
        let (x, y) = random_pair(&mut rng, 2);
        let j = distance_ratio(&x, &y);
        let rho = hyperbolic(&x, &y);
        if j > rho + 1e-9 || rho > 2.0 * j + 1e-9 {
            return Err(format!("j/rho chain violated: j={j}, rho={rho}"));
        }
    }
    // Linear distortion bound, valid whenever the image line is no closer
    // to the origin than the source line.
    let mut applicable = 0u64;
    for _ in 0..100_000 {
        let a = uniform_in_ball(&mut rng, 2);
        let (x, y) = random_pair(&mut rng, 2);
        let bounds = distortion_upper_bounds(&a, &x, &y).map_err(|e| e.to_string())?;
        if bounds.linear_bound_valid {
            applicable += 1;
            let h_img = hilbert_image(&a, &x, &y);
            if h_img > bounds.linear_bound + 1e-9 {
                return Err(format!(
                    "linear bound violated: {h_img} > {}",
                    bounds.linear_bound
                ));
            }
        }
    }
    Ok(format!(
        "zero violations at 1e-9 over 1e5 samples each ({}; j-chain ok; linear bound ok on {applicable} applicable samples)",
        lines.join(", ")
    ))
}

fn check_equality_cases() -> Result<String, String> {
    // The fixed-configuration probes, all of which must pass.
    for check in CheckId::ALL {
        if let Some(p) = equality_case_probe(check) {
            if !p.passed {
                return Err(format!(
                    "{}: equality error {:.3e}, perturbed gap {:.3e}",
                    p.description, p.equality_error, p.perturbed_gap
                ));
            }
        }
    }
    // Random equality families at 1e-12.
    let mut rng = stream_rng(1004, 0);
    let mut worst: f64 = 0.0;
    for _ in 0..500 {
        let th: f64 = rng.gen_range(0.0..TAU);
        let r1: f64 = rng.gen_range(0.05..0.9);
        let r2: f64 = rng.gen_range(0.05..0.9);
        // Collinear with the origin: h = rho, and the midpoint upper bound
        // is attained.
        let x = PointInBall::from_xy(r1 * th.cos(), r1 * th.sin()).unwrap();
        let y = PointInBall::from_xy(-r2 * th.cos(), -r2 * th.sin()).unwrap();
        worst = worst.max((hilbert_dist(&x, &y) - hyperbolic(&x, &y)).abs());
        if let Some(upper) = midpoint_rotation_bounds(&x, &y).map_err(|e| e.to_string())?.upper {
            worst = worst.max((hilbert_dist(&x, &y) - upper).abs());
        }
        // Antipodal: h = 2j.
        let z = PointInBall::from_xy(-r1 * th.cos(), -r1 * th.sin()).unwrap();
        worst = worst.max((hilbert_dist(&x, &z) - 2.0 * distance_ratio(&x, &z)).abs());
        // Equal norms: the midpoint lower bound is attained.
        let dt: f64 = rng.gen_range(0.1..PI);
        let y_eq =
            PointInBall::from_xy(r1 * (th + dt).cos(), r1 * (th + dt).sin()).unwrap();
        let lower = midpoint_rotation_bounds(&x, &y_eq)
            .map_err(|e| e.to_string())?
            .lower;
        worst = worst.max((hilbert_dist(&x, &y_eq) - lower).abs());
        // Hyperbolic inclusion tight at the center 0.
        let r: f64 = rng.gen_range(0.1..3.0);
        let origin = PointInBall::origin(2);
        let (l0, l1) = hyperbolic_to_hilbert_radii(&origin, r).map_err(|e| e.to_string())?;
        let yr = PointInBall::from_xy((r / 2.0).tanh() * th.cos(), (r / 2.0).tanh() * th.sin())
            .unwrap();
        worst = worst.max((l0 - r).abs().max((l1 - r).abs()));
        worst = worst.max((hilbert_dist(&origin, &yr) - r).abs());
    }
    if worst >= 1e-12 {
        return Err(format!("equality families deviate by {worst:.3e} at 1e-12"));
    }
    Ok(format!(
        "8 equality probes pass; random equality families within {worst:.2e}"
    ))
}

fn check_ball_boundary_level() -> Result<String, String> {
    let started = Instant::now();
    let x = PointInBall::from_xy(0.75, 0.0).unwrap();
    let boundary = hilbert_ball_boundary(&x, 1.5, 512).map_err(|e| e.to_string())?;
    let mut worst: f64 = 0.0;
    for &(_, y) in boundary.samples() {
        let yp = PointInBall::new(y.to_vec()).map_err(|e| e.to_string())?;
        worst = worst.max((hilbert_oracle(&x, &yp) - 1.5).abs());
    }
    if worst >= 1e-9 {
        return Err(format!("boundary level error {worst:.3e} reached 1e-9"));
    }
    let near = boundary.samples()[0].1[0];
    let far = boundary.samples()[256].1[0];
    if (near - 0.21935).abs() >= 5e-5 || (far - 0.93822).abs() >= 5e-5 {
        return Err(format!(
            "real-axis boundary points {near:.6}, {far:.6} off the expected 0.21935, 0.93822"
        ));
    }
    let elapsed = started.elapsed().as_secs_f64();
    if elapsed >= 1.0 {
        return Err(format!("runtime {elapsed:.2}s exceeded the 1s budget"));
    }
    Ok(format!(
        "512 samples within {worst:.2e} of level 1.5; axis points {near:.5}/{far:.5} ({elapsed:.2}s)"
    ))
}

fn golden_extremum(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, minimize: bool) -> f64 {
    let ratio = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - ratio * (b - a);
    let mut d = a + ratio * (b - a);
    for _ in 0..90 {
        let better_left = if minimize { f(c) < f(d) } else { f(c) > f(d) };
        if better_left {
            b = d;
            d = c;
            c = b - ratio * (b - a);
        } else {
            a = c;
            c = d;
            d = a + ratio * (b - a);
        }
    }
    f(0.5 * (a + b))
}

fn check_ball_inclusion_tightness() -> Result<String, String> {
    let mut rng = stream_rng(1006, 0);
    let samples = 10_000usize;
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let x = uniform_in_ball(&mut rng, 2);
        let frac: f64 = rng.gen_range(0.05..0.95);
        let r = frac * (1.0 - x.norm() - 1e-9);
        let (l0, l1) = euclidean_to_hilbert_radii(&x, r).map_err(|e| e.to_string())?;
        let h_at = |th: f64| {
            let y = PointInBall::from_xy(
                x.coords()[0] + r * th.cos(),
                x.coords()[1] + r * th.sin(),
            )
            .expect("circle stays inside the ball");
            hilbert_dist(&x, &y)
        };
        let (mut min_th, mut min_h) = (0.0, f64::INFINITY);
        let (mut max_th, mut max_h) = (0.0, f64::NEG_INFINITY);
        for i in 0..samples {
            let th = i as f64 * TAU / samples as f64;
            let h = h_at(th);
            if h < min_h {
                (min_th, min_h) = (th, h);
            }
            if h > max_h {
                (max_th, max_h) = (th, h);
            }
        }
        let step = TAU / samples as f64;
        let refined_min = golden_extremum(h_at, min_th - step, min_th + step, true);
        let refined_max = golden_extremum(h_at, max_th - step, max_th + step, false);
        worst = worst.max((refined_min - l0).abs()).max((refined_max - l1).abs());
    }
    if worst >= 1e-6 {
        return Err(format!("inclusion tightness off by {worst:.3e} at 1e-6"));
    }
    Ok(format!(
        "100 random balls: sampled h extrema match l0/l1 within {worst:.2e}"
    ))
}

/// 64-point Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration
/// on the Legendre recurrence; quadrature oracle for the elliptic integral.
pub(crate) fn elliptic_k_quadrature(r: f64) -> f64 {
    let n = 64usize;
    let legendre = |x: f64| -> (f64, f64) {
        let (mut p0, mut p1) = (1.0f64, x);
        for k in 2..=n {
            let kf = k as f64;
            let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
            p0 = p1;
            p1 = p2;
        }
        let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
        (p1, dp)
    };
    let mut total = 0.0;
    for i in 0..n {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre(x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, dp) = legendre(x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        // K(r) = ∫_0^{pi/2} dθ / sqrt(1 - r^2 sin^2 θ): the defining
        // integral after x = sin θ, free of the endpoint singularity.
        let theta = FRAC_PI_2 * 0.5 * (x + 1.0);
        let s = r * theta.sin();
        total += FRAC_PI_2 * 0.5 * w / (1.0 - s * s).sqrt();
    }
    total
}

fn check_special_function_values() -> Result<String, String> {
    let k0 = elliptic_k(0.0).map_err(|e| e.to_string())?;
    if (k0 - FRAC_PI_2).abs() >= 1e-13 {
        return Err(format!("K(0) = {k0}, expected pi/2"));
    }
    let m = mu(std::f64::consts::FRAC_1_SQRT_2).map_err(|e| e.to_string())?;
    if (m - FRAC_PI_2).abs() >= 1e-13 {
        return Err(format!("mu(1/sqrt2) = {m}, expected pi/2"));
    }
    // Sampling keeps clear of the endpoints: below r ~ 0.01 the rounding of
    // the complementary modulus alone moves the product by more than 1e-12.
    let mut rng = stream_rng(1007, 0);
    for _ in 0..1000 {
        let r: f64 = rng.gen_range(0.01..0.99);
        let prod = mu(r).map_err(|e| e.to_string())?
            * mu(((1.0 - r) * (1.0 + r)).sqrt()).map_err(|e| e.to_string())?;
        if (prod - PI * PI / 4.0).abs() >= 1e-12 {
            return Err(format!("mu product identity off at r={r}: {prod}"));
        }
        let phi = phi_k2(1.0, r).map_err(|e| e.to_string())?;
        if (phi - r).abs() >= 1e-12 {
            return Err(format!("phi_1,2({r}) = {phi} is not the identity"));
        }
    }
    let l1 = lambda_k(1.0).map_err(|e| e.to_string())?;
    if l1 != 1.0 {
        return Err(format!("lambda(1) = {l1}, expected exactly 1"));
    }
    for k in [1.1, 1.5, 2.0, 3.0, 4.0] {
        let l = lambda_k(k).map_err(|e| e.to_string())?;
        let cap = (PI * (k - 1.0 / k)).exp();
        if !(l < cap) {
            return Err(format!("lambda({k}) = {l} not below e^(pi(K-1/K)) = {cap}"));
        }
    }
    let agm = elliptic_k(0.5).map_err(|e| e.to_string())?;
    let quad = elliptic_k_quadrature(0.5);
    if (agm - quad).abs() >= 1e-12 {
        return Err(format!("K(0.5): AGM {agm} vs quadrature {quad}"));
    }
    Ok(format!(
        "K(0)=pi/2, mu(1/sqrt2)=pi/2, product identity and phi_1 identity on 1e3 moduli, lambda bounds, K(0.5) vs 64-pt quadrature {:.2e}",
        (agm - quad).abs()
    ))
}

fn check_moebius_suite() -> Result<String, String> {
    let mut rng = stream_rng(1008, 0);
    let mut dev_rho: f64 = 0.0;
    let mut dev_identity: f64 = 0.0;
    let mut dev_m2: f64 = 0.0;
    for _ in 0..100_000 {
        let a = uniform_in_ball(&mut rng, 2);
        let (x, y) = random_pair(&mut rng, 2);
        dev_rho = dev_rho.max((rho_image(&a, &x, &y) - hyperbolic(&x, &y)).abs());
        let identity = distortion_identity(&a, &x, &y).map_err(|e| e.to_string())?;
        dev_identity = dev_identity.max((identity - hilbert_image(&a, &x, &y)).abs());
        let m2_closed = m2_complex_form(&a, &x, &y).map_err(|e| e.to_string())?;
        let tx = t_a(&a, &x).map_err(|e| e.to_string())?;
        let ty = t_a(&a, &y).map_err(|e| e.to_string())?;
        let m2_geometric = geom::dist_origin_to_line(&tx, &ty).map_err(|e| e.to_string())?;
        dev_m2 = dev_m2.max((m2_closed - m2_geometric).abs());
    }
    if dev_rho >= 1e-10 {
        return Err(format!("rho invariance deviation {dev_rho:.3e} at 1e-10"));
    }
    if dev_identity >= 1e-10 {
        return Err(format!("distortion identity deviation {dev_identity:.3e}"));
    }
    if dev_m2 >= 1e-9 {
        return Err(format!("m2 closed form vs geometric {dev_m2:.3e} at 1e-9"));
    }
    // Symmetrizing inversion: norms equalized and h preserved.
    let mut dev_norm: f64 = 0.0;
    let mut dev_h: f64 = 0.0;
    let mut done = 0;
    while done < 10_000 {
        let (x, y) = random_pair(&mut rng, 2);
        if (x.norm() - y.norm()).abs() < 1e-6 || x.norm() < 1e-3 || y.norm() < 1e-3 {
            continue;
        }
        let inv = match symmetrizing_inversion(&x, &y) {
            Ok(inv) => inv,
            Err(_) => continue, // near-degenerate configuration; resample
        };
        let fx = inv.apply_point(&x).map_err(|e| e.to_string())?;
        let fy = inv.apply_point(&y).map_err(|e| e.to_string())?;
        dev_norm = dev_norm.max((fx.norm() - fy.norm()).abs());
        dev_h = dev_h.max((hilbert_dist(&fx, &fy) - hilbert_dist(&x, &y)).abs());
        done += 1;
    }
    if dev_norm >= 1e-10 || dev_h >= 1e-10 {
        return Err(format!(
            "symmetrization: norm gap {dev_norm:.3e}, h drift {dev_h:.3e} at 1e-10"
        ));
    }
    Ok(format!(
        "1e5 triples: rho invariance {dev_rho:.2e}, identity {dev_identity:.2e}, m2 forms {dev_m2:.2e}; 1e4 symmetrizations: norms {dev_norm:.2e}, h {dev_h:.2e}"
    ))
}

fn check_quasiregular_instances() -> Result<String, String> {
    let mut rng = stream_rng(1009, 0);
    let mut dev_equality: f64 = 0.0;
    let mut worst_excess: f64 = f64::NEG_INFINITY;
    for _ in 0..10_000 {
        let a = uniform_in_ball(&mut rng, 2);
        let (x, y) = random_pair(&mut rng, 2);
        let rho = hyperbolic(&x, &y);
        let bound = qr_sh_bound(1.0, rho).map_err(|e| e.to_string())?;
        let scale = bound.max(1.0);
        // Möbius maps attain the K = 1 bound.
        let s_moebius = (rho_image(&a, &x, &y) / 2.0).sinh();
        dev_equality = dev_equality.max((s_moebius - bound).abs() / scale);
        // The planar squaring map must respect it.
        let s_square = sh_half_rho_of_squares(&x, &y);
        worst_excess = worst_excess.max((s_square - bound) / scale);
    }
    if dev_equality >= 1e-10 {
        return Err(format!(
            "Möbius equality deviation {dev_equality:.3e} at 1e-10 (scaled)"
        ));
    }
    if worst_excess > 1e-10 {
        return Err(format!("squaring map exceeded the bound by {worst_excess:.3e}"));
    }
    Ok(format!(
        "1e4 samples: Möbius equality within {dev_equality:.2e}, squaring-map excess {worst_excess:.2e} (never above the bound)"
    ))
}

fn check_conjecture_search() -> Result<String, String> {
    let cfg = SweepConfig::new(CheckId::ConjectureOnePlusA, 1_000_000).with_seed(42);
    let report = run_sweep(&cfg);
    if report.violations > 0 {
        // Not an implementation bug: these are genuine counterexamples to
        // the conjectured bound h(T_a x, T_a y) <= (1 + |a|) h(x, y). Each
        // witness replays exactly through eval_witness, and the extremal one
        // below can be rechecked from its coordinates by any independent
        // evaluation of the two distances (the a = x construction on a
        // near-tangent chord even makes the ratio unbounded). The check is
        // kept faithful to its original expectation and therefore fails.
        let witness_json = report
            .witness
            .as_ref()
            .map(|w| serde_json::to_string(w).expect("witness serializes"))
            .unwrap_or_default();
        return Err(format!(
            "{} of 1e6 boundary-biased samples exceed (1+|a|) h(x,y); max ratio {:.6}; extremal witness {witness_json}",
            report.violations, report.max_ratio
        ));
    }
    if !(report.max_ratio < 1.0) {
        return Err(format!("max ratio {} reached 1", report.max_ratio));
    }
    let witness = report.witness.clone().ok_or("sweep recorded no witness")?;
    let replay = eval_witness(report.check, &witness);
    if (replay.ratio - report.max_ratio).abs() > 1e-12 {
        return Err(format!(
            "witness replay {} does not reproduce {}",
            replay.ratio, report.max_ratio
        ));
    }
    if report.elapsed_s >= 60.0 {
        return Err(format!(
            "runtime {:.1}s exceeded the 60s budget",
            report.elapsed_s
        ));
    }
    Ok(format!(
        "no counterexample in 1e6 boundary-biased samples (seed 42): max ratio {:.6} < 1, witness replays exactly ({:.1}s)",
        report.max_ratio, report.elapsed_s
    ))
}

fn check_unbounded_ratios() -> Result<String, String> {
    let rho_report = run_sweep(&SweepConfig::new(CheckId::UnboundednessRhoOverH, 20_000).with_seed(7));
    let j_report = run_sweep(&SweepConfig::new(CheckId::UnboundednessJOverH, 20_000).with_seed(7));
    if rho_report.max_ratio <= 100.0 {
        return Err(format!("rho/h only reached {}", rho_report.max_ratio));
    }
    if j_report.max_ratio <= 100.0 {
        return Err(format!("j/h only reached {}", j_report.max_ratio));
    }
    Ok(format!(
        "targeted near-tangent sampling reaches rho/h = {:.0} and j/h = {:.0}; no finite comparison constant",
        rho_report.max_ratio, j_report.max_ratio
    ))
}
