//! Runs every theorem-backed sweep at desk scale and prints a one-line
//! summary per check: violations must be zero everywhere, and the maximal
//! ratios show how close random sampling comes to each sharp constant.
//!
//!     cargo run --release --example theorem_sweeps

use hilbert_ball::sweep::{equality_case_probe, run_sweep, CheckId, SweepConfig};

fn main() {
    println!("{:<26} {:>9} {:>10} {:>9} {:>12}", "check", "samples", "violations", "warnings", "max ratio");
    for check in CheckId::ALL.iter().filter(|c| c.is_theorem_check()) {
        let report = run_sweep(&SweepConfig::new(*check, 50_000).with_seed(11));
        println!(
            "{:<26} {:>9} {:>10} {:>9} {:>12.6}",
            check.to_string(),
            report.samples,
            report.violations,
            report.warnings,
            report.max_ratio
        );
    }

    println!("\nunboundedness probes (targeted near-tangent sampling):");
    for check in [CheckId::UnboundednessRhoOverH, CheckId::UnboundednessJOverH] {
        let report = run_sweep(&SweepConfig::new(check, 20_000).with_seed(11));
        println!("  {:<26} max ratio {:>12.1}", check.to_string(), report.max_ratio);
    }

    println!("\nstated equality cases (exact configuration, then a 1e-3 perturbation):");
    for check in CheckId::ALL {
        if let Some(probe) = equality_case_probe(check) {
            println!(
                "  {:<9} equality error {:.2e}, strict gap after perturbation {:.2e}  [{}]",
                probe.check.to_string(),
                probe.equality_error,
                probe.perturbed_gap,
                if probe.passed { "ok" } else { "FAILED" }
            );
        }
    }
}
