//! Command-line front end: distances, ball geometry, figure generation, and
//! sweep execution. All computation lives in the library; this binary only
//! parses flags, dispatches, and prints.
//!
//! Exit codes: 0 on success, 1 when a theorem-backed sweep or verify run
//! reports violations, 2 on usage errors (clap uses 2 for parse failures).

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use hilbert_ball::balls::{
    euclidean_to_hilbert_radii, hilbert_ball_boundary, hilbert_to_euclidean_radii,
    hyperbolic_to_hilbert_radii,
};
use hilbert_ball::metrics::{self, HilbertMethod};
use hilbert_ball::render::{ball_csv, ball_svg, figure_svg, Figure};
use hilbert_ball::sweep::{run_sweep, verify, CheckId, SweepConfig};
use hilbert_ball::PointInBall;

#[derive(Parser)]
#[command(
    name = "hilbert-ball",
    about = "Hilbert metric on the unit ball: distances, metric balls, figures, and verification sweeps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MetricArg {
    Hilbert,
    Hyperbolic,
    J,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Oracle,
    Ch,
    Sh,
    Equalnorm,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Euclidean,
    Hilbert,
    Hyperbolic,
}

#[derive(Subcommand)]
enum Command {
    /// Distance between two points (comma-separated coordinates).
    Dist {
        #[arg(long, value_enum)]
        metric: MetricArg,
        /// First point, e.g. 0.5,0
        #[arg(long)]
        x: String,
        /// Second point, same dimension
        #[arg(long)]
        y: String,
        /// Evaluation path for the Hilbert metric
        #[arg(long, value_enum)]
        method: Option<MethodArg>,
    },
    /// Sample a Hilbert-ball boundary and write it as SVG or CSV.
    Ball {
        /// Ball center in the disk, e.g. 0.75,0
        #[arg(long)]
        center: String,
        /// Ball level (radius in the Hilbert metric)
        #[arg(long)]
        level: f64,
        #[arg(long, default_value_t = 512)]
        samples: usize,
        /// Output path; .svg or .csv decides the format
        #[arg(long)]
        out: PathBuf,
    },
    /// Inclusion radii between Hilbert balls and Euclidean or hyperbolic balls.
    Radii {
        #[arg(long)]
        center: String,
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Euclidean or hyperbolic radius (kinds euclidean / hyperbolic)
        #[arg(long)]
        radius: Option<f64>,
        /// Hilbert level (kind hilbert)
        #[arg(long)]
        level: Option<f64>,
    },
    /// Run a property sweep and print (or write) its JSON report.
    Sweep {
        /// Check id, e.g. thm4_1 or conjecture_1_plus_a
        #[arg(long)]
        check: String,
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long, default_value_t = 2)]
        dimension: usize,
        /// Also write the report JSON to this path
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Write one of the illustrative figures as SVG (1 chord configuration,
    /// 2 far-point rotation, 3 midpoint rotation, 4 Hilbert ball).
    Figure {
        #[arg(long)]
        which: u8,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the acceptance checks and print one pass/fail line per item.
    Verify {
        /// Only run checks whose category or name matches
        #[arg(long)]
        only: Option<String>,
    },
}

fn parse_point(s: &str) -> Result<PointInBall, String> {
    let coords: Result<Vec<f64>, _> = s.split(',').map(|c| c.trim().parse::<f64>()).collect();
    let coords = coords.map_err(|e| format!("cannot parse point '{s}': {e}"))?;
    PointInBall::new(coords).map_err(|e| format!("invalid point '{s}': {e}"))
}

fn cmd_dist(metric: MetricArg, x: &str, y: &str, method: Option<MethodArg>) -> Result<(), String> {
    let x = parse_point(x)?;
    let y = parse_point(y)?;
    if x.dim() != y.dim() {
        return Err(format!("dimension mismatch: {} vs {}", x.dim(), y.dim()));
    }
    let value = match metric {
        MetricArg::Hilbert => {
            let method = match method.unwrap_or(MethodArg::Ch) {
                MethodArg::Oracle => HilbertMethod::CrossRatioOracle,
                MethodArg::Ch => HilbertMethod::ChClosedForm,
                MethodArg::Sh => HilbertMethod::ShIdentity,
                MethodArg::Equalnorm => HilbertMethod::EqualNormForm,
            };
            metrics::hilbert(&x, &y, method)
                .map_err(|e| e.to_string())?
                .value
        }
        MetricArg::Hyperbolic | MetricArg::J => {
            if method.is_some() {
                return Err("--method only applies to the hilbert metric".into());
            }
            match metric {
                MetricArg::Hyperbolic => metrics::hyperbolic(&x, &y),
                _ => metrics::distance_ratio(&x, &y),
            }
        }
    };
    // Shortest round-trip representation; locale-independent by construction.
    println!("{value}");
    Ok(())
}

fn cmd_ball(center: &str, level: f64, samples: usize, out: &PathBuf) -> Result<(), String> {
    let center = parse_point(center)?;
    let boundary = hilbert_ball_boundary(&center, level, samples).map_err(|e| e.to_string())?;
    let rendered = match out.extension().and_then(|e| e.to_str()) {
        Some("svg") => ball_svg(&boundary),
        Some("csv") => ball_csv(&boundary),
        _ => return Err("output path must end in .svg or .csv".into()),
    };
    std::fs::write(out, rendered).map_err(|e| format!("cannot write {}: {e}", out.display()))?;
    println!("wrote {}", out.display());
    Ok(())
}

fn cmd_radii(
    center: &str,
    kind: KindArg,
    radius: Option<f64>,
    level: Option<f64>,
) -> Result<(), String> {
    let center = parse_point(center)?;
    match kind {
        KindArg::Euclidean => {
            let r = radius.ok_or("--radius is required for kind euclidean")?;
            let (l0, l1) = euclidean_to_hilbert_radii(&center, r).map_err(|e| e.to_string())?;
            println!("l0 {l0}");
            println!("l1 {l1}");
        }
        KindArg::Hilbert => {
            let l = level.ok_or("--level is required for kind hilbert")?;
            let (r0, r1) = hilbert_to_euclidean_radii(&center, l).map_err(|e| e.to_string())?;
            println!("r0 {r0}");
            println!("r1 {r1}");
        }
        KindArg::Hyperbolic => {
            let r = radius.ok_or("--radius is required for kind hyperbolic")?;
            let (l0, l1) = hyperbolic_to_hilbert_radii(&center, r).map_err(|e| e.to_string())?;
            println!("l0 {l0}");
            println!("l1 {l1}");
        }
    }
    Ok(())
}

fn cmd_sweep(
    check: &str,
    samples: u64,
    seed: u64,
    tol: f64,
    dimension: usize,
    json: Option<&PathBuf>,
) -> Result<ExitCode, String> {
    let check = CheckId::from_str(check).map_err(|_| format!("unknown check id '{check}'"))?;
    if samples == 0 || !(tol > 0.0) || dimension < 2 {
        return Err("need samples >= 1, tol > 0, dimension >= 2".into());
    }
    let cfg = SweepConfig {
        check,
        samples,
        seed,
        tolerance: tol,
        dimension,
    };
    let report = run_sweep(&cfg);
    let rendered = report.to_json();
    if let Some(path) = json {
        std::fs::write(path, &rendered)
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    }
    println!("{rendered}");
    // Theorem-backed checks gate on violations; conjecture and unboundedness
    // runs are evidence and always exit 0.
    if check.is_theorem_check() && report.violations > 0 {
        Ok(ExitCode::from(1))
    } else {
        Ok(ExitCode::SUCCESS)
    }
}

fn cmd_figure(which: u8, out: &PathBuf) -> Result<(), String> {
    let figure = Figure::from_index(which).ok_or("--which must be 1, 2, 3, or 4")?;
    let svg = figure_svg(figure).map_err(|e| e.to_string())?;
    std::fs::write(out, svg).map_err(|e| format!("cannot write {}: {e}", out.display()))?;
    println!("wrote {}", out.display());
    Ok(())
}

fn cmd_verify(only: Option<&str>) -> ExitCode {
    let outcomes = verify::run_filtered(only);
    if outcomes.is_empty() {
        eprintln!("no checks match the filter");
        return ExitCode::from(2);
    }
    let mut all_passed = true;
    for outcome in &outcomes {
        let status = if outcome.passed { "PASS" } else { "FAIL" };
        println!(
            "[{status}] {:<26} ({:>7.2}s)  {}",
            outcome.name, outcome.elapsed_s, outcome.detail
        );
        all_passed &= outcome.passed;
    }
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("HILBERT_BALL_THREADS") {
        if let Ok(n) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global();
        }
    }
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Dist { metric, x, y, method } => {
            cmd_dist(*metric, x, y, *method).map(|_| ExitCode::SUCCESS)
        }
        Command::Ball { center, level, samples, out } => {
            cmd_ball(center, *level, *samples, out).map(|_| ExitCode::SUCCESS)
        }
        Command::Radii { center, kind, radius, level } => {
            cmd_radii(center, *kind, *radius, *level).map(|_| ExitCode::SUCCESS)
        }
        Command::Sweep { check, samples, seed, tol, dimension, json } => {
            cmd_sweep(check, *samples, *seed, *tol, *dimension, json.as_ref())
        }
        Command::Figure { which, out } => cmd_figure(*which, out).map(|_| ExitCode::SUCCESS),
        Command::Verify { only } => Ok(cmd_verify(only.as_deref())),
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
