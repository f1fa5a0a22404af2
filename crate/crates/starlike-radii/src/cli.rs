//! Command-line front end: `radius`, `verify`, `bounds`, and `table`.
//!
//! Primary output (JSON, CSV, or a text table) goes to stdout; diagnostics
//! go to stderr. Exit codes: 0 success, 1 verification failure, 2 invalid
//! arguments. `STARLIKE_RADIUS_THREADS` caps internal parallelism.

use clap::{Parser, Subcommand};
use std::ffi::OsString;

use crate::analytic::Family;
use crate::bounds::{factor_bound, factor_modulus_range, member_bound, member_growth_range};
use crate::harness::{
    emit_table, fmt_f64, radius_report_json, verify_all, verify_lemmas, verify_radii,
    TableFormat, VerificationConfig,
};
use crate::radii::{radius_report, RadiusQuery};
use crate::regions::Region;

#[derive(Parser)]
#[command(
    name = "starlike-radii",
    version,
    about = "Radii of starlikeness for the classes T1 and T2: closed forms, \
             an independent numeric solver, and verification suites"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the radius report for one (family, region) query as JSON.
    Radius {
        /// Function family: t1 or t2.
        #[arg(long)]
        family: String,
        /// Target region: halfplane, disc, janowski, parabola, exp,
        /// cardioid, sine, lune, rational, nephroid, sigmoid.
        #[arg(long)]
        target: String,
        /// Order parameter for the halfplane and disc targets (default 0).
        #[arg(long, allow_negative_numbers = true)]
        alpha: Option<f64>,
        /// Janowski A parameter (default 1).
        #[arg(long = "A", allow_negative_numbers = true)]
        a: Option<f64>,
        /// Janowski B parameter (default -1).
        #[arg(long = "B", allow_negative_numbers = true)]
        b: Option<f64>,
        /// Numeric solver tolerance.
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Run verification suites and print the report as JSON.
    Verify {
        /// Suite group: all, radii, or lemmas.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Seed for the randomized suites.
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Random factors/members per family.
        #[arg(long)]
        samples: Option<usize>,
        /// Points sampled per circle.
        #[arg(long)]
        boundary_samples: Option<usize>,
        /// Pass threshold for radius oracle agreement.
        #[arg(long)]
        radius_tol: Option<f64>,
        /// Pass threshold for sharpness residuals.
        #[arg(long)]
        residual_tol: Option<f64>,
        /// Additive slack for the dominance inequalities.
        #[arg(long)]
        dominance_slack: Option<f64>,
    },
    /// Print the member bound and growth range at a radius as JSON.
    Bounds {
        /// Function family: t1 or t2.
        #[arg(long)]
        family: String,
        /// Radius in [0, 1).
        #[arg(long, allow_negative_numbers = true)]
        r: f64,
    },
    /// Emit the 20-row catalog table.
    Table {
        /// Output format: json, csv, or text.
        #[arg(long, default_value = "text")]
        format: String,
    },
}

/// Parses argv and runs one command, returning the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    if let Err(message) = configure_threads() {
        eprintln!("{message}");
        return 2;
    }
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{err}");
                    0
                }
                _ => {
                    let rendered = err.to_string();
                    let first_line = rendered
                        .lines()
                        .find(|line| !line.trim().is_empty())
                        .unwrap_or("invalid arguments");
                    eprintln!("{first_line}");
                    2
                }
            };
        }
    };
    match cli.command {
        Command::Radius {
            family,
            target,
            alpha,
            a,
            b,
            tol,
        } => radius_command(&family, &target, alpha, a, b, tol),
        Command::Verify {
            suite,
            seed,
            samples,
            boundary_samples,
            radius_tol,
            residual_tol,
            dominance_slack,
        } => verify_command(
            &suite,
            seed,
            samples,
            boundary_samples,
            radius_tol,
            residual_tol,
            dominance_slack,
        ),
        Command::Bounds { family, r } => bounds_command(&family, r),
        Command::Table { format } => table_command(&format),
    }
}

fn configure_threads() -> Result<(), String> {
    match std::env::var("STARLIKE_RADIUS_THREADS") {
        Ok(raw) => {
            let threads: usize = raw
                .trim()
                .parse()
                .ok()
                .filter(|&n| n >= 1)
                .ok_or_else(|| {
                    format!("STARLIKE_RADIUS_THREADS must be a positive integer, got {raw:?}")
                })?;
            // Ignore the error if a global pool already exists.
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build_global();
            Ok(())
        }
        Err(std::env::VarError::NotPresent) => Ok(()),
        Err(err) => Err(format!("STARLIKE_RADIUS_THREADS is unreadable: {err}")),
    }
}

fn build_query(
    family: &str,
    target: &str,
    alpha: Option<f64>,
    a: Option<f64>,
    b: Option<f64>,
) -> Result<RadiusQuery, String> {
    let family = Family::parse(family).map_err(|e| e.to_string())?;
    let token = target.to_ascii_lowercase();
    let region = match token.as_str() {
        "halfplane" | "disc" => {
            if a.is_some() || b.is_some() {
                return Err("--A/--B apply only to the janowski target".to_string());
            }
            Region::from_token(&token, alpha.unwrap_or(0.0), 1.0, -1.0)
        }
        "janowski" => {
            if alpha.is_some() {
                return Err("--alpha applies only to the halfplane and disc targets".to_string());
            }
            Region::janowski(a.unwrap_or(1.0), b.unwrap_or(-1.0))
        }
        _ => {
            if alpha.is_some() || a.is_some() || b.is_some() {
                return Err(format!(
                    "target {token} takes no --alpha/--A/--B parameters"
                ));
            }
            Region::from_token(&token, 0.0, 1.0, -1.0)
        }
    }
    .map_err(|e| e.to_string())?;
    Ok(RadiusQuery::new(family, region))
}

fn radius_command(
    family: &str,
    target: &str,
    alpha: Option<f64>,
    a: Option<f64>,
    b: Option<f64>,
    tol: f64,
) -> i32 {
    if tol.is_nan() || tol <= 0.0 {
        eprintln!("tol must be positive, got {tol}");
        return 2;
    }
    let query = match build_query(family, target, alpha, a, b) {
        Ok(query) => query,
        Err(message) => {
            eprintln!("{message}");
            return 2;
        }
    };
    match radius_report(&query, tol) {
        Ok(report) => {
            println!("{}", radius_report_json(&report));
            0
        }
        Err(err) => {
            eprintln!("{err}");
            2
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn verify_command(
    suite: &str,
    seed: u64,
    samples: Option<usize>,
    boundary_samples: Option<usize>,
    radius_tol: Option<f64>,
    residual_tol: Option<f64>,
    dominance_slack: Option<f64>,
) -> i32 {
    let defaults = VerificationConfig::default();
    let config = VerificationConfig {
        seed,
        samples_per_family: samples.unwrap_or(defaults.samples_per_family),
        boundary_samples: boundary_samples.unwrap_or(defaults.boundary_samples),
        radius_tol: radius_tol.unwrap_or(defaults.radius_tol),
        residual_tol: residual_tol.unwrap_or(defaults.residual_tol),
        dominance_slack: dominance_slack.unwrap_or(defaults.dominance_slack),
    };
    if config.samples_per_family < 1 || config.boundary_samples < 1 {
        eprintln!("samples and boundary-samples must be at least 1");
        return 2;
    }
    if !(config.radius_tol > 0.0 && config.residual_tol > 0.0 && config.dominance_slack > 0.0) {
        eprintln!("tolerances must be positive");
        return 2;
    }
    let report = match suite.to_ascii_lowercase().as_str() {
        "all" => verify_all(&config),
        "radii" => verify_radii(&config),
        "lemmas" => verify_lemmas(&config),
        other => {
            eprintln!("unknown suite: {other} (expected all, radii, or lemmas)");
            return 2;
        }
    };
    println!("{}", report.to_json());
    if report.overall {
        0
    } else {
        1
    }
}

fn bounds_command(family: &str, r: f64) -> i32 {
    let family = match Family::parse(family) {
        Ok(family) => family,
        Err(err) => {
            eprintln!("{err}");
            return 2;
        }
    };
    let kind = family.factor_kind();
    let (bound, fbound, growth, modulus) = match (
        member_bound(family, r),
        factor_bound(kind, r),
        member_growth_range(family, r),
        factor_modulus_range(kind, r),
    ) {
        (Ok(bound), Ok(fbound), Ok(growth), Ok(modulus)) => (bound, fbound, growth, modulus),
        _ => {
            eprintln!("r must lie in [0,1), got {r}");
            return 2;
        }
    };
    println!(
        "{{\"family\":\"{}\",\"r\":{},\"member_bound\":{},\"factor_bound\":{},\
         \"growth\":{{\"lo\":{},\"hi\":{}}},\"factor_modulus\":{{\"lo\":{},\"hi\":{}}}}}",
        family.token(),
        fmt_f64(r),
        fmt_f64(bound),
        fmt_f64(fbound),
        fmt_f64(growth.lo),
        fmt_f64(growth.hi),
        fmt_f64(modulus.lo),
        fmt_f64(modulus.hi),
    );
    0
}

fn table_command(format: &str) -> i32 {
    match TableFormat::parse(format) {
        Some(format) => {
            let table = emit_table(format);
            if matches!(format, TableFormat::Json) {
                println!("{table}");
            } else {
                print!("{table}");
            }
            0
        }
        None => {
            eprintln!("unknown format: {format} (expected json, csv, or text)");
            2
        }
    }
}
