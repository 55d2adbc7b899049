//! `g3bell`: run the grade and CHSH audits and print a report.
//!
//! Exit codes: 0 every claim confirmed, 1 some claim not confirmed,
//! 2 invalid configuration, 3 output failure.

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use g3bell::{emit, run_audit, AuditConfig, OutputFormat, Vector3};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "g3bell",
    version,
    about = "Audit the grade structure and CHSH bounds of the trivector Bell model"
)]
struct Args {
    /// Tolerance below which a grade counts as absent.
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,

    /// Step of the probability grid over [0, 1].
    #[arg(long = "p-step", default_value_t = 0.05)]
    p_step: f64,

    /// CHSH setting angles A,A',B,B' in degrees.
    #[arg(long, value_parser = parse_angles, default_value = "0,90,45,135", allow_hyphen_values = true)]
    angles: [f64; 4],

    /// Monte Carlo trials per scalarizer.
    #[arg(long, default_value_t = 10_000)]
    trials: usize,

    #[arg(long, default_value_t = 42)]
    seed: u64,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Extra setting pair x1,y1,z1:x2,y2,z2 (unit vectors); repeatable.
    #[arg(long = "pair", value_parser = parse_pair, allow_hyphen_values = true)]
    pairs: Vec<(Vector3, Vector3)>,

    /// Reference axis x,y,z of the component-sign scalarizer.
    #[arg(long, value_parser = parse_vector, default_value = "0,0,1", allow_hyphen_values = true)]
    axis: Vector3,
}

fn parse_reals(s: &str) -> Result<Vec<f64>, String> {
    s.split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|e| format!("`{t}`: {e}")))
        .collect()
}

fn parse_angles(s: &str) -> Result<[f64; 4], String> {
    parse_reals(s)?
        .try_into()
        .map_err(|v: Vec<f64>| format!("expected 4 angles, got {}", v.len()))
}

fn parse_vector(s: &str) -> Result<Vector3, String> {
    match parse_reals(s)?.as_slice() {
        &[x, y, z] => Ok(Vector3::new(x, y, z)),
        other => Err(format!("expected 3 components, got {}", other.len())),
    }
}

fn parse_pair(s: &str) -> Result<(Vector3, Vector3), String> {
    let (a, b) = s
        .split_once(':')
        .ok_or_else(|| format!("expected x1,y1,z1:x2,y2,z2, got `{s}`"))?;
    Ok((parse_vector(a)?, parse_vector(b)?))
}

impl From<Args> for AuditConfig {
    fn from(args: Args) -> Self {
        AuditConfig {
            tolerance: args.tol,
            p_step: args.p_step,
            angles: args.angles,
            trials: args.trials,
            seed: args.seed,
            format: match args.format {
                Format::Text => OutputFormat::Text,
                Format::Json => OutputFormat::Json,
            },
            pairs: args.pairs,
            axis: args.axis,
        }
    }
}

fn main() -> ExitCode {
    let config = AuditConfig::from(Args::parse());
    let report = match run_audit(&config) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("g3bell: {e}");
            return ExitCode::from(2);
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    if let Err(e) = emit(&report, config.format, &mut out).and_then(|_| out.flush()) {
        eprintln!("g3bell: failed to write report: {e}");
        return ExitCode::from(3);
    }
    ExitCode::from(report.exit_code() as u8)
}
