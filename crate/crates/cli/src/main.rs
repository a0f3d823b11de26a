#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod commands;
mod evolve;
mod report;
mod units;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{ArgGroup, Args, CommandFactory, Parser, Subcommand, ValueEnum};

use commands::{BouncerParams, CowParams, RedshiftParams};
use evolve::{Demo, EvolveParams};
use report::Report;
use units::UnitSystem;

/// Quantum mechanics in a uniform gravitational field: Airy spectra, bouncer
/// levels, interferometer phases, redshift and frame checks.
#[derive(Parser)]
#[command(name = "freefall", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Airy functions at a point, or the negative zeros of Ai.
    Airy(AiryArgs),
    /// Bouncer levels above a hard floor and the probability above the classical turning point.
    Bouncer(BouncerArgs),
    /// Gravitational phase shift of a neutron interferometer.
    Cow(CowArgs),
    /// Frequency shift between two heights.
    Redshift(RedshiftArgs),
    /// Wave-packet demos on the reference grid.
    Evolve(EvolveArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write the data to FILE instead of standard output.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
#[command(group(ArgGroup::new("mode").required(true).args(["eval", "zeros"])))]
struct AiryArgs {
    /// Evaluate Ai, Ai', Bi, Bi' at X.
    #[arg(long, value_name = "X", allow_hyphen_values = true, value_parser = finite)]
    eval: Option<f64>,
    /// The first N negative zeros of Ai, 1 <= N <= 50.
    #[arg(long, value_name = "N", value_parser = clap::value_parser!(u16).range(1..=freefall::airy::MAX_ZERO_INDEX as i64))]
    zeros: Option<u16>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct BouncerArgs {
    /// Number of levels, 1 <= N <= 50.
    #[arg(long, value_name = "N", value_parser = clap::value_parser!(u16).range(1..=freefall::airy::MAX_ZERO_INDEX as i64))]
    levels: u16,
    /// SI units with the neutron mass and standard gravity. Energies are also shown in peV.
    #[arg(long)]
    si_neutron: bool,
    /// Particle mass (default 0.5, or the neutron mass with --si-neutron).
    #[arg(long, value_parser = positive)]
    mass: Option<f64>,
    /// Gravitational acceleration (default 2, or 9.80665 with --si-neutron).
    #[arg(long, value_parser = positive)]
    g: Option<f64>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct CowArgs {
    /// de Broglie wavelength.
    #[arg(long, value_parser = positive)]
    lambda: f64,
    /// Vertical separation of the beams.
    #[arg(long, value_parser = positive)]
    height: f64,
    /// Horizontal length of the beams.
    #[arg(long, value_parser = positive)]
    length: f64,
    /// Acceleration (default 1, or 9.80665 with --si).
    #[arg(long, allow_hyphen_values = true, value_parser = finite)]
    a: Option<f64>,
    /// Particle mass (default 1, or the neutron mass with --si).
    #[arg(long, value_parser = positive)]
    mass: Option<f64>,
    /// SI units.
    #[arg(long)]
    si: bool,
    /// Also compute the phase from the transit time and report the disagreement.
    #[arg(long)]
    via_transit_time: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct RedshiftArgs {
    /// Height difference.
    #[arg(long, allow_hyphen_values = true, value_parser = finite)]
    z: f64,
    /// SI units.
    #[arg(long)]
    si: bool,
    /// Acceleration (default 1, or 9.80665 with --si).
    #[arg(long, allow_hyphen_values = true, value_parser = finite)]
    a: Option<f64>,
    /// Particle mass (default 1, or the neutron mass with --si).
    #[arg(long, value_parser = positive)]
    mass: Option<f64>,
    /// Speed of light (default 1, or the SI value with --si).
    #[arg(long, value_parser = positive)]
    c: Option<f64>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct EvolveArgs {
    #[arg(long, value_enum)]
    demo: Demo,
    /// Time step.
    #[arg(long, default_value_t = 1e-4, value_parser = positive)]
    dt: f64,
    /// Grid points on [-20, 30].
    #[arg(long, default_value_t = 4096, value_parser = clap::value_parser!(u32).range(16..))]
    points: u32,
    /// Total evolution time.
    #[arg(long, default_value_t = 1.0, value_parser = positive)]
    duration: f64,
    /// Record moments every K steps.
    #[arg(long, value_name = "K", default_value_t = 100, value_parser = clap::value_parser!(u32).range(1..))]
    sample_every: u32,
    #[command(flatten)]
    output: OutputArgs,
}

fn finite(s: &str) -> Result<f64, String> {
    let x: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if x.is_finite() {
        Ok(x)
    } else {
        Err("must be finite".into())
    }
}

fn positive(s: &str) -> Result<f64, String> {
    let x = finite(s)?;
    if x > 0.0 {
        Ok(x)
    } else {
        Err("must be positive".into())
    }
}

fn usage_error(kind: ErrorKind, message: &str) -> ! {
    Cli::command().error(kind, message).exit()
}

fn emit(report: &Report, format: Format, out: Option<&PathBuf>) -> io::Result<()> {
    let mut sink: Box<dyn Write> = match out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    match format {
        Format::Table => report.write_table(&mut sink)?,
        Format::Csv => report.write_csv(&mut sink)?,
        Format::Json => report.write_json(&mut sink)?,
    }
    sink.flush()?;
    drop(sink);
    if format != Format::Table {
        if let Some(line) = report.summary_line() {
            if out.is_some() {
                println!("{line}");
            } else {
                eprintln!("{line}");
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (result, output, default_format) = match &cli.command {
        Command::Airy(a) => {
            let r = match (a.eval, a.zeros) {
                (Some(x), _) => commands::airy_eval(x),
                (None, Some(n)) => commands::airy_zeros(n as usize),
                (None, None) => unreachable!("clap requires one mode"),
            };
            (r, &a.output, Format::Table)
        }
        Command::Bouncer(b) => {
            let p = BouncerParams {
                levels: b.levels as usize,
                units: UnitSystem::from_flag(b.si_neutron),
                mass: b.mass,
                g: b.g,
            };
            (commands::bouncer(&p), &b.output, Format::Table)
        }
        Command::Cow(c) => {
            let p = CowParams {
                units: UnitSystem::from_flag(c.si),
                lambda: c.lambda,
                height: c.height,
                length: c.length,
                a: c.a,
                mass: c.mass,
                via_transit_time: c.via_transit_time,
            };
            (commands::cow(&p), &c.output, Format::Table)
        }
        Command::Redshift(z) => {
            let p = RedshiftParams {
                units: UnitSystem::from_flag(z.si),
                z: z.z,
                a: z.a,
                mass: z.mass,
                c: z.c,
            };
            (commands::redshift(&p), &z.output, Format::Table)
        }
        Command::Evolve(e) => {
            let format = e.output.format.unwrap_or(Format::Csv);
            if format != Format::Table && e.output.out.is_none() {
                usage_error(
                    ErrorKind::MissingRequiredArgument,
                    "evolve with csv or json output requires --out FILE",
                );
            }
            let p = EvolveParams {
                demo: e.demo,
                dt: e.dt,
                points: e.points as usize,
                duration: e.duration,
                sample_every: e.sample_every as usize,
            };
            (evolve::evolve(&p), &e.output, Format::Csv)
        }
    };
    let report = match result {
        Ok(r) => r,
        Err(e @ freefall::Error::Parameter { .. }) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let format = output.format.unwrap_or(default_format);
    match emit(&report, format, output.out.as_ref()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: cannot write output: {e}");
            ExitCode::from(1)
        }
    }
}
