//! `cfm` command-line interface.
//!
//! Exit codes: 0 on success, 1 when input data is rejected, 2 on usage errors.
//! Data goes to stdout, diagnostics to stderr.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::evidence::SourceId;
use crate::io::{
    emit_conflict_series, emit_identify, emit_lattice, emit_scenario, emit_series, emit_summary, parse_scenario,
    parse_series, FormatError, LatticeFormat, Scenario,
};
use crate::lattice::{check_monotone, check_normal, full_lattice, leave_one_out, LatticeError, DEFAULT_TOL};
use crate::scenarios::{gen_drift, paper_example, DriftScenarioConfig, ScenarioError};
use crate::stream::{conflict_series, summarize, StreamError, WindowConfig};
use crate::subset::{SourceSubset, SubsetError};

#[derive(Parser, Debug)]
#[command(name = "cfm", version, about = "Measure conflict among interval-valued sources")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the conflict value of every subset of sources.
    Lattice {
        /// Scenario file (JSON); `-` or omitted reads stdin.
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = FormatArg::Table)]
        format: FormatArg,
    },
    /// Leave-one-out deltas, the most conflicting source, and measure checks.
    Identify {
        file: Option<PathBuf>,
        /// Tolerance for the normal/monotone checks.
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Sliding-window conflict over a sensor series CSV.
    Stream(StreamArgs),
    /// Write a built-in scenario or a synthetic drift series.
    Gen(GenArgs),
}

#[derive(Args, Debug)]
struct StreamArgs {
    /// Series file (`time,s1,...`); `-` or omitted reads stdin.
    file: Option<PathBuf>,
    /// Window length in samples.
    #[arg(long, required_unless_present = "window_seconds", conflicts_with = "window_seconds")]
    window: Option<usize>,
    /// Window length in seconds, converted with the median sampling interval.
    #[arg(long)]
    window_seconds: Option<f64>,
    #[arg(long, default_value_t = 1)]
    stride: usize,
    /// Sources to evaluate, e.g. `x2,x3,x4` (default: all).
    #[arg(long)]
    subset: Option<String>,
    /// Append mean/variance/max lines.
    #[arg(long)]
    summary: bool,
}

#[derive(Args, Debug)]
#[command(group = clap::ArgGroup::new("what").required(true).args(["example", "drift"]))]
struct GenArgs {
    /// Built-in four-source example (1, 2 or 3).
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=3))]
    example: Option<u32>,
    /// Synthetic drift series.
    #[arg(long)]
    drift: bool,
    #[arg(long, default_value_t = 4)]
    sensors: usize,
    #[arg(long, default_value_t = 90)]
    duration: usize,
    #[arg(long, default_value_t = 22.0)]
    baseline: f64,
    #[arg(long, default_value_t = 0.2)]
    noise: f64,
    #[arg(long, default_value_t = 1)]
    drifting_sensor: u32,
    #[arg(long, default_value_t = 30)]
    drift_start: usize,
    #[arg(long, default_value_t = 70)]
    drift_end: usize,
    #[arg(long, default_value_t = 8.0)]
    drift_magnitude: f64,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Write to this path instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Table,
    Structured,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Stream(#[from] StreamError),
    #[error(transparent)]
    Scenario(#[from] ScenarioError),
    #[error(transparent)]
    Subset(#[from] SubsetError),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Subset(SubsetError::Syntax(_)) => 2,
            _ => 1,
        }
    }
}

/// Runs the CLI and returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match dispatch(cli.command, stdin) {
        Ok(Output::Stdout(text)) => match stdout.write_all(text.as_bytes()) {
            Ok(()) => 0,
            Err(e) => {
                let _ = writeln!(stderr, "cfm: {e}");
                1
            }
        },
        Ok(Output::Written) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "cfm: {e}");
            e.exit_code()
        }
    }
}

enum Output {
    Stdout(String),
    Written,
}

fn dispatch(command: Command, stdin: &mut dyn Read) -> Result<Output, CliError> {
    match command {
        Command::Lattice { file, format } => {
            let scenario = parse_scenario(&read_input(file, stdin)?)?;
            let lat = full_lattice(&scenario.evidence)?;
            let format = match format {
                FormatArg::Table => LatticeFormat::Table,
                FormatArg::Structured => LatticeFormat::Structured,
            };
            Ok(Output::Stdout(emit_lattice(&lat, format)))
        }
        Command::Identify { file, tol } => {
            let scenario = parse_scenario(&read_input(file, stdin)?)?;
            let lat = full_lattice(&scenario.evidence)?;
            let deltas = leave_one_out(&lat)?;
            Ok(Output::Stdout(emit_identify(&deltas, &check_normal(&lat, tol), &check_monotone(&lat, tol))))
        }
        Command::Stream(args) => run_stream(args, stdin).map(Output::Stdout),
        Command::Gen(args) => run_gen(args),
    }
}

fn run_stream(args: StreamArgs, stdin: &mut dyn Read) -> Result<String, CliError> {
    let series = parse_series(&read_input(args.file, stdin)?)?;
    let window_len = match (args.window, args.window_seconds) {
        (Some(n), _) => n,
        (None, Some(secs)) => {
            let dt = series
                .median_interval()
                .ok_or_else(|| CliError::Usage("--window-seconds needs at least two samples".into()))?;
            let samples = (secs / dt).round();
            if samples.is_nan() || samples < 1.0 {
                return Err(CliError::Usage(format!("--window-seconds {secs} is shorter than one sample")));
            }
            samples as usize
        }
        (None, None) => return Err(CliError::Usage("one of --window or --window-seconds is required".into())),
    };
    let subset = match &args.subset {
        Some(text) => text.parse::<SourceSubset>()?,
        None => SourceSubset::new(series.source_ids().iter().copied()),
    };
    let cfg = WindowConfig::new(window_len, subset).with_stride(args.stride);
    let cs = conflict_series(&series, &cfg)?;
    let mut out = emit_conflict_series(&cs);
    if args.summary {
        out.push_str(&emit_summary(&summarize(&cs)?));
    }
    Ok(out)
}

fn run_gen(args: GenArgs) -> Result<Output, CliError> {
    let text = match args.example {
        Some(k) => emit_scenario(&Scenario { name: format!("example{k}"), evidence: paper_example(k)? }),
        None => {
            let cfg = DriftScenarioConfig {
                n_sensors: args.sensors,
                duration_samples: args.duration,
                baseline: args.baseline,
                noise_amplitude: args.noise,
                drifting_sensor: SourceId(args.drifting_sensor),
                drift_start: args.drift_start,
                drift_end: args.drift_end,
                drift_magnitude: args.drift_magnitude,
                seed: args.seed,
            };
            emit_series(&gen_drift(&cfg)?)
        }
    };
    match args.out {
        Some(path) => {
            fs::write(&path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
            Ok(Output::Written)
        }
        None => Ok(Output::Stdout(text)),
    }
}

fn read_input(file: Option<PathBuf>, stdin: &mut dyn Read) -> Result<String, CliError> {
    match file {
        Some(path) if path.as_os_str() != "-" => {
            fs::read_to_string(&path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
        }
        _ => {
            let mut text = String::new();
            stdin.read_to_string(&mut text).map_err(|source| CliError::Io { path: "<stdin>".into(), source })?;
            Ok(text)
        }
    }
}
