//! Thin command-line front end; all work happens in the library.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use quiver_dt::job::{self, Command, JobSpec, OutputFormat, QuiverInput, VarDisplay};

#[derive(Parser)]
#[command(name = "quiver-dt", version, about = "Exact refined Donaldson-Thomas invariants of quivers")]
struct Cli {
    #[command(subcommand)]
    command: CliCommand,
}

#[derive(Subcommand)]
enum CliCommand {
    /// DT invariants of a symmetric quiver
    Dt(CommonArgs),
    /// Framed (non-commutative Hilbert scheme) generating series
    Framed(CommonArgs),
    /// Motives of the framed moduli spaces
    Hilb(CommonArgs),
    /// Harder-Narasimhan semistable classes and the wall-crossing check
    Wallcross(CommonArgs),
    /// Dimension reduction: DT of the loop-augmented quiver with trace potential
    Dimred(CommonArgs),
    /// Count representations over small finite fields and interpolate
    Count(CommonArgs),
    /// Run the built-in verification suite
    Selfcheck(SelfcheckArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Quiver description file (JSON)
    input: PathBuf,
    /// Truncation: maximal total degree of dimension vectors
    #[arg(long = "trunc", default_value_t = 4)]
    trunc: u32,
    /// Stability weights, comma separated (overrides the input file)
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    theta: Option<Vec<i64>>,
    /// Framing vector, comma separated (overrides the input file)
    #[arg(long, value_delimiter = ',')]
    framing: Option<Vec<u32>>,
    /// File with one path relation per line (arrow labels a0, a1, ...)
    #[arg(long)]
    relations: Option<PathBuf>,
    /// Output format: table | json
    #[arg(long, default_value = "table")]
    format: String,
    /// Variable display: Lhalf | x | q
    #[arg(long, default_value = "Lhalf")]
    var: String,
    /// Enumeration budget for the counting oracle
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Args)]
struct SelfcheckArgs {
    /// Output format: table | json
    #[arg(long, default_value = "table")]
    format: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, args) = match cli.command {
        CliCommand::Dt(a) => (Command::Dt, Some(a)),
        CliCommand::Framed(a) => (Command::Framed, Some(a)),
        CliCommand::Hilb(a) => (Command::Hilb, Some(a)),
        CliCommand::Wallcross(a) => (Command::Wallcross, Some(a)),
        CliCommand::Dimred(a) => (Command::Dimred, Some(a)),
        CliCommand::Count(a) => (Command::Count, Some(a)),
        CliCommand::Selfcheck(a) => {
            let mut job = JobSpec::new(Command::Selfcheck);
            job.format = match parse_format(&a.format) {
                Ok(f) => f,
                Err(code) => return code,
            };
            return execute(job);
        }
    };
    let args = args.expect("non-selfcheck commands carry arguments");
    let mut job = JobSpec::new(command);
    job.truncation = args.trunc;
    job.theta = args.theta;
    job.framing = args.framing;
    job.format = match parse_format(&args.format) {
        Ok(f) => f,
        Err(code) => return code,
    };
    job.var = match VarDisplay::parse(&args.var) {
        Some(v) => v,
        None => {
            eprintln!("error: unknown variable display \"{}\" (expected Lhalf, x, or q)", args.var);
            return ExitCode::from(2);
        }
    };
    if let Some(b) = args.budget {
        job.budget = b;
    }
    match std::fs::read_to_string(&args.input) {
        Ok(text) => match serde_json::from_str::<QuiverInput>(&text) {
            Ok(q) => job.quiver = Some(q),
            Err(e) => {
                eprintln!("error: cannot parse {}: {e}", args.input.display());
                return ExitCode::from(2);
            }
        },
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", args.input.display());
            return ExitCode::from(2);
        }
    }
    if let Some(path) = &args.relations {
        match std::fs::read_to_string(path) {
            Ok(text) => {
                job.relations = Some(
                    text.lines()
                        .map(str::trim)
                        .filter(|l| !l.is_empty() && !l.starts_with('#'))
                        .map(String::from)
                        .collect(),
                );
            }
            Err(e) => {
                eprintln!("error: cannot read {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
    }
    execute(job)
}

fn parse_format(s: &str) -> Result<OutputFormat, ExitCode> {
    match s {
        "table" => Ok(OutputFormat::Table),
        "json" => Ok(OutputFormat::Json),
        other => {
            eprintln!("error: unknown format \"{other}\" (expected table or json)");
            Err(ExitCode::from(2))
        }
    }
}

fn execute(job: JobSpec) -> ExitCode {
    let start = Instant::now();
    let outcome = job::run(&job);
    print!("{}", outcome.report.render(job.format));
    eprintln!("elapsed: {:.3}s", start.elapsed().as_secs_f64());
    ExitCode::from(outcome.exit_code as u8)
}
