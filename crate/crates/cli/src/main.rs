use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use boundwalk_cli::{parse_override, run, RunConfig, Stop, DEFAULT_OUTPUT_LIMIT};
use clap::{ArgGroup, Parser};

/// Synthesize a lattice walk whose projected boundary limit is a target set.
#[derive(Debug, Parser)]
#[command(name = "boundwalk", version)]
#[command(group(ArgGroup::new("stop").required(true).args(["phases", "prefix_length"])))]
struct Cli {
    /// Ambient dimension n (at least 2).
    #[arg(long, short = 'n')]
    dimension: usize,
    /// Target skeleton file (TOML).
    #[arg(long, short = 't')]
    target: PathBuf,
    /// Run through the end of this many phases.
    #[arg(long)]
    phases: Option<usize>,
    /// Emit exactly this many steps.
    #[arg(long)]
    prefix_length: Option<u128>,
    /// Word output: one line of 1-based generator indices per block.
    #[arg(long)]
    word: Option<PathBuf>,
    /// Trace output (CSV, one row per position).
    #[arg(long)]
    trace: Option<PathBuf>,
    /// Convergence report output.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Verify each completed phase and exit 1 if any fails.
    #[arg(long)]
    verify: bool,
    /// Override the tolerance of one phase, as PHASE=VALUE. Repeatable.
    #[arg(long = "tolerance", value_parser = parse_override)]
    tolerances: Vec<(usize, f64)>,
    /// Refuse to write more than this many steps to word/trace files.
    #[arg(long, default_value_t = DEFAULT_OUTPUT_LIMIT)]
    output_limit: u128,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stop = match (cli.phases, cli.prefix_length) {
        (Some(k), None) => Stop::Phases(k),
        (None, Some(n)) => Stop::Prefix(n),
        _ => unreachable!("clap enforces exactly one stopping criterion"),
    };
    let config = RunConfig {
        word: cli.word,
        trace: cli.trace,
        report: cli.report,
        verify: cli.verify,
        tolerance_overrides: cli.tolerances.into_iter().collect::<BTreeMap<_, _>>(),
        output_limit: cli.output_limit,
        ..RunConfig::new(cli.dimension, cli.target, stop)
    };
    match run(&config) {
        Ok(summary) => {
            if let (Some(r), None) = (&summary.report, &config.report) {
                print!("{r}");
            }
            eprintln!("steps={} end={:?}", summary.steps, summary.end.coords());
            if config.verify && !summary.pass() {
                eprintln!("verification failed");
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
