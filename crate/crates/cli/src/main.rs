//! `nmi`: exact normality and integral-closure toolkit for monomial ideals.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand};

use nmi_cli::commands::{self, Direction, Route};
use nmi_cli::report::{Format, Report};
use nmi_cli::{formats, CliError};
use nmi_core::Budget;

#[derive(Parser)]
#[command(
    name = "nmi",
    version,
    about = "Exact normality and integral-closure tests for monomial ideals, \
             edge ideals, and cover ideals, with machine-checkable certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: FormatArg,

    /// Cap on enumerated lattice points / search steps.
    #[arg(long, global = true, default_value_t = 50_000_000)]
    budget_points: u64,

    /// Wall-clock cap in seconds (default: NMI_BUDGET_SECONDS if set).
    #[arg(long, global = true)]
    budget_seconds: Option<u64>,

    /// Print elapsed time to stderr (stdout stays deterministic).
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum FormatArg {
    Text,
    Kv,
}

#[derive(Subcommand)]
enum Command {
    /// Decide normality of a monomial ideal with a certificate.
    Normal {
        ideal_file: PathBuf,
        /// rees: Hilbert basis of the Rees cone (auto defaults to this;
        /// it applies to every ideal); bset: the degree-2 criterion.
        #[arg(long, value_enum, default_value = "auto")]
        route: Route,
    },
    /// Test a monomial for membership in the closure of a power.
    Membership {
        ideal_file: PathBuf,
        /// Monomial such as `t1^2*t3`, or a quoted exponent vector `2 0 1`.
        monomial: String,
        #[arg(long)]
        n: u64,
    },
    /// Minimal generators of the integral closure of a power.
    Closure {
        ideal_file: PathBuf,
        #[arg(long)]
        n: u64,
    },
    /// Hilbert basis of a cone from a matrix block file.
    Hilbert { matrix_file: PathBuf },
    /// One-shot combinatorial and normality report for a graph.
    GraphReport { graph_file: PathBuf },
    /// Integer rounding property of the covering (ge) or packing (le) system.
    Irp {
        ideal_file: PathBuf,
        #[arg(long, value_enum)]
        direction: Direction,
        /// Also scan all right-hand sides in [0, B]^s for counterexamples.
        #[arg(long)]
        falsify_box: Option<u64>,
    },
    /// Minimal vertex covers and the cover ideal of a graph or clutter.
    Covers { graph_file: PathBuf },
    /// Hochster configurations of a graph.
    Hochster { graph_file: PathBuf },
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn parse_monomial_arg(arg: &str, num_vars: usize) -> Result<Vec<u64>, CliError> {
    // Accept either the monomial syntax or a whitespace exponent vector.
    let as_numbers: Result<Vec<u64>, _> = arg.split_whitespace().map(str::parse).collect();
    if let Ok(v) = as_numbers {
        if v.len() == num_vars {
            return Ok(v);
        }
    }
    let pseudo_file = format!("vars {num_vars}\n{arg}\n");
    let ideal = formats::parse_ideal(&pseudo_file)?;
    ideal
        .gens()
        .first()
        .cloned()
        .ok_or_else(|| CliError::Io("empty monomial".into()))
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    let seconds = cli.budget_seconds.or_else(|| {
        std::env::var("NMI_BUDGET_SECONDS")
            .ok()
            .and_then(|s| s.parse().ok())
    });
    let budget = Budget::new(cli.budget_points, seconds.map(Duration::from_secs));

    match &cli.command {
        Command::Normal { ideal_file, route } => {
            let ideal = formats::parse_ideal(&read(ideal_file)?)?;
            commands::cmd_normal(&ideal, *route, &budget)
        }
        Command::Membership {
            ideal_file,
            monomial,
            n,
        } => {
            let ideal = formats::parse_ideal(&read(ideal_file)?)?;
            let m = parse_monomial_arg(monomial, ideal.num_vars())?;
            commands::cmd_membership(&ideal, &m, *n)
        }
        Command::Closure { ideal_file, n } => {
            let ideal = formats::parse_ideal(&read(ideal_file)?)?;
            commands::cmd_closure(&ideal, *n, &budget)
        }
        Command::Hilbert { matrix_file } => {
            let block = formats::parse_matrix_block(&read(matrix_file)?)?;
            commands::cmd_hilbert(&block, &budget)
        }
        Command::GraphReport { graph_file } => {
            let gf = formats::parse_graph_file(&read(graph_file)?)?;
            let graph = gf.graph()?;
            commands::cmd_graph_report(&graph, &budget)
        }
        Command::Irp {
            ideal_file,
            direction,
            falsify_box,
        } => {
            let ideal = formats::parse_ideal(&read(ideal_file)?)?;
            commands::cmd_irp(&ideal, *direction, *falsify_box, &budget)
        }
        Command::Covers { graph_file } => {
            let gf = formats::parse_graph_file(&read(graph_file)?)?;
            commands::cmd_covers(&gf.clutter)
        }
        Command::Hochster { graph_file } => {
            let gf = formats::parse_graph_file(&read(graph_file)?)?;
            let graph = gf.graph()?;
            commands::cmd_hochster(&graph)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = run(&cli);
    let code = match outcome {
        Ok(report) => {
            let format = match cli.format {
                FormatArg::Text => Format::Text,
                FormatArg::Kv => Format::Kv,
            };
            print!("{}", report.render(format));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    };
    if cli.timing {
        eprintln!("elapsed: {:?}", start.elapsed());
    }
    code
}
