use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use rainbow_ears::builder::BuildError;
use rainbow_ears::generators::{generate, FamilySpec};
use rainbow_ears::oracle::{exact_rc, OracleError, OracleLimits};
use rainbow_ears::toolkit::{format_coloring, metrics_report, parse_coloring, run_color, ColorOptions, ToolkitError};
use rainbow_ears::verify::{is_rainbow_connected_with, VerifyError, VerifyOptions};
use rainbow_ears::{parse_edge_list, theorem2_bound, Exec, Graph, GraphError};

const EXIT_FAILURE: u8 = 1;
const EXIT_PARSE: u8 = 3;
const EXIT_DISCONNECTED: u8 = 4;
const EXIT_CAPACITY: u8 = 5;
const EXIT_NOT_RAINBOW: u8 = 6;
const EXIT_INTERNAL: u8 = 7;

#[derive(Parser)]
#[command(name = "rainbow-ears", version, about = "Rainbow edge colorings bounded by radius and bridges")]
struct Cli {
    /// Worker threads for parallel phases (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Edge-list file; standard input when omitted.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Print n, m, radius, diameter, centers and bridge count.
    Metrics(Input),
    /// Print the color bound and the per-stage bridge counts.
    Bound(Input),
    /// Build a coloring; writes `u v c` lines and a report.
    Color {
        #[command(flatten)]
        input: Input,
        /// Coloring destination; standard output when omitted.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Report destination; standard error when omitted.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Check the coloring for rainbow connectivity.
        #[arg(long)]
        verify: bool,
        /// Keep one rainbow path per pair in the report (implies --verify).
        #[arg(long)]
        witnesses: bool,
        /// Record wall-clock phase timings in the report.
        #[arg(long)]
        timings: bool,
    },
    /// Check an existing coloring for rainbow connectivity.
    Verify {
        #[command(flatten)]
        input: Input,
        /// Coloring file with `u v c` lines.
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long)]
        witnesses: bool,
    },
    /// Exact rainbow connection number by exhaustive search (tiny graphs only).
    Exact {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 9)]
        max_edges: usize,
        #[arg(long, default_value_t = 64)]
        max_colors: usize,
        #[arg(long, default_value_t = 60.0)]
        time_budget: f64,
    },
    /// Print a generated graph as an edge list.
    Gen(GenArgs),
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum Family {
    Cycle,
    Path,
    Star,
    Theta,
    RandomConnected,
    RandomTree,
    BarbellBridge,
    CycleWithPendants,
}

#[derive(Args)]
struct GenArgs {
    family: Family,
    /// Vertex count (cycle, path, random families, cycle_with_pendants) or leaf count (star).
    #[arg(long)]
    n: Option<usize>,
    /// Edge probability for random_connected.
    #[arg(long)]
    p: Option<f64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Theta arm lengths, e.g. 2,3,4.
    #[arg(long, value_delimiter = ',')]
    arms: Vec<usize>,
    /// Cycle vertices receiving a pendant, e.g. 0,3.
    #[arg(long, value_delimiter = ',')]
    attach: Vec<usize>,
    #[arg(long)]
    clique: Option<usize>,
    #[arg(long)]
    bridge_len: Option<usize>,
}

struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        let error = e.into();
        let code = exit_code(&error);
        Failure { code, error }
    }
}

fn graph_code(e: &GraphError) -> u8 {
    match e {
        GraphError::Disconnected => EXIT_DISCONNECTED,
        _ => EXIT_PARSE,
    }
}

fn exit_code(error: &anyhow::Error) -> u8 {
    if let Some(e) = error.downcast_ref::<GraphError>() {
        return graph_code(e);
    }
    if let Some(e) = error.downcast_ref::<BuildError>() {
        return match e {
            BuildError::Graph(g) => graph_code(g),
            BuildError::Stage { .. } => EXIT_INTERNAL,
        };
    }
    if let Some(e) = error.downcast_ref::<OracleError>() {
        return match e {
            OracleError::Graph(g) => graph_code(g),
            _ => EXIT_CAPACITY,
        };
    }
    if let Some(e) = error.downcast_ref::<VerifyError>() {
        return match e {
            VerifyError::TooManyColors(_) => EXIT_CAPACITY,
            _ => EXIT_PARSE,
        };
    }
    if let Some(e) = error.downcast_ref::<ToolkitError>() {
        return match e {
            ToolkitError::ColoringFormat { .. } => EXIT_PARSE,
            ToolkitError::Graph(g) => graph_code(g),
            ToolkitError::Build(BuildError::Graph(g)) => graph_code(g),
            ToolkitError::Build(BuildError::Stage { .. }) => EXIT_INTERNAL,
            ToolkitError::Verify(VerifyError::TooManyColors(_)) => EXIT_CAPACITY,
            ToolkitError::Verify(_) => EXIT_PARSE,
            ToolkitError::Serialize(_) => EXIT_FAILURE,
        };
    }
    EXIT_FAILURE
}

fn read_text(path: Option<&Path>) -> anyhow::Result<String> {
    match path {
        Some(p) => fs::read_to_string(p).with_context(|| format!("reading {}", p.display())),
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).context("reading standard input")?;
            Ok(s)
        }
    }
}

fn read_graph(input: &Input) -> Result<Graph, Failure> {
    let g = parse_edge_list(&read_text(input.input.as_deref())?)?;
    if !rainbow_ears::graph::is_connected(&g) {
        return Err(GraphError::Disconnected.into());
    }
    Ok(g)
}

fn write_to(path: Option<&Path>, text: &str, fallback: &mut dyn Write) -> anyhow::Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => Ok(fallback.write_all(text.as_bytes())?),
    }
}

fn family_spec(args: &GenArgs) -> anyhow::Result<FamilySpec> {
    let need = |v: Option<usize>, flag: &str| v.with_context(|| format!("--{flag} is required for this family"));
    Ok(match args.family {
        Family::Cycle => FamilySpec::Cycle { n: need(args.n, "n")? },
        Family::Path => FamilySpec::Path { n: need(args.n, "n")? },
        Family::Star => FamilySpec::Star { leaves: need(args.n, "n")? },
        Family::Theta => FamilySpec::Theta { arms: args.arms.clone() },
        Family::RandomConnected => FamilySpec::RandomConnected {
            n: need(args.n, "n")?,
            p: args.p.context("--p is required for random_connected")?,
            seed: args.seed,
        },
        Family::RandomTree => FamilySpec::RandomTree { n: need(args.n, "n")?, seed: args.seed },
        Family::BarbellBridge => FamilySpec::BarbellBridge {
            clique: need(args.clique, "clique")?,
            bridge_len: need(args.bridge_len, "bridge-len")?,
        },
        Family::CycleWithPendants => FamilySpec::CycleWithPendants { n: need(args.n, "n")?, attach: args.attach.clone() },
    })
}

fn run(cli: Cli) -> Result<u8, Failure> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global()?;
    }
    let mut stdout = io::stdout().lock();
    match cli.command {
        Command::Metrics(input) => {
            let g = read_graph(&input)?;
            write!(stdout, "{}", toml::to_string(&metrics_report(&g)?)?)?;
        }
        Command::Bound(input) => {
            let g = read_graph(&input)?;
            write!(stdout, "{}", toml::to_string(&theorem2_bound(&g)?)?)?;
        }
        Command::Color { input, output, report, verify, witnesses, timings } => {
            let g = read_graph(&input)?;
            let opts = ColorOptions {
                verify: verify || witnesses,
                verify_opts: VerifyOptions { witnesses, exec: Exec::default() },
                timings,
            };
            let run = run_color(&g, opts)?;
            write_to(output.as_deref(), &format_coloring(&run.result.coloring), &mut stdout)?;
            let mut text = run.report.to_toml()?;
            if let Some(v) = &run.verification {
                text.push_str("\n[verification]\n");
                text.push_str(&toml::to_string(v)?);
            }
            write_to(report.as_deref(), &text, &mut io::stderr())?;
            if run.report.verified == Some(false) {
                return Ok(EXIT_NOT_RAINBOW);
            }
        }
        Command::Verify { input, coloring, witnesses } => {
            let g = read_graph(&input)?;
            let c = parse_coloring(&read_text(Some(&coloring))?, &g)?;
            let report = is_rainbow_connected_with(&g, &c, VerifyOptions { witnesses, exec: Exec::default() })?;
            write!(stdout, "{}", toml::to_string(&report)?)?;
            if !report.ok {
                return Ok(EXIT_NOT_RAINBOW);
            }
        }
        Command::Exact { input, max_edges, max_colors, time_budget } => {
            let g = read_graph(&input)?;
            let budget = Duration::try_from_secs_f64(time_budget).context("--time-budget must be nonnegative")?;
            let limits = OracleLimits { max_edges, max_colors, time_budget: budget };
            writeln!(stdout, "{}", exact_rc(&g, limits)?)?;
        }
        Command::Gen(args) => {
            let g = generate(&family_spec(&args)?)?;
            write!(stdout, "{}", g.to_edge_list())?;
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(Failure { code, error }) => {
            eprintln!("error: {error:#}");
            ExitCode::from(code)
        }
    }
}
