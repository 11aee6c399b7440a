use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use coronadim_core::metric::representation;
use coronadim_core::report::{
    run_family, run_graph, run_instances, write_csv, write_json_lines, RunOptions, Summary, Verdict,
};
use coronadim_core::resolver::collisions;
use coronadim_core::suite::{corpus, Selection, DEFAULT_SEED};
use coronadim_core::{all_pairs, is_resolving, parse_graph_expr, Family, Graph, LandmarkSet, SolverBudget};

#[derive(Parser)]
#[command(name = "coronadim", version, about = "Metric dimension of corona product graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the metric dimension of one graph and compare it with every applicable formula.
    Dim {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Include wall-clock time in the record.
        #[arg(long)]
        timings: bool,
    },
    /// Test whether a landmark set resolves a graph.
    Check {
        #[command(flatten)]
        input: Input,
        /// Comma-separated landmark vertices.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        landmarks: Vec<usize>,
    },
    /// Print a graph in edge-list format.
    Edges { expr: String },
    /// Run a built-in corpus through the solver and the formulas.
    Crossvalidate {
        #[arg(long, default_value = "all")]
        suite: Selection,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Include wall-clock time in each record. Makes output run-dependent.
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Args)]
struct Input {
    /// Graph expression, e.g. `corona(path(2), cycle(7))`.
    #[arg(required_unless_present = "from_file", conflicts_with = "from_file")]
    expr: Option<String>,
    /// Read the graph from an edge-list file instead.
    #[arg(long)]
    from_file: Option<PathBuf>,
}

#[derive(Args)]
struct BudgetArgs {
    /// Largest landmark set to try.
    #[arg(long)]
    budget_size: Option<usize>,
    /// Time limit for one search, in milliseconds.
    #[arg(long, default_value_t = 60_000)]
    budget_time_ms: u64,
}

impl BudgetArgs {
    fn budget(&self) -> SolverBudget {
        SolverBudget {
            max_subset_size: self.budget_size,
            time_limit: Duration::from_millis(self.budget_time_ms),
            ..SolverBudget::default()
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

type CliResult<T> = Result<T, Box<dyn std::error::Error>>;

enum Loaded {
    Expr(Family),
    File(Graph),
}

impl Input {
    fn load(&self) -> CliResult<Loaded> {
        if let Some(path) = &self.from_file {
            let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            return Ok(Loaded::File(Graph::from_edge_list(&text)?));
        }
        let text = self.expr.as_deref().unwrap_or_default();
        Ok(Loaded::Expr(parse_graph_expr(text)?.family))
    }
}

impl Loaded {
    fn graph(&self) -> CliResult<Graph> {
        Ok(match self {
            Loaded::Expr(f) => f.build()?,
            Loaded::File(g) => g.clone(),
        })
    }
}

fn dim(input: &Input, budget: &BudgetArgs, timings: bool) -> CliResult<ExitCode> {
    let budget = budget.budget();
    let opts = RunOptions {
        budget: &budget,
        timings,
    };
    let record = match input.load()? {
        Loaded::Expr(f) => run_family("dim", None, &f, opts)?,
        Loaded::File(g) => run_graph("dim", &g, opts)?,
    };
    writeln!(io::stdout().lock(), "{}", record.to_json())?;
    Ok(if record.verdict == Verdict::Mismatch {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    })
}

fn check(input: &Input, landmarks: &[usize]) -> CliResult<ExitCode> {
    let g = input.load()?.graph()?;
    let s = LandmarkSet::new(landmarks.to_vec(), g.order())?;
    let dm = all_pairs(&g);
    let resolving = is_resolving(&dm, &s)?;
    let mut out = io::stdout().lock();
    writeln!(out, "{} {}", s, if resolving { "resolving" } else { "not resolving" })?;
    for v in g.vertices() {
        writeln!(out, "{v} {}", representation(&dm, v, s.as_slice())?)?;
    }
    for class in collisions(&dm, &s)? {
        let ids: Vec<String> = class.iter().map(ToString::to_string).collect();
        writeln!(out, "collision {}", ids.join(" "))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn crossvalidate(
    selection: Selection,
    seed: u64,
    out: Option<&PathBuf>,
    format: Format,
    budget: &BudgetArgs,
    timings: bool,
) -> CliResult<ExitCode> {
    let budget = budget.budget();
    let instances = corpus(selection, seed);
    let records = run_instances(
        &instances,
        RunOptions {
            budget: &budget,
            timings,
        },
    )?;
    let sink: Box<dyn Write> = match out {
        Some(path) => Box::new(File::create(path).map_err(|e| format!("{}: {e}", path.display()))?),
        None => Box::new(io::stdout().lock()),
    };
    let mut sink = BufWriter::new(sink);
    match format {
        Format::Json => write_json_lines(&mut sink, &records)?,
        Format::Csv => write_csv(&mut sink, &records)?,
    }
    sink.flush()?;
    let summary = Summary::of(&records);
    eprintln!("{summary}");
    for r in records.iter().filter(|r| r.is_failure()) {
        eprintln!("failed: {} {} {:?}", r.id, r.expr, r.verdict);
    }
    Ok(if summary.failures() > 0 {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    })
}

fn run(cli: Cli) -> CliResult<ExitCode> {
    match &cli.command {
        Command::Dim { input, budget, timings } => dim(input, budget, *timings),
        Command::Check { input, landmarks } => check(input, landmarks),
        Command::Edges { expr } => {
            print!("{}", parse_graph_expr(expr)?.family.build()?.to_edge_list());
            Ok(ExitCode::SUCCESS)
        }
        Command::Crossvalidate {
            suite,
            seed,
            out,
            format,
            budget,
            timings,
        } => crossvalidate(*suite, *seed, out.as_ref(), *format, budget, *timings),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
