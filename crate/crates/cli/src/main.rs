//! `minorkit` command-line tool.
//!
//! Exit codes: `eval` returns 0 when the property holds, 1 when it does not
//! and 2 on error. Every other command returns 0 on success, 1 when a
//! verification fails, 2 on error and 3 when the time budget runs out.

mod output;
mod resolve;

use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use minorkit::canon::{canonical_form, enumerate_by_order};
use minorkit::catalog;
use minorkit::formats::{decode_edge_lists, decode_graph6, encode_edge_list, encode_graph6};
use minorkit::miner::{self, AugmentOp, Checkpoint, MineConfig, ObstructionReport};
use minorkit::par::{self, Exec};
use minorkit::property::{parse_property, Prop};
use minorkit::{Error, Graph};
use serde_json::json;

const EXIT_FAIL: u8 = 1;
const EXIT_ERROR: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "minorkit", version, about = "Graph minors, minor-closed properties and obstruction sets")]
struct Cli {
    /// Worker threads; defaults to the available parallelism. 1 runs serially.
    #[arg(long, global = true)]
    workers: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TargetArg {
    /// Mine the graphs that fail the property.
    Not,
    /// Mine the graphs that satisfy the property.
    Direct,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exhaustive,
    Constructive,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Graph6,
    EdgeList,
}

#[derive(clap::Args)]
struct OutArgs {
    /// Directory for reports and the manifest.
    #[arg(long, env = "MINORKIT_OUT_DIR", default_value = "minorkit-out")]
    out_dir: PathBuf,

    /// Report file; defaults to a name derived from the run inside the output directory.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Leave out the runtime sidecar so identical runs write identical bytes.
    #[arg(long)]
    comparison: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a property on one graph.
    Eval {
        #[arg(long)]
        property: String,
        /// Catalog name, graph6 string, or edge-list file.
        #[arg(long)]
        graph: String,
    },
    /// Mine a minor-minimal obstruction set.
    Mine {
        #[arg(long)]
        property: String,
        #[arg(long, value_enum, default_value = "not")]
        target: TargetArg,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "exhaustive")]
        mode: Mode,
        /// Constructive seeds: a set name or comma list of graphs.
        #[arg(long, default_value = "kuratowski")]
        seed: String,
        /// Constructive operations, comma separated.
        #[arg(long, value_delimiter = ',', default_value = "disjoint-k2,dotcup-k2,add-edge,vertex-split")]
        ops: Vec<String>,
        #[arg(long, default_value_t = 1)]
        rounds: usize,
        /// Stop after this many seconds and write a checkpoint.
        #[arg(long)]
        budget_seconds: Option<f64>,
        /// Continue from a checkpoint file.
        #[arg(long)]
        resume: Option<PathBuf>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Check a candidate obstruction set layer by layer.
    Verify {
        /// Set name (fig3, sap, kuratowski), comma list, or file.
        #[arg(long)]
        set: String,
        #[arg(long)]
        property: String,
        #[arg(long, value_enum, default_value = "not")]
        target: TargetArg,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    /// List all graphs up to an order, one graph6 line each.
    Enum {
        #[arg(long)]
        max_n: usize,
        /// Print "n: count" per order instead of the graphs.
        #[arg(long)]
        count_only: bool,
    },
    /// Print the canonical graph6 of a graph.
    Canon {
        #[arg(long)]
        graph: String,
    },
    /// Convert between graph6 and edge lists (stdin to stdout by default).
    Convert {
        #[arg(long = "in", value_enum)]
        from: Format,
        #[arg(long = "out", value_enum)]
        to: Format,
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn goal(property: &str, target: TargetArg) -> Result<Prop> {
    let p = parse_property(property).with_context(|| format!("property `{property}`"))?;
    Ok(match target {
        TargetArg::Not => !p,
        TargetArg::Direct => p,
    })
}

fn exec(workers: Option<usize>) -> Exec {
    if workers == Some(1) {
        Exec::Sequential
    } else {
        Exec::default()
    }
}

fn eval(property: &str, graph: &str) -> Result<ExitCode> {
    let p = parse_property(property).with_context(|| format!("property `{property}`"))?;
    let g = resolve::graph(graph)?;
    let value = p.evaluate(&g)?;
    let verdict = json!({ "graph": encode_graph6(&g), "property": p.to_string(), "value": value });
    println!("{verdict}");
    Ok(if value { ExitCode::SUCCESS } else { ExitCode::from(EXIT_FAIL) })
}

#[allow(clippy::too_many_arguments)]
fn mine(
    workers: Option<usize>,
    property: &str,
    target: TargetArg,
    max_n: usize,
    mode: Mode,
    seed: &str,
    ops: &[String],
    rounds: usize,
    budget_seconds: Option<f64>,
    resume: Option<PathBuf>,
    out: &OutArgs,
) -> Result<ExitCode> {
    let goal = goal(property, target)?;
    let mut config = MineConfig::with_exec(exec(workers));
    config.budget = budget_seconds.map(Duration::from_secs_f64);
    if let Some(path) = &resume {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        config.resume = Some(serde_json::from_str::<Checkpoint>(&text).context("parsing checkpoint")?);
    }
    let slug = output::slug(&goal);
    let result: minorkit::Result<ObstructionReport> = match mode {
        Mode::Exhaustive => miner::mine_exhaustive(&goal, max_n, &config),
        Mode::Constructive => {
            let seeds = resolve::set(seed)?;
            let ops = ops.iter().map(|o| o.parse::<AugmentOp>()).collect::<minorkit::Result<Vec<_>>>()?;
            miner::mine_constructive(&seeds, &ops, &goal, rounds, &config)
        }
    };
    let file_stem = match mode {
        Mode::Exhaustive => format!("mine-{slug}-n{max_n}"),
        Mode::Constructive => format!("construct-{slug}-r{rounds}"),
    };
    match result {
        Ok(report) => {
            let path = out.report_path(&file_stem);
            let text = if out.comparison { report.comparison_json() } else { report.to_json() };
            output::write(&path, &text)?;
            output::record(&path, "mine", &report.minimality_target, report.bound, report.obstructions.len())?;
            print!("{}", report.summary_table());
            for e in &report.obstructions {
                let name = e.graph().ok().and_then(|g| catalog::identify(&g)).unwrap_or("");
                println!("{} {name}", e.g6);
            }
            println!("report: {}", path.display());
            Ok(ExitCode::SUCCESS)
        }
        Err(Error::BudgetExceeded(cp)) => {
            let path = out.out_dir.join(format!("{file_stem}.checkpoint.json"));
            output::write(&path, &serde_json::to_string_pretty(&cp)?)?;
            eprintln!(
                "time budget exceeded at order {} index {}; resume with --resume {}",
                cp.order,
                cp.index,
                path.display()
            );
            Ok(ExitCode::from(EXIT_BUDGET))
        }
        Err(e) => Err(e.into()),
    }
}

fn verify(workers: Option<usize>, set: &str, property: &str, target: TargetArg, max_n: usize, out: &OutArgs) -> Result<ExitCode> {
    let goal = goal(property, target)?;
    let candidates = resolve::set(set)?;
    if candidates.is_empty() {
        bail!("empty candidate set");
    }
    let config = MineConfig::with_exec(exec(workers));
    let verdict = miner::verify_set(&candidates, &goal, max_n, &config);
    let mark = |ok: bool| if ok { "PASS" } else { "FAIL" };
    for c in &verdict.candidates {
        let why = match (&c.witness, c.satisfies_target) {
            (_, false) => " (target fails)".to_string(),
            (Some(w), true) => format!(" (proper minor {w} satisfies the target)"),
            (None, true) => String::new(),
        };
        println!("{} {}{why}", mark(c.pass()), c.name);
    }
    for (name, layer) in [
        ("minimality", &verdict.minimality),
        ("incomparability", &verdict.incomparability),
        ("completeness", &verdict.completeness),
    ] {
        println!("{} {name}", mark(layer.pass));
        for d in &layer.detail {
            println!("  {d}");
        }
    }
    println!("{} all layers", mark(verdict.pass()));
    let path = out.report_path(&format!("verify-{}-n{max_n}", output::slug(&goal)));
    output::write(&path, &serde_json::to_string_pretty(&verdict)?)?;
    output::record(&path, "verify", &verdict.minimality_target, max_n, candidates.len())?;
    Ok(if verdict.pass() { ExitCode::SUCCESS } else { ExitCode::from(EXIT_FAIL) })
}

fn enumerate(workers: Option<usize>, max_n: usize, count_only: bool) -> Result<ExitCode> {
    let levels = enumerate_by_order(max_n, None, exec(workers))?;
    let stdout = io::stdout();
    let mut w = BufWriter::new(stdout.lock());
    for (i, level) in levels.iter().enumerate() {
        if count_only {
            writeln!(w, "{}: {}", i + 1, level.len())?;
        } else {
            for g in level {
                writeln!(w, "{}", encode_graph6(g))?;
            }
        }
    }
    w.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn convert(from: Format, to: Format, input: Option<PathBuf>, output: Option<PathBuf>) -> Result<ExitCode> {
    let text = match &input {
        Some(p) => std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?,
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    let graphs: Vec<Graph> = match from {
        Format::Graph6 => text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(decode_graph6)
            .collect::<minorkit::Result<_>>()?,
        Format::EdgeList => decode_edge_lists(&text)?,
    };
    let rendered: Vec<String> = graphs
        .iter()
        .map(|g| match to {
            Format::Graph6 => encode_graph6(g),
            Format::EdgeList => encode_edge_list(g).trim_end().to_string(),
        })
        .collect();
    let sep = if to == Format::EdgeList { "\n\n" } else { "\n" };
    let mut body = rendered.join(sep);
    body.push('\n');
    match output {
        Some(p) => output::write(&p, &body)?,
        None => print!("{body}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode> {
    let workers = cli.workers;
    match cli.command {
        Command::Eval { property, graph } => eval(&property, &graph),
        Command::Mine { property, target, max_n, mode, seed, ops, rounds, budget_seconds, resume, out } => {
            mine(workers, &property, target, max_n, mode, &seed, &ops, rounds, budget_seconds, resume, &out)
        }
        Command::Verify { set, property, target, max_n, out } => verify(workers, &set, &property, target, max_n, &out),
        Command::Enum { max_n, count_only } => enumerate(workers, max_n, count_only),
        Command::Canon { graph } => {
            let g = resolve::graph(&graph)?;
            println!("{}", canonical_form(&g).to_graph6());
            Ok(ExitCode::SUCCESS)
        }
        Command::Convert { from, to, input, output } => convert(from, to, input, output),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let workers = cli.workers;
    match par::with_workers(workers, || run(cli)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
