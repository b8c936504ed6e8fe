//! Command-line front end: `analyze`, `check` and `joinable`.
//!
//! Exit status: 0 when every hard assertion holds, 1 when a check reports
//! violations, 2 on usage or input errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Duration;

use clap::{ArgMatches, Args, CommandFactory, FromArgMatches, Parser, Subcommand, ValueEnum};

use crate::analysis::{analyze, AnalyzeOptions};
use crate::error::{Error, Result};
use crate::fixation::{ChainOptions, FixationOptions};
use crate::harness::{run_check, CheckName, CorpusSpec, Direction, Filter, RunConfig};
use crate::io::load_graph;
use crate::planarity::joinable;

#[derive(Parser, Debug)]
#[command(name = "colorfix", version, about = "Color identity, color fixation and joinability on small graphs")]
pub struct Cli {
    #[command(flatten)]
    pub config: ConfigArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct ConfigArgs {
    /// Palette size (defaults to the chromatic number)
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..=64))]
    pub palette: Option<u64>,
    /// Largest side considered for fixation pairs
    #[arg(long, global = true, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..=64))]
    pub max_side: u64,
    /// Longest odd cycle used as a chain node
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(3..))]
    pub cycle_cap: Option<u64>,
    /// Per-graph time budget in milliseconds
    #[arg(long, global = true, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub timeout_ms: u64,
    /// Worker threads for corpus scans (0 = all cores)
    #[arg(long, global = true, env = "COLORFIX_JOBS", default_value_t = 0)]
    pub jobs: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Structured,
    Tabular,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Chromatic number, planarity, color identical pairs, fixation pairs and chains of one graph
    Analyze {
        /// graph6 string, file (graph6 or edge list) or fixture:NAME
        graph: String,
    },
    /// Run a check over a corpus
    Check(CheckArgs),
    /// Print adjacent / joinable / not-joinable for two vertices of a planar graph
    Joinable { graph: String, u: usize, v: usize },
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    /// theorem1, lemma1, lemma2, lemma3, lemma4, lemma5, corollary1 or grotzsch
    #[arg(value_parser = parse_check)]
    pub check: CheckName,
    /// Every graph on 1..=N vertices (N <= 10)
    #[arg(long, value_name = "N", conflicts_with = "input", value_parser = clap::value_parser!(u64).range(1..=10))]
    pub builtin: Option<u64>,
    /// graph6 file, one graph per line, or fixture:NAME
    #[arg(long, value_name = "FILE")]
    pub input: Option<String>,
    #[arg(long)]
    pub planar: bool,
    #[arg(long, value_name = "K", value_parser = clap::value_parser!(u64).range(1..=64))]
    pub chromatic: Option<u64>,
    #[arg(long)]
    pub connected: bool,
    #[arg(long)]
    pub triangle_free: bool,
    /// lemma4 direction
    #[arg(long, value_parser = parse_direction, default_value = "both")]
    pub direction: Direction,
}

fn parse_check(s: &str) -> std::result::Result<CheckName, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_direction(s: &str) -> std::result::Result<Direction, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

impl ConfigArgs {
    fn run_config(&self) -> RunConfig {
        RunConfig {
            jobs: self.jobs,
            timeout: Some(Duration::from_millis(self.timeout_ms)),
            max_side: self.max_side as usize,
            cycle_cap: self.cycle_cap.map(|c| c as usize),
        }
    }
}

/// Filters in the order they appear on the command line.
fn ordered_filters(args: &CheckArgs, m: &ArgMatches) -> Vec<Filter> {
    let mut fs: Vec<(usize, Filter)> = Vec::new();
    let mut at = |id: &str, f: Filter| fs.push((m.index_of(id).unwrap_or(usize::MAX), f));
    if args.planar {
        at("planar", Filter::Planar);
    }
    if let Some(k) = args.chromatic {
        at("chromatic", Filter::Chromatic(k as usize));
    }
    if args.connected {
        at("connected", Filter::Connected);
    }
    if args.triangle_free {
        at("triangle_free", Filter::TriangleFree);
    }
    fs.sort_by_key(|&(i, _)| i);
    fs.into_iter().map(|(_, f)| f).collect()
}

fn corpus_for(args: &CheckArgs, m: &ArgMatches) -> Result<CorpusSpec> {
    let mut spec = match (&args.builtin, &args.input) {
        (Some(n), _) => CorpusSpec::builtin(*n as usize),
        (None, Some(input)) if input.starts_with("fixture:") => CorpusSpec::graphs(input.clone(), vec![load_graph(input)?]),
        (None, Some(path)) => CorpusSpec::graph6_file(PathBuf::from(path)),
        (None, None) if args.check == CheckName::Grotzsch => CorpusSpec::graphs("none", Vec::new()),
        (None, None) => return Err(Error::Argument("a corpus is required: pass --builtin N or --input FILE".into())),
    };
    spec.filters = ordered_filters(args, m);
    Ok(spec)
}

/// Runs the CLI on `args`, writing results to `out`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let matches = match Cli::command().try_get_matches_from(args) {
        Ok(m) => m,
        Err(e) => {
            let code = e.exit_code();
            let target: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(target, "{}", e.render());
            return if code == 0 { 0 } else { 2 };
        }
    };
    let cli = Cli::from_arg_matches(&matches).expect("matches come from the same command");
    match dispatch(&cli, &matches, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn dispatch(cli: &Cli, matches: &ArgMatches, out: &mut dyn Write) -> Result<i32> {
    let cfg = &cli.config;
    let emit = |out: &mut dyn Write, s: &str| -> Result<()> {
        out.write_all(s.as_bytes()).map_err(|e| Error::Io { path: "<stdout>".into(), source: e })?;
        if !s.ends_with('\n') {
            out.write_all(b"\n").map_err(|e| Error::Io { path: "<stdout>".into(), source: e })?;
        }
        Ok(())
    };
    match &cli.command {
        Command::Analyze { graph } => {
            let g = load_graph(graph)?;
            let opts = AnalyzeOptions {
                palette: cfg.palette.map(|p| p as usize),
                fixation: FixationOptions { max_side: cfg.max_side as usize, ..Default::default() },
                chains: ChainOptions { cycle_cap: cfg.cycle_cap.map(|c| c as usize), ..Default::default() },
                deadline: Some(Duration::from_millis(cfg.timeout_ms)),
            };
            let a = analyze(&g, &opts)?;
            let text = match cfg.format {
                Format::Human => a.to_human(),
                Format::Structured => a.to_json(),
                Format::Tabular => a.to_csv(),
            };
            emit(out, &text)?;
            Ok(0)
        }
        Command::Check(args) => {
            let m = matches.subcommand_matches("check").expect("check subcommand matched");
            let corpus = corpus_for(args, m)?;
            let report = run_check(args.check, corpus, args.direction, &cfg.run_config())?;
            let text = match cfg.format {
                Format::Human => report.to_human(),
                Format::Structured => report.to_json(),
                Format::Tabular => report.to_csv(),
            };
            emit(out, &text)?;
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Joinable { graph, u, v } => {
            let g = load_graph(graph)?;
            let r = joinable(&g, *u, *v)?;
            let text = match cfg.format {
                Format::Structured => serde_json::json!({ "u": u, "v": v, "verdict": r.verdict() }).to_string(),
                Format::Tabular => format!("u,v,verdict\n{u},{v},{}", r.verdict()),
                Format::Human => r.verdict().to_string(),
            };
            emit(out, &text)?;
            Ok(0)
        }
    }
}

pub fn main() -> i32 {
    run(std::env::args_os(), &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
