//! `annigraph`: enumerate finite topologies, build annihilating-ideal and
//! disjoint open set graphs, and verify claims about them.
//!
//! Exit codes: 0 success, 1 a guaranteed claim failed, 2 usage error.

mod cache;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use annigraph_core::graph::{export, InvariantReport, UGraph};
use annigraph_core::ideal::{build_ag_discrete, build_dg, IdealError};
use annigraph_core::topo::{enumerate_canonical, enumerate_topologies, format, DEFAULT_ENUM_CAP, MAX_ENUM_POINTS};
use annigraph_core::veritas::{
    self, claims_markdown, run_suite, search_counterexample, select, summary_table, to_jsonl, HomTrials,
    RunOptions, Suite, VeritasError,
};
use annigraph_core::{PointSet, SpaceFilter, TopoError, Topology};
use clap::{Args, Parser, Subcommand, ValueEnum};

use cache::Cache;

#[derive(Parser)]
#[command(name = "annigraph", version, about = "Graphs of ideals and open sets of finite spaces")]
struct Cli {
    /// Directory for cached invariant reports (overrides ANNIGRAPH_CACHE_DIR).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Finite topologies.
    Topo {
        #[command(subcommand)]
        command: TopoCommand,
    },
    /// Build a graph, print its invariants, or export it.
    Graph(GraphArgs),
    /// Run claims over enumerated spaces and write JSON Lines reports.
    Verify(VerifyArgs),
    /// Find the first counterexample (or example, for existence claims).
    Search(SearchArgs),
    /// List the claim registry.
    Claims {
        /// Emit the Markdown catalogue instead of one id per line.
        #[arg(long)]
        markdown: bool,
    },
}

#[derive(Subcommand)]
enum TopoCommand {
    /// Every topology on n points, one per line.
    Enum {
        n: usize,
        /// One representative per homeomorphism class.
        #[arg(long)]
        canonical: bool,
        #[arg(long, default_value = "all")]
        filter: SpaceFilter,
        /// Largest n accepted.
        #[arg(long, default_value_t = DEFAULT_ENUM_CAP)]
        cap: usize,
        #[arg(long, value_enum, default_value_t = TopoFormat::Text)]
        format: TopoFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TopoFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Dot,
    Dimacs,
    Json,
}

#[derive(Args)]
struct GraphArgs {
    /// `ag-discrete:<n>` or `dg:<topology>`, where the topology is a file
    /// in text or JSON format or an inline text line.
    model: String,
    /// Print the invariant report as JSON (the default without --export).
    #[arg(long)]
    invariants: bool,
    #[arg(long, value_enum)]
    export: Option<ExportFormat>,
    /// Write the export here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value = "guaranteed")]
    suite: Suite,
    /// Inclusive point-count range, e.g. `2..5`.
    #[arg(long, default_value = "2..5", value_parser = parse_range)]
    n_range: (usize, usize),
    /// Comma-separated claim ids; `*` matches any run of characters.
    #[arg(long, value_delimiter = ',')]
    claims: Vec<String>,
    #[arg(long, default_value = "all")]
    filter: SpaceFilter,
    /// Write the JSON Lines report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads; output does not depend on it.
    #[arg(long)]
    parallelism: Option<usize>,
    #[command(flatten)]
    trials: TrialArgs,
}

#[derive(Args)]
struct TrialArgs {
    /// Seed of the random graph-map trials.
    #[arg(long, default_value_t = HomTrials::default().seed)]
    seed: u64,
    #[arg(long, default_value_t = HomTrials::default().trials)]
    trials: usize,
}

impl TrialArgs {
    fn get(&self) -> HomTrials {
        HomTrials {
            seed: self.seed,
            trials: self.trials,
        }
    }
}

#[derive(Args)]
struct SearchArgs {
    claim: String,
    #[arg(long, default_value_t = 2)]
    min_n: usize,
    #[arg(long, default_value_t = 5)]
    max_n: usize,
    #[arg(long, default_value = "all")]
    filter: SpaceFilter,
    #[command(flatten)]
    trials: TrialArgs,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Topo(#[from] TopoError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Veritas(#[from] VeritasError),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
}

fn io_err(path: impl AsRef<Path>) -> impl FnOnce(io::Error) -> CliError {
    let path = path.as_ref().display().to_string();
    move |source| CliError::Io { path, source }
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected <min>..<max>, got `{s}`"))?;
    let parse = |x: &str| x.trim().parse::<usize>().map_err(|_| format!("bad bound `{x}`"));
    let (lo, hi) = (parse(a)?, parse(b.trim_start_matches('='))?);
    if lo > hi {
        return Err(format!("empty range `{s}`"));
    }
    Ok((lo, hi))
}

fn emit(out: Option<&Path>, body: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, body).map_err(io_err(path)),
        None => {
            let mut stdout = io::stdout().lock();
            // a closed pipe (e.g. `| head`) is not an error
            match stdout.write_all(body.as_bytes()).and_then(|_| stdout.flush()) {
                Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(io_err("<stdout>")(e)),
                _ => Ok(()),
            }
        }
    }
}

fn topo_enum(
    n: usize,
    canonical: bool,
    filter: SpaceFilter,
    cap: usize,
    fmt: TopoFormat,
    out: Option<&Path>,
) -> Result<ExitCode, CliError> {
    if cap > MAX_ENUM_POINTS {
        return Err(CliError::Usage(format!("--cap is at most {MAX_ENUM_POINTS}")));
    }
    let spaces: Vec<Topology> = if canonical {
        enumerate_canonical(n, cap)?
    } else {
        enumerate_topologies(n, cap)?.collect()
    };
    let mut body = String::new();
    for t in spaces.iter().filter(|t| filter.matches(&t.classify())) {
        match fmt {
            TopoFormat::Text => body.push_str(&t.to_string()),
            TopoFormat::Json => body.push_str(&format::to_json(t)),
        }
        body.push('\n');
    }
    emit(out, &body)?;
    Ok(ExitCode::SUCCESS)
}

fn load_topology(reference: &str) -> Result<Topology, CliError> {
    let path = Path::new(reference);
    let text = if path.is_file() {
        fs::read_to_string(path).map_err(io_err(path))?
    } else if reference.contains("opens=") || reference.trim_start().starts_with('{') {
        reference.to_string()
    } else {
        return Err(CliError::Usage(format!("no topology file `{reference}`")));
    };
    let mut all = format::parse_topologies(&text)?;
    match all.len() {
        1 => Ok(all.remove(0)),
        k => Err(CliError::Usage(format!("`{reference}` holds {k} topologies, expected one"))),
    }
}

fn graph(args: &GraphArgs, cache: Option<&Cache>) -> Result<ExitCode, CliError> {
    let (g, topology): (UGraph<PointSet>, Option<Topology>) = match args.model.split_once(':') {
        Some(("ag-discrete", n)) => {
            let n: usize = n
                .parse()
                .map_err(|_| CliError::Usage(format!("bad point count in `{}`", args.model)))?;
            (build_ag_discrete(n)?, None)
        }
        Some(("dg", reference)) => {
            let t = load_topology(reference)?;
            (build_dg(&t), Some(t))
        }
        _ => {
            return Err(CliError::Usage(format!(
                "unknown model `{}`; expected ag-discrete:<n> or dg:<topology>",
                args.model
            )))
        }
    };
    if let Some(fmt) = args.export {
        let body = match fmt {
            ExportFormat::Dot => export::to_dot(&g),
            ExportFormat::Dimacs => export::to_dimacs(&g),
            ExportFormat::Json => export::to_json(&g),
        };
        emit(args.out.as_deref(), &body)?;
    }
    if args.invariants || args.export.is_none() {
        let report = match (cache, &topology) {
            (Some(c), Some(t)) => c.dg_report(t, &g),
            _ => InvariantReport::compute(&g),
        };
        let mut body = serde_json::to_string_pretty(&report).expect("reports serialize");
        body.push('\n');
        if args.export.is_some() && args.out.is_none() {
            // the export already went to stdout
            eprint!("{body}");
        } else {
            emit(None, &body)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(args: &VerifyArgs, cache: Option<&Cache>) -> Result<ExitCode, CliError> {
    let claims = select(&args.claims)?;
    let (lo, hi) = args.n_range;
    if hi > MAX_ENUM_POINTS {
        return Err(CliError::Usage(format!("--n-range goes up to at most {MAX_ENUM_POINTS}")));
    }
    let spaces = veritas::canonical_spaces(lo, hi, args.filter)?;
    let opts = RunOptions {
        suite: args.suite,
        hom: args.trials.get(),
    };
    let cached = |t: &Topology, g: &UGraph<PointSet>| match cache {
        Some(c) => c.dg_report(t, g),
        None => InvariantReport::compute(g),
    };
    let run = || run_suite(&claims, &spaces, &opts, &cached);
    let result = match args.parallelism {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build()
            .map_err(|e| CliError::Usage(format!("thread pool: {e}")))?
            .install(run),
        None => run(),
    };
    emit(args.out.as_deref(), &to_jsonl(&result.reports))?;
    eprint!("{}", summary_table(&result.reports));
    eprintln!(
        "{} claims x {} spaces (n = {lo}..{hi}), {} reports, {} guaranteed failures",
        claims.len(),
        spaces.len(),
        result.reports.len(),
        result.guaranteed_failures
    );
    Ok(if result.failed(args.suite.mode()) {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn search(args: &SearchArgs) -> Result<ExitCode, CliError> {
    let claim = veritas::lookup(&args.claim)?;
    if args.max_n > MAX_ENUM_POINTS {
        return Err(CliError::Usage(format!("--max-n is at most {MAX_ENUM_POINTS}")));
    }
    let hit = search_counterexample(claim, args.min_n, args.max_n, args.filter, args.trials.get())?;
    let body = match hit {
        Some(report) => {
            let mut s = serde_json::to_string_pretty(&report).expect("reports serialize");
            s.push('\n');
            s
        }
        None => "none\n".to_string(),
    };
    emit(None, &body)?;
    Ok(ExitCode::SUCCESS)
}

fn claims(markdown: bool) -> Result<ExitCode, CliError> {
    let body = if markdown {
        claims_markdown()
    } else {
        veritas::claims()
            .iter()
            .map(|c| format!("{}\t{:?}\t{}\n", c.id, c.scope, c.statement))
            .collect()
    };
    emit(None, &body)?;
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let cache = Cache::resolve(cli.cache_dir.as_deref());
    match cli.command {
        Command::Topo {
            command:
                TopoCommand::Enum {
                    n,
                    canonical,
                    filter,
                    cap,
                    format,
                    out,
                },
        } => topo_enum(n, canonical, filter, cap, format, out.as_deref()),
        Command::Graph(args) => graph(&args, cache.as_ref()),
        Command::Verify(args) => verify(&args, cache.as_ref()),
        Command::Search(args) => search(&args),
        Command::Claims { markdown } => claims(markdown),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("annigraph: {e}");
            ExitCode::from(2)
        }
    }
}
