use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod gen;
mod input;
mod report;

use input::{load, CliError};

/// Build, analyze, classify and count finite tournaments.
///
/// Tournaments are read and written in the TRN text format. Exit status is 0
/// on success (or a true answer), 1 for a false answer, 2 for usage and parse
/// errors and 3 when a size cap is exceeded.
#[derive(Parser)]
#[command(name = "tourn", version, about, long_about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a tournament and print it as TRN.
    #[command(subcommand)]
    Gen(gen::GenCommand),
    /// Report structural properties.
    Analyze(AnalyzeArgs),
    /// Print the classifier tree as JSON.
    Classify(ClassifyArgs),
    /// Decide isomorphism; exit 0 iff isomorphic.
    Iso(IsoArgs),
    /// Count tournaments of one order satisfying predicates.
    Census(CensusArgs),
    /// Write a tournament as Graphviz DOT or JSON.
    Export(ExportArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// TRN file, `-` for standard input.
    file: PathBuf,
    /// Comma-separated properties (default: all). Boolean ones: prime,
    /// arc-cyclic, point-cyclic, irreducible, regular, transitive,
    /// strongly-connected. Others: components, terminal, initial, modules.
    #[arg(long, value_delimiter = ',')]
    props: Vec<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ClassifyArgs {
    file: PathBuf,
    /// Print the hex isomorphism certificate instead of the tree.
    #[arg(long)]
    certificate: bool,
    /// Largest order searched for canonical labelings.
    #[arg(long, default_value_t = tournament_core::iso::ISO_CAP)]
    cap: usize,
}

#[derive(Args)]
struct IsoArgs {
    first: PathBuf,
    second: PathBuf,
    /// Print the vertex mapping when one exists.
    #[arg(long)]
    mapping: bool,
    #[arg(long, default_value_t = tournament_core::iso::ISO_CAP)]
    cap: usize,
}

#[derive(Args)]
struct CensusArgs {
    #[arg(long)]
    order: usize,
    /// Predicates to count (repeatable or comma-separated; default: all).
    #[arg(long, value_delimiter = ',')]
    predicate: Vec<String>,
    /// Count labeled tournaments (the default).
    #[arg(long, conflicts_with = "unlabeled")]
    labeled: bool,
    /// Count isomorphism classes instead.
    #[arg(long)]
    unlabeled: bool,
    /// Worker threads (default: all cores).
    #[arg(long)]
    jobs: Option<usize>,
    /// Largest order allowed.
    #[arg(long, default_value_t = tournament_core::census::LABELED_CENSUS_CAP)]
    cap: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Dot,
    Json,
}

#[derive(Args)]
struct ExportArgs {
    file: PathBuf,
    #[arg(long, value_enum, default_value = "dot")]
    format: ExportFormat,
    /// One vertex label per line, used for DOT node names.
    #[arg(long)]
    labels: Option<PathBuf>,
}

fn run(cli: Cli, out: &mut impl Write) -> Result<u8, CliError> {
    match cli.command {
        Command::Gen(cmd) => {
            let t = gen::run(cmd)?;
            write!(out, "{}", tournament_core::format::to_trn(&t))?;
            Ok(0)
        }
        Command::Analyze(args) => {
            let t = load(&args.file)?;
            report::analyze(&t, &args.props, args.json, out)
        }
        Command::Classify(args) => {
            let t = load(&args.file)?;
            report::classify(&t, args.certificate, args.cap, out)
        }
        Command::Iso(args) => {
            let (a, b) = (load(&args.first)?, load(&args.second)?);
            report::iso(&a, &b, args.mapping, args.cap, out)
        }
        Command::Census(args) => {
            let preds = report::parse_predicates(&args.predicate)?;
            let census = || {
                if args.unlabeled {
                    tournament_core::census::unlabeled_census(args.order, &preds, args.cap)
                } else {
                    tournament_core::census::labeled_census(args.order, &preds, args.cap)
                }
            };
            let result = match args.jobs {
                Some(jobs) => rayon::ThreadPoolBuilder::new()
                    .num_threads(jobs)
                    .build()
                    .map_err(|e| CliError::Usage(e.to_string()))?
                    .install(census),
                None => census(),
            }?;
            report::census(&result, args.json, out)
        }
        Command::Export(args) => {
            let t = load(&args.file)?;
            let text = match args.format {
                ExportFormat::Dot => {
                    let labels = args.labels.as_deref().map(input::read_labels).transpose()?;
                    tournament_core::format::to_dot(&t, labels.as_deref())?
                }
                ExportFormat::Json => serde_json::to_string_pretty(&tournament_core::format::to_json(&t))? + "\n",
            };
            write!(out, "{text}")?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("tourn: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
