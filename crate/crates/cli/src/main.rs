//! `boolnet` command-line front end.

mod commands;
mod report;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "boolnet",
    version,
    about = "Exhaustive dynamics of Boolean automata networks"
)]
struct Cli {
    /// Worker threads for parallel sweeps (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    threads: Option<u16>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Count block-sequential modes or chain-of-cycles update digraphs.
    Count(CountArgs),
    /// List the update digraph classes of a model.
    Classes(ClassesArgs),
    /// Attractors and basins under one update mode.
    Analyze(AnalyzeArgs),
    /// One dynamics per update digraph class, with dominance and colors.
    Sweep(SweepArgs),
    /// Transition graph under one update mode in DOT format.
    ExportDot(ExportDotArgs),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct CountArgs {
    /// Number of automata.
    #[arg(long, value_name = "N")]
    bs: Option<usize>,
    /// Comma-separated cycle lengths, each at least 2.
    #[arg(long, value_name = "LENGTHS", value_parser = parse_chain)]
    chain: Option<Chain>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct ModelSource {
    /// Model file in the text format.
    #[arg(value_name = "MODEL")]
    pub path: Option<PathBuf>,
    /// Built-in model name.
    #[arg(long, value_name = "NAME")]
    pub builtin: Option<String>,
}

#[derive(Debug, Args)]
struct ClassesArgs {
    #[command(flatten)]
    model: ModelSource,
    #[arg(long, value_name = "FILE")]
    json: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    model: ModelSource,
    /// Mode string such as `bs:(1,2)(3)`, or the name of a mode declared in the model.
    #[arg(long)]
    mode: String,
    #[arg(long, value_name = "FILE")]
    dot: Option<PathBuf>,
    #[arg(long, value_name = "FILE")]
    json: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[command(flatten)]
    model: ModelSource,
    #[arg(long, value_name = "FILE")]
    json: Option<PathBuf>,
    #[arg(long, value_name = "FILE")]
    csv: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ExportDotArgs {
    #[command(flatten)]
    model: ModelSource,
    #[arg(long)]
    mode: String,
    /// Output file; standard output when absent.
    #[arg(long, short, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone)]
struct Chain(Vec<usize>);

fn parse_chain(text: &str) -> Result<Chain, String> {
    let lengths = text
        .split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|e| format!("`{t}`: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    if let Some(l) = lengths.iter().find(|&&l| l < 2) {
        return Err(format!("cycle length {l} is below 2"));
    }
    Ok(Chain(lengths))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n as usize)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = match cli.command {
        Command::Count(a) => commands::count(&mut out, a.bs, a.chain.map(|c| c.0)),
        Command::Classes(a) => commands::classes(&mut out, &a.model, a.json.as_deref()),
        Command::Analyze(a) => commands::analyze(
            &mut out,
            &a.model,
            &a.mode,
            a.dot.as_deref(),
            a.json.as_deref(),
        ),
        Command::Sweep(a) => {
            commands::sweep(&mut out, &a.model, a.json.as_deref(), a.csv.as_deref())
        }
        Command::ExportDot(a) => {
            commands::export_dot(&mut out, &a.model, &a.mode, a.out.as_deref())
        }
    }
    .and_then(|()| out.flush().map_err(commands::CliError::from));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.code == 0 => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{}", e.message);
            ExitCode::from(e.code)
        }
    }
}
