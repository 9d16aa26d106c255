use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use bolnet::loops::format::{parse_loop, ReadError};
use bolnet::loops::BuiltinLoop;
use bolnet::search::Relation;
use bolnet::verify::{self, Report, SearchRequest, Target, VerifyOptions};
use bolnet::{LoopTable, NetError, SearchError};
use clap::{Parser, Subcommand, ValueEnum};

/// Exit statuses: every claim held, a claim failed, the input was
/// rejected, or a size limit was hit.
const EXIT_CLAIM_FAILURE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "bolnet",
    version,
    about = "Bol loops of order 8 and the collineations of their 3-nets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the claim suite for the builtin loops.
    Verify {
        #[arg(value_enum)]
        target: VerifyTarget,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Test hook: run the suite on a relabeled copy of the builtin.
        #[arg(long, hide = true)]
        corrupt_builtin: bool,
    },
    /// Report properties, nuclei and pseudo-automorphisms of a loop file.
    Analyze {
        path: PathBuf,
        /// Relabel so that the unit is element 0.
        #[arg(long)]
        normalize: bool,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate the collineation groups of the 3-net of a loop.
    Collineations {
        /// `b1`, `b2` or a loop file.
        target: String,
        #[arg(long, value_enum, default_value = "text")]
        report: Format,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Enumerate left Bol loops of a given order.
    Search {
        #[arg(long)]
        order: usize,
        /// Keep only non-associative loops.
        #[arg(long)]
        nonassoc: bool,
        #[arg(long, value_enum)]
        classify: Option<Classify>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Disable first-row symmetry breaking.
        #[arg(long)]
        no_symmetry_breaking: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyTarget {
    B1,
    B2,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Classify {
    Iso,
    Isotopy,
}

/// Why a command stopped before producing a report.
enum Failure {
    Input(anyhow::Error),
    Resource(anyhow::Error),
}

impl From<NetError> for Failure {
    fn from(e: NetError) -> Self {
        match e {
            NetError::OrderTooLarge(_) => Failure::Resource(e.into()),
            other => Failure::Input(other.into()),
        }
    }
}

impl From<SearchError> for Failure {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::OrderTooLarge(_) => Failure::Resource(e.into()),
            other => Failure::Input(other.into()),
        }
    }
}

fn read_loop(path: &Path, normalize: bool) -> Result<LoopTable, Failure> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))
        .map_err(Failure::Input)?;
    parse_loop(&text, normalize).map_err(|e| {
        let hint = match &e {
            ReadError::Loop(_) if !normalize => " (try --normalize)",
            _ => "",
        };
        Failure::Input(anyhow::anyhow!("{}: {e}{hint}", path.display()))
    })
}

fn load_target(target: &str) -> Result<LoopTable, Failure> {
    match target.parse::<BuiltinLoop>() {
        Ok(which) => Ok(which.table()),
        Err(_) => read_loop(Path::new(target), false),
    }
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool, Failure> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .context("cannot start worker threads")
        .map_err(Failure::Resource)
}

fn run(command: Command) -> Result<(Report, Format), Failure> {
    match command {
        Command::Verify {
            target,
            format,
            corrupt_builtin,
        } => {
            let target = match target {
                VerifyTarget::B1 => Target::B1,
                VerifyTarget::B2 => Target::B2,
                VerifyTarget::All => Target::All,
            };
            let report = verify::verify(target, VerifyOptions { corrupt_builtin })?;
            Ok((report, format))
        }
        Command::Analyze {
            path,
            normalize,
            json,
        } => {
            let l = read_loop(&path, normalize)?;
            let format = if json { Format::Json } else { Format::Text };
            Ok((verify::analyze(&l, &path.display().to_string()), format))
        }
        Command::Collineations {
            target,
            report,
            jobs,
        } => {
            let l = load_target(&target)?;
            let out = pool(jobs)?.install(|| verify::collineations(&l, &target))?;
            Ok((out, report))
        }
        Command::Search {
            order,
            nonassoc,
            classify,
            jobs,
            no_symmetry_breaking,
            json,
        } => {
            let request = SearchRequest {
                order,
                nonassociative_only: nonassoc,
                symmetry_breaking: !no_symmetry_breaking,
                classify: classify.map(|c| match c {
                    Classify::Iso => Relation::Isomorphism,
                    Classify::Isotopy => Relation::Isotopy,
                }),
            };
            let out = pool(jobs)?.install(|| verify::search(request))?;
            Ok((out, if json { Format::Json } else { Format::Text }))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((report, format)) => {
            match format {
                Format::Json => println!("{}", report.to_json()),
                Format::Text => print!("{}", report.to_text()),
            }
            let failed: Vec<&str> = report.failures().map(|s| s.claim_id.as_str()).collect();
            if failed.is_empty() {
                ExitCode::SUCCESS
            } else {
                eprintln!("failed claims: {}", failed.join(", "));
                ExitCode::from(EXIT_CLAIM_FAILURE)
            }
        }
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT)
        }
        Err(Failure::Resource(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_RESOURCE)
        }
    }
}
