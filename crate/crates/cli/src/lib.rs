//! Subcommands of the `planar-monoid` tool. Each returns a serializable
//! report; `main` prints it as JSON and maps the outcome to an exit code.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use planar_monoid::catalog::{builtin, discrepancies, verify_all, verify_words, Discrepancy, VerificationReport};
use planar_monoid::designs::{enumerate, search_orderings, Design, SearchBudget, SearchStatus, SymmetryMode};
use planar_monoid::formats::RelationFile;
use planar_monoid::plumbing::{bounds, plumbing_of, BoundsReport, GraphFormat};
use planar_monoid::surface::BoundaryWord;
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Core(#[from] planar_monoid::Error),
    #[error("{0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

pub type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Parser, Debug)]
#[command(name = "planar-monoid", version, about = "Dehn twist relations on the n-holed sphere")]
pub struct Cli {
    /// Worker threads; defaults to the number of cores.
    #[arg(long, global = true, env = "PLANAR_MONOID_JOBS")]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Verify a relation file.
    Verify {
        file: PathBuf,
        /// Skip the Lawrence-Krammer cross-check.
        #[arg(long)]
        fast: bool,
    },
    /// Verify the built-in relations for n boundary components.
    Catalog {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        fast: bool,
    },
    /// List curve systems on m points up to symmetry.
    Enumerate {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value = "dihedral")]
        sym: SymmetryMode,
    },
    /// Search for orderings of a curve system whose product is the full twist.
    Search {
        #[arg(long)]
        design: PathBuf,
        /// Systems with at most this many curves are searched exhaustively.
        #[arg(long, default_value_t = 8)]
        cap: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        #[arg(long, default_value_t = 2_000_000)]
        max_nodes: u64,
        /// Stop a non-exhaustive search after this many orderings.
        #[arg(long, default_value_t = 16)]
        max_orderings: usize,
    },
    /// Emit the plumbing graph of a left side.
    Plumb {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, default_value = "dot")]
        format: GraphFormat,
    },
    /// Twist-count and Euler characteristic bounds.
    Bounds {
        #[arg(long)]
        n: usize,
    },
}

/// What `main` prints and how it exits.
pub struct Output {
    pub text: String,
    /// `false` when a relation was checked and does not hold.
    pub holds: bool,
}

impl Output {
    fn json<T: Serialize>(value: &T, holds: bool) -> CliResult<Self> {
        Ok(Output { text: serde_json::to_string_pretty(value)? + "\n", holds })
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CatalogReport {
    pub n: usize,
    pub oracle: bool,
    pub verified: usize,
    pub total: usize,
    pub relations: Vec<CatalogEntry>,
    pub discrepancies: Vec<Discrepancy>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub graph: Option<String>,
    pub lhs: BoundaryWord,
    pub report: VerificationReport,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct EnumerateReport {
    pub m: usize,
    pub mode: SymmetryMode,
    pub count: usize,
    pub designs: Vec<Design>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SearchOutput {
    pub design: Design,
    pub exponents: BoundaryWord,
    pub cap: usize,
    pub seed: u64,
    pub status: SearchStatus,
    pub nodes: u64,
    pub count: usize,
    /// Realizing products in written order (rightmost factor first).
    pub orderings: Vec<Vec<Vec<usize>>>,
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

pub fn run(command: &Command) -> CliResult<Output> {
    match command {
        Command::Verify { file, fast } => {
            let rel = RelationFile::parse(&read(file)?)?;
            let (lhs, rhs) = rel.words()?;
            let report = verify_words(&rel.label(), &lhs.to_twist_word(), &rhs, !fast)?;
            let holds = report.verified;
            Output::json(&report, holds)
        }
        Command::Catalog { n, fast } => {
            let relations = builtin(*n)?;
            let reports = verify_all(&relations, !fast);
            let verified = reports.iter().filter(|r| r.verified).count();
            let entries = relations
                .iter()
                .zip(reports)
                .map(|(r, report)| CatalogEntry { graph: r.graph().map(str::to_string), lhs: r.lhs().clone(), report })
                .collect();
            let report = CatalogReport {
                n: *n,
                oracle: !fast,
                verified,
                total: relations.len(),
                relations: entries,
                discrepancies: discrepancies(&relations),
            };
            let holds = report.verified == report.total;
            Output::json(&report, holds)
        }
        Command::Enumerate { m, sym } => {
            let designs = enumerate(*m, *sym)?;
            Output::json(&EnumerateReport { m: *m, mode: *sym, count: designs.len(), designs }, true)
        }
        Command::Search { design, cap, seed, max_nodes, max_orderings } => {
            let design: Design = serde_json::from_str(&read(design)?)?;
            let budget = SearchBudget {
                exhaustive_cap: *cap,
                max_nodes: *max_nodes,
                max_orderings: *max_orderings,
                seed: *seed,
                ..SearchBudget::default()
            };
            let report = search_orderings(&design, &budget);
            let blocks = design.blocks();
            let orderings: Vec<Vec<Vec<usize>>> =
                report.orderings.iter().map(|o| o.iter().map(|&i| blocks[i].clone()).collect()).collect();
            Output::json(
                &SearchOutput {
                    exponents: design.exponents(),
                    design,
                    cap: *cap,
                    seed: *seed,
                    status: report.status,
                    nodes: report.nodes,
                    count: orderings.len(),
                    orderings,
                },
                true,
            )
        }
        Command::Plumb { file, format } => {
            let text = read(file)?;
            let lhs = match RelationFile::parse(&text) {
                Ok(rel) => rel.words()?.0,
                Err(_) => serde_json::from_str::<BoundaryWord>(&text)?,
            };
            Ok(Output { text: plumbing_of(&lhs)?.emit(*format), holds: true })
        }
        Command::Bounds { n } => {
            let report: BoundsReport = bounds(*n)?;
            Output::json(&report, true)
        }
    }
}
