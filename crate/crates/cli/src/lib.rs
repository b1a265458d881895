//! Command-line front end for `multispec`: graph files, JSON reports and the
//! `gen`, `spectrum`, `connectivity`, `quotient`, `verify` and `explore`
//! subcommands.

pub mod graph_file;
pub mod report;

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use multispec::campaign::{explore_c_gap, run_campaign, CampaignReport, GapReport, SamplingModel, Suite};
use multispec::connectivity::connectivity_report;
use multispec::families::{Family, FamilySpec};
use multispec::quotient::{is_equitable, quotient_eigenvalues, quotient_matrix, upper_and_lower_interlacing, Partition};
use multispec::spectral::{adjacency_spectrum, laplacian_spectrum};
use multispec::{Execution, Multigraph, Spectrum};
use serde::Serialize;
use thiserror::Error;

use crate::graph_file::{parse_graph, render_graph, ParseError};
use crate::report::{snap_zero, to_json};

/// Environment variable supplying the default `--seed`.
pub const SEED_ENV: &str = "MULTISPEC_SEED";

const EXIT_CODES: &str = "\
Exit status:
  0  success
  1  verification failed (a theorem violation or a failed trial)
  2  usage error (unknown flag, missing argument)
  3  I/O error (unreadable input, unwritable output)
  4  malformed graph file or partition string
  5  invalid parameters (family constraints, partition, model bounds)
  6  numerical failure (eigensolver or sampler gave up)";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    Failed = 1,
    Usage = 2,
    Io = 3,
    Parse = 4,
    Invalid = 5,
    Solver = 6,
}

impl Status {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("bad partition '{0}': {1}")]
    PartitionSyntax(String, String),
    #[error(transparent)]
    Core(#[from] multispec::Error),
}

impl CliError {
    pub fn status(&self) -> Status {
        use multispec::Error as E;
        match self {
            CliError::Io { .. } => Status::Io,
            CliError::Parse { .. } | CliError::PartitionSyntax(..) => Status::Parse,
            CliError::Core(E::NoConvergence { .. } | E::NegativeDiscriminant(_) | E::ResampleLimit(_)) => {
                Status::Solver
            }
            CliError::Core(_) => Status::Invalid,
        }
    }
}

/// Text to print and the status to exit with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub status: Status,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            status: Status::Ok,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "multispec", version, about = "Spectra and connectivity of regular multigraphs", after_help = EXIT_CODES)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a member of one of the built-in families as a graph file.
    Gen(GenArgs),
    /// Print the adjacency (or Laplacian) spectrum of a graph file.
    Spectrum(SpectrumArgs),
    /// Print vertex and edge connectivity with witnesses.
    Connectivity(InputArgs),
    /// Print the quotient matrix of a partition and check interlacing.
    Quotient(QuotientArgs),
    /// Run a seeded theorem campaign; exits 1 on any violation.
    Verify(VerifyArgs),
    /// Search for large values of an open quantity.
    Explore(ExploreArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    B1,
    H1,
    C,
    H,
    F,
    G4,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::B1 => Family::B1,
            FamilyArg::H1 => Family::H1,
            FamilyArg::C => Family::C,
            FamilyArg::H => Family::H,
            FamilyArg::F => Family::F,
            FamilyArg::G4 => Family::G4,
        }
    }
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    /// Degree parameter.
    #[arg(long)]
    pub d: u64,
    /// Connectivity parameter of `c` and `h`.
    #[arg(long)]
    pub t: Option<u64>,
    /// Output file; stdout when omitted.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Graph file.
    #[arg(long)]
    pub input: PathBuf,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Use the Laplacian D - A instead of the adjacency matrix.
    #[arg(long)]
    pub laplacian: bool,
}

#[derive(Debug, Args)]
pub struct QuotientArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Blocks separated by '|', vertices by ',', e.g. "0,1|2,3,4".
    #[arg(long)]
    pub partition: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    All,
    Fiedler,
    Main,
    Edge,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::All => Suite::All,
            SuiteArg::Fiedler => Suite::Fiedler,
            SuiteArg::Main => Suite::Main,
            SuiteArg::Edge => Suite::Edge,
        }
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub suite: SuiteArg,
    #[arg(long, default_value_t = 1000)]
    pub trials: u64,
    #[arg(long, env = SEED_ENV, default_value_t = 0)]
    pub seed: u64,
    /// Fix the vertex count (default: uniform in 3..=12).
    #[arg(long)]
    pub n: Option<usize>,
    /// Fix the degree (default: uniform in 1..=10).
    #[arg(long)]
    pub d: Option<u64>,
    /// Run trials on one thread.
    #[arg(long)]
    pub sequential: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Question {
    /// Largest observed mu2 - kappa'.
    CGap,
}

#[derive(Debug, Args)]
pub struct ExploreArgs {
    #[arg(long, value_enum)]
    pub question: Question,
    #[arg(long, default_value_t = 1000)]
    pub trials: u64,
    #[arg(long, env = SEED_ENV, default_value_t = 0)]
    pub seed: u64,
    /// Largest odd d of the F family to tabulate.
    #[arg(long, default_value_t = 101)]
    pub f_max: u64,
    #[arg(long)]
    pub sequential: bool,
}

fn execution(sequential: bool) -> Execution {
    if sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    }
}

pub fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Gen(a) => gen(a),
        Command::Spectrum(a) => spectrum(a),
        Command::Connectivity(a) => connectivity(a),
        Command::Quotient(a) => quotient(a),
        Command::Verify(a) => verify(a),
        Command::Explore(a) => explore(a),
    }
}

pub fn read_graph(path: &Path) -> Result<Multigraph, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_graph(&text).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

fn gen(a: GenArgs) -> Result<Outcome, CliError> {
    let spec = FamilySpec {
        family: a.family.into(),
        d: a.d,
        t: a.t,
    };
    let text = render_graph(&spec.build()?);
    match a.output {
        Some(path) => {
            fs::write(&path, &text).map_err(|source| CliError::Io { path, source })?;
            Ok(Outcome::ok(String::new()))
        }
        None => Ok(Outcome::ok(text)),
    }
}

/// Size and degree data echoed at the top of every single-graph report.
#[derive(Debug, Serialize)]
pub struct GraphInfo {
    pub n: usize,
    pub edge_count: u64,
    pub min_degree: Option<u64>,
    pub max_degree: Option<u64>,
    pub regular: Option<u64>,
    pub multiplicity: Option<u64>,
    pub connected: bool,
}

impl From<&Multigraph> for GraphInfo {
    fn from(g: &Multigraph) -> Self {
        let degrees = g.degrees();
        GraphInfo {
            n: g.vertex_count(),
            edge_count: g.edge_count(),
            min_degree: degrees.min(),
            max_degree: degrees.max(),
            regular: g.is_regular(),
            multiplicity: g.multiplicity().ok(),
            connected: g.is_connected(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Eigenvalue {
    pub value: f64,
    pub multiplicity: usize,
}

fn displayed(s: &Spectrum) -> Vec<f64> {
    s.values().iter().map(|&x| snap_zero(x, s.scale())).collect()
}

fn grouped(s: &Spectrum) -> Vec<Eigenvalue> {
    s.grouped()
        .into_iter()
        .map(|(value, multiplicity)| Eigenvalue {
            value: snap_zero(value, s.scale()),
            multiplicity,
        })
        .collect()
}

#[derive(Debug, Serialize)]
pub struct SpectrumReport {
    pub graph: GraphInfo,
    /// `"adjacency"` or `"laplacian"`.
    pub matrix: &'static str,
    /// Descending.
    pub eigenvalues: Vec<f64>,
    pub grouped: Vec<Eigenvalue>,
    /// Second largest adjacency eigenvalue.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda2: Option<f64>,
    /// Second smallest Laplacian eigenvalue.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu2: Option<f64>,
}

fn spectrum(a: SpectrumArgs) -> Result<Outcome, CliError> {
    let g = read_graph(&a.input)?;
    let (matrix, s) = if a.laplacian {
        ("laplacian", laplacian_spectrum(&g)?)
    } else {
        ("adjacency", adjacency_spectrum(&g)?)
    };
    let second = if a.laplacian { s.smallest(2) } else { s.largest(2) }
        .ok()
        .map(|x| snap_zero(x, s.scale()));
    let doc = SpectrumReport {
        graph: GraphInfo::from(&g),
        matrix,
        eigenvalues: displayed(&s),
        grouped: grouped(&s),
        lambda2: if a.laplacian { None } else { second },
        mu2: if a.laplacian { second } else { None },
    };
    Ok(Outcome::ok(to_json(&doc)))
}

#[derive(Debug, Serialize)]
pub struct ConnectivityDoc {
    pub graph: GraphInfo,
    pub kappa: usize,
    pub kappa_prime: u64,
    pub vertex_cut_witness: Vec<usize>,
    pub edge_cut_witness: Vec<(usize, usize, u64)>,
}

fn connectivity(a: InputArgs) -> Result<Outcome, CliError> {
    let g = read_graph(&a.input)?;
    let r = connectivity_report(&g)?;
    let doc = ConnectivityDoc {
        graph: GraphInfo::from(&g),
        kappa: r.kappa,
        kappa_prime: r.kappa_prime,
        vertex_cut_witness: r.vertex_cut_witness,
        edge_cut_witness: r.edge_cut_witness,
    };
    Ok(Outcome::ok(to_json(&doc)))
}

/// Parses `"0,1|2,3,4"` into blocks. Whitespace around indices is allowed.
pub fn parse_partition(text: &str) -> Result<Vec<Vec<usize>>, CliError> {
    let syntax = |msg: String| CliError::PartitionSyntax(text.to_string(), msg);
    text.split('|')
        .map(|block| {
            block
                .split(',')
                .map(|tok| {
                    let tok = tok.trim();
                    tok.parse::<usize>()
                        .map_err(|_| syntax(format!("'{tok}' is not a vertex index")))
                })
                .collect()
        })
        .collect()
}

#[derive(Debug, Serialize)]
pub struct Interlacing {
    /// `λ_i(A) ≥ λ_i(Q)` for every `i`.
    pub upper: bool,
    /// `λ_i(Q) ≥ λ_{n−s+i}(A)` for every `i`.
    pub lower: bool,
    pub holds: bool,
}

#[derive(Debug, Serialize)]
pub struct QuotientDoc {
    pub graph: GraphInfo,
    pub partition: Vec<Vec<usize>>,
    /// Row `i`, column `j`: edges from block `i` into block `j` per vertex of block `i`.
    pub matrix: Vec<Vec<f64>>,
    pub eigenvalues: Vec<f64>,
    pub adjacency_eigenvalues: Vec<f64>,
    pub equitable: bool,
    pub interlacing: Interlacing,
}

fn quotient(a: QuotientArgs) -> Result<Outcome, CliError> {
    let g = read_graph(&a.input)?;
    let blocks = parse_partition(&a.partition)?;
    let p = Partition::new(g.vertex_count(), blocks)?;
    let q = quotient_matrix(&g, &p)?;
    let qs = quotient_eigenvalues(&q, multispec::spectral::DEFAULT_TOL)?;
    let full = adjacency_spectrum(&g)?;
    let (upper, lower) = upper_and_lower_interlacing(&full, &qs)?;
    let doc = QuotientDoc {
        graph: GraphInfo::from(&g),
        partition: p.blocks().to_vec(),
        matrix: q.entries().to_vec(),
        eigenvalues: displayed(&qs),
        adjacency_eigenvalues: displayed(&full),
        equitable: is_equitable(&g, &p)?,
        interlacing: Interlacing {
            upper,
            lower,
            holds: upper && lower,
        },
    };
    Ok(Outcome::ok(to_json(&doc)))
}

#[derive(Debug, Serialize)]
pub struct VerifyDoc {
    /// No violations and no failed trials.
    pub passed: bool,
    #[serde(flatten)]
    pub report: CampaignReport,
}

pub fn verify_model(n: Option<usize>, d: Option<u64>) -> SamplingModel {
    let SamplingModel::RegularSweep {
        n_min,
        n_max,
        d_min,
        d_max,
    } = SamplingModel::default_regular()
    else {
        unreachable!("default model is a sweep")
    };
    match (n, d) {
        (Some(n), Some(d)) => SamplingModel::Configuration { n, d },
        _ => SamplingModel::RegularSweep {
            n_min: n.unwrap_or(n_min),
            n_max: n.unwrap_or(n_max),
            d_min: d.unwrap_or(d_min),
            d_max: d.unwrap_or(d_max),
        },
    }
}

fn verify(a: VerifyArgs) -> Result<Outcome, CliError> {
    let model = verify_model(a.n, a.d);
    let report = run_campaign(&model, a.suite.into(), a.trials, a.seed, execution(a.sequential))?;
    let passed = report.passes();
    Ok(Outcome {
        stdout: to_json(&VerifyDoc { passed, report }),
        status: if passed { Status::Ok } else { Status::Failed },
    })
}

#[derive(Debug, Serialize)]
pub struct ExploreDoc {
    pub question: &'static str,
    #[serde(flatten)]
    pub report: GapReport,
}

fn explore(a: ExploreArgs) -> Result<Outcome, CliError> {
    match a.question {
        Question::CGap => {
            let report = explore_c_gap(a.trials, a.seed, a.f_max, execution(a.sequential))?;
            Ok(Outcome::ok(to_json(&ExploreDoc {
                question: "c-gap",
                report,
            })))
        }
    }
}
