//! `funcgraph`: compute graph functionality and related parameters, generate
//! instances, and run the seeded verification harness.
//!
//! Every command except `gen` (without `--out`) prints one JSON report on
//! stdout and a short summary on stderr. Exit codes: 0 success, 1 property
//! violated, 2 usage or configuration error, 3 input parse error.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sha2::{Digest, Sha256};

use funcgraph::functionality::DEFAULT_EXACT_LIMIT;
use funcgraph::rng::RNG_IDENTITY;
use funcgraph::verify::Target;

#[derive(Parser, Debug)]
#[command(name = "funcgraph", version, about = "Graph functionality toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Largest vertex count for exhaustive subgraph sweeps.
    #[arg(long, default_value_t = DEFAULT_EXACT_LIMIT)]
    pub exact_limit: usize,
    /// Replay every witness with the brute-force oracles.
    #[arg(long)]
    pub recheck: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate an instance file.
    Gen {
        #[command(subcommand)]
        family: Family,
        /// Write the instance here and print a report instead of the instance.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
        #[arg(long, global = true)]
        seed: Option<u64>,
    },
    /// Vertex or graph functionality.
    Fun {
        mode: FunMode,
        file: PathBuf,
        #[arg(long)]
        vertex: Option<usize>,
        /// For `graph` above the exact limit: random induced subgraphs to try
        /// for a certified lower bound.
        #[arg(long)]
        lower_trials: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[command(flatten)]
        common: Common,
    },
    /// Symmetric difference of a pair, the minimum over pairs, or sd(G).
    Sd {
        mode: SdMode,
        file: PathBuf,
        #[arg(long)]
        x: Option<usize>,
        #[arg(long)]
        y: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Degeneracy with an elimination order.
    Degeneracy {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// VC-dimension of the closed neighbourhoods.
    Vcdim {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Evaluate a k-expression or check fun <= 2k - 1 on it.
    Kexpr {
        mode: KexprMode,
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Constructive witnesses for unit interval, permutation and line graphs.
    Witness {
        kind: WitnessKind,
        file: PathBuf,
        /// Permutation: a 1-based value to certify with a strict cross.
        #[arg(long)]
        x: Option<usize>,
        /// Line graph: the base-graph edge `u v` to certify (default: all).
        #[arg(long, num_args = 2, value_names = ["U", "V"])]
        edge: Option<Vec<usize>>,
        #[command(flatten)]
        common: Common,
    },
    /// Determining hyperedge sets in 3-uniform hypergraphs.
    Hyper3 {
        mode: Hyper3Mode,
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Run a seeded verification suite.
    Verify {
        #[arg(value_parser = parse_target)]
        target: Target,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        cases: Option<usize>,
        /// `sd-construction`: check a single t.
        #[arg(long)]
        t: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
}

fn parse_target(s: &str) -> Result<Target, String> {
    s.parse().map_err(|e: funcgraph::Error| e.to_string())
}

#[derive(Subcommand, Debug, Clone)]
pub enum Family {
    /// G(n, p) random graph.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
    },
    Path {
        #[arg(long)]
        n: usize,
    },
    Cycle {
        #[arg(long)]
        n: usize,
    },
    Complete {
        #[arg(long)]
        n: usize,
    },
    Hypercube {
        #[arg(long)]
        n: usize,
    },
    Shattering {
        #[arg(long)]
        n: usize,
    },
    /// Random distance-hereditary graph from a twin/pendant script.
    DistanceHereditary {
        #[arg(long)]
        steps: usize,
    },
    /// Random permutation (permutation file).
    Permutation {
        #[arg(long)]
        n: usize,
    },
    /// The large-sd permutation for parameter t (permutation file).
    SdConstruction {
        #[arg(long)]
        t: usize,
    },
    /// Random isolated-free-ish unit intervals (interval file).
    Intervals {
        #[arg(long)]
        n: usize,
    },
    /// Random 3-uniform hypergraph (hypergraph file).
    Hypergraph {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Hand-built thick-structure hypergraph.
    Fixture { name: FixtureName },
    /// Random k-expression (expression file).
    Kexpr {
        #[arg(long)]
        labels: u32,
        #[arg(long)]
        ops: usize,
    },
    /// The 4-expression of the five-cycle.
    C5Expression,
    /// Graph of a permutation file.
    PermutationGraph { file: PathBuf },
    /// Graph of an interval file.
    IntervalGraph { file: PathBuf },
    /// Line graph of a graph file.
    LineGraph { file: PathBuf },
    /// Intersection graph of a hypergraph file.
    IntersectionGraph { file: PathBuf },
    /// Graph of an expression file.
    KexprGraph { file: PathBuf },
}

#[derive(ValueEnum, Clone, Copy, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FixtureName {
    Fly,
    Windmill,
    BrokenWindmill,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum FunMode {
    Vertex,
    Min,
    Graph,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum SdMode {
    Pair,
    Min,
    Graph,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum KexprMode {
    Eval,
    Check,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum WitnessKind {
    UnitInterval,
    Permutation,
    LineGraph,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum Hyper3Mode {
    Bound,
    Structure,
}

#[derive(Serialize)]
struct Report {
    command: String,
    input_digest: String,
    seed: Option<u64>,
    status: &'static str,
    result: serde_json::Value,
    timing_ms: u64,
    version: &'static str,
    rng: &'static str,
}

/// Hashes every input (files and canonical parameters) in order, each
/// prefixed by its length.
#[derive(Default)]
pub struct Inputs {
    hasher: Sha256,
}

impl Inputs {
    pub fn add(&mut self, bytes: &[u8]) {
        self.hasher.update((bytes.len() as u64).to_le_bytes());
        self.hasher.update(bytes);
    }

    pub fn read(&mut self, path: &PathBuf) -> Result<String, Failure> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
        self.add(text.as_bytes());
        Ok(text)
    }

    fn digest(self) -> String {
        hex::encode(self.hasher.finalize())
    }
}

/// What a command produced: its payload, whether the checked property held,
/// and a one-line summary for stderr.
pub struct Outcome {
    pub result: serde_json::Value,
    pub pass: bool,
    pub summary: String,
    /// `gen` without `--out`: print this instead of a report.
    pub raw: Option<String>,
}

pub enum Failure {
    Usage(String),
    Parse(String),
    Violation(String),
}

impl From<funcgraph::Error> for Failure {
    fn from(e: funcgraph::Error) -> Self {
        match e {
            funcgraph::Error::Parse { .. } => Failure::Parse(e.to_string()),
            funcgraph::Error::Verification(_) => Failure::Violation(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn command_name(c: &Command) -> String {
    fn kebab(s: impl std::fmt::Debug) -> String {
        let raw = format!("{s:?}");
        let mut out = String::new();
        for (i, ch) in raw.chars().take_while(|c| c.is_alphanumeric()).enumerate() {
            if ch.is_uppercase() && i > 0 {
                out.push('-');
            }
            out.push(ch.to_ascii_lowercase());
        }
        out
    }
    match c {
        Command::Gen { family, .. } => format!("gen {}", kebab(family)),
        Command::Fun { mode, .. } => format!("fun {}", kebab(mode)),
        Command::Sd { mode, .. } => format!("sd {}", kebab(mode)),
        Command::Degeneracy { .. } => "degeneracy".into(),
        Command::Vcdim { .. } => "vcdim".into(),
        Command::Kexpr { mode, .. } => format!("kexpr {}", kebab(mode)),
        Command::Witness { kind, .. } => format!("witness {}", kebab(kind)),
        Command::Hyper3 { mode, .. } => format!("hyper3 {}", kebab(mode)),
        Command::Verify { target, .. } => format!("verify {target}"),
    }
}

fn seed_of(c: &Command) -> Option<u64> {
    match c {
        Command::Gen { seed, .. } | Command::Fun { seed, .. } => *seed,
        Command::Verify { seed, .. } => Some(*seed),
        _ => None,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = command_name(&cli.command);
    let seed = seed_of(&cli.command);
    let start = Instant::now();
    let mut inputs = Inputs::default();
    let outcome = commands::run(&cli.command, &mut inputs);
    let timing_ms = start.elapsed().as_millis() as u64;

    let (status, result, code, summary) = match outcome {
        Ok(Outcome {
            raw: Some(text),
            summary,
            ..
        }) => {
            print!("{text}");
            eprintln!("{name}: {summary}");
            return ExitCode::SUCCESS;
        }
        Ok(o) if o.pass => ("pass", o.result, 0, o.summary),
        Ok(o) => ("fail", o.result, 1, o.summary),
        Err(Failure::Violation(m)) => ("fail", serde_json::json!({ "error": m }), 1, m),
        Err(Failure::Usage(m)) => ("error", serde_json::json!({ "error": m }), 2, m),
        Err(Failure::Parse(m)) => ("error", serde_json::json!({ "error": m }), 3, m),
    };
    let report = Report {
        command: name.clone(),
        input_digest: inputs.digest(),
        seed,
        status,
        result,
        timing_ms,
        version: env!("CARGO_PKG_VERSION"),
        rng: RNG_IDENTITY,
    };
    println!("{}", serde_json::to_string(&report).expect("report serialises"));
    eprintln!("{name}: {status}: {summary}");
    ExitCode::from(code)
}
