//! `survnet` — synthesize, verify, compare, and stress survivable network
//! topologies from the command line.
//!
//! Exit codes: 0 on success (including a passed verification), 1 when a
//! verification fails, 2 on input or usage errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use survnet_core::{
    accumulated_costs, compare, generate, is_k_connected, link_count_formula, number_nodes,
    simulate, vertex_connectivity, CostMatrix, FailureMode, GeneratorParams, GeneratorWarning,
    Method, Numbering, Topology, TrialConfig,
};

#[derive(Parser)]
#[command(
    name = "survnet",
    version,
    about = "Survivable network topology toolkit",
    subcommand_required = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Bipartite,
    Sequential,
    Harary,
    Hypercube,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Bipartite => Method::Bipartite,
            MethodArg::Sequential => Method::Sequential,
            MethodArg::Harary => Method::Harary,
            MethodArg::Hypercube => Method::Hypercube,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Node,
    Link,
}

impl From<ModeArg> for FailureMode {
    fn from(m: ModeArg) -> FailureMode {
        match m {
            ModeArg::Node => FailureMode::Node,
            ModeArg::Link => FailureMode::Link,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Rank the nodes of a cost matrix by accumulated cost.
    Number {
        /// Cost-matrix CSV file
        matrix: PathBuf,
    },
    /// Generate a topology and write its canonical edge list.
    Generate {
        /// Construction to use
        #[arg(long, value_enum)]
        method: MethodArg,
        /// Node count (omit to take it from the matrix, or 2^k for hypercube)
        #[arg(short = 'n', long = "nodes")]
        n: Option<u32>,
        /// Connectivity target
        #[arg(short = 'k', long = "connectivity")]
        k: u32,
        /// Cost-matrix CSV file (enables costs and --labels)
        #[arg(long)]
        matrix: Option<PathBuf>,
        /// Write the edge list here instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write a DOT rendering here
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Label DOT nodes with the matrix symbols (requires --matrix)
        #[arg(long)]
        labels: bool,
        /// Write a JSON run manifest here
        #[arg(long)]
        manifest: Option<PathBuf>,
    },
    /// Check k-connectivity of an edge-list file and print a certificate.
    Verify {
        /// Edge-list file (`n k method` header, then `u v` lines)
        edgelist: PathBuf,
        /// Connectivity to verify (defaults to the file header's k)
        #[arg(short = 'k', long = "connectivity")]
        k: Option<u32>,
    },
    /// Compare link counts, connectivity, and cost across constructions.
    Compare {
        /// Node count
        #[arg(short = 'n', long = "nodes")]
        n: u32,
        /// Connectivity target
        #[arg(short = 'k', long = "connectivity")]
        k: u32,
        /// Cost-matrix CSV file for the cost column
        #[arg(long)]
        matrix: Option<PathBuf>,
    },
    /// Estimate survivability under random node or link failures.
    Simulate {
        /// Edge-list file
        edgelist: PathBuf,
        /// What fails: nodes or links
        #[arg(long, value_enum)]
        mode: ModeArg,
        /// Simultaneous failures per trial
        #[arg(short = 'f', long = "failures")]
        failures: u32,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Reproducible record of one `generate` run: no timestamps, fixed field
/// order, so identical inputs give identical manifests.
#[derive(Serialize)]
struct RunManifest {
    command: &'static str,
    version: &'static str,
    method: String,
    n: u32,
    k: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    matrix: Option<String>,
    outputs: Vec<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Number { matrix } => cmd_number(&matrix),
        Command::Generate {
            method,
            n,
            k,
            matrix,
            out,
            dot,
            labels,
            manifest,
        } => cmd_generate(method.into(), n, k, matrix, out, dot, labels, manifest),
        Command::Verify { edgelist, k } => cmd_verify(&edgelist, k),
        Command::Compare { n, k, matrix } => cmd_compare(n, k, matrix),
        Command::Simulate {
            edgelist,
            mode,
            failures,
            trials,
            seed,
        } => cmd_simulate(&edgelist, mode.into(), failures, trials, seed),
    }
}

fn read_matrix(path: &Path) -> Result<CostMatrix> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read matrix file {}", path.display()))?;
    CostMatrix::parse_csv(&text).map_err(|e| anyhow!("{}: {e}", path.display()))
}

fn read_edge_list(path: &Path) -> Result<survnet_core::EdgeListDoc> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read edge-list file {}", path.display()))?;
    Topology::parse_edge_list(&text).map_err(|e| anyhow!("{}: {e}", path.display()))
}

fn cmd_number(matrix: &Path) -> Result<ExitCode> {
    let m = read_matrix(matrix)?;
    let totals = accumulated_costs(&m);
    let numbering = number_nodes(&m);
    println!("{:<8} {:>16} {:>6}", "label", "accumulated_cost", "number");
    for (rank, label) in numbering.iter_by_rank() {
        let total = totals.get(label.as_str()).expect("label is in the matrix");
        println!("{:<8} {:>16} {:>6}", label, total, rank);
    }
    println!();
    println!("label,accumulated_cost,number");
    for (rank, label) in numbering.iter_by_rank() {
        let total = totals.get(label.as_str()).expect("label is in the matrix");
        println!("{label},{total},{rank}");
    }
    Ok(ExitCode::SUCCESS)
}

fn label_map_line(numbering: &Numbering) -> String {
    let pairs: Vec<String> = numbering
        .iter_by_rank()
        .map(|(rank, label)| format!("{rank}={label}"))
        .collect();
    format!("labels: {}", pairs.join(" "))
}

#[allow(clippy::too_many_arguments)]
fn cmd_generate(
    method: Method,
    n: Option<u32>,
    k: u32,
    matrix: Option<PathBuf>,
    out: Option<PathBuf>,
    dot: Option<PathBuf>,
    labels: bool,
    manifest: Option<PathBuf>,
) -> Result<ExitCode> {
    if labels && matrix.is_none() {
        bail!("--labels needs --matrix to map ranks back to symbols");
    }
    let parsed_matrix = matrix.as_deref().map(read_matrix).transpose()?;
    let n = match (n, &parsed_matrix) {
        (Some(n), Some(m)) if m.n() != n as usize => {
            bail!("matrix has {} labels but -n is {n}", m.n());
        }
        (Some(n), _) => n,
        (None, Some(m)) => m.n() as u32,
        (None, None) if method == Method::Hypercube => {
            if k == 0 || k > 16 {
                bail!("hypercube dimension must be in 1..=16, got {k}");
            }
            1u32 << k
        }
        (None, None) => bail!("-n is required (or supply --matrix)"),
    };
    let params = GeneratorParams::new(n, k)?;
    let generated = generate(method, &params)?;
    let topology = &generated.topology;

    let numbering = parsed_matrix.as_ref().map(number_nodes);
    let edge_text = topology.write_edge_list(k)?;
    let report_to_stdout = out.is_some();
    let mut outputs = Vec::new();
    match &out {
        Some(path) => {
            fs::write(path, &edge_text)
                .with_context(|| format!("cannot write {}", path.display()))?;
            outputs.push(path.display().to_string());
        }
        None => {
            print!("{edge_text}");
            outputs.push("-".to_owned());
        }
    }
    if let Some(path) = &dot {
        let dot_text = topology.to_dot(if labels { numbering.as_ref() } else { None });
        fs::write(path, dot_text).with_context(|| format!("cannot write {}", path.display()))?;
        outputs.push(path.display().to_string());
    }

    let kappa = vertex_connectivity(topology)?.kappa;
    let mut report = format!(
        "links: {}\nformula: {}\nkappa: {}\n",
        topology.edge_count(),
        link_count_formula(method, n, k)?,
        kappa
    );
    if let Some(GeneratorWarning::ConnectivityShortfall {
        requested,
        achieved,
    }) = generated.warning
    {
        report.push_str(&format!(
            "warning: achieved connectivity {achieved} < requested {requested}\n"
        ));
    }
    if labels {
        if let Some(nb) = &numbering {
            report.push_str(&label_map_line(nb));
            report.push('\n');
        }
    }
    if report_to_stdout {
        print!("{report}");
    } else {
        eprint!("{report}");
    }

    if let Some(path) = &manifest {
        let doc = RunManifest {
            command: "generate",
            version: env!("CARGO_PKG_VERSION"),
            method: method.to_string(),
            n,
            k,
            matrix: matrix.as_ref().map(|p| p.display().to_string()),
            outputs,
        };
        let json = serde_json::to_string_pretty(&doc)?;
        fs::write(path, json + "\n").with_context(|| format!("cannot write {}", path.display()))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(edgelist: &Path, k: Option<u32>) -> Result<ExitCode> {
    let doc = read_edge_list(edgelist)?;
    let k = k.unwrap_or(doc.k);
    let verdict = is_k_connected(&doc.topology, k)?;
    println!("kappa: {}", verdict.kappa);
    if verdict.satisfied {
        println!("verdict: {k}-connected");
    } else {
        println!("verdict: not {k}-connected");
    }
    print!("{}", verdict.certificate.render());
    Ok(if verdict.satisfied {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_compare(n: u32, k: u32, matrix: Option<PathBuf>) -> Result<ExitCode> {
    let parsed_matrix = matrix.as_deref().map(read_matrix).transpose()?;
    let comparison = compare(n, k, parsed_matrix.as_ref())?;
    print!("{}", comparison.to_table());
    println!();
    print!("{}", comparison.to_csv());
    Ok(ExitCode::SUCCESS)
}

fn cmd_simulate(
    edgelist: &Path,
    mode: FailureMode,
    failures: u32,
    trials: u64,
    seed: u64,
) -> Result<ExitCode> {
    let doc = read_edge_list(edgelist)?;
    let config = TrialConfig {
        mode,
        failures,
        trials,
        seed,
    };
    let report = simulate(&doc.topology, &config)?;
    println!(
        "survived {} of {} trials (fraction {:.6}, kappa {})",
        report.survived,
        report.trials,
        report.fraction(),
        report.kappa
    );
    println!("{}", survnet_core::SurvivabilityReport::csv_header());
    println!("{}", report.csv_row());
    Ok(ExitCode::SUCCESS)
}
