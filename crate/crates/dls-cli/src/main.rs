//! `dls`: distance Laplacian spread analysis and bound verification.
//!
//! Exit codes: 0 when every check holds, 1 when any bound or lemma check is
//! violated, 2 on input or usage errors.

use clap::{ArgAction, Parser, Subcommand};
use dls_cli::engine;
use dls_cli::output::{self, Format};
use dls_cli::{input, RunConfig};
use dls_core::dlap::Tolerances;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "dls", version, about = "Distance Laplacian spread analysis and bound verification")]
struct Cli {
    /// Relative tolerance for spectral identities
    #[arg(long, global = true, default_value_t = 1e-8)]
    eig_tol: f64,
    /// Absolute tolerance for equality detection
    #[arg(long, global = true, default_value_t = 1e-6)]
    eq_tol: f64,
    /// Absolute tolerance for eigenvalue multiplicity clustering
    #[arg(long, global = true, default_value_t = 1e-6)]
    cluster_tol: f64,
    /// Emit JSON instead of text
    #[arg(long, global = true, action = ArgAction::SetTrue, conflicts_with = "csv")]
    json: bool,
    /// Emit CSV instead of text
    #[arg(long, global = true, action = ArgAction::SetTrue)]
    csv: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one graph: spectrum, spread and the full check registry
    Analyze {
        /// graph6 string, or an edge list `u-v,u-v,...` with --edges
        graph: String,
        /// Treat GRAPH as an edge list instead of graph6
        #[arg(long, action = ArgAction::SetTrue)]
        edges: bool,
        /// Explicit order for edge-list input
        #[arg(long)]
        n: Option<usize>,
    },
    /// Scan a graph6 file, one graph per line, against the check registry
    Scan {
        /// Path to a graph6 file
        file: PathBuf,
        /// Count malformed lines instead of aborting
        #[arg(long, action = ArgAction::SetTrue)]
        skip_bad: bool,
        /// Drop per-graph rows from the report (summary only)
        #[arg(long, action = ArgAction::SetTrue)]
        summary_only: bool,
        /// Also evaluate the k-partite floor bound at every admissible k
        #[arg(long, action = ArgAction::SetTrue)]
        all_k: bool,
    },
    /// Exhaustively verify every labeled connected graph on N vertices
    Enumerate {
        /// Order, 2 <= N <= 7
        n: usize,
        /// Keep per-graph rows in the report regardless of N
        #[arg(long, action = ArgAction::SetTrue)]
        keep_rows: bool,
    },
    /// Generate a named family member and analyze it
    Family {
        /// Descriptor like complete:7, star:6, bipartite:3,4,
        /// multipartite:3,2,2, kn-e:6, path:8, cycle:5, turan:9,5
        spec: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = if cli.json {
        Format::Json
    } else if cli.csv {
        Format::Csv
    } else {
        Format::Text
    };
    let tol = Tolerances {
        eig_tol: cli.eig_tol,
        eq_tol: cli.eq_tol,
        cluster_tol: cli.cluster_tol,
    };
    match run(cli.command, format, tol) {
        Ok(clean) => {
            if clean {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

/// Returns `Ok(true)` when every check held.
fn run(command: Command, format: Format, tol: Tolerances) -> anyhow::Result<bool> {
    let stdout = std::io::stdout();
    let mut w = stdout.lock();
    match command {
        Command::Analyze { graph, edges, n } => {
            let g = input::parse_graph(&graph, edges, n)?;
            let report = engine::analyze_graph(&g, &tol)?;
            output::render_single(&report, format, &mut w)?;
            w.flush()?;
            let clean = report.checks.iter().all(|c| c.holds && c.consistent != Some(false))
                && report.lemmas.iter().all(|l| l.passed);
            Ok(clean)
        }
        Command::Scan {
            file,
            skip_bad,
            summary_only,
            all_k,
        } => {
            let mut cfg = RunConfig::scan(file.display().to_string());
            cfg.tolerances = tol;
            cfg.skip_bad = skip_bad;
            cfg.keep_rows = !summary_only;
            cfg.all_k = all_k;
            let report = engine::scan_file(&file, cfg)?;
            output::render_scan(&report, format, &mut w)?;
            w.flush()?;
            Ok(report.ok())
        }
        Command::Enumerate { n, keep_rows } => {
            let mut cfg = RunConfig::enumerate(n);
            cfg.tolerances = tol;
            cfg.keep_rows = cfg.keep_rows || keep_rows;
            let report = engine::enumerate_verify(n, cfg)?;
            output::render_scan(&report, format, &mut w)?;
            w.flush()?;
            Ok(report.ok())
        }
        Command::Family { spec } => {
            let spec = input::parse_family(&spec)?;
            let report = engine::analyze_family(&spec, &tol)?;
            output::render_family(&report, format, &mut w)?;
            w.flush()?;
            let clean = report.report.checks.iter().all(|c| c.holds && c.consistent != Some(false))
                && report.report.lemmas.iter().all(|l| l.passed)
                && report.max_closed_form_delta.map_or(true, |d| d <= 1e-6);
            Ok(clean)
        }
    }
}
