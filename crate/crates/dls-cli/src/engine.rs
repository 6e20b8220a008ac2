//! Scan and enumeration engine producing deterministic, auditable reports.
//!
//! Graphs are processed in bounded chunks with a rayon worker pool; per-graph
//! work is pure and results are collated back into input order, so reruns on
//! the same input produce byte-identical reports.

use anyhow::{bail, Context, Result};
use dls_core::bounds::{self, BoundContext, LemmaId, TheoremId};
use dls_core::dlap::{self, DlapAnalysis, Tolerances};
use dls_core::eigen::cluster_multiplicities;
use dls_core::families::{self, FamilySpec};
use dls_core::g6;
use dls_core::graph::Graph;
use rayon::prelude::*;
use serde::Serialize;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

const CHUNK: usize = 4096;

#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub source: String,
    pub tolerances: Tolerances,
    pub theorems: Vec<TheoremId>,
    pub lemmas: Vec<LemmaId>,
    /// Evaluate the k-partite floor bound at every k in `[chi, n-1]`, not
    /// just the tightest one.
    pub all_k: bool,
    /// Run the all-pairs 2x2 interlacing audit per graph.
    pub interlacing: bool,
    /// Audit edge-deletion monotonicity over every deletable edge.
    pub edge_deletion: bool,
    /// Keep per-graph rows in the report (disable for huge enumerations).
    pub keep_rows: bool,
    /// Count malformed scan lines instead of failing fast.
    pub skip_bad: bool,
}

impl RunConfig {
    /// Defaults for corpus scans: full theorem registry, argument-free lemmas.
    pub fn scan(source: impl Into<String>) -> RunConfig {
        RunConfig {
            source: source.into(),
            tolerances: Tolerances::default(),
            theorems: TheoremId::ALL.to_vec(),
            lemmas: LemmaId::ALL
                .iter()
                .copied()
                .filter(|&l| l != LemmaId::L2_5)
                .collect(),
            all_k: false,
            interlacing: false,
            edge_deletion: false,
            keep_rows: true,
            skip_bad: false,
        }
    }

    /// Defaults for exhaustive verification: everything on.
    pub fn enumerate(n: usize) -> RunConfig {
        RunConfig {
            source: format!("enumerate n={n}"),
            tolerances: Tolerances::default(),
            theorems: TheoremId::ALL.to_vec(),
            lemmas: LemmaId::ALL
                .iter()
                .copied()
                .filter(|&l| l != LemmaId::L2_5)
                .collect(),
            all_k: true,
            interlacing: true,
            edge_deletion: true,
            keep_rows: n <= 5,
            skip_bad: false,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRow {
    pub id: String,
    pub applicable: bool,
    pub slack: f64,
    pub holds: bool,
    pub equality: bool,
    pub consistent: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaRow {
    pub id: String,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphRow {
    pub index: usize,
    pub graph6: String,
    pub n: usize,
    pub wiener: u64,
    pub diameter: u32,
    pub tr_max: u64,
    pub partial_1: f64,
    pub partial_n_minus_1: f64,
    pub dls: f64,
    pub checks: Vec<CheckRow>,
    pub lemmas: Vec<LemmaRow>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub index: usize,
    pub graph6: String,
    pub check: String,
    pub detail: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Summary {
    pub graphs_scanned: usize,
    pub skipped_disconnected: usize,
    pub skipped_malformed: usize,
    pub checks_run: usize,
    pub violations: Vec<Violation>,
    pub equality_family_mismatches: usize,
    pub inapplicable: usize,
    pub radicand_warnings: usize,
}

#[derive(Debug, Serialize)]
pub struct ScanReport {
    pub config: RunConfig,
    pub rows: Vec<GraphRow>,
    pub summary: Summary,
}

impl ScanReport {
    pub fn ok(&self) -> bool {
        self.summary.violations.is_empty()
    }
}

struct Processed {
    row: GraphRow,
    violations: Vec<Violation>,
    checks_run: usize,
    inapplicable: usize,
    radicand_warnings: usize,
    equality_family_mismatches: usize,
}

/// Full per-graph evaluation. Pure; safe to fan out.
fn process_graph(index: usize, g: &Graph, graph6: &str, cfg: &RunConfig) -> Processed {
    let mut violations = Vec::new();
    let mut row = GraphRow {
        index,
        graph6: graph6.to_string(),
        n: g.n(),
        wiener: 0,
        diameter: 0,
        tr_max: 0,
        partial_1: 0.0,
        partial_n_minus_1: 0.0,
        dls: 0.0,
        checks: Vec::new(),
        lemmas: Vec::new(),
    };
    let out = |violations: Vec<Violation>, row: GraphRow, checks, inapp, rad, mism| Processed {
        row,
        violations,
        checks_run: checks,
        inapplicable: inapp,
        radicand_warnings: rad,
        equality_family_mismatches: mism,
    };

    let a = match dlap::analyze_with(g, &cfg.tolerances) {
        Ok(a) => a,
        Err(err) => {
            violations.push(Violation {
                index,
                graph6: graph6.to_string(),
                check: "internal-identity".to_string(),
                detail: err.to_string(),
            });
            return out(violations, row, 0, 0, 0, 0);
        }
    };
    row.wiener = a.summary.wiener;
    row.diameter = a.summary.diameter;
    row.tr_max = a.summary.tr_max;
    row.partial_1 = a.partial_1;
    row.partial_n_minus_1 = a.partial_n_minus_1;
    row.dls = a.dls;

    let ctx = BoundContext::new(g);
    let mut checks_run = 0usize;
    let mut inapplicable = 0usize;
    let mut radicand_warnings = 0usize;
    let mut mismatches = 0usize;

    let mut record = |check: &bounds::BoundCheck,
                      row: &mut GraphRow,
                      violations: &mut Vec<Violation>,
                      keep: bool| {
        checks_run += 1;
        if !check.applicable {
            inapplicable += 1;
            if check.inapplicable_reason.as_deref() == Some("negative radicand") {
                radicand_warnings += 1;
            }
        }
        if check.applicable && !check.holds {
            violations.push(Violation {
                index,
                graph6: graph6.to_string(),
                check: check.theorem.as_str().to_string(),
                detail: format!(
                    "bound violated: lhs = {}, rhs = {}, slack = {}",
                    check.lhs, check.rhs, check.slack
                ),
            });
        }
        if check.consistent == Some(false) {
            mismatches += 1;
            violations.push(Violation {
                index,
                graph6: graph6.to_string(),
                check: format!("{}-equality-family", check.theorem),
                detail: format!(
                    "equality = {} but extremal family match = {:?} (slack = {})",
                    check.equality, check.equality_family_expected, check.slack
                ),
            });
        }
        if keep {
            row.checks.push(CheckRow {
                id: check.theorem.as_str().to_string(),
                applicable: check.applicable,
                slack: check.slack,
                holds: check.holds,
                equality: check.equality,
                consistent: check.consistent,
            });
        }
    };

    for &id in &cfg.theorems {
        let check = bounds::evaluate_bound_with(id, &a, &ctx);
        record(&check, &mut row, &mut violations, true);
    }
    if cfg.all_k {
        if let Some(chi) = ctx.chi {
            // k = chi is already covered by the registry row above
            for k in (chi + 1)..g.n() {
                let check = bounds::evaluate_partite_floor_bound(&a, &ctx, k);
                record(&check, &mut row, &mut violations, false);
            }
        }
    }

    for &id in &cfg.lemmas {
        if id == LemmaId::L2_5 {
            continue; // needs an edge; covered by the edge-deletion audit
        }
        match bounds::verify_lemma_with(id, &a, g, None) {
            Ok(check) => {
                checks_run += 1;
                if !check.passed {
                    violations.push(Violation {
                        index,
                        graph6: graph6.to_string(),
                        check: check.lemma.as_str().to_string(),
                        detail: check.detail.clone(),
                    });
                }
                row.lemmas.push(LemmaRow {
                    id: check.lemma.as_str().to_string(),
                    passed: check.passed,
                });
            }
            Err(err) => violations.push(Violation {
                index,
                graph6: graph6.to_string(),
                check: id.as_str().to_string(),
                detail: err.to_string(),
            }),
        }
    }

    if cfg.edge_deletion && g.edge_count() >= g.n() {
        for (u, v) in g.edges() {
            match bounds::verify_lemma_with(LemmaId::L2_5, &a, g, Some((u, v))) {
                Ok(check) => {
                    checks_run += 1;
                    if !check.passed {
                        violations.push(Violation {
                            index,
                            graph6: graph6.to_string(),
                            check: "L2_5".to_string(),
                            detail: check.detail,
                        });
                    }
                }
                Err(err) => violations.push(Violation {
                    index,
                    graph6: graph6.to_string(),
                    check: "L2_5".to_string(),
                    detail: err.to_string(),
                }),
            }
        }
    }

    if cfg.interlacing {
        checks_run += 1;
        let audit = bounds::interlacing_audit(&a, &ctx);
        if !audit.passed {
            violations.push(Violation {
                index,
                graph6: graph6.to_string(),
                check: audit.name.to_string(),
                detail: audit.detail,
            });
        }
    }

    out(violations, row, checks_run, inapplicable, radicand_warnings, mismatches)
}

fn merge(report: &mut ScanReport, processed: Vec<Processed>) {
    for p in processed {
        report.summary.graphs_scanned += 1;
        report.summary.checks_run += p.checks_run;
        report.summary.inapplicable += p.inapplicable;
        report.summary.radicand_warnings += p.radicand_warnings;
        report.summary.equality_family_mismatches += p.equality_family_mismatches;
        for v in &p.violations {
            eprintln!("violation: graph {} ({}): {}: {}", v.index, v.graph6, v.check, v.detail);
        }
        report.summary.violations.extend(p.violations);
        if report.config.keep_rows {
            report.rows.push(p.row);
        }
    }
}

fn run_chunked<I>(graphs: I, cfg: RunConfig) -> ScanReport
where
    I: Iterator<Item = (usize, Graph, String)>,
{
    let mut report = ScanReport {
        config: cfg,
        rows: Vec::new(),
        summary: Summary::default(),
    };
    let mut graphs = graphs.peekable();
    let mut chunk = Vec::with_capacity(CHUNK);
    while graphs.peek().is_some() {
        chunk.clear();
        chunk.extend(graphs.by_ref().take(CHUNK));
        let processed: Vec<Processed> = chunk
            .par_iter()
            .map(|(index, g, line)| process_graph(*index, g, line, &report.config))
            .collect();
        merge(&mut report, processed);
    }
    report
}

/// Scans a graph6 file against the configured registry.
pub fn scan_file(path: &Path, cfg: RunConfig) -> Result<ScanReport> {
    let file = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
    let reader = BufReader::new(file);
    let mut graphs: Vec<(usize, Graph, String)> = Vec::new();
    let mut skipped_disconnected = 0usize;
    let mut skipped_malformed = 0usize;
    let mut index = 0usize;
    for (lineno, line) in reader.lines().enumerate() {
        let line = line.context("read error")?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.as_bytes() == g6::HEADER {
            continue;
        }
        match g6::parse_graph6(trimmed.as_bytes()) {
            Ok(g) => {
                if g.n() >= 2 && g.is_connected() {
                    graphs.push((index, g, trimmed.to_string()));
                    index += 1;
                } else {
                    eprintln!("warning: line {}: skipping disconnected graph", lineno + 1);
                    skipped_disconnected += 1;
                }
            }
            Err(err) => {
                if cfg.skip_bad {
                    eprintln!("warning: line {}: {err}", lineno + 1);
                    skipped_malformed += 1;
                } else {
                    bail!("line {}: {err}", lineno + 1);
                }
            }
        }
    }
    let mut report = run_chunked(graphs.into_iter(), cfg);
    report.summary.skipped_disconnected = skipped_disconnected;
    report.summary.skipped_malformed = skipped_malformed;
    Ok(report)
}

/// Runs the full registry over every labeled connected graph on `n` vertices.
pub fn enumerate_verify(n: usize, cfg: RunConfig) -> Result<ScanReport> {
    let graphs = g6::enumerate_labeled_connected(n)?
        .enumerate()
        .map(|(i, g)| {
            let line = g6::write_graph6(&g).expect("enumerated orders are tiny");
            (i, g, line)
        });
    Ok(run_chunked(graphs, cfg))
}

/// Structured single-graph report for `analyze` and `family`.
#[derive(Debug, Serialize)]
pub struct SingleReport {
    pub graph6: String,
    pub n: usize,
    pub edges: usize,
    pub wiener: u64,
    pub diameter: u32,
    pub transmissions: Vec<u64>,
    pub tr_max: u64,
    pub tr_min: u64,
    pub r1: u64,
    pub spectrum: Vec<f64>,
    pub clusters: Vec<(f64, usize)>,
    pub partial_1: f64,
    pub partial_n_minus_1: f64,
    pub dls: f64,
    pub dls_snapped: Option<i64>,
    pub mult_of_n: usize,
    pub structure: families::StructureTag,
    pub independence_number: usize,
    pub chromatic_number: Option<usize>,
    pub checks: Vec<bounds::BoundCheck>,
    pub lemmas: Vec<bounds::LemmaCheck>,
}

pub fn analyze_graph(g: &Graph, tol: &Tolerances) -> Result<SingleReport> {
    let a = dlap::analyze_with(g, tol)?;
    let ctx = BoundContext::new(g);
    let checks = TheoremId::ALL
        .iter()
        .map(|&id| bounds::evaluate_bound_with(id, &a, &ctx))
        .collect();
    let mut lemmas = Vec::new();
    for id in LemmaId::ALL {
        if id == LemmaId::L2_5 {
            continue;
        }
        lemmas.push(bounds::verify_lemma_with(id, &a, g, None)?);
    }
    Ok(SingleReport {
        graph6: g6::write_graph6(g)?,
        n: g.n(),
        edges: g.edge_count(),
        wiener: a.summary.wiener,
        diameter: a.summary.diameter,
        transmissions: a.summary.tr.clone(),
        tr_max: a.summary.tr_max,
        tr_min: a.summary.tr_min,
        r1: a.summary.r1,
        spectrum: a.spectrum.values.clone(),
        clusters: cluster_multiplicities(&a.spectrum, tol.cluster_tol),
        partial_1: a.partial_1,
        partial_n_minus_1: a.partial_n_minus_1,
        dls: a.dls,
        dls_snapped: a.dls_snapped,
        mult_of_n: a.mult_of_n,
        structure: ctx.structure.clone(),
        independence_number: ctx.alpha,
        chromatic_number: ctx.chi,
        checks,
        lemmas,
    })
}

/// Family report: the generated graph's analysis plus, for multipartite
/// kinds, the elementwise delta against the closed-form spectrum.
#[derive(Debug, Serialize)]
pub struct FamilyReport {
    pub report: SingleReport,
    pub closed_form: Option<Vec<f64>>,
    pub max_closed_form_delta: Option<f64>,
}

pub fn analyze_family(spec: &FamilySpec, tol: &Tolerances) -> Result<FamilyReport> {
    let g = families::generate(spec)?;
    let report = analyze_graph(&g, tol)?;
    let closed_form = report
        .structure
        .multipartite_parts
        .clone()
        .filter(|p| p.len() >= 2)
        .map(|p| families::multipartite_closed_form_spectrum(&p))
        .transpose()?
        .map(|s| s.values);
    let max_delta = closed_form.as_ref().map(|cf| {
        cf.iter()
            .zip(&report.spectrum)
            .map(|(e, v)| (e - v).abs())
            .fold(0.0f64, f64::max)
    });
    Ok(FamilyReport {
        report,
        closed_form,
        max_closed_form_delta: max_delta,
    })
}

pub fn analysis_of(g: &Graph, tol: &Tolerances) -> Result<DlapAnalysis> {
    Ok(dlap::analyze_with(g, tol)?)
}
