//! Report rendering. All three formats are deterministic: the same input and
//! flags produce byte-identical output, so reports can be diffed across runs.

use crate::engine::{FamilyReport, ScanReport, SingleReport};
use anyhow::Result;
use std::io::Write;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

fn opt(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "true",
        Some(false) => "false",
        None => "",
    }
}

pub fn render_single(r: &SingleReport, format: Format, w: &mut impl Write) -> Result<()> {
    match format {
        Format::Json => writeln!(w, "{}", serde_json::to_string_pretty(r)?)?,
        Format::Csv => {
            let mut csv = csv::Writer::from_writer(w);
            csv.write_record([
                "graph6", "n", "check", "applicable", "lhs", "rhs", "slack", "holds",
                "equality", "consistent",
            ])?;
            for c in &r.checks {
                csv.write_record([
                    r.graph6.as_str(),
                    &r.n.to_string(),
                    c.theorem.as_str(),
                    &c.applicable.to_string(),
                    &c.lhs.to_string(),
                    &c.rhs.to_string(),
                    &c.slack.to_string(),
                    &c.holds.to_string(),
                    &c.equality.to_string(),
                    opt(c.consistent),
                ])?;
            }
            csv.flush()?;
        }
        Format::Text => {
            writeln!(w, "graph {} (n = {}, m = {})", r.graph6, r.n, r.edges)?;
            writeln!(
                w,
                "  W = {}, diameter = {}, Tr in [{}, {}], R1 = {}",
                r.wiener, r.diameter, r.tr_min, r.tr_max, r.r1
            )?;
            let spec: Vec<String> = r
                .clusters
                .iter()
                .map(|(v, m)| if *m == 1 { format!("{v:.6}") } else { format!("{v:.6}^{m}") })
                .collect();
            writeln!(w, "  spectrum: {}", spec.join(", "))?;
            write!(
                w,
                "  partial_1 = {:.6}, partial_(n-1) = {:.6}, DLS = {:.6}",
                r.partial_1, r.partial_n_minus_1, r.dls
            )?;
            match r.dls_snapped {
                Some(v) => writeln!(w, " (= {v})")?,
                None => writeln!(w)?,
            }
            write!(w, "  alpha = {}", r.independence_number)?;
            match r.chromatic_number {
                Some(chi) => writeln!(w, ", chi = {chi}")?,
                None => writeln!(w, ", chi = ? (order above exact cap)")?,
            }
            if let Some(parts) = &r.structure.multipartite_parts {
                writeln!(w, "  complete multipartite with parts {parts:?}")?;
            }
            writeln!(w, "  checks:")?;
            for c in &r.checks {
                if !c.applicable {
                    writeln!(
                        w,
                        "    {:<6} n/a     ({})",
                        c.theorem,
                        c.inapplicable_reason.as_deref().unwrap_or("")
                    )?;
                    continue;
                }
                let verdict = if !c.holds {
                    "VIOLATED"
                } else if c.equality {
                    "equality"
                } else {
                    "holds"
                };
                write!(
                    w,
                    "    {:<6} {:<8} lhs = {:.6}, rhs = {:.6}, slack = {:.6}",
                    c.theorem, verdict, c.lhs, c.rhs, c.slack
                )?;
                match c.consistent {
                    Some(true) => writeln!(w, " [family consistent]")?,
                    Some(false) => writeln!(w, " [FAMILY MISMATCH]")?,
                    None => writeln!(w)?,
                }
            }
            writeln!(w, "  lemmas:")?;
            for l in &r.lemmas {
                let verdict = if l.passed { "pass" } else { "FAIL" };
                writeln!(w, "    {:<6} {:<8} {}", l.lemma, verdict, l.detail)?;
            }
        }
    }
    Ok(())
}

pub fn render_family(r: &FamilyReport, format: Format, w: &mut impl Write) -> Result<()> {
    match format {
        Format::Json => writeln!(w, "{}", serde_json::to_string_pretty(r)?)?,
        Format::Csv => render_single(&r.report, Format::Csv, w)?,
        Format::Text => {
            render_single(&r.report, Format::Text, w)?;
            if let Some(delta) = r.max_closed_form_delta {
                writeln!(
                    w,
                    "  closed-form spectrum match: max elementwise delta = {delta:.3e}"
                )?;
            }
        }
    }
    Ok(())
}

pub fn render_scan(r: &ScanReport, format: Format, w: &mut impl Write) -> Result<()> {
    match format {
        Format::Json => writeln!(w, "{}", serde_json::to_string_pretty(r)?)?,
        Format::Csv => {
            let mut csv = csv::Writer::from_writer(w);
            csv.write_record([
                "index", "graph6", "n", "wiener", "diameter", "tr_max", "partial_1",
                "partial_n_minus_1", "dls", "check", "applicable", "slack", "holds",
                "equality", "consistent",
            ])?;
            for row in &r.rows {
                for c in &row.checks {
                    csv.write_record([
                        &row.index.to_string(),
                        row.graph6.as_str(),
                        &row.n.to_string(),
                        &row.wiener.to_string(),
                        &row.diameter.to_string(),
                        &row.tr_max.to_string(),
                        &row.partial_1.to_string(),
                        &row.partial_n_minus_1.to_string(),
                        &row.dls.to_string(),
                        &c.id,
                        &c.applicable.to_string(),
                        &c.slack.to_string(),
                        &c.holds.to_string(),
                        &c.equality.to_string(),
                        opt(c.consistent),
                    ])?;
                }
            }
            csv.flush()?;
        }
        Format::Text => {
            writeln!(w, "source: {}", r.config.source)?;
            let s = &r.summary;
            writeln!(
                w,
                "graphs: {} scanned, {} skipped disconnected, {} skipped malformed",
                s.graphs_scanned, s.skipped_disconnected, s.skipped_malformed
            )?;
            writeln!(
                w,
                "checks: {} run, {} inapplicable ({} negative radicand)",
                s.checks_run, s.inapplicable, s.radicand_warnings
            )?;
            for v in &s.violations {
                writeln!(
                    w,
                    "violation: graph {} ({}): {}: {}",
                    v.index, v.graph6, v.check, v.detail
                )?;
            }
            if s.violations.is_empty() {
                writeln!(w, "result: ok")?;
            } else {
                writeln!(
                    w,
                    "result: {} violation(s), {} equality-family mismatch(es)",
                    s.violations.len(),
                    s.equality_family_mismatches
                )?;
            }
        }
    }
    Ok(())
}
