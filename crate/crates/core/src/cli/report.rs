//! Machine-readable reports.
//!
//! Every JSON document is an object carrying `schema_version` and a `kind`
//! tag (`boundary`, `compression`, `search`, `survey`), followed by the
//! kind-specific fields in declaration order. [`parse_report`] reads any
//! document written by [`serialize_report`].

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::boundary::{
    closed_vertex_boundary, edge_boundary_count, edge_boundary_formula, exterior_vertex_boundary,
    BoundaryBreakdown,
};
use crate::compression::{CompressionStep, CompressionTrace};
use crate::lattice::PointSet;
use crate::search::{SearchMethod, SearchReport};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Plain,
}

/// Both edge-boundary computations side by side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryReport {
    pub dimension: usize,
    pub size: usize,
    pub direct_count: u64,
    pub formula_total: u64,
    pub agree: bool,
    pub exterior_vertex_boundary: u64,
    pub closed_vertex_boundary: u64,
    pub breakdown: BoundaryBreakdown,
}

impl BoundaryReport {
    pub fn for_set(set: &PointSet) -> Self {
        let breakdown = edge_boundary_formula(set);
        let direct_count = edge_boundary_count(set);
        BoundaryReport {
            dimension: set.dimension(),
            size: set.len(),
            direct_count,
            formula_total: breakdown.total,
            agree: direct_count == breakdown.total,
            exterior_vertex_boundary: exterior_vertex_boundary(set),
            closed_vertex_boundary: closed_vertex_boundary(set),
            breakdown,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompressionReport {
    pub steps: Vec<CompressionStep>,
    pub final_set: PointSet,
}

impl From<CompressionTrace> for CompressionReport {
    fn from(trace: CompressionTrace) -> Self {
        CompressionReport {
            steps: trace.steps,
            final_set: trace.final_set,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyRow {
    pub size: usize,
    pub min_edge_boundary: u64,
    pub witness_count: usize,
    pub some_witness_gap_free: bool,
    pub all_witnesses_gap_free: bool,
    pub proven_optimal: bool,
}

impl From<&SearchReport> for SurveyRow {
    fn from(r: &SearchReport) -> Self {
        SurveyRow {
            size: r.size,
            min_edge_boundary: r.min_edge_boundary,
            witness_count: r.witnesses.len(),
            some_witness_gap_free: r.some_witness_gap_free(),
            all_witnesses_gap_free: r.all_witnesses_gap_free(),
            proven_optimal: r.proven_optimal,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyTable {
    pub dimension: usize,
    pub rows: Vec<SurveyRow>,
}

impl SurveyTable {
    pub fn from_reports(dimension: usize, reports: &[SearchReport]) -> Self {
        SurveyTable {
            dimension,
            rows: reports.iter().map(SurveyRow::from).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Report {
    Boundary(BoundaryReport),
    Compression(CompressionReport),
    Search(SearchReport),
    Survey(SurveyTable),
}

#[derive(Serialize, Deserialize)]
struct Envelope {
    schema_version: u32,
    #[serde(flatten)]
    report: Report,
}

#[derive(Debug, thiserror::Error)]
pub enum ReportError {
    #[error("malformed report: {0}")]
    Json(#[from] serde_json::Error),

    #[error("unsupported schema version {0}")]
    Version(u32),
}

pub fn serialize_report(report: &Report, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let envelope = Envelope {
                schema_version: SCHEMA_VERSION,
                report: report.clone(),
            };
            let mut text =
                serde_json::to_string_pretty(&envelope).expect("reports always serialize");
            text.push('\n');
            text
        }
        OutputFormat::Plain => plain(report),
    }
}

pub fn parse_report(text: &str) -> Result<Report, ReportError> {
    let envelope: Envelope = serde_json::from_str(text)?;
    if envelope.schema_version != SCHEMA_VERSION {
        return Err(ReportError::Version(envelope.schema_version));
    }
    Ok(envelope.report)
}

fn plain(report: &Report) -> String {
    let mut out = String::new();
    match report {
        Report::Boundary(b) => {
            let _ = writeln!(out, "dimension {}  size {}", b.dimension, b.size);
            let _ = writeln!(out, "direction  projections  gaps");
            for t in &b.breakdown.per_direction {
                let _ = writeln!(
                    out,
                    "{:<10} {:>11} {:>5}",
                    t.direction.to_string(),
                    t.projection_count,
                    t.gap_count
                );
            }
            let _ = writeln!(out, "formula total            {}", b.formula_total);
            let _ = writeln!(out, "direct edge count        {}", b.direct_count);
            let _ = writeln!(
                out,
                "agreement                {}",
                if b.agree { "yes" } else { "NO" }
            );
            let _ = writeln!(
                out,
                "exterior vertex boundary {}",
                b.exterior_vertex_boundary
            );
            let _ = writeln!(out, "closed vertex boundary   {}", b.closed_vertex_boundary);
        }
        Report::Compression(c) => {
            let _ = writeln!(out, "coord changed boundary potential");
            for s in &c.steps {
                let _ = writeln!(
                    out,
                    "{:>5} {:>7} {:>3} -> {:<3} ({}, {}) -> ({}, {})",
                    s.coordinate,
                    if s.changed { "yes" } else { "no" },
                    s.boundary_before,
                    s.boundary_after,
                    s.potential_before.sum_sq,
                    s.potential_before.neg_sum,
                    s.potential_after.sum_sq,
                    s.potential_after.neg_sum
                );
            }
            let _ = writeln!(out, "final set ({} points):", c.final_set.len());
            out.push_str(&crate::cli::setfile::format_point_set(&c.final_set));
        }
        Report::Search(r) => {
            let method = match r.method {
                SearchMethod::Exhaustive => "exhaustive",
                SearchMethod::Heuristic => "heuristic (upper bound)",
            };
            let _ = writeln!(
                out,
                "dimension {}  size {}  method {}",
                r.dimension, r.size, method
            );
            let _ = writeln!(out, "min edge boundary {}", r.min_edge_boundary);
            let _ = writeln!(out, "proven optimal    {}", r.proven_optimal);
            let _ = writeln!(out, "sets scanned      {}", r.sets_scanned);
            for (k, (w, s)) in r.witnesses.iter().zip(&r.witness_stats).enumerate() {
                let _ = writeln!(
                    out,
                    "witness {}: exterior vertex boundary {}, fully gap-free {}",
                    k + 1,
                    s.exterior_vertex_boundary,
                    s.fully_gap_free
                );
                let pts: Vec<String> = w.iter().map(|p| p.to_string()).collect();
                let _ = writeln!(out, "  {}", pts.join(" "));
            }
        }
        Report::Survey(t) => {
            let _ = writeln!(out, "# dimension {}", t.dimension);
            let _ = writeln!(
                out,
                "size\tmin\twitnesses\tsome_gap_free\tall_gap_free\tproven"
            );
            for row in &t.rows {
                let _ = writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}\t{}",
                    row.size,
                    row.min_edge_boundary,
                    row.witness_count,
                    row.some_witness_gap_free,
                    row.all_witnesses_gap_free,
                    row.proven_optimal
                );
            }
        }
    }
    out
}
