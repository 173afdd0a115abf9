//! Coloring files and run reports.
//!
//! A coloring file has one `u v c` line per edge with `u < v`, in ascending
//! edge order. Reports are TOML documents with fixed field names.

use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::builder::{build, corollary1_check, BuildError, RcResult};
use crate::coloring::{Color, Coloring};
use crate::graph::{find_bridges, radius_center, Edge, Graph, GraphError};
use crate::verify::{is_rainbow_connected_with, VerifyError, VerifyOptions};

#[derive(Debug, Error)]
pub enum ToolkitError {
    #[error("coloring line {line}: {reason}")]
    ColoringFormat { line: usize, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Build(#[from] BuildError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error("report serialization failed: {0}")]
    Serialize(#[from] toml::ser::Error),
}

pub fn format_coloring(coloring: &Coloring) -> String {
    let mut out = String::new();
    for (e, c) in coloring.iter() {
        out.push_str(&format!("{} {} {}\n", e.u, e.v, c));
    }
    out
}

/// Parses `u v c` lines against `g`. Every line must name an edge of `g`
/// exactly once; the coloring may still be partial.
pub fn parse_coloring(text: &str, g: &Graph) -> Result<Coloring, ToolkitError> {
    let mut coloring = Coloring::new();
    for (idx, raw) in text.split('\n').enumerate() {
        let line = raw.strip_suffix('\r').unwrap_or(raw).trim_matches(|c| c == ' ' || c == '\t');
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |reason: &str| ToolkitError::ColoringFormat { line: idx + 1, reason: reason.to_string() };
        let fields: Vec<&str> = line.split([' ', '\t']).filter(|s| !s.is_empty()).collect();
        let [u, v, c] = fields[..] else {
            return Err(err("expected `u v c`"));
        };
        let parse = |s: &str| s.bytes().all(|b| b.is_ascii_digit()).then(|| s.parse::<u64>().ok()).flatten();
        let (Some(u), Some(v), Some(c)) = (parse(u), parse(v), parse(c)) else {
            return Err(err("fields must be nonnegative integers"));
        };
        if u == v {
            return Err(err("self-loop"));
        }
        if c == 0 || c > Color::MAX as u64 {
            return Err(err("colors must be positive 32-bit integers"));
        }
        let (u, v) = (u as usize, v as usize);
        if !g.has_edge(u, v) {
            return Err(err("not an edge of the graph"));
        }
        let e = Edge::new(u, v);
        if coloring.is_colored(e) {
            return Err(err("edge colored twice"));
        }
        coloring.set(e, c as Color);
    }
    Ok(coloring)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InputSummary {
    pub n: usize,
    pub m: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MetricsSummary {
    pub radius: usize,
    pub diameter: usize,
    pub centers: Vec<usize>,
    pub bridges: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MetricsReport {
    pub input: InputSummary,
    pub metrics: MetricsSummary,
}

pub fn metrics_report(g: &Graph) -> Result<MetricsReport, GraphError> {
    let m = radius_center(g)?;
    Ok(MetricsReport {
        input: InputSummary { n: g.n(), m: g.m() },
        metrics: MetricsSummary {
            radius: m.radius,
            diameter: m.diameter,
            centers: m.centers,
            bridges: find_bridges(g).len(),
        },
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StageSummary {
    pub k: usize,
    pub b: usize,
    pub block_start: Color,
    pub block_size: u32,
    pub colors_used: usize,
    pub ears: usize,
    pub spliced_ears: usize,
    pub core_size: usize,
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Timings {
    pub metrics_ms: f64,
    pub build_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verify_ms: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub bound: usize,
    pub colors_used: usize,
    pub corollary1: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
    pub center: usize,
    pub input: InputSummary,
    pub metrics: MetricsSummary,
    pub stages: Vec<StageSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

impl RunReport {
    pub fn to_toml(&self) -> Result<String, ToolkitError> {
        Ok(toml::to_string(self)?)
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ColorOptions {
    pub verify: bool,
    pub verify_opts: VerifyOptions,
    /// Include wall-clock timings; reports are no longer byte-reproducible.
    pub timings: bool,
}

pub struct ColorRun {
    pub result: RcResult,
    pub report: RunReport,
    pub verification: Option<crate::verify::VerificationReport>,
}

pub fn run_color(g: &Graph, opts: ColorOptions) -> Result<ColorRun, ToolkitError> {
    let t0 = Instant::now();
    let metrics = metrics_report(g)?;
    let t1 = Instant::now();
    let result = build(g)?;
    let t2 = Instant::now();
    let verification = if opts.verify {
        Some(is_rainbow_connected_with(g, &result.coloring, opts.verify_opts)?)
    } else {
        None
    };
    let t3 = Instant::now();
    let ms = |a: Instant, b: Instant| (b - a).as_secs_f64() * 1e3;
    let report = RunReport {
        bound: result.bound,
        colors_used: result.colors_used,
        corollary1: corollary1_check(g, &result.stages),
        verified: verification.as_ref().map(|v| v.ok),
        center: result.center,
        input: metrics.input,
        metrics: metrics.metrics,
        stages: result
            .stages
            .iter()
            .map(|s| StageSummary {
                k: s.k,
                b: s.b,
                block_start: s.block.start,
                block_size: s.block.size,
                colors_used: s.colors_used,
                ears: s.ears.len(),
                spliced_ears: s.ears.iter().filter(|e| e.ear.splice.is_some()).count(),
                core_size: s.core_out.len(),
                warnings: s.warnings.clone(),
            })
            .collect(),
        timings: opts.timings.then(|| Timings {
            metrics_ms: ms(t0, t1),
            build_ms: ms(t1, t2),
            verify_ms: opts.verify.then(|| ms(t2, t3)),
        }),
    };
    Ok(ColorRun { result, report, verification })
}
