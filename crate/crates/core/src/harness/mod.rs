//! Experiment reports and the desk-scale experiment suite.

mod experiments;

use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

pub use experiments::{
    commutation_bijection, count_instances_default, csp_instances_default, facet_count_formula,
    flip_graph_diameter, independence_instances_default, maximality_instances_default, mesh_instances_default,
    naive_complex_maximal_faces, nonface_instances_default, sin_instances_default,
    run_count_experiment, run_csp_experiment, run_independence_experiment, run_maximality_experiment,
    run_mesh_experiment, run_naive_experiment, run_nonface_experiment, run_sin_experiment, Instance,
    MaximalityMode,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    ReportOnly,
}

impl Verdict {
    pub fn from_ok(ok: bool) -> Verdict {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ExperimentReport {
    pub name: String,
    pub params: Value,
    pub verdict: Verdict,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
    pub runtime_ms: u64,
}

impl ExperimentReport {
    pub fn new(name: &str, params: Value, columns: &[&str]) -> Self {
        ExperimentReport {
            name: name.to_string(),
            params,
            verdict: Verdict::ReportOnly,
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
            runtime_ms: 0,
        }
    }

    pub fn failed(&self) -> bool {
        self.verdict == Verdict::Fail
    }

    /// Plain-text table.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let verdict = match self.verdict {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::ReportOnly => "REPORT",
        };
        let _ = writeln!(out, "== {} [{verdict}] {}", self.name, self.params);
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|v| match v {
                        Value::String(s) => s.clone(),
                        other => other.to_string(),
                    })
                    .collect()
            })
            .collect();
        let mut widths: Vec<usize> = self.columns.iter().map(|c| c.chars().count()).collect();
        for row in &cells {
            for (i, c) in row.iter().enumerate() {
                if i < widths.len() {
                    widths[i] = widths[i].max(c.chars().count());
                }
            }
        }
        let line = |items: &[String]| {
            items
                .iter()
                .zip(&widths)
                .map(|(s, w)| format!("{s:<w$}"))
                .collect::<Vec<_>>()
                .join("  ")
                .trim_end()
                .to_string()
        };
        let _ = writeln!(out, "{}", line(&self.columns));
        for row in &cells {
            let _ = writeln!(out, "{}", line(row));
        }
        out
    }
}

/// Runs `f`, records its wall time unless `timing` is off.
pub fn timed(timing: bool, f: impl FnOnce() -> crate::Result<ExperimentReport>) -> crate::Result<ExperimentReport> {
    let start = Instant::now();
    let mut report = f()?;
    report.runtime_ms = if timing { start.elapsed().as_millis() as u64 } else { 0 };
    Ok(report)
}
