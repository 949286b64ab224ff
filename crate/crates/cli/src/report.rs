use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;
use serde_json::Value;

use crate::config::Suite;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    pub params: BTreeMap<String, Value>,
    /// `None` when the computation itself returned an error.
    pub defect: Option<f64>,
    pub threshold: f64,
    pub pass: bool,
    pub millis: u64,
}

impl Check {
    pub fn param_str(&self) -> String {
        self.params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConfigEcho {
    pub n: Value,
    pub depth: Value,
    pub tol: f64,
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub config: ConfigEcho,
    pub checks: Vec<Check>,
    pub summary: Summary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
}

impl Report {
    pub fn new(config: ConfigEcho, checks: Vec<Check>, timestamp: Option<u64>) -> Self {
        let passed = checks.iter().filter(|c| c.pass).count();
        let summary = Summary { passed, failed: checks.len() - passed };
        Report { config, checks, summary, timestamp }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    /// Drops wall-clock data so that equal inputs give equal bytes.
    pub fn strip_timing(&mut self) {
        self.timestamp = None;
        self.checks.iter_mut().for_each(|c| c.millis = 0);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is serializable")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let defect = c.defect.map_or_else(|| "error".to_string(), |d| format!("{d:.3e}"));
            let status = if c.pass { "PASS" } else { "FAIL" };
            let _ = writeln!(
                out,
                "{status} {:<9} {:<24} {:<22} defect={defect} threshold={:.1e} {}ms",
                c.suite.name(),
                c.name,
                c.param_str(),
                c.threshold,
                c.millis
            );
        }
        let _ = writeln!(out, "passed {} failed {}", self.summary.passed, self.summary.failed);
        out
    }
}
