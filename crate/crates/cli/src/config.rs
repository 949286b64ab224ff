use std::fmt;
use std::str::FromStr;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Regrep,
    Hopf,
    Predual,
    Corep,
    Wandering,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Regrep, Suite::Hopf, Suite::Predual, Suite::Corep, Suite::Wandering];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Regrep => "regrep",
            Suite::Hopf => "hopf",
            Suite::Predual => "predual",
            Suite::Corep => "corep",
            Suite::Wandering => "wandering",
        }
    }

    /// Suites whose checks build operators on `H ⊗ H` or larger.
    pub fn uses_tensors(self) -> bool {
        matches!(self, Suite::Hopf | Suite::Corep | Suite::Wandering)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s.trim())
            .ok_or_else(|| format!("unknown suite `{s}` (expected one of regrep, hopf, predual, corep, wandering)"))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteConfig {
    pub n: u32,
    pub depth: usize,
    pub tol: f64,
    pub trials: usize,
    pub seed: u64,
    pub suites: Vec<Suite>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { n: 2, depth: 3, tol: 1e-9, trials: 100, seed: 0, suites: Suite::ALL.to_vec() }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<(), String> {
        if self.n < 1 {
            return Err("n must be at least 1".into());
        }
        if self.depth < 1 {
            return Err("depth must be at least 1".into());
        }
        if !(self.tol > 0.0) || !self.tol.is_finite() {
            return Err("tolerance must be a positive number".into());
        }
        if self.trials < 1 {
            return Err("trials must be at least 1".into());
        }
        if self.suites.is_empty() {
            return Err("no suites selected".into());
        }
        Ok(())
    }
}

pub fn parse_suites(s: &str) -> Result<Vec<Suite>, String> {
    let mut suites = s.split(',').filter(|p| !p.trim().is_empty()).map(Suite::from_str).collect::<Result<Vec<_>, _>>()?;
    suites.sort();
    suites.dedup();
    Ok(suites)
}

/// The `(n, N, suites)` points of the full grid.
pub fn full_grid() -> Vec<(u32, usize, Vec<Suite>)> {
    let mut grid = Vec::new();
    for n in 1..=3 {
        for depth in 2..=4 {
            grid.push((n, depth, Suite::ALL.to_vec()));
        }
    }
    grid.push((2, 5, Suite::ALL.into_iter().filter(|s| !s.uses_tensors()).collect()));
    grid
}
