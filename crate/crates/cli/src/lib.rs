//! Verification harness for `fockhopf`: suite definitions, the concurrent
//! runner, and report formatting.

pub mod config;
pub mod report;
pub mod suites;

use std::collections::BTreeMap;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use serde_json::Value;

use fockhopf::exec::Exec;
use fockhopf::random;

pub use config::{full_grid, parse_suites, Suite, SuiteConfig};
pub use report::{Check, ConfigEcho, Report, Summary};
use suites::{CheckGroup, Scale};

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct RunOptions {
    pub inject_fault: bool,
    pub no_timestamp: bool,
    pub exec: Exec,
}

fn run_group(group: &CheckGroup, seed: u64) -> Vec<Check> {
    let mut rng = random::rng(random::derive_seed(seed, &group.label()));
    let start = Instant::now();
    let outcome = (group.run)(&mut rng);
    let millis = start.elapsed().as_millis() as u64;
    let mut params: BTreeMap<String, Value> = BTreeMap::new();
    params.insert("n".into(), group.n.into());
    params.insert("depth".into(), group.depth.into());
    for (k, v) in &group.extra {
        params.insert((*k).into(), v.clone());
    }
    group
        .checks
        .iter()
        .enumerate()
        .map(|(i, &(name, threshold))| {
            let defect = match &outcome {
                Ok(values) => values.get(i).copied(),
                Err(err) => {
                    eprintln!("error in {}/{name}: {err}", group.suite);
                    None
                }
            };
            let pass = defect.is_some_and(|d| d <= threshold);
            Check { suite: group.suite, name: name.into(), params: params.clone(), defect, threshold, pass, millis }
        })
        .collect()
}

fn sort_key(c: &Check) -> (Suite, String, Vec<String>) {
    let params = ["n", "depth", "k", "trials"]
        .iter()
        .map(|k| c.params.get(*k).map_or(String::new(), |v| format!("{v:>8}")))
        .collect();
    (c.suite, c.name.clone(), params)
}

/// Runs every group at every `(n, N, suites)` point and returns the checks in
/// canonical order.
pub fn run_points(
    points: &[(u32, usize, Vec<Suite>)],
    tol: f64,
    trials: usize,
    seed: u64,
    opts: RunOptions,
) -> fockhopf::Result<Vec<Check>> {
    let mut groups = Vec::new();
    for (n, depth, suites) in points {
        let scale = Scale { n: *n, depth: *depth, tol, trials, inject_fault: opts.inject_fault, exec: opts.exec };
        for &suite in suites {
            groups.extend(suites::groups(suite, scale)?);
        }
    }
    let mut checks: Vec<Check> = opts.exec.map(&groups, |g| run_group(g, seed)).into_iter().flatten().collect();
    checks.sort_by_key(sort_key);
    Ok(checks)
}

fn timestamp(opts: RunOptions) -> Option<u64> {
    (!opts.no_timestamp).then(|| SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs()))
}

fn finish(config: ConfigEcho, checks: Vec<Check>, opts: RunOptions) -> Report {
    let mut report = Report::new(config, checks, timestamp(opts));
    if opts.no_timestamp {
        report.strip_timing();
    }
    report
}

pub fn run_verify(config: &SuiteConfig, opts: RunOptions) -> Result<Report, String> {
    config.validate()?;
    let points = [(config.n, config.depth, config.suites.clone())];
    let checks = run_points(&points, config.tol, config.trials, config.seed, opts).map_err(|e| e.to_string())?;
    let echo = ConfigEcho { n: config.n.into(), depth: config.depth.into(), tol: config.tol, seed: config.seed };
    Ok(finish(echo, checks, opts))
}

/// Runs the full grid. The echoed `n` and `depth` list the grid values.
pub fn run_full(tol: f64, trials: usize, seed: u64, opts: RunOptions) -> Result<Report, String> {
    SuiteConfig { tol, trials, seed, ..Default::default() }.validate()?;
    let grid = full_grid();
    let checks = run_points(&grid, tol, trials, seed, opts).map_err(|e| e.to_string())?;
    let mut ns: Vec<u32> = grid.iter().map(|p| p.0).collect();
    let mut depths: Vec<usize> = grid.iter().map(|p| p.1).collect();
    ns.sort();
    ns.dedup();
    depths.sort();
    depths.dedup();
    let echo = ConfigEcho { n: ns.into(), depth: depths.into(), tol, seed };
    Ok(finish(echo, checks, opts))
}
