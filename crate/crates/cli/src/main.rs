use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use fockhopf::exec::{init_threads, Exec};
use fockhopf::fock::FockSpace;
use fockhopf::wandering::{dim_table, wandering_check};
use fockhopf_cli::{parse_suites, run_full, run_verify, RunOptions, Suite, SuiteConfig};

const USAGE: u8 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser)]
#[command(name = "fockhopf", version, about = "Checks truncated Fock-space models of the analytic Toeplitz algebra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and report every defect
    Verify {
        #[arg(long, default_value_t = 2)]
        n: u32,
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma-separated subset of regrep,hopf,predual,corep,wandering
        #[arg(long, default_value = "regrep,hopf,predual,corep,wandering")]
        suites: String,
        /// Run the default grid instead of a single (n, depth)
        #[arg(long)]
        full: bool,
        /// Corrupt a generator so the isometry check must fail
        #[arg(long)]
        inject_fault: bool,
        /// Omit the timestamp and wall times
        #[arg(long)]
        no_timestamp: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Also write the report to this file
        #[arg(long)]
        output: Option<String>,
    },
    /// List the characters of the truncated predual algebra
    Spectrum {
        #[arg(long, default_value_t = 2)]
        n: u32,
        #[arg(long, default_value_t = 2)]
        depth: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Tabulate and check the wandering subspace of the k-fold tensor power
    Wandering {
        #[arg(long, default_value_t = 2)]
        n: u32,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(USAGE)
}

fn configure_threads() -> Result<(), String> {
    match std::env::var("FOCKHOPF_THREADS") {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(t) if t >= 1 => {
                init_threads(t);
                Ok(())
            }
            _ => Err(format!("FOCKHOPF_THREADS must be a positive integer, got `{v}`")),
        },
        Err(_) => Ok(()),
    }
}

fn space(n: u32, depth: usize) -> Result<FockSpace, String> {
    if n < 1 || depth < 1 {
        return Err("n and depth must be at least 1".into());
    }
    FockSpace::new(n, depth).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { 0 });
        }
    };
    if let Err(msg) = configure_threads() {
        return usage(msg);
    }
    match cli.command {
        Command::Verify { n, depth, tol, trials, seed, suites, full, inject_fault, no_timestamp, format, output } => {
            let suites: Vec<Suite> = match parse_suites(&suites) {
                Ok(s) => s,
                Err(msg) => return usage(msg),
            };
            let opts = RunOptions { inject_fault, no_timestamp, exec: Exec::default() };
            let result = if full {
                run_full(tol, trials, seed, opts)
            } else {
                run_verify(&SuiteConfig { n, depth, tol, trials, seed, suites }, opts)
            };
            let report = match result {
                Ok(r) => r,
                Err(msg) => return usage(msg),
            };
            let rendered = match format {
                Format::Json => report.to_json() + "\n",
                Format::Text => report.to_text(),
            };
            print!("{rendered}");
            if let Some(path) = output {
                if let Err(e) = fs::write(&path, &rendered) {
                    return usage(format!("cannot write {path}: {e}"));
                }
            }
            for c in report.failures() {
                eprintln!("failed: {}/{} {}", c.suite, c.name, c.param_str());
            }
            if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Spectrum { n, depth, format } => {
            let h = match space(n, depth) {
                Ok(h) => h,
                Err(msg) => return usage(msg),
            };
            let words: Vec<String> = fockhopf::corep::spectrum(&h).iter().map(|w| h.alphabet().format_word(w)).collect();
            match format {
                Format::Text => println!("{}", words.join(" ")),
                Format::Json => println!("{}", json!({ "n": n, "depth": depth, "characters": words })),
            }
            ExitCode::SUCCESS
        }
        Command::Wandering { n, k, depth, format } => {
            if let Err(msg) = space(n, depth) {
                return usage(msg);
            }
            if k < 1 {
                return usage("k must be at least 1");
            }
            let exec = Exec::default();
            let table = match dim_table(n, k, depth, exec) {
                Ok(t) => t,
                Err(e) => return usage(e),
            };
            let check = if k >= 2 { wandering_check(n, k, depth, exec).ok() } else { None };
            let passed = check.as_ref().is_none_or(|r| r.passed());
            match format {
                Format::Text => {
                    println!("{:>3} {:>3} {:>5} {:>12} {:>10} {:>12}", "n", "k", "depth", "tensor", "dimK", "closed_form");
                    for r in &table {
                        println!("{:>3} {:>3} {:>5} {:>12} {:>10} {:>12}", r.n, r.k, r.depth, r.tensor_dim, r.dim_k, r.closed_form);
                    }
                    if let Some(r) = &check {
                        println!(
                            "orthogonality={} isometry={} complete={} growth_strict={}",
                            r.orthogonality_defect, r.isometry_defect, r.complete, r.growth_strict
                        );
                    }
                    println!("dimK = {}", table.last().map_or(0, |r| r.dim_k));
                }
                Format::Json => println!("{}", serde_json::to_string_pretty(&json!({ "table": table, "check": check })).unwrap()),
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}
