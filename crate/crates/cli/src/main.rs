//! `staircase`: count staircase words, print generating functions, and run
//! the verification suites.

#[macro_use]
mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};
use staircase_core::exactnum::RatFun;
use staircase_core::genfun::{self, SeriesSample};
use staircase_core::kernel;
use staircase_core::staircase::{
    brute_force_series, build_suffix_automaton_with_limit, StaircaseParams, TransferMatrix, DEFAULT_MAX_STATES,
};
use staircase_core::verify::{suite_jobs, Suite, VerificationReport};
use staircase_core::Error;

#[derive(Parser, Debug)]
#[command(name = "staircase", version, about = "Staircase words on extended path graphs")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Number of staircase words of length n.
    Count {
        #[arg(long)]
        k: u32,
        #[arg(long = "L")]
        l: u32,
        #[arg(long)]
        n: u64,
        /// Reduce modulo this value.
        #[arg(long = "mod")]
        modulus: Option<u64>,
    },
    /// List the suffix states of the automaton.
    States {
        #[arg(long)]
        k: u32,
        #[arg(long = "L")]
        l: u32,
        /// Also write the automaton as a DOT digraph to this file.
        #[arg(long)]
        dot: Option<std::path::PathBuf>,
    },
    /// Word counts for lengths 0..terms.
    Series {
        #[arg(long)]
        k: u32,
        #[arg(long = "L")]
        l: u32,
        #[arg(long)]
        terms: usize,
        #[arg(long, value_enum, default_value_t = SeriesMethod::Transfer)]
        method: SeriesMethod,
    },
    /// Generating function as "num / den".
    Gf {
        #[arg(long)]
        k: u32,
        #[arg(long = "L")]
        l: u32,
        #[arg(long, value_enum, default_value_t = GfMethod::Closed)]
        method: GfMethod,
        /// Number of counts used by the reconstruct method.
        #[arg(long, default_value_t = 40)]
        terms: usize,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        /// Comma-separated L values for kernel checks.
        #[arg(long = "L", value_delimiter = ',', default_value = "2,3")]
        l: Vec<u32>,
    },
    /// Dump the kernel system A, b, b' as JSON.
    KernelDump {
        #[arg(long = "L")]
        l: u32,
        /// Alphabet size for the right-hand sides.
        #[arg(long, default_value_t = 3)]
        k: u32,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SeriesMethod {
    Brute,
    Transfer,
    Closed,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GfMethod {
    Reconstruct,
    Closed,
    Assembled,
    #[value(name = "l1", alias = "knopfmacher")]
    L1,
    Kernel,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    Suite::parse(s).ok_or_else(|| format!("unknown suite '{s}' (identities, table1, closed-form, kernel, all)"))
}

enum Failure {
    Domain(Error),
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn max_states() -> Result<usize, Failure> {
    match std::env::var("STAIRCASE_MAX_STATES") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("STAIRCASE_MAX_STATES must be a positive integer, got '{v}'"))),
        Err(_) => Ok(DEFAULT_MAX_STATES),
    }
}

fn automaton(params: StaircaseParams) -> Result<TransferMatrix, Failure> {
    Ok(build_suffix_automaton_with_limit(params, max_states()?)?)
}

fn run(cli: Cli) -> Result<(), Failure> {
    let json = cli.json;
    match cli.command {
        Command::Count { k, l, n, modulus } => {
            let params = StaircaseParams::new(k, l)?;
            let m = automaton(params)?;
            let count = match modulus {
                Some(p) => m.count_mod(n, p)?.to_string(),
                None => m.count(n).to_string(),
            };
            if json {
                output::print_json(&json!({
                    "k": k, "L": l, "n": n.to_string(),
                    "modulus": modulus.map(|p| p.to_string()),
                    "count": count,
                }));
            } else {
                out!("{count}");
            }
        }
        Command::States { k, l, dot } => {
            let params = StaircaseParams::new(k, l)?;
            let m = automaton(params)?;
            if let Some(path) = dot {
                std::fs::write(&path, m.to_dot())
                    .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
            }
            if json {
                let states: Vec<Value> = m.states().iter().map(|s| json!(s.letters())).collect();
                let edges: Vec<Value> = (0..m.dim())
                    .flat_map(|i| m.successors(i).iter().map(move |&j| json!([i, j])))
                    .collect();
                output::print_json(&json!({ "k": k, "L": l, "states": states, "transitions": edges }));
            } else {
                for s in m.states() {
                    out!("{}", s.label());
                }
            }
        }
        Command::Series { k, l, terms, method } => {
            let params = StaircaseParams::new(k, l)?;
            let coeffs: Vec<String> = match method {
                SeriesMethod::Brute => {
                    let terms = u32::try_from(terms).map_err(|_| Failure::Usage("--terms too large".into()))?;
                    brute_force_series(params, terms)?.iter().map(ToString::to_string).collect()
                }
                SeriesMethod::Transfer => automaton(params)?.series(terms).iter().map(ToString::to_string).collect(),
                SeriesMethod::Closed => genfun::ratfun_series(&genfun::closed_form_gf(params)?, terms)?
                    .iter()
                    .map(ToString::to_string)
                    .collect(),
            };
            if json {
                output::print_json(&json!({
                    "k": k, "L": l, "method": format!("{method:?}").to_lowercase(), "coefficients": coeffs,
                }));
            } else {
                out!("{}", Value::from(coeffs));
            }
        }
        Command::Gf { k, l, method, terms } => {
            let params = StaircaseParams::new(k, l)?;
            let f = generating_function(params, method, terms)?;
            if json {
                output::print_json(&output::gf_json(k, l, &format!("{method:?}").to_lowercase(), &f));
            } else {
                out!("{f}");
            }
        }
        Command::Verify { suite, l } => {
            let report = verify(suite, &l)?;
            if json {
                output::print_json(&output::report_json(&report));
            } else {
                for case in &report.cases {
                    out!("{case}");
                }
                out!(
                    "suite {}: {} passed, {} failed",
                    report.suite,
                    report.passed_count(),
                    report.failed_count()
                );
            }
            if !report.passed() {
                return Err(Failure::Verification);
            }
        }
        Command::KernelDump { l, k } => {
            if l < 2 {
                return Err(Error::UnsupportedL(l).into());
            }
            let params = StaircaseParams::new(k, l)?;
            let system = kernel::build_combinatorial_system(params)?;
            output::print_json(&output::kernel_json(k, &system));
        }
    }
    Ok(())
}

fn generating_function(params: StaircaseParams, method: GfMethod, terms: usize) -> Result<RatFun, Failure> {
    Ok(match method {
        GfMethod::Reconstruct => {
            let m = automaton(params)?;
            SeriesSample::new(params, m.series(terms))?.reconstruct()?
        }
        GfMethod::Closed => genfun::closed_form_gf(params)?,
        GfMethod::Assembled => genfun::assemble_f_from_f11(params, &genfun::f11_from_t1(params)?)?,
        GfMethod::L1 => {
            if params.l() != 1 {
                return Err(Failure::Usage("--method l1 requires --L 1".into()));
            }
            genfun::l1_chebyshev_gf(params.k())?
        }
        GfMethod::Kernel => {
            let system = kernel::build_combinatorial_system(params)?;
            kernel::aggregate_f(&system, params)?
        }
    })
}

fn verify(suite: Suite, ls: &[u32]) -> Result<VerificationReport, Failure> {
    if let Some(&bad) = ls.iter().find(|&&l| l < 2) {
        return Err(Error::UnsupportedL(bad).into());
    }
    let jobs = suite_jobs(suite, ls);
    let results: Vec<_> = jobs.par_iter().map(|job| job()).collect();
    let mut report = VerificationReport::new(suite.name());
    for cases in results {
        report.extend(cases);
    }
    Ok(report)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
