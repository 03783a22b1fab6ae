//! `check`: the property suites as JSON lines.

use clap::Args;

use scl_core::checks::{run_suite, suite_defaults, SUITES};

use crate::error::CliError;

#[derive(Args)]
pub struct CheckArgs {
    /// Suites to run; all of them when empty.
    #[arg(value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
    suites: Vec<String>,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Trials per suite, overriding each suite's default.
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long)]
    max_arity: Option<usize>,
    /// Largest accepted distance between sampled points.
    #[arg(long, default_value_t = 1e-6)]
    tolerance: f64,
}

/// Prints one line per property; any failure exits with 3.
pub fn run_check(args: CheckArgs) -> Result<u8, CliError> {
    let suites: Vec<&str> = if args.suites.is_empty() {
        SUITES.to_vec()
    } else {
        args.suites.iter().map(String::as_str).collect()
    };
    let mut failed = 0;
    for name in suites {
        let mut cfg = suite_defaults(name).expect("suite names are checked by the parser");
        cfg.seed = args.seed;
        cfg.tolerance = args.tolerance;
        if let Some(t) = args.trials {
            cfg.trials = t;
        }
        if let Some(m) = args.max_arity {
            cfg.max_arity = m;
        }
        let report = run_suite(name, &cfg).map_err(CliError::parse)?;
        print!("{}", report.to_json_lines());
        failed += report.failed().count();
    }
    if failed > 0 {
        return Err(CliError::invalid(format!("{failed} properties failed")));
    }
    Ok(0)
}
