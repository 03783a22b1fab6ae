//! `cube` and `scl`: validation, composition and components.

use clap::{Args, Subcommand};
use serde_json::{json, Value};

use scl_core::cubes::format::{config_to_json, is_scl_document, parse_config, parse_scl, scl_to_json, LoadError};
use scl_core::cubes::{ordering_permutations, pi0_class, pi0_class_scl, Direction, Pi0Class, ValidationReport};
use scl_core::CubeError;

use crate::error::CliError;
use crate::input::{read_config, read_document, read_scl, read_text, write_text, CubeDocument};
use crate::DirectionArg;

#[derive(Subcommand)]
pub enum CubeOp {
    /// Check a configuration (or an SCL operation) against its clauses.
    Validate { file: String },
    /// Operadic composition `A ∘ᵢ B` with 1-based `--at`.
    Compose(ComposeArgs),
    /// The connected component: a permutation in dimension 1, a point above.
    Pi0 { file: String },
    /// Ordering permutations of a 2-dimensional disjoint configuration.
    Orderings {
        file: String,
        #[arg(long, value_enum, default_value = "standard")]
        direction: DirectionArg,
    },
}

#[derive(Subcommand)]
pub enum SclOp {
    /// Check an SCL operation against its clauses.
    Validate { file: String },
    /// Operadic composition `A ∘ᵢ B` with 1-based `--at`.
    Compose(ComposeArgs),
    /// Component: the left-to-right order of the `o` cubes, or a point.
    Pi0 { file: String },
}

#[derive(Args)]
pub struct ComposeArgs {
    outer: String,
    inner: String,
    #[arg(long)]
    at: usize,
    #[arg(long, default_value = "-")]
    out: String,
}

fn report_json(report: &ValidationReport) -> Value {
    let violations: Vec<Value> = report
        .violations
        .iter()
        .map(|v| json!({"clause": v.clause, "message": v.clause.describe(), "cubes": v.cubes.iter().map(|c| c + 1).collect::<Vec<_>>()}))
        .collect();
    json!({"ok": report.is_ok(), "violations": violations})
}

fn invalid_report(e: CubeError) -> CliError {
    match e {
        CubeError::Invalid(report) => {
            println!("{}", report_json(&report));
            CliError::invalid(report)
        }
        other => CliError::invalid(other),
    }
}

/// Prints `{"ok":true}`, or the violated clauses before failing with 3.
fn validate(file: &str, scl_only: bool) -> Result<u8, CliError> {
    let text = read_text(file)?;
    let result = if scl_only || is_scl_document(&text)? {
        parse_scl(&text).map(drop)
    } else {
        parse_config(&text).map(drop)
    };
    match result {
        Ok(()) => {
            println!("{}", json!({"ok": true}));
            Ok(0)
        }
        Err(LoadError::Invalid(e)) => Err(invalid_report(e)),
        Err(e) => Err(e.into()),
    }
}

fn one_based(order: &[usize]) -> Vec<usize> {
    order.iter().map(|i| i + 1).collect()
}

fn class_json(class: Pi0Class) -> Value {
    match class {
        Pi0Class::Point => json!({"point": true}),
        Pi0Class::Permutation(order) => json!({"perm": one_based(&order)}),
    }
}

fn index(at: usize) -> Result<usize, CliError> {
    at.checked_sub(1).ok_or_else(|| CliError::invalid("--at is 1-based"))
}

pub fn run_cube(op: CubeOp) -> Result<u8, CliError> {
    match op {
        CubeOp::Validate { file } => validate(&file, false),
        CubeOp::Compose(args) => {
            let i = index(args.at)?;
            let text = match (read_document(&args.outer)?, read_document(&args.inner)?) {
                (CubeDocument::Config(a), CubeDocument::Config(b)) => config_to_json(&a.compose_at(i, &b)?),
                (CubeDocument::Scl(a), CubeDocument::Scl(b)) => scl_to_json(&a.compose_at(i, &b)?),
                _ => return Err(CliError::invalid("cannot compose a configuration with an SCL operation")),
            };
            write_text(&args.out, &(text + "\n"))?;
            Ok(0)
        }
        CubeOp::Pi0 { file } => {
            let class = match read_document(&file)? {
                CubeDocument::Config(c) => pi0_class(&c)?,
                CubeDocument::Scl(e) => pi0_class_scl(&e)?,
            };
            println!("{}", class_json(class));
            Ok(0)
        }
        CubeOp::Orderings { file, direction } => {
            let c = read_config(&file)?;
            let orders = ordering_permutations(&c, Direction::from(direction))?;
            let orders: Vec<Vec<usize>> = orders.iter().map(|o| one_based(o)).collect();
            println!("{}", json!({"orderings": orders}));
            Ok(0)
        }
    }
}

pub fn run_scl(op: SclOp) -> Result<u8, CliError> {
    match op {
        SclOp::Validate { file } => validate(&file, true),
        SclOp::Compose(args) => {
            let i = index(args.at)?;
            let a = read_scl(&args.outer)?;
            let b = read_scl(&args.inner)?;
            write_text(&args.out, &(scl_to_json(&a.compose_at(i, &b)?) + "\n"))?;
            Ok(0)
        }
        SclOp::Pi0 { file } => {
            println!("{}", class_json(pi0_class_scl(&read_scl(&file)?)?));
            Ok(0)
        }
    }
}
