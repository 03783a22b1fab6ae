//! `act` and `invariant`: the three actions on presentations and the
//! invariants of their results.

use clap::{Args, Subcommand};
use serde_json::{json, Value};

use scl_core::cubes::Direction;
use scl_core::pl::{
    framing_number, kappa_act, knot_diagnostics, lambda_act, link_diagnostics, link_invariants, mu_act, Fat, FatKnot,
    FatLink, Presentation,
};
use scl_core::GeometryError;

use crate::error::CliError;
use crate::input::{read_config, read_fat, read_scl, write_text};
use crate::DirectionArg;

#[derive(Subcommand)]
pub enum ActOp {
    /// Little squares on fat long knots.
    Kappa {
        config: String,
        /// Knots: presentation files, `catalog:NAME`, `twist:N` or `standard-knot`.
        knots: Vec<String>,
        #[arg(long, value_enum, default_value = "standard")]
        direction: DirectionArg,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Little intervals on fat string links.
    Lambda {
        config: String,
        links: Vec<String>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Swiss Cheese operations on knots and links, matched by color.
    Mu {
        scl: String,
        inputs: Vec<String>,
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Args)]
pub struct OutArgs {
    /// Where to write the resulting presentation.
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
pub struct InvariantArgs {
    input: String,
    /// Include tube diagnostics.
    #[arg(long)]
    diagnostics: bool,
}

fn knot_of(x: Fat, index: usize) -> Result<FatKnot, CliError> {
    match x {
        Fat::Knot(k) => Ok(k),
        Fat::Link(_) => Err(GeometryError::KindMismatch { index, expected: "knot" }.into()),
    }
}

fn link_of(x: Fat, index: usize) -> Result<FatLink, CliError> {
    match x {
        Fat::Link(l) => Ok(l),
        Fat::Knot(_) => Err(GeometryError::KindMismatch { index, expected: "link" }.into()),
    }
}

pub fn invariants_json(x: &Fat) -> Result<Value, CliError> {
    Ok(match x {
        Fat::Knot(k) => json!({"kind": "knot", "framing": framing_number(k)?}),
        Fat::Link(l) => {
            let inv = link_invariants(l)?;
            json!({"kind": "link", "framing": [inv.framing.0, inv.framing.1], "linking": inv.linking})
        }
    })
}

fn emit(result: Fat, out: &OutArgs) -> Result<u8, CliError> {
    if let Some(path) = &out.out {
        write_text(path, &Presentation::of_fat(&result)?.to_json())?;
    }
    println!("{}", invariants_json(&result)?);
    Ok(0)
}

pub fn run_act(op: ActOp) -> Result<u8, CliError> {
    match op {
        ActOp::Kappa {
            config,
            knots,
            direction,
            out,
        } => {
            let c = read_config(&config)?;
            let knots = knots
                .iter()
                .enumerate()
                .map(|(i, r)| knot_of(read_fat(r)?, i))
                .collect::<Result<Vec<_>, _>>()?;
            let refs: Vec<&FatKnot> = knots.iter().collect();
            emit(Fat::Knot(kappa_act(&c, &refs, Direction::from(direction))?), &out)
        }
        ActOp::Lambda { config, links, out } => {
            let c = read_config(&config)?;
            let links = links
                .iter()
                .enumerate()
                .map(|(i, r)| link_of(read_fat(r)?, i))
                .collect::<Result<Vec<_>, _>>()?;
            let refs: Vec<&FatLink> = links.iter().collect();
            emit(Fat::Link(lambda_act(&c, &refs)?), &out)
        }
        ActOp::Mu { scl, inputs, out } => {
            let e = read_scl(&scl)?;
            let inputs = inputs.iter().map(|r| read_fat(r)).collect::<Result<Vec<_>, _>>()?;
            emit(mu_act(&e, &inputs)?, &out)
        }
    }
}

pub fn run_invariant(args: InvariantArgs) -> Result<u8, CliError> {
    let x = read_fat(&args.input)?;
    let mut v = invariants_json(&x)?;
    if args.diagnostics {
        let report = match &x {
            Fat::Knot(k) => knot_diagnostics(k)?,
            Fat::Link(l) => link_diagnostics(l)?,
        };
        v["diagnostics"] = serde_json::to_value(report).expect("reports serialize");
    }
    println!("{v}");
    Ok(0)
}
