mod act;
mod check;
mod cube;
mod error;
mod input;
mod monoid;
mod render;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use scl_core::cubes::Direction;

use crate::error::CliError;

/// Little cubes, the Swiss Cheese operad for links, and their actions on
/// fat long knots and string links.
#[derive(Parser)]
#[command(name = "scl", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Little cubes configurations.
    #[command(subcommand)]
    Cube(cube::CubeOp),
    /// Swiss Cheese operations.
    #[command(subcommand)]
    Scl(cube::SclOp),
    /// Apply an action to knot and link presentations.
    #[command(subcommand)]
    Act(act::ActOp),
    /// Framing numbers and linking number of a presentation.
    Invariant(act::InvariantArgs),
    /// Knot words and string-link normal forms.
    #[command(subcommand)]
    Monoid(monoid::MonoidOp),
    /// Run property suites, one JSON line per property.
    Check(check::CheckArgs),
    /// SVG figures.
    #[command(subcommand)]
    Render(render::RenderOp),
}

#[derive(Clone, Copy, ValueEnum)]
pub enum DirectionArg {
    Standard,
    Reverse,
}

impl From<DirectionArg> for Direction {
    fn from(d: DirectionArg) -> Self {
        match d {
            DirectionArg::Standard => Direction::Standard,
            DirectionArg::Reverse => Direction::Reverse,
        }
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Cube(op) => cube::run_cube(op),
        Command::Scl(op) => cube::run_scl(op),
        Command::Act(op) => act::run_act(op),
        Command::Invariant(args) => act::run_invariant(args),
        Command::Monoid(op) => monoid::run_monoid(op),
        Command::Check(args) => check::run_check(args),
        Command::Render(op) => render::run_render(op),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("scl: {e}");
            ExitCode::from(e.code())
        }
    }
}
