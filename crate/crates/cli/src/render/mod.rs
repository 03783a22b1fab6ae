//! `render`: deterministic SVG figures of configurations and diagrams.

mod cubes;
mod diagram;
mod svg;

use clap::Subcommand;

use crate::error::CliError;
use crate::input::{read_document, read_fat, write_text};

#[derive(Subcommand)]
pub enum RenderOp {
    /// Numbered boxes of a configuration or SCL operation.
    Cubes {
        file: String,
        #[arg(long, default_value = "-")]
        out: String,
    },
    /// The projection of a knot or link with gaps at under-crossings.
    Diagram {
        input: String,
        #[arg(long, default_value = "-")]
        out: String,
    },
}

pub fn run_render(op: RenderOp) -> Result<u8, CliError> {
    match op {
        RenderOp::Cubes { file, out } => write_text(&out, &cubes::render(&read_document(&file)?)),
        RenderOp::Diagram { input, out } => write_text(&out, &diagram::render(&read_fat(&input)?)?),
    }?;
    Ok(0)
}
