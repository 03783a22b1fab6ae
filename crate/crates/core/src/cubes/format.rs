//! JSON documents for configurations and SCL operations.
//!
//! ```json
//! {"dim": 2, "mode": "disjoint", "cubes": [[["1/2", "-1/2"], ["1/1", "0/1"]]],
//!  "colors": ["o"], "output": "o"}
//! ```
//!
//! Each cube is a list of `[scale, offset]` factors; `colors` and `output`
//! are present only for SCL operations.

use serde::{Deserialize, Serialize};

use super::config::{CubeConfig, LittleCube, Mode};
use super::scl::{Color, SclElement};
use crate::error::{CubeError, ParseError};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    dim: usize,
    mode: Mode,
    cubes: Vec<LittleCube>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    colors: Option<Vec<Color>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    output: Option<Color>,
}

/// Either the text could not be read, or it describes an invalid object.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LoadError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Invalid(#[from] CubeError),
}

fn parse_raw(text: &str) -> Result<RawDocument, ParseError> {
    let raw: RawDocument = serde_json::from_str(text)?;
    if raw.dim == 0 {
        return Err(ParseError::Format("dim must be positive".into()));
    }
    Ok(raw)
}

pub fn parse_config(text: &str) -> Result<CubeConfig, LoadError> {
    let raw = parse_raw(text)?;
    Ok(CubeConfig::new(raw.dim, raw.mode, raw.cubes)?)
}

pub fn parse_scl(text: &str) -> Result<SclElement, LoadError> {
    let raw = parse_raw(text)?;
    let colors = raw
        .colors
        .ok_or_else(|| ParseError::Format("missing `colors`".into()))?;
    let output = raw
        .output
        .ok_or_else(|| ParseError::Format("missing `output`".into()))?;
    let config = CubeConfig::new(raw.dim, Mode::Overlapping, raw.cubes)?;
    Ok(SclElement::new(colors, output, config)?)
}

/// Whether the document carries SCL color data.
pub fn is_scl_document(text: &str) -> Result<bool, ParseError> {
    Ok(parse_raw(text)?.colors.is_some())
}

pub fn config_to_json(config: &CubeConfig) -> String {
    let raw = RawDocument {
        dim: config.dim(),
        mode: config.mode(),
        cubes: config.cubes().to_vec(),
        colors: None,
        output: None,
    };
    serde_json::to_string(&raw).expect("serializable")
}

pub fn scl_to_json(element: &SclElement) -> String {
    let raw = RawDocument {
        dim: 2,
        mode: element.config().mode(),
        cubes: element.config().cubes().to_vec(),
        colors: Some(element.input_colors().to_vec()),
        output: Some(element.output_color()),
    };
    serde_json::to_string(&raw).expect("serializable")
}
