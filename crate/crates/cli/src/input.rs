//! Reading inputs and writing outputs. A path of `-` means stdin or stdout.

use std::io::{Read, Write};
use std::path::Path;

use scl_core::cubes::format::{is_scl_document, parse_config, parse_scl};
use scl_core::cubes::{CubeConfig, SclElement};
use scl_core::pl::{catalog, parse_presentation, twist, Fat, FatLink};

use crate::error::CliError;

pub fn read_text(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::parse(format!("reading stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| CliError::parse(format!("reading {path}: {e}")))
}

pub fn write_text(path: &str, text: &str) -> Result<(), CliError> {
    if path == "-" {
        let mut out = std::io::stdout().lock();
        return out
            .write_all(text.as_bytes())
            .map_err(|e| CliError::invalid(format!("writing stdout: {e}")));
    }
    std::fs::write(Path::new(path), text).map_err(|e| CliError::invalid(format!("writing {path}: {e}")))
}

pub enum CubeDocument {
    Config(CubeConfig),
    Scl(SclElement),
}

pub fn read_document(path: &str) -> Result<CubeDocument, CliError> {
    let text = read_text(path)?;
    if is_scl_document(&text)? {
        Ok(CubeDocument::Scl(parse_scl(&text)?))
    } else {
        Ok(CubeDocument::Config(parse_config(&text)?))
    }
}

pub fn read_config(path: &str) -> Result<CubeConfig, CliError> {
    Ok(parse_config(&read_text(path)?)?)
}

pub fn read_scl(path: &str) -> Result<SclElement, CliError> {
    Ok(parse_scl(&read_text(path)?)?)
}

/// A knot or link given as `catalog:NAME`, `twist:N`, `standard-knot`,
/// `standard-link`, or a presentation file.
pub fn read_fat(reference: &str) -> Result<Fat, CliError> {
    if let Some(name) = reference.strip_prefix("catalog:") {
        return Ok(catalog::load(name)?);
    }
    if let Some(n) = reference.strip_prefix("twist:") {
        let n: i64 = n.parse().map_err(|_| CliError::parse(format!("bad twist count in {reference:?}")))?;
        return Ok(Fat::Knot(twist(n)));
    }
    match reference {
        "standard-knot" => Ok(Fat::Knot(scl_core::pl::standard_knot())),
        "standard-link" => Ok(Fat::Link(FatLink::standard())),
        path => Ok(parse_presentation(&read_text(path)?)?),
    }
}
