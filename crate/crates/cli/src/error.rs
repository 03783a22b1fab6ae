use scl_core::cubes::format::LoadError;
use scl_core::pl::{CatalogError, PresentationError};
use scl_core::{AlgebraError, CubeError, GeometryError, ParseError};
use thiserror::Error;

/// A failed command. Parse failures exit with 2, validation failures with 3.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Invalid(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Invalid(_) => 3,
        }
    }

    pub fn parse(msg: impl std::fmt::Display) -> Self {
        CliError::Parse(msg.to_string())
    }

    pub fn invalid(msg: impl std::fmt::Display) -> Self {
        CliError::Invalid(msg.to_string())
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::parse(e)
    }
}

impl From<LoadError> for CliError {
    fn from(e: LoadError) -> Self {
        match e {
            LoadError::Parse(e) => CliError::parse(e),
            LoadError::Invalid(e) => CliError::invalid(e),
        }
    }
}

impl From<CubeError> for CliError {
    fn from(e: CubeError) -> Self {
        CliError::invalid(e)
    }
}

impl From<GeometryError> for CliError {
    fn from(e: GeometryError) -> Self {
        CliError::invalid(e)
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::UnknownLabel { .. } => CliError::parse(e),
            other => CliError::invalid(other),
        }
    }
}

impl From<PresentationError> for CliError {
    fn from(e: PresentationError) -> Self {
        match e {
            PresentationError::Parse(_) => CliError::parse(e),
            PresentationError::Invalid(_) => CliError::invalid(e),
        }
    }
}

impl From<CatalogError> for CliError {
    fn from(e: CatalogError) -> Self {
        match e {
            CatalogError::Presentation {
                source: PresentationError::Invalid(_),
                ..
            } => CliError::invalid(e),
            other => CliError::parse(other),
        }
    }
}
