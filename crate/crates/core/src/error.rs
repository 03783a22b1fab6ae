use thiserror::Error;

use crate::cubes::ValidationReport;

/// Failures while reading any of the text formats (rationals, JSON
/// documents, monoid words).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("invalid rational `{0}`")]
    Rational(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("invalid document: {0}")]
    Format(String),
    #[error("unknown color `{0}`")]
    Color(String),
    #[error("word syntax error at byte {pos}: {msg}")]
    Word { pos: usize, msg: String },
}

impl From<serde_json::Error> for ParseError {
    fn from(e: serde_json::Error) -> Self {
        ParseError::Json(e.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CubeError {
    #[error("index {index} out of range for arity {arity}")]
    IndexOutOfRange { index: usize, arity: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("permutation of size {found} applied to arity {expected}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<usize>),
    #[error("affine map must have positive scale, got {0}")]
    NonPositiveScale(String),
    #[error("color mismatch: input {index} has color {expected}, operation outputs {found}")]
    ColorMismatch {
        index: usize,
        expected: String,
        found: String,
    },
    #[error("{0}")]
    Invalid(ValidationReport),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("label `{label}` is not in the {alphabet} alphabet")]
    UnknownLabel { label: String, alphabet: &'static str },
    #[error("the color o has no knot embedding")]
    OpenColor,
    #[error("color mismatch: {0}")]
    ColorMismatch(String),
    #[error("index {index} out of range for arity {arity}")]
    IndexOutOfRange { index: usize, arity: usize },
    #[error("empty operation space")]
    EmptyComponent,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("degenerate frame at parameter {t}")]
    DegenerateFrame { t: f64 },
    #[error("disc point {0:?} lies outside the unit disc")]
    OutsideDisc([f64; 2]),
    #[error("curves are not disjoint at the sampled resolution (distance {distance:e})")]
    NotDisjoint { distance: f64 },
    #[error("no generic projection found after {attempts} shears")]
    NoGenericProjection { attempts: usize },
    #[error("invalid presentation: {0}")]
    Presentation(String),
    #[error("input {index} should be a {expected}")]
    KindMismatch { index: usize, expected: &'static str },
    #[error("expected {expected} inputs, got {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Cube(#[from] CubeError),
}
