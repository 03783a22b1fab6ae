use std::fmt;

use serde::Serialize;

/// The invariant a configuration broke.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Clause {
    /// A cube has the wrong number of factors.
    Dimension,
    /// A factor does not send `J` into `J`.
    OutsideUnitCube,
    /// Two cubes that must be almost disjoint have meeting interiors.
    Overlap,
    /// A cube that must meet the lower face does not.
    LowerFace,
    /// The color list and the cube list have different lengths.
    ColorCount,
    /// An operation with output color other than `o` has a different input color.
    NonMonochromatic,
    /// An `o`-colored cube meets the interior of another cube.
    OpenCubeOverlap,
    /// Two cubes of the same non-`o` color have meeting interiors.
    SameColorOverlap,
    /// SCL operations live in dimension 2.
    SclDimension,
}

impl Clause {
    pub fn describe(self) -> &'static str {
        match self {
            Clause::Dimension => "cube dimension differs from the configuration dimension",
            Clause::OutsideUnitCube => "little cube does not map J into J",
            Clause::Overlap => "cubes are not almost disjoint",
            Clause::LowerFace => "cube does not meet the lower face",
            Clause::ColorCount => "number of colors differs from number of cubes",
            Clause::NonMonochromatic => "inputs of a non-o output must all share its color",
            Clause::OpenCubeOverlap => "o-colored cube is not almost disjoint from another cube",
            Clause::SameColorOverlap => "same-colored cubes are not almost disjoint",
            Clause::SclDimension => "SCL configurations must be 2-dimensional",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub clause: Clause,
    /// Offending cube indices, 0-based.
    pub cubes: Vec<usize>,
}

/// Every violated clause of a validation pass; empty means valid.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub(crate) fn push(&mut self, clause: Clause, cubes: Vec<usize>) {
        self.violations.push(Violation { clause, cubes });
    }

    pub fn has(&self, clause: Clause) -> bool {
        self.violations.iter().any(|v| v.clause == clause)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        for (n, v) in self.violations.iter().enumerate() {
            if n > 0 {
                write!(f, "; ")?;
            }
            let cubes: Vec<String> = v.cubes.iter().map(|c| (c + 1).to_string()).collect();
            write!(f, "{} (cubes {})", v.clause.describe(), cubes.join(","))?;
        }
        Ok(())
    }
}
