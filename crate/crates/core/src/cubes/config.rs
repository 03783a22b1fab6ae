use serde::{Deserialize, Serialize};

use super::affine::AffineInc;
use super::validation::{Clause, ValidationReport};
use crate::error::CubeError;
use crate::perm::Perm;
use crate::rational::Rational;

/// A product of `n` increasing affine self-maps of `J`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LittleCube {
    factors: Vec<AffineInc>,
}

impl LittleCube {
    pub fn new(factors: Vec<AffineInc>) -> Self {
        LittleCube { factors }
    }

    pub fn identity(dim: usize) -> Self {
        LittleCube {
            factors: vec![AffineInc::identity(); dim],
        }
    }

    /// Axis-aligned box with the given `(lo, hi)` image per axis.
    pub fn from_box(bounds: &[(Rational, Rational)]) -> Result<Self, CubeError> {
        let factors = bounds
            .iter()
            .map(|(lo, hi)| AffineInc::from_image(lo.clone(), hi.clone()))
            .collect::<Result<_, _>>()?;
        Ok(LittleCube { factors })
    }

    pub fn dim(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[AffineInc] {
        &self.factors
    }

    pub fn factor(&self, axis: usize) -> &AffineInc {
        &self.factors[axis]
    }

    pub fn is_little(&self) -> bool {
        self.factors.iter().all(AffineInc::is_little)
    }

    /// `self ∘ inner`, factor by factor.
    pub fn compose(&self, inner: &LittleCube) -> Result<LittleCube, CubeError> {
        if self.dim() != inner.dim() {
            return Err(CubeError::DimensionMismatch {
                expected: self.dim(),
                found: inner.dim(),
            });
        }
        Ok(LittleCube {
            factors: self
                .factors
                .iter()
                .zip(&inner.factors)
                .map(|(a, b)| a.compose(b))
                .collect(),
        })
    }
}

/// Whether the interiors of the two images are disjoint, which for boxes
/// happens exactly when some axis has disjoint open image intervals.
pub fn almost_disjoint(a: &LittleCube, b: &LittleCube) -> Result<bool, CubeError> {
    if a.dim() != b.dim() {
        return Err(CubeError::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    Ok(a
        .factors
        .iter()
        .zip(&b.factors)
        .any(|(x, y)| !x.open_images_meet(y)))
}

/// `lⁿ(-1) = -1` for the last factor.
pub fn meets_lower_face(a: &LittleCube) -> bool {
    match a.factors.last() {
        Some(last) => last.apply(&Rational::from_integer(-1)) == Rational::from_integer(-1),
        None => true,
    }
}

/// Which operad a configuration is declared to live in.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Arbitrary overlap allowed.
    #[serde(rename = "over")]
    Overlapping,
    /// Pairwise almost disjoint.
    Disjoint,
    /// Pairwise almost disjoint and every cube meets the lower face.
    #[serde(rename = "lowerface")]
    LowerFace,
}

impl Mode {
    /// The strongest guarantee both modes provide.
    pub fn meet(self, other: Mode) -> Mode {
        self.min(other)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Overlapping => "over",
            Mode::Disjoint => "disjoint",
            Mode::LowerFace => "lowerface",
        }
    }
}

/// An ordered configuration of `k` little `n`-cubes. Equality is ordered
/// equality; orbit equality under permutations is a separate question.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CubeConfig {
    dim: usize,
    mode: Mode,
    cubes: Vec<LittleCube>,
}

impl CubeConfig {
    /// Builds and validates against `mode`.
    pub fn new(dim: usize, mode: Mode, cubes: Vec<LittleCube>) -> Result<Self, CubeError> {
        let config = CubeConfig { dim, mode, cubes };
        let report = config.validate();
        if report.is_ok() {
            Ok(config)
        } else {
            Err(CubeError::Invalid(report))
        }
    }

    pub(crate) fn new_unchecked(dim: usize, mode: Mode, cubes: Vec<LittleCube>) -> Self {
        CubeConfig { dim, mode, cubes }
    }

    /// The arity-1 configuration holding the identity cube.
    pub fn unit(dim: usize, mode: Mode) -> Self {
        CubeConfig {
            dim,
            mode,
            cubes: vec![LittleCube::identity(dim)],
        }
    }

    pub fn empty(dim: usize, mode: Mode) -> Self {
        CubeConfig {
            dim,
            mode,
            cubes: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn arity(&self) -> usize {
        self.cubes.len()
    }

    pub fn cubes(&self) -> &[LittleCube] {
        &self.cubes
    }

    pub fn cube(&self, i: usize) -> &LittleCube {
        &self.cubes[i]
    }

    pub fn validate(&self) -> ValidationReport {
        self.validate_as(self.mode)
    }

    /// Checks the configuration against the invariants of `mode`.
    pub fn validate_as(&self, mode: Mode) -> ValidationReport {
        let mut report = ValidationReport::default();
        for (i, c) in self.cubes.iter().enumerate() {
            if c.dim() != self.dim {
                report.push(Clause::Dimension, vec![i]);
            } else if !c.is_little() {
                report.push(Clause::OutsideUnitCube, vec![i]);
            }
        }
        if !report.is_ok() {
            return report;
        }
        if mode >= Mode::Disjoint {
            for i in 0..self.cubes.len() {
                for j in i + 1..self.cubes.len() {
                    if !almost_disjoint(&self.cubes[i], &self.cubes[j]).unwrap_or(false) {
                        report.push(Clause::Overlap, vec![i, j]);
                    }
                }
            }
        }
        if mode == Mode::LowerFace {
            for (i, c) in self.cubes.iter().enumerate() {
                if !meets_lower_face(c) {
                    report.push(Clause::LowerFace, vec![i]);
                }
            }
        }
        report
    }

    /// Re-declares the mode, validating against it.
    pub fn with_mode(&self, mode: Mode) -> Result<CubeConfig, CubeError> {
        CubeConfig::new(self.dim, mode, self.cubes.clone())
    }

    /// `L ∘ᵢ P` with 0-based `i`: the `i`-th cube is replaced by its
    /// composites with each cube of `P`, or discarded when `P` is empty.
    pub fn compose_at(&self, i: usize, inner: &CubeConfig) -> Result<CubeConfig, CubeError> {
        if i >= self.arity() {
            return Err(CubeError::IndexOutOfRange {
                index: i,
                arity: self.arity(),
            });
        }
        if self.dim != inner.dim {
            return Err(CubeError::DimensionMismatch {
                expected: self.dim,
                found: inner.dim,
            });
        }
        let outer = &self.cubes[i];
        let mut cubes = Vec::with_capacity(self.arity() + inner.arity() - 1);
        cubes.extend_from_slice(&self.cubes[..i]);
        for p in &inner.cubes {
            cubes.push(outer.compose(p)?);
        }
        cubes.extend_from_slice(&self.cubes[i + 1..]);
        CubeConfig::new(self.dim, self.mode.meet(inner.mode), cubes)
    }

    /// Right action: cube `i` of the result is cube `σ(i)` of `self`.
    pub fn act(&self, sigma: &Perm) -> Result<CubeConfig, CubeError> {
        if sigma.len() != self.arity() {
            return Err(CubeError::SizeMismatch {
                expected: self.arity(),
                found: sigma.len(),
            });
        }
        Ok(CubeConfig {
            dim: self.dim,
            mode: self.mode,
            cubes: (0..self.arity())
                .map(|i| self.cubes[sigma.apply(i)].clone())
                .collect(),
        })
    }

    /// Keeps the cubes at `indices`, in that order.
    pub fn restrict(&self, indices: &[usize], mode: Mode) -> Result<CubeConfig, CubeError> {
        let cubes = indices.iter().map(|&i| self.cubes[i].clone()).collect();
        CubeConfig::new(self.dim, mode, cubes)
    }

    /// Convex combination `(1-s)·self + s·other`, factor by factor. Returns
    /// the raw configuration; the caller decides which mode it must satisfy.
    pub fn interpolate(&self, other: &CubeConfig, s: &Rational) -> Result<CubeConfig, CubeError> {
        if self.dim != other.dim || self.arity() != other.arity() {
            return Err(CubeError::SizeMismatch {
                expected: self.arity(),
                found: other.arity(),
            });
        }
        let one_minus = &Rational::one() - s;
        let cubes = self
            .cubes
            .iter()
            .zip(&other.cubes)
            .map(|(a, b)| {
                let factors = a
                    .factors()
                    .iter()
                    .zip(b.factors())
                    .map(|(x, y)| {
                        AffineInc::new(
                            &(&one_minus * x.scale()) + &(s * y.scale()),
                            &(&one_minus * x.offset()) + &(s * y.offset()),
                        )
                    })
                    .collect::<Result<_, _>>()?;
                Ok(LittleCube::new(factors))
            })
            .collect::<Result<_, CubeError>>()?;
        Ok(CubeConfig::new_unchecked(self.dim, self.mode, cubes))
    }
}

/// First factors of a 2-dimensional configuration, as overlapping 1-cubes.
pub fn projection_pi(config: &CubeConfig) -> Result<CubeConfig, CubeError> {
    if config.dim() != 2 {
        return Err(CubeError::DimensionMismatch {
            expected: 2,
            found: config.dim(),
        });
    }
    Ok(CubeConfig::new_unchecked(
        1,
        Mode::Overlapping,
        config
            .cubes()
            .iter()
            .map(|c| LittleCube::new(vec![c.factor(0).clone()]))
            .collect(),
    ))
}

/// Heights `l²(-1)` of the cubes of a 2-dimensional configuration.
pub fn heights_t(config: &CubeConfig) -> Result<Vec<Rational>, CubeError> {
    if config.dim() != 2 {
        return Err(CubeError::DimensionMismatch {
            expected: 2,
            found: config.dim(),
        });
    }
    let minus_one = Rational::from_integer(-1);
    Ok(config
        .cubes()
        .iter()
        .map(|c| c.factor(1).apply(&minus_one))
        .collect())
}
