use serde::{Deserialize, Serialize};

use crate::error::CubeError;
use crate::rational::Rational;

/// An increasing affine map `x ↦ scale·x + offset`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "[Rational; 2]", into = "[Rational; 2]")]
pub struct AffineInc {
    scale: Rational,
    offset: Rational,
}

impl AffineInc {
    pub fn new(scale: Rational, offset: Rational) -> Result<Self, CubeError> {
        if !scale.is_positive() {
            return Err(CubeError::NonPositiveScale(scale.to_string()));
        }
        Ok(AffineInc { scale, offset })
    }

    pub fn identity() -> Self {
        AffineInc {
            scale: Rational::one(),
            offset: Rational::zero(),
        }
    }

    /// The map sending `[-1, 1]` onto `[lo, hi]`.
    pub fn from_image(lo: Rational, hi: Rational) -> Result<Self, CubeError> {
        let two = Rational::from_integer(2);
        let scale = &(&hi - &lo) / &two;
        let offset = &(&hi + &lo) / &two;
        AffineInc::new(scale, offset)
    }

    pub fn scale(&self) -> &Rational {
        &self.scale
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    pub fn apply(&self, x: &Rational) -> Rational {
        &(&self.scale * x) + &self.offset
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &AffineInc) -> AffineInc {
        AffineInc {
            scale: &self.scale * &inner.scale,
            offset: &(&self.scale * &inner.offset) + &self.offset,
        }
    }

    pub fn inverse(&self) -> AffineInc {
        let scale = self.scale.recip();
        let offset = -(&self.offset * &scale);
        AffineInc { scale, offset }
    }

    /// Image of `J = [-1, 1]` as `(lo, hi)`.
    pub fn image(&self) -> (Rational, Rational) {
        (&self.offset - &self.scale, &self.offset + &self.scale)
    }

    /// Whether the map sends `J` into `J`, i.e. `scale + |offset| ≤ 1`.
    pub fn is_little(&self) -> bool {
        &self.scale + &self.offset.abs() <= Rational::one()
    }

    /// Whether the open images of `J` under the two maps meet.
    pub fn open_images_meet(&self, other: &AffineInc) -> bool {
        let (a0, a1) = self.image();
        let (b0, b1) = other.image();
        a0 < b1 && b0 < a1
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.scale.to_f64(), self.offset.to_f64())
    }
}

impl TryFrom<[Rational; 2]> for AffineInc {
    type Error = CubeError;
    fn try_from([scale, offset]: [Rational; 2]) -> Result<Self, Self::Error> {
        AffineInc::new(scale, offset)
    }
}

impl From<AffineInc> for [Rational; 2] {
    fn from(a: AffineInc) -> Self {
        [a.scale, a.offset]
    }
}
