//! Permutations of `{0, .., n-1}` stored as their image lists.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::CubeError;

/// `Perm(v)` is the map `i ↦ v[i]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    pub fn new(images: Vec<usize>) -> Result<Self, CubeError> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || seen[x] {
                return Err(CubeError::NotAPermutation(images));
            }
            seen[x] = true;
        }
        Ok(Perm(images))
    }

    /// Builds from 1-based images, the form used in every external format.
    pub fn from_one_based(images: &[usize]) -> Result<Self, CubeError> {
        if images.contains(&0) {
            return Err(CubeError::NotAPermutation(images.to_vec()));
        }
        Perm::new(images.iter().map(|&x| x - 1).collect())
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.0.iter().map(|&x| x + 1).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Perm(inv)
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn then_after(&self, other: &Perm) -> Perm {
        assert_eq!(self.len(), other.len());
        Perm(other.0.iter().map(|&i| self.0[i]).collect())
    }

    /// Operadic composition in the symmetric groups, matched to the right
    /// action of permutations on cube configurations: the result maps the
    /// block `{i, .., i+m-1}` onto `{σ(i), .., σ(i)+m-1}` shuffled by `τ`, and
    /// every other position according to `σ` with the block collapsed.
    ///
    /// With this convention `(aσ) ∘ᵢ b = (a ∘_{σ(i)} b)(σ ∘ᵢ id)` and
    /// `a ∘ᵢ (bτ) = (a ∘ᵢ b)(id ∘ᵢ τ)`.
    pub fn compose_at(&self, i: usize, tau: &Perm) -> Perm {
        let k = self.len();
        let m = tau.len();
        assert!(i < k, "block index out of range");
        let pivot = self.0[i];
        let shift = |j: usize| if j < pivot { j } else { j + m - 1 };
        let mut out = Vec::with_capacity(k + m - 1);
        for p in 0..i {
            out.push(shift(self.0[p]));
        }
        for r in 0..m {
            out.push(pivot + tau.0[r]);
        }
        for p in i + 1..k {
            out.push(shift(self.0[p]));
        }
        Perm(out)
    }

    /// All permutations of `n` in lexicographic order of their image lists.
    pub fn all(n: usize) -> impl Iterator<Item = Perm> {
        (0..n).permutations(n).map(Perm)
    }
}

impl TryFrom<Vec<usize>> for Perm {
    type Error = CubeError;
    fn try_from(v: Vec<usize>) -> Result<Self, Self::Error> {
        Perm::new(v)
    }
}

impl From<Perm> for Vec<usize> {
    fn from(p: Perm) -> Self {
        p.0
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.0)
    }
}
