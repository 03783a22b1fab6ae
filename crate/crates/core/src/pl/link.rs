//! Framed string 2-links as maps `(ℝ × D²) ⊔ (ℝ × D²) → ℝ × D²`.

use std::sync::Arc;

use glam::DVec3;
use serde::{Deserialize, Serialize};

use super::geom::{inside_open_j, Affine1};
use super::knot::{check_disc, FatKnot};
use super::tube::{Boundary, Tube};
use crate::error::GeometryError;

/// The two strands: `Up` is centered at height `1/2`, `Down` at `-1/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strand {
    Up,
    Down,
}

impl Strand {
    pub const BOTH: [Strand; 2] = [Strand::Up, Strand::Down];

    pub fn boundary(self) -> Boundary {
        match self {
            Strand::Up => Boundary::UPPER,
            Strand::Down => Boundary::LOWER,
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

#[derive(Debug)]
enum Node {
    Standard,
    Tubes([Tube; 2]),
    Conjugate { map: Affine1, inner: FatLink },
    /// Pieces on almost disjoint intervals, the standard embedding elsewhere.
    Concat(Vec<(Affine1, FatLink)>),
    /// `knot ∘ link`.
    Post { knot: FatKnot, link: FatLink },
    /// `link ∘ [up ⊔ down]`.
    Pre { link: FatLink, up: FatKnot, down: FatKnot },
}

#[derive(Clone, Debug)]
pub struct FatLink(Arc<Node>);

/// `ι`, the standard embedding of the two discs.
pub fn iota(strand: Strand, p: DVec3) -> DVec3 {
    strand.boundary().apply(p)
}

impl FatLink {
    pub fn standard() -> Self {
        FatLink(Arc::new(Node::Standard))
    }

    pub fn from_tubes(up: Tube, down: Tube) -> Result<Self, GeometryError> {
        if up.boundary() != Boundary::UPPER || down.boundary() != Boundary::LOWER {
            return Err(GeometryError::Presentation("strand tubes must end on the standard discs".into()));
        }
        Ok(FatLink(Arc::new(Node::Tubes([up, down]))))
    }

    pub fn is_standard(&self) -> bool {
        matches!(*self.0, Node::Standard)
    }

    pub fn conjugate(&self, map: Affine1) -> Self {
        if self.is_standard() || map == Affine1::IDENTITY {
            return self.clone();
        }
        FatLink(Arc::new(Node::Conjugate {
            map,
            inner: self.clone(),
        }))
    }

    pub(crate) fn concat(pieces: Vec<(Affine1, FatLink)>) -> Self {
        let pieces: Vec<_> = pieces.into_iter().filter(|(_, l)| !l.is_standard()).collect();
        if pieces.is_empty() {
            return FatLink::standard();
        }
        FatLink(Arc::new(Node::Concat(pieces)))
    }

    /// `knot ∘ self`.
    pub fn post(&self, knot: &FatKnot) -> Self {
        if knot.is_identity() {
            return self.clone();
        }
        FatLink(Arc::new(Node::Post {
            knot: knot.clone(),
            link: self.clone(),
        }))
    }

    /// `self ∘ [up ⊔ down]`.
    pub fn pre(&self, up: &FatKnot, down: &FatKnot) -> Self {
        if up.is_identity() && down.is_identity() {
            return self.clone();
        }
        FatLink(Arc::new(Node::Pre {
            link: self.clone(),
            up: up.clone(),
            down: down.clone(),
        }))
    }

    pub fn map(&self, strand: Strand, p: DVec3) -> Result<DVec3, GeometryError> {
        match &*self.0 {
            Node::Standard => Ok(iota(strand, p)),
            Node::Tubes(tubes) => tubes[strand.index()].map(p),
            Node::Conjugate { map, inner } => {
                let s = map.unapply(p.x);
                if !inside_open_j(s) {
                    return Ok(iota(strand, p));
                }
                let q = inner.map(strand, DVec3::new(s, p.y, p.z))?;
                Ok(DVec3::new(map.apply(q.x), q.y, q.z))
            }
            Node::Concat(pieces) => {
                for (map, link) in pieces {
                    let s = map.unapply(p.x);
                    if inside_open_j(s) {
                        let q = link.map(strand, DVec3::new(s, p.y, p.z))?;
                        return Ok(DVec3::new(map.apply(q.x), q.y, q.z));
                    }
                }
                Ok(iota(strand, p))
            }
            Node::Post { knot, link } => knot.map(link.map(strand, p)?),
            Node::Pre { link, up, down } => {
                let k = match strand {
                    Strand::Up => up,
                    Strand::Down => down,
                };
                link.map(strand, k.map(p)?)
            }
        }
    }

    pub fn breakpoints(&self, strand: Strand) -> Vec<f64> {
        match &*self.0 {
            Node::Standard => Vec::new(),
            Node::Tubes(tubes) => tubes[strand.index()].params().to_vec(),
            Node::Conjugate { map, inner } => inner.breakpoints(strand).into_iter().map(|t| map.apply(t)).collect(),
            Node::Concat(pieces) => pieces
                .iter()
                .flat_map(|(map, link)| {
                    let mut v: Vec<f64> = link.breakpoints(strand).into_iter().map(|t| map.apply(t)).collect();
                    v.push(map.apply(-1.0));
                    v.push(map.apply(1.0));
                    v
                })
                .collect(),
            Node::Post { knot, link } => {
                let mut v = link.breakpoints(strand);
                v.extend(knot.breakpoints());
                v
            }
            Node::Pre { link, up, down } => {
                let mut v = link.breakpoints(strand);
                v.extend(match strand {
                    Strand::Up => up.breakpoints(),
                    Strand::Down => down.breakpoints(),
                });
                v
            }
        }
    }
}

pub fn standard_link() -> FatLink {
    FatLink::standard()
}

/// `f(t, x)` on the given strand, for `x` in the unit disc.
pub fn evaluate_link(f: &FatLink, strand: Strand, t: f64, x: [f64; 2]) -> Result<DVec3, GeometryError> {
    check_disc(x)?;
    f.map(strand, DVec3::new(t, x[0], x[1]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pl::knot::twist;

    #[test]
    fn standard_link_is_iota() {
        let l = standard_link();
        let p = evaluate_link(&l, Strand::Up, 0.2, [1.0, 0.0]).unwrap();
        assert_eq!(p, DVec3::new(0.2, 0.125, 0.5));
        let q = evaluate_link(&l, Strand::Down, -3.0, [0.0, -1.0]).unwrap();
        assert_eq!(q, DVec3::new(-3.0, 0.0, -0.625));
    }

    #[test]
    fn pre_and_post_composition() {
        let k = twist(1);
        let up = FatLink::standard().pre(&k, &FatKnot::identity());
        let p = evaluate_link(&up, Strand::Up, 0.0, [0.0, 1.0]).unwrap();
        assert!((p - DVec3::new(0.0, 0.0, 0.5 - 0.125)).length() < 1e-12);
        let q = evaluate_link(&up, Strand::Down, 0.0, [0.0, 1.0]).unwrap();
        assert_eq!(q, DVec3::new(0.0, 0.0, -0.375));
        let both = FatLink::standard().post(&k);
        let r = evaluate_link(&both, Strand::Down, 0.0, [0.0, 0.0]).unwrap();
        assert!((r - DVec3::new(0.0, 0.0, 0.5)).length() < 1e-12);
    }
}
