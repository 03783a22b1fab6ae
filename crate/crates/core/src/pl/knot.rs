//! Fat long knots as self-maps of `ℝ × D²` supported in `J × D²`.
//!
//! A knot is kept as an expression tree over tubes, so conjugation and
//! composition are exact as maps and only materialization samples.

use std::sync::Arc;

use glam::DVec3;

use super::geom::{inside_open_j, Affine1};
use super::tube::{Boundary, Tube};
use crate::cubes::AffineInc;
use crate::error::GeometryError;

#[derive(Debug)]
enum Node {
    Identity,
    Tube(Tube),
    /// `(L × id) ∘ f ∘ (L⁻¹ × id)`.
    Conjugate { map: Affine1, inner: FatKnot },
    /// `outer ∘ inner`.
    Compose { outer: FatKnot, inner: FatKnot },
}

#[derive(Clone, Debug)]
pub struct FatKnot(Arc<Node>);

pub(crate) fn check_disc(x: [f64; 2]) -> Result<(), GeometryError> {
    if x[0] * x[0] + x[1] * x[1] > 1.0 + 1e-12 || !x.iter().all(|v| v.is_finite()) {
        return Err(GeometryError::OutsideDisc(x));
    }
    Ok(())
}

impl FatKnot {
    pub fn identity() -> Self {
        FatKnot(Arc::new(Node::Identity))
    }

    pub fn from_tube(tube: Tube) -> Result<Self, GeometryError> {
        if tube.boundary() != Boundary::KNOT {
            return Err(GeometryError::Presentation("a knot tube must end on the unit disc".into()));
        }
        Ok(FatKnot(Arc::new(Node::Tube(tube))))
    }

    pub fn is_identity(&self) -> bool {
        matches!(*self.0, Node::Identity)
    }

    pub fn conjugate(&self, map: Affine1) -> Self {
        if self.is_identity() || map == Affine1::IDENTITY {
            return self.clone();
        }
        FatKnot(Arc::new(Node::Conjugate {
            map,
            inner: self.clone(),
        }))
    }

    /// `self ∘ inner`.
    pub fn then_after(&self, inner: &FatKnot) -> Self {
        if self.is_identity() {
            return inner.clone();
        }
        if inner.is_identity() {
            return self.clone();
        }
        FatKnot(Arc::new(Node::Compose {
            outer: self.clone(),
            inner: inner.clone(),
        }))
    }

    /// The map on all of `ℝ × ℝ²`, points written `(t, x₁, x₂)`.
    pub fn map(&self, p: DVec3) -> Result<DVec3, GeometryError> {
        match &*self.0 {
            Node::Identity => Ok(p),
            Node::Tube(tube) => tube.map(p),
            Node::Conjugate { map, inner } => {
                let s = map.unapply(p.x);
                if !inside_open_j(s) {
                    return Ok(p);
                }
                let q = inner.map(DVec3::new(s, p.y, p.z))?;
                Ok(DVec3::new(map.apply(q.x), q.y, q.z))
            }
            Node::Compose { outer, inner } => outer.map(inner.map(p)?),
        }
    }

    /// Parameters where the map may fail to be smooth, as far as they can
    /// be tracked without evaluating.
    pub fn breakpoints(&self) -> Vec<f64> {
        match &*self.0 {
            Node::Identity => Vec::new(),
            Node::Tube(tube) => tube.params().to_vec(),
            Node::Conjugate { map, inner } => inner.breakpoints().into_iter().map(|t| map.apply(t)).collect(),
            Node::Compose { outer, inner } => {
                let mut v = inner.breakpoints();
                v.extend(outer.breakpoints());
                v
            }
        }
    }

    /// Number of tube leaves.
    pub fn leaves(&self) -> usize {
        match &*self.0 {
            Node::Identity => 0,
            Node::Tube(_) => 1,
            Node::Conjugate { inner, .. } => inner.leaves(),
            Node::Compose { outer, inner } => outer.leaves() + inner.leaves(),
        }
    }
}

pub fn standard_knot() -> FatKnot {
    FatKnot::identity()
}

/// The `n`-th power of the twist `(t, x) ↦ (t, e^{iπ(t+1)}x)`.
pub fn twist(n: i64) -> FatKnot {
    if n == 0 {
        return FatKnot::identity();
    }
    let steps = 48 * n.unsigned_abs() as usize;
    let params: Vec<f64> = (0..=steps).map(|i| -1.0 + 2.0 * i as f64 / steps as f64).collect();
    let core = params.iter().map(|&t| DVec3::new(t, 0.0, 0.0)).collect();
    let pushoff = params
        .iter()
        .enumerate()
        .map(|(i, &t)| {
            if i == 0 || i == steps {
                return DVec3::new(t, 0.0, 1.0);
            }
            let theta = n as f64 * std::f64::consts::PI * (t + 1.0);
            DVec3::new(t, -theta.sin(), theta.cos())
        })
        .collect();
    let tube = Tube::new(params, core, pushoff, Boundary::KNOT).expect("twist tube is valid");
    FatKnot(Arc::new(Node::Tube(tube)))
}

/// `f(t, x)` for `x` in the unit disc.
pub fn evaluate(f: &FatKnot, t: f64, x: [f64; 2]) -> Result<DVec3, GeometryError> {
    check_disc(x)?;
    f.map(DVec3::new(t, x[0], x[1]))
}

/// `Lf = (L × id) ∘ f ∘ (L⁻¹ × id)` for a little interval `L`.
pub fn cube1_conjugate(l: &AffineInc, f: &FatKnot) -> FatKnot {
    f.conjugate(Affine1::from(l))
}

/// `g ∘ f`.
pub fn compose(g: &FatKnot, f: &FatKnot) -> FatKnot {
    g.then_after(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;

    fn samples() -> Vec<(f64, [f64; 2])> {
        let mut v = Vec::new();
        for i in 0..=40 {
            let t = -1.2 + 2.4 * i as f64 / 40.0;
            for x in [[0.0, 0.0], [0.0, 1.0], [0.6, -0.3], [-0.7, 0.7]] {
                v.push((t, x));
            }
        }
        v
    }

    fn distance(f: &FatKnot, g: &FatKnot) -> f64 {
        samples()
            .iter()
            .map(|&(t, x)| (evaluate(f, t, x).unwrap() - evaluate(g, t, x).unwrap()).length())
            .fold(0.0, f64::max)
    }

    #[test]
    fn standard_is_identity() {
        for (t, x) in samples() {
            assert_eq!(evaluate(&standard_knot(), t, x).unwrap(), DVec3::new(t, x[0], x[1]));
        }
        assert!(evaluate(&standard_knot(), 0.0, [1.0, 1.0]).is_err());
    }

    #[test]
    fn twist_rotates_the_disc() {
        let f = twist(1);
        let p = evaluate(&f, 0.0, [0.0, 1.0]).unwrap();
        assert!((p - DVec3::new(0.0, 0.0, -1.0)).length() < 1e-12);
        let q = evaluate(&f, -0.5, [0.0, 1.0]).unwrap();
        assert!((q - DVec3::new(-0.5, -1.0, 0.0)).length() < 1e-12);
        assert!(twist(0).is_identity());
        assert!(distance(&twist(2), &standard_knot()) > 0.5);
    }

    #[test]
    fn conjugation_is_an_action() {
        let f = twist(1);
        let l = AffineInc::new(Rational::new(1, 2), Rational::new(-1, 3)).unwrap();
        let m = AffineInc::new(Rational::new(3, 4), Rational::new(1, 5)).unwrap();
        let lm = cube1_conjugate(&l.compose(&m), &f);
        let l_m = cube1_conjugate(&l, &cube1_conjugate(&m, &f));
        assert!(distance(&lm, &l_m) < 1e-9);
        assert!(distance(&cube1_conjugate(&AffineInc::identity(), &f), &f) == 0.0);
    }

    #[test]
    fn conjugated_support() {
        let l = AffineInc::new(Rational::new(1, 4), Rational::new(1, 2)).unwrap();
        let g = cube1_conjugate(&l, &twist(1));
        for (t, x) in samples() {
            if !(0.25..=0.75).contains(&t) {
                assert_eq!(evaluate(&g, t, x).unwrap(), DVec3::new(t, x[0], x[1]));
            }
        }
    }

    #[test]
    fn disjoint_supports_commute() {
        let a = AffineInc::from_image(Rational::new(-1, 1), Rational::new(0, 1)).unwrap();
        let b = AffineInc::from_image(Rational::new(0, 1), Rational::new(1, 1)).unwrap();
        let f = cube1_conjugate(&a, &twist(1));
        let g = cube1_conjugate(&b, &twist(-2));
        assert_eq!(distance(&compose(&f, &g), &compose(&g, &f)), 0.0);
        assert_eq!(distance(&compose(&standard_knot(), &f), &f), 0.0);
    }
}
