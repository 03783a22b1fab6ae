//! Small geometric helpers over `DVec3`.

use glam::DVec3;

use crate::cubes::AffineInc;

/// A floating point affine increasing map `t ↦ scale·t + offset`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Affine1 {
    pub scale: f64,
    pub offset: f64,
}

impl Affine1 {
    pub const IDENTITY: Affine1 = Affine1 { scale: 1.0, offset: 0.0 };

    pub fn apply(&self, t: f64) -> f64 {
        self.scale * t + self.offset
    }

    pub fn unapply(&self, t: f64) -> f64 {
        (t - self.offset) / self.scale
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Affine1) -> Affine1 {
        Affine1 {
            scale: self.scale * inner.scale,
            offset: self.scale * inner.offset + self.offset,
        }
    }
}

impl From<&AffineInc> for Affine1 {
    fn from(a: &AffineInc) -> Self {
        let (scale, offset) = a.to_f64();
        Affine1 { scale, offset }
    }
}

/// Whether `t` lies in the open interval `(-1, 1)`.
pub fn inside_open_j(t: f64) -> bool {
    t > -1.0 && t < 1.0
}

/// Closest distance between the segments `[p0, p1]` and `[q0, q1]`.
pub fn segment_distance(p0: DVec3, p1: DVec3, q0: DVec3, q1: DVec3) -> f64 {
    let (s, t) = segment_closest(p0, p1, q0, q1);
    (p0.lerp(p1, s) - q0.lerp(q1, t)).length()
}

/// Fractions `(s, t)` of a closest pair of points on the two segments.
pub fn segment_closest(p0: DVec3, p1: DVec3, q0: DVec3, q1: DVec3) -> (f64, f64) {
    let d1 = p1 - p0;
    let d2 = q1 - q0;
    let r = p0 - q0;
    let a = d1.length_squared();
    let e = d2.length_squared();
    let f = d2.dot(r);
    if a <= f64::EPSILON && e <= f64::EPSILON {
        (0.0, 0.0)
    } else if a <= f64::EPSILON {
        (0.0, (f / e).clamp(0.0, 1.0))
    } else {
        let c = d1.dot(r);
        if e <= f64::EPSILON {
            ((-c / a).clamp(0.0, 1.0), 0.0)
        } else {
            let b = d1.dot(d2);
            let denom = a * e - b * b;
            let mut s = if denom > 0.0 { ((b * f - c * e) / denom).clamp(0.0, 1.0) } else { 0.0 };
            let mut t = (b * s + f) / e;
            if t < 0.0 {
                t = 0.0;
                s = (-c / a).clamp(0.0, 1.0);
            } else if t > 1.0 {
                t = 1.0;
                s = ((b - c) / a).clamp(0.0, 1.0);
            }
            (s, t)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn affine_round_trip() {
        let l = Affine1 { scale: 0.25, offset: -0.5 };
        assert!((l.unapply(l.apply(0.3)) - 0.3).abs() < 1e-15);
        let m = Affine1 { scale: 0.5, offset: 0.25 };
        let lm = l.compose(&m);
        assert!((lm.apply(0.7) - l.apply(m.apply(0.7))).abs() < 1e-15);
    }

    #[test]
    fn segment_distances() {
        let x = DVec3::X;
        let d = segment_distance(DVec3::ZERO, x, DVec3::new(0.5, 1.0, -1.0), DVec3::new(0.5, 1.0, 1.0));
        assert!((d - 1.0).abs() < 1e-15);
        let parallel = segment_distance(DVec3::ZERO, x, DVec3::new(0.0, 0.0, 0.75), DVec3::new(1.0, 0.0, 0.75));
        assert!((parallel - 0.75).abs() < 1e-15);
        let apart = segment_distance(DVec3::ZERO, x, DVec3::new(3.0, 0.0, 0.0), DVec3::new(4.0, 0.0, 0.0));
        assert!((apart - 2.0).abs() < 1e-15);
        let crossing = segment_distance(-x, x, -DVec3::Y, DVec3::Y);
        assert_eq!(crossing, 0.0);
    }
}
