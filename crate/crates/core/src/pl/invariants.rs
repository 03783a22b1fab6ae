//! Linking numbers by signed crossings, and the framing invariants.
//!
//! Open curves from `x = -1` to `x = 1` are closed in the plane `y = 0`,
//! either below (through `z = -3`) or above (through `z = 4`). Diagrams
//! project along `(s₁, 1, s₂)` onto `(x - s₁y, z - s₂y)`, seen from `y = -∞`.

use glam::{DVec2, DVec3};

use super::knot::FatKnot;
use super::link::{FatLink, Strand};
use super::sample::{materialize_knot, materialize_link, CHORD_TOLERANCE};
use super::tube::Tube;
use crate::error::GeometryError;

/// Guard for degenerate crossings in the sheared diagram.
pub const CROSSING_GUARD: f64 = 1e-12;
/// Curves closer than this count as meeting.
pub const CONTACT_DISTANCE: f64 = 1e-9;
pub const MAX_SHEAR_ATTEMPTS: usize = 32;

fn close(curve: &[DVec3], width: f64, far: f64) -> Vec<DVec3> {
    let a = curve[0];
    let b = *curve.last().expect("nonempty curve");
    let mut out = curve.to_vec();
    out.push(DVec3::new(width, 0.0, b.z));
    out.push(DVec3::new(width, 0.0, far));
    out.push(DVec3::new(-width, 0.0, far));
    out.push(DVec3::new(-width, 0.0, a.z));
    out
}

/// Closes an open curve through the rectangle below it.
pub fn close_below(curve: &[DVec3]) -> Vec<DVec3> {
    close(curve, 3.0, -3.0)
}

/// Closes an open curve through the rectangle above it.
pub fn close_above(curve: &[DVec3]) -> Vec<DVec3> {
    close(curve, 4.0, 4.0)
}

/// The `k`-th shear tried by [`linking_number`].
pub fn shear(k: usize) -> (f64, f64) {
    if k == 0 {
        return (0.0, 0.0);
    }
    let k = k as f64;
    (
        0.03 * ((k * 0.618_033_988_749_895).fract() - 0.5),
        0.03 * ((k * 0.754_877_666_246_693).fract() - 0.5),
    )
}

/// A crossing of the two curves in a diagram.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Crossing {
    pub at: DVec2,
    /// Whether the first curve passes over.
    pub first_over: bool,
    pub sign: i32,
    /// Segment indices on the first and second curve.
    pub segments: (usize, usize),
}

struct Projected {
    p0: DVec3,
    p1: DVec3,
    q0: DVec2,
    q1: DVec2,
    lo: DVec2,
    hi: DVec2,
}

fn project(curve: &[DVec3], s: (f64, f64)) -> Vec<Projected> {
    let n = curve.len();
    (0..n)
        .map(|i| {
            let p0 = curve[i];
            let p1 = curve[(i + 1) % n];
            let q0 = DVec2::new(p0.x - s.0 * p0.y, p0.z - s.1 * p0.y);
            let q1 = DVec2::new(p1.x - s.0 * p1.y, p1.z - s.1 * p1.y);
            Projected {
                p0,
                p1,
                q0,
                q1,
                lo: q0.min(q1),
                hi: q0.max(q1),
            }
        })
        .collect()
}

/// Crossings between two closed curves in the diagram with shear `s`, or
/// `None` when the diagram is not generic.
pub fn crossings(a: &[DVec3], b: &[DVec3], s: (f64, f64)) -> Option<Vec<Crossing>> {
    let pa = project(a, s);
    let pb = project(b, s);
    crossings_between(&pa, &pb, s, |_, _| true)
}

/// Crossings of a closed curve with itself, each reported once with
/// `segments.0 < segments.1`.
pub fn self_crossings(a: &[DVec3], s: (f64, f64)) -> Option<Vec<Crossing>> {
    let pa = project(a, s);
    let n = pa.len();
    crossings_between(&pa, &pa, s, |i, j| j > i + 1 && !(i == 0 && j == n - 1))
}

fn crossings_between(
    pa: &[Projected],
    pb: &[Projected],
    s: (f64, f64),
    keep: impl Fn(usize, usize) -> bool,
) -> Option<Vec<Crossing>> {
    let mut order: Vec<usize> = (0..pb.len()).collect();
    order.sort_by(|&i, &j| pb[i].lo.x.total_cmp(&pb[j].lo.x));
    let view = -DVec3::new(s.0, 1.0, s.1);
    let g = CROSSING_GUARD;
    let mut out = Vec::new();
    for (i, sa) in pa.iter().enumerate() {
        for &j in &order {
            let sb = &pb[j];
            if sb.lo.x > sa.hi.x + g {
                break;
            }
            if !keep(i, j) {
                continue;
            }
            if sb.hi.x < sa.lo.x - g || sb.hi.y < sa.lo.y - g || sb.lo.y > sa.hi.y + g {
                continue;
            }
            let r = sa.q1 - sa.q0;
            let d = sb.q1 - sb.q0;
            let w = sb.q0 - sa.q0;
            let denom = r.perp_dot(d);
            let scale = r.length() * d.length();
            if denom.abs() <= g * scale {
                // parallel: generic only if the lines are apart
                let off = if r.length() > 0.0 { w.perp_dot(r).abs() / r.length() } else { w.length() };
                if off <= g {
                    return None;
                }
                continue;
            }
            let alpha = w.perp_dot(d) / denom;
            let beta = w.perp_dot(r) / denom;
            if alpha < -g || alpha > 1.0 + g || beta < -g || beta > 1.0 + g {
                continue;
            }
            if alpha < g || alpha > 1.0 - g || beta < g || beta > 1.0 - g {
                return None;
            }
            let xa = sa.p0.lerp(sa.p1, alpha);
            let xb = sb.p0.lerp(sb.p1, beta);
            if (xa.y - xb.y).abs() <= g {
                return None;
            }
            let first_over = xa.y < xb.y;
            let (over, under) = if first_over {
                (sa.p1 - sa.p0, sb.p1 - sb.p0)
            } else {
                (sb.p1 - sb.p0, sa.p1 - sa.p0)
            };
            let sign = if over.cross(under).dot(view) > 0.0 { 1 } else { -1 };
            out.push(Crossing {
                at: sa.q0 + r * alpha,
                first_over,
                sign,
                segments: (i, j),
            });
        }
    }
    Some(out)
}

/// Linking number in the diagram with shear `s`, or `None` if that diagram
/// is not generic.
pub fn linking_number_with_shear(a: &[DVec3], b: &[DVec3], s: (f64, f64)) -> Option<i64> {
    let cs = crossings(a, b, s)?;
    let total: i64 = cs.iter().map(|c| c.sign as i64).sum();
    (total % 2 == 0).then_some(total / 2)
}

/// Smallest distance between two closed polylines.
pub fn curve_distance(a: &[DVec3], b: &[DVec3]) -> f64 {
    use super::geom::segment_distance;
    let mut best = f64::INFINITY;
    let (na, nb) = (a.len(), b.len());
    for i in 0..na {
        let (p0, p1) = (a[i], a[(i + 1) % na]);
        let (lo, hi) = (p0.min(p1), p0.max(p1));
        for j in 0..nb {
            let (q0, q1) = (b[j], b[(j + 1) % nb]);
            let gap = (q0.min(q1) - hi).max(lo - q0.max(q1)).max(DVec3::ZERO).length();
            if gap >= best {
                continue;
            }
            best = best.min(segment_distance(p0, p1, q0, q1));
        }
    }
    best
}

/// Half the signed crossing count of the first generic diagram among the
/// shears [`shear`]`(0..)`.
pub fn linking_number(a: &[DVec3], b: &[DVec3]) -> Result<i64, GeometryError> {
    let distance = curve_distance(a, b);
    if distance < CONTACT_DISTANCE {
        return Err(GeometryError::NotDisjoint { distance });
    }
    (0..MAX_SHEAR_ATTEMPTS)
        .find_map(|k| linking_number_with_shear(a, b, shear(k)))
        .ok_or(GeometryError::NoGenericProjection {
            attempts: MAX_SHEAR_ATTEMPTS,
        })
}

/// `lk(core, pushoff)` with the core closed below and the pushoff above.
pub fn tube_framing(tube: &Tube) -> Result<i64, GeometryError> {
    linking_number(&close_below(tube.core()), &close_above(tube.pushoff()))
}

pub fn framing_number(f: &FatKnot) -> Result<i64, GeometryError> {
    tube_framing(&materialize_knot(f, CHORD_TOLERANCE)?)
}

/// `(ω_up, ω_down)`.
pub fn framing_pair(l: &FatLink) -> Result<(i64, i64), GeometryError> {
    let [up, down] = materialize_link(l, CHORD_TOLERANCE)?;
    Ok((tube_framing(&up)?, tube_framing(&down)?))
}

/// `lk` of the two cores, the upper closed above and the lower below.
pub fn tubes_linking(up: &Tube, down: &Tube) -> Result<i64, GeometryError> {
    linking_number(&close_above(up.core()), &close_below(down.core()))
}

pub fn linking_of_strands(l: &FatLink) -> Result<i64, GeometryError> {
    let [up, down] = materialize_link(l, CHORD_TOLERANCE)?;
    tubes_linking(&up, &down)
}

/// Framing pair and strand linking from one materialization.
pub fn link_invariants(l: &FatLink) -> Result<LinkInvariants, GeometryError> {
    let [up, down] = materialize_link(l, CHORD_TOLERANCE)?;
    Ok(LinkInvariants {
        framing: (tube_framing(&up)?, tube_framing(&down)?),
        linking: tubes_linking(&up, &down)?,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct LinkInvariants {
    pub framing: (i64, i64),
    pub linking: i64,
}

pub fn strand_of(tubes: &[Tube; 2], strand: Strand) -> &Tube {
    match strand {
        Strand::Up => &tubes[0],
        Strand::Down => &tubes[1],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pl::knot::{standard_knot, twist};

    fn circle(center: DVec3, u: DVec3, v: DVec3, r: f64, n: usize) -> Vec<DVec3> {
        (0..n)
            .map(|i| {
                let a = std::f64::consts::TAU * i as f64 / n as f64;
                center + r * (a.cos() * u + a.sin() * v)
            })
            .collect()
    }

    #[test]
    fn hopf_pair() {
        let a = circle(DVec3::ZERO, DVec3::X, DVec3::Y, 1.0, 40);
        let b = circle(DVec3::X, DVec3::X, DVec3::Z, 1.0, 40);
        let lk = linking_number(&a, &b).unwrap();
        assert_eq!(lk.abs(), 1);
        let rev: Vec<DVec3> = b.iter().rev().copied().collect();
        assert_eq!(linking_number(&a, &rev).unwrap(), -lk);
        let far = circle(DVec3::new(5.0, 0.0, 0.0), DVec3::X, DVec3::Z, 1.0, 40);
        assert_eq!(linking_number(&a, &far).unwrap(), 0);
    }

    #[test]
    fn lemniscate_crosses_itself_once() {
        let n = 64;
        let curve: Vec<DVec3> = (0..n)
            .map(|i| {
                let t = std::f64::consts::TAU * (i as f64 + 0.5) / n as f64;
                DVec3::new(t.sin(), t.cos(), (2.0 * t).sin())
            })
            .collect();
        let cs = self_crossings(&curve, (0.0, 0.0)).unwrap();
        assert_eq!(cs.len(), 1);
        assert!(cs[0].segments.0 < cs[0].segments.1);
        assert!(cs[0].at.length() < 1e-9);
    }

    #[test]
    fn touching_curves_are_rejected() {
        let a = circle(DVec3::ZERO, DVec3::X, DVec3::Y, 1.0, 4);
        assert!(matches!(linking_number(&a, &a), Err(GeometryError::NotDisjoint { .. })));
    }

    #[test]
    fn twists_have_their_framing() {
        assert_eq!(framing_number(&standard_knot()).unwrap(), 0);
        for n in -3..=3 {
            assert_eq!(framing_number(&twist(n)).unwrap(), n, "twist {n}");
        }
    }

    #[test]
    fn standard_link_invariants() {
        let inv = link_invariants(&FatLink::standard()).unwrap();
        assert_eq!(inv, LinkInvariants { framing: (0, 0), linking: 0 });
    }
}
