//! Sampled embeddedness diagnostics for materialized tubes.
//!
//! Near a closest pair of core points the tube is modelled by the two discs
//! orthogonal to the core segments, with radii interpolated from the
//! vertices. A disc reaches towards the other point by `ρ·sin θ`, where `θ`
//! is the angle between its segment and the connecting direction. Pairs on
//! one tube closer along the core than twice their radii are skipped. The
//! checks are at sampled resolution only.

use glam::DVec3;
use serde::Serialize;

use super::geom::segment_closest;
use super::knot::FatKnot;
use super::link::FatLink;
use super::sample::{materialize_knot, materialize_link, CHORD_TOLERANCE};
use super::tube::Tube;
use crate::error::GeometryError;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DiagnosticReport {
    pub vertices: usize,
    pub chord_tolerance: f64,
    pub min_frame_radius: f64,
    /// Smallest gap between the discs at far-apart points of one tube.
    pub self_clearance: Option<f64>,
    /// Smallest distance between the two cores of a link.
    pub cross_distance: Option<f64>,
    /// Smallest gap between the discs of the two strands of a link.
    pub cross_clearance: Option<f64>,
    pub certified: bool,
}

struct Segments<'a> {
    core: &'a [DVec3],
    radii: Vec<f64>,
    /// Arc length at each vertex.
    arc: Vec<f64>,
}

impl<'a> Segments<'a> {
    fn new(tube: &'a Tube) -> Self {
        let core = tube.core();
        let mut arc = vec![0.0];
        for w in core.windows(2) {
            arc.push(arc.last().copied().unwrap_or(0.0) + (w[1] - w[0]).length());
        }
        Segments {
            core,
            radii: tube.radii(),
            arc,
        }
    }

    fn len(&self) -> usize {
        self.core.len() - 1
    }

    fn bounds(&self, i: usize) -> (DVec3, DVec3) {
        let (a, b) = (self.core[i], self.core[i + 1]);
        (a.min(b), a.max(b))
    }

    fn max_radius(&self, i: usize) -> f64 {
        self.radii[i].max(self.radii[i + 1])
    }

    fn at(&self, i: usize, s: f64) -> (DVec3, f64, f64) {
        let lerp = |a: f64, b: f64| a + s * (b - a);
        (
            self.core[i].lerp(self.core[i + 1], s),
            lerp(self.radii[i], self.radii[i + 1]),
            lerp(self.arc[i], self.arc[i + 1]),
        )
    }

    fn direction(&self, i: usize) -> DVec3 {
        (self.core[i + 1] - self.core[i]).normalize_or_zero()
    }
}

fn gap(a: (DVec3, DVec3), b: (DVec3, DVec3)) -> f64 {
    (b.0 - a.1).max(a.0 - b.1).max(DVec3::ZERO).length()
}

fn reach(radius: f64, tangent: DVec3, towards: DVec3) -> f64 {
    let c = tangent.dot(towards);
    radius * (1.0 - c * c).max(0.0).sqrt()
}

#[derive(Default)]
struct Clearance {
    clearance: Option<f64>,
    distance: Option<f64>,
}

fn clearance(a: &Segments, b: &Segments, same: bool) -> Clearance {
    let mut out = Clearance::default();
    for i in 0..a.len() {
        let bi = a.bounds(i);
        for j in 0..b.len() {
            if same && j <= i + 1 {
                continue;
            }
            let g = gap(bi, b.bounds(j));
            let bound = g - a.max_radius(i) - b.max_radius(j);
            if out.clearance.is_some_and(|c| bound >= c) && (same || out.distance.is_some_and(|d| g >= d)) {
                continue;
            }
            let (s, t) = segment_closest(a.core[i], a.core[i + 1], b.core[j], b.core[j + 1]);
            let (p, rp, ap) = a.at(i, s);
            let (q, rq, aq) = b.at(j, t);
            if same && (aq - ap).abs() <= 2.0 * (rp + rq) {
                continue;
            }
            let d = (q - p).length();
            let w = (q - p).normalize_or_zero();
            let c = d - reach(rp, a.direction(i), w) - reach(rq, b.direction(j), w);
            out.clearance = Some(out.clearance.map_or(c, |x| x.min(c)));
            out.distance = Some(out.distance.map_or(d, |x| x.min(d)));
        }
    }
    out
}

fn self_clearance(s: &Segments) -> Option<f64> {
    clearance(s, s, true).clearance
}

fn tube_report(tube: &Tube) -> DiagnosticReport {
    let s = Segments::new(tube);
    let min_frame_radius = tube.radii().into_iter().fold(f64::INFINITY, f64::min);
    let self_clearance = self_clearance(&s);
    DiagnosticReport {
        vertices: tube.params().len(),
        chord_tolerance: CHORD_TOLERANCE,
        min_frame_radius,
        self_clearance,
        cross_distance: None,
        cross_clearance: None,
        certified: min_frame_radius > 0.0 && self_clearance.is_none_or(|c| c > 0.0),
    }
}

pub fn tube_diagnostics(tube: &Tube) -> DiagnosticReport {
    tube_report(tube)
}

pub fn tubes_diagnostics(up: &Tube, down: &Tube) -> DiagnosticReport {
    let (a, b) = (tube_report(up), tube_report(down));
    let cross = clearance(&Segments::new(up), &Segments::new(down), false);
    let (cross_clearance, cross_distance) = (cross.clearance, cross.distance);
    let self_clearance = match (a.self_clearance, b.self_clearance) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, y) => x.or(y),
    };
    DiagnosticReport {
        vertices: a.vertices + b.vertices,
        chord_tolerance: CHORD_TOLERANCE,
        min_frame_radius: a.min_frame_radius.min(b.min_frame_radius),
        self_clearance,
        cross_distance,
        cross_clearance,
        certified: a.certified && b.certified && cross_clearance.is_none_or(|c| c > 0.0),
    }
}

pub fn knot_diagnostics(f: &FatKnot) -> Result<DiagnosticReport, GeometryError> {
    Ok(tube_report(&materialize_knot(f, CHORD_TOLERANCE)?))
}

pub fn link_diagnostics(l: &FatLink) -> Result<DiagnosticReport, GeometryError> {
    let [up, down] = materialize_link(l, CHORD_TOLERANCE)?;
    Ok(tubes_diagnostics(&up, &down))
}
