//! Adaptive sampling of lazy knots and links into tubes.

use glam::DVec3;

use super::knot::FatKnot;
use super::link::{FatLink, Strand};
use super::tube::{Boundary, Tube};
use crate::error::GeometryError;

/// Chord error bound used when materializing.
pub const CHORD_TOLERANCE: f64 = 1e-4;
const UNIFORM_SEEDS: usize = 64;
const MIN_STEP: f64 = 1e-7;

fn seed_grid(breakpoints: Vec<f64>) -> Vec<f64> {
    let mut grid: Vec<f64> = (0..=UNIFORM_SEEDS)
        .map(|i| -1.0 + 2.0 * i as f64 / UNIFORM_SEEDS as f64)
        .chain(breakpoints.into_iter().filter(|t| *t > -1.0 && *t < 1.0))
        .collect();
    grid.sort_by(f64::total_cmp);
    grid.dedup_by(|a, b| (*a - *b).abs() < MIN_STEP);
    *grid.first_mut().expect("nonempty") = -1.0;
    *grid.last_mut().expect("nonempty") = 1.0;
    grid
}

/// Samples `t ↦ curves(t)` on `[-1, 1]`, refining each interval until every
/// curve stays within `tol` of its chord at the quarter points.
fn sample<const N: usize>(
    breakpoints: Vec<f64>,
    tol: f64,
    curves: impl Fn(f64) -> Result<[DVec3; N], GeometryError>,
) -> Result<(Vec<f64>, Vec<[DVec3; N]>), GeometryError> {
    let grid = seed_grid(breakpoints);
    let mut params = vec![grid[0]];
    let mut values = vec![curves(grid[0])?];
    for &b in &grid[1..] {
        let vb = curves(b)?;
        let mut stack = vec![(b, vb)];
        while let Some(&(hi, vhi)) = stack.last() {
            let lo = *params.last().expect("nonempty");
            let vlo = *values.last().expect("nonempty");
            let mut worst: f64 = 0.0;
            for s in [0.25, 0.5, 0.75] {
                let v = curves(lo + s * (hi - lo))?;
                for k in 0..N {
                    worst = worst.max((v[k] - vlo[k].lerp(vhi[k], s)).length());
                }
            }
            if worst > tol && hi - lo > MIN_STEP {
                let mid = 0.5 * (lo + hi);
                stack.push((mid, curves(mid)?));
            } else {
                params.push(hi);
                values.push(vhi);
                stack.pop();
            }
        }
    }
    Ok((params, values))
}

fn strip_repeats<const N: usize>(params: Vec<f64>, values: Vec<[DVec3; N]>) -> (Vec<f64>, Vec<[DVec3; N]>) {
    let mut p_out: Vec<f64> = Vec::with_capacity(params.len());
    let mut v_out: Vec<[DVec3; N]> = Vec::with_capacity(values.len());
    let last = params.len() - 1;
    for (i, (t, v)) in params.into_iter().zip(values).enumerate() {
        if let Some(prev) = v_out.last() {
            if (0..N).any(|k| prev[k] == v[k]) {
                if i == last {
                    p_out.pop();
                    v_out.pop();
                } else {
                    continue;
                }
            }
        }
        p_out.push(t);
        v_out.push(v);
    }
    (p_out, v_out)
}

fn to_tube(params: Vec<f64>, values: Vec<[DVec3; 2]>, boundary: Boundary) -> Result<Tube, GeometryError> {
    let (params, values) = strip_repeats(params, values);
    let core = values.iter().map(|v| v[0]).collect();
    let pushoff = values.iter().map(|v| v[1]).collect();
    Tube::new(params, core, pushoff, boundary)
}

/// The core `f(t, (0,0))` and pushoff `f(t, (0,1))` of a knot as a tube.
pub fn materialize_knot(f: &FatKnot, tol: f64) -> Result<Tube, GeometryError> {
    let (params, values) = sample(f.breakpoints(), tol, |t| {
        Ok([f.map(DVec3::new(t, 0.0, 0.0))?, f.map(DVec3::new(t, 0.0, 1.0))?])
    })?;
    to_tube(params, values, Boundary::KNOT)
}

pub fn materialize_strand(f: &FatLink, strand: Strand, tol: f64) -> Result<Tube, GeometryError> {
    let (params, values) = sample(f.breakpoints(strand), tol, |t| {
        Ok([
            f.map(strand, DVec3::new(t, 0.0, 0.0))?,
            f.map(strand, DVec3::new(t, 0.0, 1.0))?,
        ])
    })?;
    to_tube(params, values, strand.boundary())
}

/// Both strands, upper first.
pub fn materialize_link(f: &FatLink, tol: f64) -> Result<[Tube; 2], GeometryError> {
    Ok([materialize_strand(f, Strand::Up, tol)?, materialize_strand(f, Strand::Down, tol)?])
}

/// Deterministic sample points `(t, x)` covering `J` and a neighborhood,
/// with disc points on the center, the boundary and inside.
pub fn sample_points() -> Vec<(f64, [f64; 2])> {
    let discs = [
        [0.0, 0.0],
        [0.0, 1.0],
        [1.0, 0.0],
        [-0.6, 0.8],
        [0.3, -0.4],
        [-0.5, -0.5],
    ];
    let mut out = Vec::new();
    for i in 0..=200 {
        let t = -1.05 + 2.1 * i as f64 / 200.0;
        for x in discs {
            out.push((t, x));
        }
    }
    out
}

/// Largest distance between two knots over [`sample_points`].
pub fn knot_deviation(f: &FatKnot, g: &FatKnot) -> Result<f64, GeometryError> {
    let mut worst: f64 = 0.0;
    for (t, x) in sample_points() {
        let p = DVec3::new(t, x[0], x[1]);
        worst = worst.max((f.map(p)? - g.map(p)?).length());
    }
    Ok(worst)
}

/// Largest distance between two links over [`sample_points`] on both strands.
pub fn link_deviation(f: &FatLink, g: &FatLink) -> Result<f64, GeometryError> {
    let mut worst: f64 = 0.0;
    for strand in Strand::BOTH {
        for (t, x) in sample_points() {
            let p = DVec3::new(t, x[0], x[1]);
            worst = worst.max((f.map(strand, p)? - g.map(strand, p)?).length());
        }
    }
    Ok(worst)
}
