//! Named knots and links shipped as presentation files.
//!
//! The files under `data/catalog` are produced by [`generate`]; set
//! `SCL_CATALOG_DIR` to load from another directory.

use std::f64::consts::{PI, TAU};
use std::path::PathBuf;

use glam::DVec3;
use thiserror::Error;

use super::actions::{lambda_act, phi_hat, Fat};
use super::invariants::tube_framing;
use super::knot::FatKnot;
use super::link::FatLink;
use super::presentation::{Presentation, PresentationError, TubeData};
use super::tube::{Boundary, Tube};
use crate::cubes::{Color, CubeConfig, LittleCube, Mode};
use crate::error::GeometryError;
use crate::rational::Rational;

pub const CATALOG_ENV: &str = "SCL_CATALOG_DIR";
pub const NAMES: [&str; 4] = ["trefoil", "figure-eight", "clasp", "split"];

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unknown catalog entry {0:?}")]
    Unknown(String),
    #[error("reading {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("catalog entry {name:?}: {source}")]
    Presentation { name: String, source: PresentationError },
}

/// The shipped text of an entry.
pub fn builtin(name: &str) -> Option<&'static str> {
    Some(match name {
        "trefoil" => include_str!("../../data/catalog/trefoil.json"),
        "figure-eight" => include_str!("../../data/catalog/figure-eight.json"),
        "clasp" => include_str!("../../data/catalog/clasp.json"),
        "split" => include_str!("../../data/catalog/split.json"),
        _ => return None,
    })
}

/// Reads an entry, from `$SCL_CATALOG_DIR/<name>.json` when set.
pub fn catalog_text(name: &str) -> Result<String, CatalogError> {
    if let Some(dir) = std::env::var_os(CATALOG_ENV) {
        let path = PathBuf::from(dir).join(format!("{name}.json"));
        return std::fs::read_to_string(&path).map_err(|source| CatalogError::Io { path, source });
    }
    builtin(name)
        .map(str::to_string)
        .ok_or_else(|| CatalogError::Unknown(name.to_string()))
}

pub fn load(name: &str) -> Result<Fat, CatalogError> {
    let text = catalog_text(name)?;
    super::presentation::parse_presentation(&text).map_err(|source| CatalogError::Presentation {
        name: name.to_string(),
        source,
    })
}

pub fn load_knot(name: &str) -> Result<FatKnot, CatalogError> {
    match load(name)? {
        Fat::Knot(k) => Ok(k),
        Fat::Link(_) => Err(kind_error(name, "knot")),
    }
}

pub fn load_link(name: &str) -> Result<FatLink, CatalogError> {
    match load(name)? {
        Fat::Link(l) => Ok(l),
        Fat::Knot(_) => Err(kind_error(name, "link")),
    }
}

fn kind_error(name: &str, expected: &'static str) -> CatalogError {
    CatalogError::Presentation {
        name: name.to_string(),
        source: GeometryError::KindMismatch { index: 0, expected }.into(),
    }
}

/// A core route with radii and parameters; twisting is confined to
/// `twist_span`.
struct Route {
    params: Vec<f64>,
    core: Vec<DVec3>,
    radii: Vec<f64>,
    twist_span: (f64, f64),
}

fn tangents(core: &[DVec3]) -> Vec<DVec3> {
    let n = core.len();
    (0..n)
        .map(|i| {
            if i == 0 || i == n - 1 {
                DVec3::X
            } else {
                (core[i + 1] - core[i - 1]).normalize()
            }
        })
        .collect()
}

/// Rotation minimizing normals by double reflection, starting from `e_z`.
fn transported_normals(core: &[DVec3], tangents: &[DVec3]) -> Vec<DVec3> {
    let mut normals = vec![DVec3::Z];
    for i in 0..core.len() - 1 {
        let (r, t) = (normals[i], tangents[i]);
        let v1 = core[i + 1] - core[i];
        let c1 = v1.dot(v1);
        let rl = r - (2.0 / c1) * v1.dot(r) * v1;
        let tl = t - (2.0 / c1) * v1.dot(t) * v1;
        let v2 = tangents[i + 1] - tl;
        let c2 = v2.dot(v2);
        let next = if c2 > 0.0 { rl - (2.0 / c2) * v2.dot(rl) * v2 } else { rl };
        let next = next - next.dot(tangents[i + 1]) * tangents[i + 1];
        normals.push(next.normalize());
    }
    normals
}

fn framed_tube(route: &Route, boundary: Boundary, turns: i64) -> Result<Tube, GeometryError> {
    let ts = tangents(&route.core);
    let normals = transported_normals(&route.core, &ts);
    let end = normals[normals.len() - 1];
    let alpha = (-end.y).atan2(end.z);
    let total = TAU * turns as f64 - alpha;
    let (a, b) = route.twist_span;
    let pushoff = (0..route.core.len())
        .map(|i| {
            let u = ((route.params[i] - a) / (b - a)).clamp(0.0, 1.0);
            let beta = total * u;
            let n = normals[i] * beta.cos() + ts[i].cross(normals[i]) * beta.sin();
            route.core[i] + route.radii[i] * n
        })
        .collect();
    Tube::new(route.params.clone(), route.core.clone(), pushoff, boundary)
}

/// The tube along `route` whose pushoff closes up with framing zero.
fn zero_framed(route: &Route, boundary: Boundary) -> Result<Tube, GeometryError> {
    let first = framed_tube(route, boundary, 0)?;
    let w = tube_framing(&first)?;
    if w == 0 {
        return Ok(first);
    }
    framed_tube(route, boundary, -w)
}

const KNOT_RADIUS: f64 = 0.02;
const LIFT: f64 = 0.6;
const KNOT_SAMPLES: usize = 240;

fn segment(a: DVec3, b: DVec3, steps: usize) -> impl Iterator<Item = DVec3> {
    (1..=steps).map(move |i| a.lerp(b, i as f64 / steps as f64))
}

/// A long knot from a closed curve: cut near the top point `curve(top)`,
/// lift both ends above the curve and run them out to `x = ±1`.
fn long_knot(curve: impl Fn(f64) -> DVec3, top: f64, cut: f64) -> Result<Tube, GeometryError> {
    let forward = curve(top + cut).x < curve(top - cut).x;
    let s_at = |u: f64| {
        if forward {
            top + cut + u * (TAU - 2.0 * cut)
        } else {
            top - cut - u * (TAU - 2.0 * cut)
        }
    };
    let knot: Vec<DVec3> = (0..=KNOT_SAMPLES).map(|i| curve(s_at(i as f64 / KNOT_SAMPLES as f64))).collect();
    let (p1, p2) = (knot[0], knot[KNOT_SAMPLES]);
    let (a1, a2) = (DVec3::new(p1.x, p1.y, LIFT), DVec3::new(p2.x, p2.y, LIFT));
    let cone = [-1.0, -0.99, -0.98, -0.97];
    let mut core: Vec<DVec3> = cone.iter().map(|&x| DVec3::new(x, 0.0, 0.0)).collect();
    let push = |to: DVec3, steps: usize, core: &mut Vec<DVec3>| {
        let from = *core.last().expect("nonempty");
        core.extend(segment(from, to, steps));
    };
    push(DVec3::new(-0.9, 0.0, 0.0), 2, &mut core);
    push(DVec3::new(-0.85, p1.y, LIFT), 8, &mut core);
    push(a1, 12, &mut core);
    push(p1, 6, &mut core);
    core.extend(knot[1..].iter().copied());
    push(a2, 6, &mut core);
    push(DVec3::new(0.85, p2.y, LIFT), 12, &mut core);
    push(DVec3::new(0.9, 0.0, 0.0), 8, &mut core);
    push(DVec3::new(0.97, 0.0, 0.0), 2, &mut core);
    core.extend(cone.iter().rev().skip(1).map(|&x| DVec3::new(-x, 0.0, 0.0)));

    let n = core.len();
    let mut arc = vec![0.0];
    for w in core[3..n - 3].windows(2) {
        arc.push(arc.last().copied().unwrap_or(0.0) + (w[1] - w[0]).length());
    }
    let total = *arc.last().expect("nonempty");
    let mut params: Vec<f64> = cone.to_vec();
    params.extend(arc[1..arc.len() - 1].iter().map(|s| -0.97 + 1.94 * s / total));
    params.extend(cone.iter().rev().map(|x| -x));
    let cone_radius = |x: f64| KNOT_RADIUS + (1.0 - KNOT_RADIUS) * ((x.abs() - 0.97) / 0.03).max(0.0);
    let radii = params.iter().map(|&t| cone_radius(t)).collect();
    zero_framed(
        &Route {
            params,
            core,
            radii,
            twist_span: (-0.97, 0.97),
        },
        Boundary::KNOT,
    )
}

fn scaled(p: DVec3) -> DVec3 {
    DVec3::new(0.18 * p.x, 0.18 * p.y, 0.2 * p.z)
}

pub fn trefoil() -> Result<Tube, GeometryError> {
    long_knot(
        |s| scaled(DVec3::new(s.sin() + 2.0 * (2.0 * s).sin(), s.cos() - 2.0 * (2.0 * s).cos(), -(3.0 * s).sin())),
        PI / 2.0,
        0.15,
    )
}

pub fn figure_eight() -> Result<Tube, GeometryError> {
    long_knot(
        |s| {
            let r = 2.0 + (2.0 * s).cos();
            scaled(DVec3::new(r * (3.0 * s).cos(), r * (3.0 * s).sin(), (4.0 * s).sin()))
        },
        PI / 8.0,
        0.08,
    )
}

const CLASP_RADIUS: f64 = 0.05;
const CLASP_HELIX: f64 = 0.25;

/// Upper strand winding once around a straight lower strand.
pub fn clasp() -> Result<[Tube; 2], GeometryError> {
    let mut core: Vec<DVec3> = [-1.0, -0.75, -0.5, -0.35, -0.3].iter().map(|&x| DVec3::new(x, 0.0, 0.5)).collect();
    let start = DVec3::new(-0.15, 0.0, -0.5 + CLASP_HELIX);
    core.extend(segment(core[4], start, 12));
    let turns = 96;
    for i in 1..=turns {
        let phi = TAU * i as f64 / turns as f64;
        let x = -0.15 + 0.3 * i as f64 / turns as f64;
        core.push(DVec3::new(x, CLASP_HELIX * phi.sin(), -0.5 + CLASP_HELIX * phi.cos()));
    }
    let end = *core.last().expect("nonempty");
    core.extend(segment(end, DVec3::new(0.3, 0.0, 0.5), 12));
    core.extend([0.35, 0.5, 0.75, 1.0].iter().map(|&x| DVec3::new(x, 0.0, 0.5)));
    let params: Vec<f64> = core.iter().map(|p| p.x).collect();
    let radius = |x: f64| {
        let u = ((x.abs() - 0.35) / 0.15).clamp(0.0, 1.0);
        CLASP_RADIUS + (0.125 - CLASP_RADIUS) * u
    };
    let radii = params.iter().map(|&t| radius(t)).collect();
    let up = zero_framed(
        &Route {
            params,
            core,
            radii,
            twist_span: (-0.35, 0.35),
        },
        Boundary::UPPER,
    )?;
    let down = Tube::new(
        vec![-1.0, 1.0],
        vec![DVec3::new(-1.0, 0.0, -0.5), DVec3::new(1.0, 0.0, -0.5)],
        vec![DVec3::new(-1.0, 0.0, -0.375), DVec3::new(1.0, 0.0, -0.375)],
        Boundary::LOWER,
    )?;
    Ok([up, down])
}

/// `λ` of two half intervals on `φ̂^↑(trefoil)` and `φ̂^↓(figure-eight)`.
pub fn split() -> Result<FatLink, GeometryError> {
    let half = |a: i64, b: i64| LittleCube::from_box(&[(Rational::from_integer(a), Rational::from_integer(b))]);
    let config = CubeConfig::new(1, Mode::Disjoint, vec![half(-1, 0)?, half(0, 1)?])?;
    let a = phi_hat(Color::Up, &FatKnot::from_tube(trefoil()?)?)?;
    let b = phi_hat(Color::Down, &FatKnot::from_tube(figure_eight()?)?)?;
    lambda_act(&config, &[&a, &b])
}

/// Recomputes an entry from its construction.
pub fn generate(name: &str) -> Result<Presentation, CatalogError> {
    let geometry = |e: GeometryError| CatalogError::Presentation {
        name: name.to_string(),
        source: e.into(),
    };
    match name {
        "trefoil" => Ok(Presentation::Knot(TubeData::from_tube(&trefoil().map_err(geometry)?))),
        "figure-eight" => Ok(Presentation::Knot(TubeData::from_tube(&figure_eight().map_err(geometry)?))),
        "clasp" => {
            let [up, down] = clasp().map_err(geometry)?;
            Ok(Presentation::Link {
                upper: TubeData::from_tube(&up),
                lower: TubeData::from_tube(&down),
            })
        }
        "split" => Presentation::of_link(&split().map_err(geometry)?).map_err(geometry),
        other => Err(CatalogError::Unknown(other.to_string())),
    }
}
