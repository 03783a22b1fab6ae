//! Tubes given by a core polyline and a pushoff polyline on a shared
//! parameter grid.

use glam::DVec3;

use crate::error::GeometryError;

const FRAME_EPS: f64 = 1e-9;
const END_EPS: f64 = 1e-9;

/// The disc a tube must agree with outside `J`: center `(y, z)` and radius.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Boundary {
    pub center: [f64; 2],
    pub radius: f64,
}

impl Boundary {
    pub const KNOT: Boundary = Boundary {
        center: [0.0, 0.0],
        radius: 1.0,
    };
    pub const UPPER: Boundary = Boundary {
        center: [0.0, 0.5],
        radius: 0.125,
    };
    pub const LOWER: Boundary = Boundary {
        center: [0.0, -0.5],
        radius: 0.125,
    };

    pub fn apply(&self, p: DVec3) -> DVec3 {
        DVec3::new(
            p.x,
            self.center[0] + self.radius * p.y,
            self.center[1] + self.radius * p.z,
        )
    }

    pub fn core_at(&self, t: f64) -> DVec3 {
        DVec3::new(t, self.center[0], self.center[1])
    }

    pub fn pushoff_at(&self, t: f64) -> DVec3 {
        DVec3::new(t, self.center[0], self.center[1] + self.radius)
    }
}

/// A tube: `(t, x) ↦ c(t) + ρ(t)(x₁n₂(t) + x₂n₁(t))` where `n₁` points from
/// the core to the pushoff, `ρ` is their distance and `n₂ = n₁ × T`.
#[derive(Clone, Debug, PartialEq)]
pub struct Tube {
    params: Vec<f64>,
    core: Vec<DVec3>,
    pushoff: Vec<DVec3>,
    tangents: Vec<DVec3>,
    boundary: Boundary,
}

fn invalid(msg: impl Into<String>) -> GeometryError {
    GeometryError::Presentation(msg.into())
}

fn frame(c: DVec3, p: DVec3, tangent: DVec3, t: f64) -> Result<(f64, DVec3, DVec3), GeometryError> {
    let d = p - c;
    let rho = d.length();
    if !(rho > FRAME_EPS) {
        return Err(GeometryError::DegenerateFrame { t });
    }
    let n1 = d / rho;
    let cross = n1.cross(tangent);
    let len = cross.length();
    if !(len > FRAME_EPS) {
        return Err(GeometryError::DegenerateFrame { t });
    }
    Ok((rho, n1, cross / len))
}

impl Tube {
    pub fn new(params: Vec<f64>, core: Vec<DVec3>, pushoff: Vec<DVec3>, boundary: Boundary) -> Result<Tube, GeometryError> {
        let n = params.len();
        if n < 2 || core.len() != n || pushoff.len() != n {
            return Err(invalid("core and pushoff need the same grid of at least two rows"));
        }
        if params[0] != -1.0 || params[n - 1] != 1.0 {
            return Err(invalid("the parameter grid must start at -1 and end at 1"));
        }
        if params.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(invalid("parameters must be strictly increasing"));
        }
        if core.iter().chain(&pushoff).any(|p| !p.is_finite()) {
            return Err(invalid("coordinates must be finite"));
        }
        for (i, t) in [(0, -1.0), (n - 1, 1.0)] {
            if (core[i] - boundary.core_at(t)).length() > END_EPS || (pushoff[i] - boundary.pushoff_at(t)).length() > END_EPS {
                return Err(invalid(format!("endpoint rows at t={t} do not match the standard embedding")));
            }
        }
        let mut core = core;
        let mut pushoff = pushoff;
        core[0] = boundary.core_at(-1.0);
        core[n - 1] = boundary.core_at(1.0);
        pushoff[0] = boundary.pushoff_at(-1.0);
        pushoff[n - 1] = boundary.pushoff_at(1.0);
        if core.windows(2).any(|w| w[0] == w[1]) || pushoff.windows(2).any(|w| w[0] == w[1]) {
            return Err(invalid("consecutive vertices must be distinct"));
        }
        for p in &core[1..n - 1] {
            if !(p.x > -1.0 && p.x < 1.0 && p.y * p.y + p.z * p.z < 1.0) {
                return Err(invalid(format!("core vertex {p:?} leaves the open cylinder")));
            }
        }
        for p in &pushoff[1..n - 1] {
            if !(p.x >= -1.0 && p.x <= 1.0 && (p.y * p.y + p.z * p.z).sqrt() <= 1.0 + END_EPS) {
                return Err(invalid(format!("pushoff vertex {p:?} leaves the cylinder")));
            }
        }
        let mut tangents = Vec::with_capacity(n);
        for i in 0..n {
            let t = if i == 0 || i == n - 1 {
                DVec3::X
            } else {
                let d = core[i + 1] - core[i - 1];
                if d.length() > 0.0 { d } else { core[i + 1] - core[i] }.normalize()
            };
            frame(core[i], pushoff[i], t, params[i])?;
            tangents.push(t);
        }
        Ok(Tube {
            params,
            core,
            pushoff,
            tangents,
            boundary,
        })
    }

    pub fn params(&self) -> &[f64] {
        &self.params
    }

    pub fn core(&self) -> &[DVec3] {
        &self.core
    }

    pub fn pushoff(&self) -> &[DVec3] {
        &self.pushoff
    }

    pub fn boundary(&self) -> Boundary {
        self.boundary
    }

    /// Tube radius at each vertex.
    pub fn radii(&self) -> Vec<f64> {
        self.core.iter().zip(&self.pushoff).map(|(c, p)| (*p - *c).length()).collect()
    }

    /// The map on `ℝ × ℝ²`, written as points `(t, x₁, x₂)`.
    pub fn map(&self, p: DVec3) -> Result<DVec3, GeometryError> {
        let t = p.x;
        if !(t > -1.0 && t < 1.0) {
            return Ok(self.boundary.apply(p));
        }
        let j = self.params.partition_point(|&s| s <= t).clamp(1, self.params.len() - 1) - 1;
        let (t0, t1) = (self.params[j], self.params[j + 1]);
        let s = (t - t0) / (t1 - t0);
        let c = self.core[j].lerp(self.core[j + 1], s);
        let q = self.pushoff[j].lerp(self.pushoff[j + 1], s);
        let tangent = self.tangents[j].lerp(self.tangents[j + 1], s);
        let len = tangent.length();
        if !(len > FRAME_EPS) {
            return Err(GeometryError::DegenerateFrame { t });
        }
        let (rho, n1, n2) = frame(c, q, tangent / len, t)?;
        Ok(c + rho * (p.y * n2 + p.z * n1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn straight(boundary: Boundary, n: usize) -> Tube {
        let params: Vec<f64> = (0..=n).map(|i| -1.0 + 2.0 * i as f64 / n as f64).collect();
        let core = params.iter().map(|&t| boundary.core_at(t)).collect();
        let pushoff = params.iter().map(|&t| boundary.pushoff_at(t)).collect();
        Tube::new(params, core, pushoff, boundary).unwrap()
    }

    #[test]
    fn straight_tube_is_the_boundary_map() {
        for b in [Boundary::KNOT, Boundary::UPPER, Boundary::LOWER] {
            let tube = straight(b, 5);
            for p in [DVec3::new(0.3, 0.2, -0.7), DVec3::new(-0.99, 1.0, 0.0), DVec3::new(2.0, 0.1, 0.1)] {
                assert!((tube.map(p).unwrap() - b.apply(p)).length() < 1e-15);
            }
        }
    }

    #[test]
    fn core_and_pushoff_are_recovered() {
        let params = vec![-1.0, -0.5, 0.0, 0.5, 1.0];
        let core = vec![
            DVec3::new(-1.0, 0.0, 0.0),
            DVec3::new(-0.5, 0.1, 0.0),
            DVec3::new(0.0, 0.2, 0.1),
            DVec3::new(0.5, 0.0, 0.1),
            DVec3::new(1.0, 0.0, 0.0),
        ];
        let pushoff: Vec<DVec3> = core.iter().map(|c| *c + DVec3::new(0.0, 0.0, 0.2)).collect::<Vec<_>>();
        let mut pushoff = pushoff;
        pushoff[0] = DVec3::new(-1.0, 0.0, 1.0);
        pushoff[4] = DVec3::new(1.0, 0.0, 1.0);
        let tube = Tube::new(params.clone(), core.clone(), pushoff.clone(), Boundary::KNOT).unwrap();
        for (i, &t) in params.iter().enumerate() {
            assert!((tube.map(DVec3::new(t, 0.0, 0.0)).unwrap() - core[i]).length() < 1e-12);
            assert!((tube.map(DVec3::new(t, 0.0, 1.0)).unwrap() - pushoff[i]).length() < 1e-12);
        }
    }

    #[test]
    fn rejects_bad_tubes() {
        let ok = straight(Boundary::KNOT, 2);
        let mut core = ok.core().to_vec();
        core[1] = DVec3::new(0.0, 0.0, 0.0);
        let mut pushoff = ok.pushoff().to_vec();
        pushoff[1] = core[1];
        assert!(Tube::new(ok.params().to_vec(), core.clone(), pushoff, Boundary::KNOT).is_err());
        let mut bad_end = ok.core().to_vec();
        bad_end[0] = DVec3::new(-1.0, 0.5, 0.0);
        assert!(Tube::new(ok.params().to_vec(), bad_end, ok.pushoff().to_vec(), Boundary::KNOT).is_err());
        assert!(Tube::new(vec![-1.0, 1.0, 0.5], core.clone(), core, Boundary::KNOT).is_err());
        // pushoff along the tangent
        let mut along = ok.pushoff().to_vec();
        along[1] = DVec3::new(0.5, 0.0, 0.0);
        assert!(matches!(
            Tube::new(ok.params().to_vec(), ok.core().to_vec(), along, Boundary::KNOT),
            Err(GeometryError::DegenerateFrame { .. })
        ));
    }
}
