//! JSON presentations of knots and links as tube data.
//!
//! ```json
//! {"kind":"knot","core":[[t,x,y,z],...],"pushoff":[[t,x,y,z],...]}
//! {"kind":"link","upper":{"core":..,"pushoff":..},"lower":{..}}
//! ```

use glam::DVec3;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::actions::Fat;
use super::knot::FatKnot;
use super::link::FatLink;
use super::sample::{materialize_knot, materialize_link, CHORD_TOLERANCE};
use super::tube::{Boundary, Tube};
use crate::error::GeometryError;

#[derive(Debug, Error)]
pub enum PresentationError {
    #[error("parse error: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("invalid presentation: {0}")]
    Invalid(#[from] GeometryError),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TubeData {
    pub core: Vec<[f64; 4]>,
    pub pushoff: Vec<[f64; 4]>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Presentation {
    Knot(TubeData),
    Link { upper: TubeData, lower: TubeData },
}

impl TubeData {
    pub fn from_tube(tube: &Tube) -> Self {
        let rows = |pts: &[DVec3]| -> Vec<[f64; 4]> {
            tube.params().iter().zip(pts).map(|(&t, p)| [t, p.x, p.y, p.z]).collect()
        };
        TubeData {
            core: rows(tube.core()),
            pushoff: rows(tube.pushoff()),
        }
    }

    pub fn to_tube(&self, boundary: Boundary) -> Result<Tube, GeometryError> {
        if self.core.len() != self.pushoff.len() || self.core.iter().zip(&self.pushoff).any(|(a, b)| a[0] != b[0]) {
            return Err(GeometryError::Presentation("core and pushoff must share a parameter grid".into()));
        }
        let params = self.core.iter().map(|r| r[0]).collect();
        let pts = |rows: &[[f64; 4]]| rows.iter().map(|r| DVec3::new(r[1], r[2], r[3])).collect();
        Tube::new(params, pts(&self.core), pts(&self.pushoff), boundary)
    }
}

impl Presentation {
    pub fn parse(text: &str) -> Result<Self, PresentationError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("presentations serialize");
        s.push('\n');
        s
    }

    pub fn to_fat(&self) -> Result<Fat, GeometryError> {
        match self {
            Presentation::Knot(d) => Ok(Fat::Knot(FatKnot::from_tube(d.to_tube(Boundary::KNOT)?)?)),
            Presentation::Link { upper, lower } => Ok(Fat::Link(FatLink::from_tubes(
                upper.to_tube(Boundary::UPPER)?,
                lower.to_tube(Boundary::LOWER)?,
            )?)),
        }
    }

    pub fn of_knot(f: &FatKnot) -> Result<Self, GeometryError> {
        Ok(Presentation::Knot(TubeData::from_tube(&materialize_knot(f, CHORD_TOLERANCE)?)))
    }

    pub fn of_link(l: &FatLink) -> Result<Self, GeometryError> {
        let [up, down] = materialize_link(l, CHORD_TOLERANCE)?;
        Ok(Presentation::Link {
            upper: TubeData::from_tube(&up),
            lower: TubeData::from_tube(&down),
        })
    }

    pub fn of_fat(x: &Fat) -> Result<Self, GeometryError> {
        match x {
            Fat::Knot(k) => Self::of_knot(k),
            Fat::Link(l) => Self::of_link(l),
        }
    }
}

/// Parses and validates a presentation.
pub fn parse_presentation(text: &str) -> Result<Fat, PresentationError> {
    Ok(Presentation::parse(text)?.to_fat()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pl::actions::phi_hat;
    use crate::pl::knot::twist;
    use crate::cubes::Color;

    #[test]
    fn knot_round_trip() {
        let p = Presentation::of_knot(&twist(1)).unwrap();
        let text = p.to_json();
        let q = Presentation::parse(&text).unwrap();
        assert_eq!(p, q);
        assert_eq!(q.to_json(), text);
        let Fat::Knot(k) = q.to_fat().unwrap() else { panic!() };
        assert_eq!(Presentation::of_knot(&k).unwrap().to_fat().is_ok(), true);
    }

    #[test]
    fn link_round_trip() {
        let p = Presentation::of_link(&phi_hat(Color::UpDown, &twist(1)).unwrap()).unwrap();
        let q = Presentation::parse(&p.to_json()).unwrap();
        assert_eq!(p, q);
        assert!(matches!(q.to_fat().unwrap(), Fat::Link(_)));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_presentation("{"), Err(PresentationError::Parse(_))));
        assert!(matches!(
            parse_presentation(r#"{"kind":"knot","core":[],"pushoff":[],"extra":1}"#),
            Err(PresentationError::Parse(_))
        ));
        let bad_end = r#"{"kind":"knot","core":[[-1,-1,0,0],[1,1,0,0.5]],"pushoff":[[-1,-1,0,1],[1,1,0,1]]}"#;
        assert!(matches!(parse_presentation(bad_end), Err(PresentationError::Invalid(_))));
        let ok = r#"{"kind":"knot","core":[[-1,-1,0,0],[1,1,0,0]],"pushoff":[[-1,-1,0,1],[1,1,0,1]]}"#;
        assert!(matches!(parse_presentation(ok), Ok(Fat::Knot(_))));
        let grids = r#"{"kind":"knot","core":[[-1,-1,0,0],[1,1,0,0]],"pushoff":[[-1,-1,0,1],[0.5,0.5,0,1],[1,1,0,1]]}"#;
        assert!(matches!(parse_presentation(grids), Err(PresentationError::Invalid(_))));
    }
}
