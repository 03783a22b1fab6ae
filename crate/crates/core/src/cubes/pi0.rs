use serde::{Deserialize, Serialize};

use super::config::{CubeConfig, Mode};
use super::scl::{Color, SclElement};
use crate::error::CubeError;
use crate::rational::Rational;

/// Label of the connected component of a configuration.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "kind", content = "order")]
pub enum Pi0Class {
    /// The component space is connected.
    Point,
    /// Cube indices listed left to right along the first axis.
    Permutation(Vec<usize>),
}

impl Pi0Class {
    pub fn order(&self) -> Option<&[usize]> {
        match self {
            Pi0Class::Point => None,
            Pi0Class::Permutation(o) => Some(o),
        }
    }
}

fn left_to_right(config: &CubeConfig, indices: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut keyed: Vec<(Rational, usize)> = indices
        .map(|i| (config.cube(i).factor(0).image().0, i))
        .collect();
    keyed.sort();
    keyed.into_iter().map(|(_, i)| i).collect()
}

/// Component of a little-cubes configuration: the left-to-right order in
/// dimension 1, a point in dimension 2 and above.
pub fn pi0_class(config: &CubeConfig) -> Result<Pi0Class, CubeError> {
    let report = config.validate_as(Mode::Disjoint);
    if !report.is_ok() {
        return Err(CubeError::Invalid(report));
    }
    if config.dim() == 1 {
        Ok(Pi0Class::Permutation(left_to_right(config, 0..config.arity())))
    } else {
        Ok(Pi0Class::Point)
    }
}

/// Component of an SCL operation: the left-to-right order of its `o`-colored
/// cubes for output `o`, a point otherwise.
pub fn pi0_class_scl(element: &SclElement) -> Result<Pi0Class, CubeError> {
    let report = element.validate();
    if !report.is_ok() {
        return Err(CubeError::Invalid(report));
    }
    if element.output_color() != Color::O {
        return Ok(Pi0Class::Point);
    }
    let colors = element.input_colors();
    Ok(Pi0Class::Permutation(left_to_right(
        element.config(),
        (0..colors.len()).filter(|&i| colors[i] == Color::O),
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubes::LittleCube;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn intervals(bounds: &[(Rational, Rational)]) -> CubeConfig {
        let cubes = bounds
            .iter()
            .map(|b| LittleCube::from_box(std::slice::from_ref(b)).unwrap())
            .collect();
        CubeConfig::new(1, Mode::Disjoint, cubes).unwrap()
    }

    #[test]
    fn ordered_and_swapped_intervals() {
        let ordered = intervals(&[(r(-1, 1), r(0, 1)), (r(0, 1), r(1, 1))]);
        assert_eq!(pi0_class(&ordered).unwrap(), Pi0Class::Permutation(vec![0, 1]));
        let swapped = intervals(&[(r(0, 1), r(1, 1)), (r(-1, 1), r(0, 1))]);
        assert_eq!(pi0_class(&swapped).unwrap(), Pi0Class::Permutation(vec![1, 0]));
    }

    #[test]
    fn planar_configurations_are_connected() {
        assert_eq!(pi0_class(&CubeConfig::unit(2, Mode::Disjoint)).unwrap(), Pi0Class::Point);
    }

    #[test]
    fn invalid_configurations_are_rejected() {
        let cubes = vec![LittleCube::identity(1), LittleCube::identity(1)];
        let c = CubeConfig::new(1, Mode::Overlapping, cubes).unwrap();
        assert!(pi0_class(&c).is_err());
    }
}
