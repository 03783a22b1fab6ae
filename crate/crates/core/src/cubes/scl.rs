//! The four-colored Swiss Cheese operad for links.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::config::{almost_disjoint, meets_lower_face, CubeConfig, LittleCube, Mode};
use super::validation::{Clause, ValidationReport};
use crate::error::{CubeError, ParseError};
use crate::perm::Perm;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Color {
    /// The open color, acting on string links.
    O,
    Up,
    Down,
    UpDown,
}

impl Color {
    pub const ALL: [Color; 4] = [Color::O, Color::Up, Color::Down, Color::UpDown];
    pub const CLOSED: [Color; 3] = [Color::Up, Color::Down, Color::UpDown];

    pub fn as_str(self) -> &'static str {
        match self {
            Color::O => "o",
            Color::Up => "up",
            Color::Down => "down",
            Color::UpDown => "updown",
        }
    }

    /// Glyph used in figures.
    pub fn symbol(self) -> &'static str {
        match self {
            Color::O => "o",
            Color::Up => "↑",
            Color::Down => "↓",
            Color::UpDown => "↕",
        }
    }

    pub fn index(self) -> usize {
        match self {
            Color::O => 0,
            Color::Up => 1,
            Color::Down => 2,
            Color::UpDown => 3,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Color {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "o" => Ok(Color::O),
            "up" | "↑" => Ok(Color::Up),
            "down" | "↓" => Ok(Color::Down),
            "updown" | "both" | "↕" => Ok(Color::UpDown),
            other => Err(ParseError::Color(other.to_string())),
        }
    }
}

impl Serialize for Color {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for Color {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `t ∘ᵢ u` on color tuples.
pub fn splice_colors(outer: &[Color], i: usize, inner: &[Color]) -> Vec<Color> {
    let mut out = Vec::with_capacity(outer.len() + inner.len() - 1);
    out.extend_from_slice(&outer[..i]);
    out.extend_from_slice(inner);
    out.extend_from_slice(&outer[i + 1..]);
    out
}

pub fn count_color(colors: &[Color], s: Color) -> usize {
    colors.iter().filter(|&&c| c == s).count()
}

/// An operation of `SCL(t; s)`: a 2-dimensional configuration with input
/// colors `t` and output color `s`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SclElement {
    input_colors: Vec<Color>,
    output_color: Color,
    config: CubeConfig,
}

/// Checks every SCL clause and reports each violation.
pub fn scl_validate(input_colors: &[Color], output_color: Color, config: &CubeConfig) -> ValidationReport {
    let mut report = ValidationReport::default();
    if config.dim() != 2 {
        report.push(Clause::SclDimension, vec![]);
        return report;
    }
    let base = config.validate_as(Mode::Overlapping);
    if !base.is_ok() {
        return base;
    }
    if input_colors.len() != config.arity() {
        report.push(Clause::ColorCount, vec![]);
        return report;
    }
    let cubes = config.cubes();
    let disjoint = |i: usize, j: usize| almost_disjoint(&cubes[i], &cubes[j]).unwrap_or(false);
    if output_color != Color::O {
        let off: Vec<usize> = (0..cubes.len()).filter(|&i| input_colors[i] != output_color).collect();
        if !off.is_empty() {
            report.push(Clause::NonMonochromatic, off);
        }
        for i in 0..cubes.len() {
            for j in i + 1..cubes.len() {
                if !disjoint(i, j) {
                    report.push(Clause::Overlap, vec![i, j]);
                }
            }
        }
        return report;
    }
    for i in 0..cubes.len() {
        if input_colors[i] == Color::O && !meets_lower_face(&cubes[i]) {
            report.push(Clause::LowerFace, vec![i]);
        }
    }
    for i in 0..cubes.len() {
        for j in i + 1..cubes.len() {
            let (a, b) = (input_colors[i], input_colors[j]);
            if (a == Color::O || b == Color::O) && !disjoint(i, j) {
                report.push(Clause::OpenCubeOverlap, vec![i, j]);
            } else if a == b && a != Color::O && !disjoint(i, j) {
                report.push(Clause::SameColorOverlap, vec![i, j]);
            }
        }
    }
    report
}

impl SclElement {
    /// Builds and validates. The stored configuration is declared disjoint
    /// for monochromatic outputs and overlapping for output `o`.
    pub fn new(input_colors: Vec<Color>, output_color: Color, config: CubeConfig) -> Result<Self, CubeError> {
        let report = scl_validate(&input_colors, output_color, &config);
        if !report.is_ok() {
            return Err(CubeError::Invalid(report));
        }
        let mode = if output_color == Color::O {
            Mode::Overlapping
        } else {
            Mode::Disjoint
        };
        let config = CubeConfig::new_unchecked(2, mode, config.cubes().to_vec());
        Ok(SclElement {
            input_colors,
            output_color,
            config,
        })
    }

    /// The unit `1_s`: the identity square with input and output `s`.
    pub fn identity(color: Color) -> Self {
        SclElement::new(vec![color], color, CubeConfig::unit(2, Mode::Disjoint))
            .expect("identity square is valid in every color")
    }

    pub fn input_colors(&self) -> &[Color] {
        &self.input_colors
    }

    pub fn output_color(&self) -> Color {
        self.output_color
    }

    pub fn config(&self) -> &CubeConfig {
        &self.config
    }

    pub fn arity(&self) -> usize {
        self.input_colors.len()
    }

    pub fn validate(&self) -> ValidationReport {
        scl_validate(&self.input_colors, self.output_color, &self.config)
    }

    /// `A ∘ᵢ B` (0-based `i`); requires `B`'s output color to be `tᵢ`.
    pub fn compose_at(&self, i: usize, inner: &SclElement) -> Result<SclElement, CubeError> {
        if i >= self.arity() {
            return Err(CubeError::IndexOutOfRange {
                index: i,
                arity: self.arity(),
            });
        }
        if inner.output_color != self.input_colors[i] {
            return Err(CubeError::ColorMismatch {
                index: i,
                expected: self.input_colors[i].to_string(),
                found: inner.output_color.to_string(),
            });
        }
        let outer = self.config.with_mode_unchecked(Mode::Overlapping);
        let inner_cfg = inner.config.with_mode_unchecked(Mode::Overlapping);
        let config = outer.compose_at(i, &inner_cfg)?;
        let colors = splice_colors(&self.input_colors, i, &inner.input_colors);
        SclElement::new(colors, self.output_color, config)
    }

    pub fn act(&self, sigma: &Perm) -> Result<SclElement, CubeError> {
        let config = self.config.act(sigma)?;
        let colors = (0..self.arity()).map(|i| self.input_colors[sigma.apply(i)]).collect();
        SclElement::new(colors, self.output_color, config)
    }
}

impl CubeConfig {
    pub(crate) fn with_mode_unchecked(&self, mode: Mode) -> CubeConfig {
        CubeConfig::new_unchecked(self.dim(), mode, self.cubes().to_vec())
    }
}

/// Four injections `α_s` regrouping the inputs by color; `α_s` lists the
/// positions of color `s`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ColorSort {
    maps: [Vec<usize>; 4],
}

impl ColorSort {
    /// The canonical sort: positions of each color in increasing order.
    pub fn canonical(colors: &[Color]) -> Self {
        let mut maps: [Vec<usize>; 4] = Default::default();
        for (i, c) in colors.iter().enumerate() {
            maps[c.index()].push(i);
        }
        ColorSort { maps }
    }

    /// Accepts any family of maps whose images partition the positions and
    /// respect colors.
    pub fn from_maps(colors: &[Color], maps: [Vec<usize>; 4]) -> Option<Self> {
        let mut seen = vec![false; colors.len()];
        for c in Color::ALL {
            for &p in &maps[c.index()] {
                if p >= colors.len() || seen[p] || colors[p] != c {
                    return None;
                }
                seen[p] = true;
            }
        }
        seen.iter().all(|&b| b).then_some(ColorSort { maps })
    }

    /// Each `α_s` precomposed with a permutation of its domain.
    pub fn permuted(&self, perms: &[Perm; 4]) -> Self {
        let mut maps: [Vec<usize>; 4] = Default::default();
        for c in Color::ALL {
            let m = &self.maps[c.index()];
            maps[c.index()] = (0..m.len()).map(|i| m[perms[c.index()].apply(i)]).collect();
        }
        ColorSort { maps }
    }

    pub fn alpha(&self, s: Color) -> &[usize] {
        &self.maps[s.index()]
    }

    /// `α_s L`: the cubes of color `s`, in `α_s` order.
    pub fn restrict_config(&self, element: &SclElement, s: Color) -> CubeConfig {
        let cubes: Vec<LittleCube> = self.maps[s.index()]
            .iter()
            .map(|&i| element.config().cube(i).clone())
            .collect();
        let mode = if s == Color::O { Mode::LowerFace } else { Mode::Disjoint };
        CubeConfig::new_unchecked(2, mode, cubes)
    }

    /// `α_s f`: the inputs of color `s`, in `α_s` order.
    pub fn restrict_inputs<'a, T>(&self, inputs: &'a [T], s: Color) -> Vec<&'a T> {
        self.maps[s.index()].iter().map(|&i| &inputs[i]).collect()
    }
}

pub fn color_sort(colors: &[Color]) -> ColorSort {
    ColorSort::canonical(colors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubes::config::projection_pi;
    use crate::rational::Rational;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn sq(x0: Rational, x1: Rational, y0: Rational, y1: Rational) -> LittleCube {
        LittleCube::from_box(&[(x0, x1), (y0, y1)]).unwrap()
    }

    fn over(cubes: Vec<LittleCube>) -> CubeConfig {
        CubeConfig::new(2, Mode::Overlapping, cubes).unwrap()
    }

    #[test]
    fn non_o_output_must_be_monochromatic() {
        let e = SclElement::new(vec![Color::O], Color::Up, CubeConfig::unit(2, Mode::Disjoint));
        match e {
            Err(CubeError::Invalid(report)) => assert!(report.has(Clause::NonMonochromatic)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn single_closed_cube_with_open_output() {
        assert!(SclElement::new(vec![Color::Up], Color::O, CubeConfig::unit(2, Mode::Overlapping)).is_ok());
    }

    #[test]
    fn open_cubes_share_the_lower_face() {
        let a = sq(r(-1, 1), r(1, 2), r(-1, 1), r(0, 1));
        let b = sq(r(0, 1), r(1, 1), r(-1, 1), r(-1, 2));
        let e = SclElement::new(vec![Color::O, Color::O], Color::O, over(vec![a, b]));
        assert!(matches!(e, Err(CubeError::Invalid(rep)) if rep.has(Clause::OpenCubeOverlap)));
    }

    #[test]
    fn closed_cubes_may_overlap_across_colors() {
        let a = sq(r(-1, 1), r(1, 2), r(-1, 2), r(1, 1));
        let b = sq(r(0, 1), r(1, 1), r(-1, 2), r(1, 1));
        assert!(SclElement::new(vec![Color::Up, Color::Down], Color::O, over(vec![a.clone(), b.clone()])).is_ok());
        let same = SclElement::new(vec![Color::Up, Color::Up], Color::O, over(vec![a, b]));
        assert!(matches!(same, Err(CubeError::Invalid(rep)) if rep.has(Clause::SameColorOverlap)));
    }

    fn seven_inputs() -> SclElement {
        use Color::*;
        // ↕, o, ↑, ↕, ↓, o, ↑ ; o-cubes on the floor, others floating
        let cubes = vec![
            sq(r(-1, 1), r(-1, 2), r(0, 1), r(1, 1)),
            sq(r(-1, 1), r(-1, 2), r(-1, 1), r(-1, 2)),
            sq(r(-1, 2), r(0, 1), r(0, 1), r(1, 1)),
            sq(r(-1, 4), r(1, 4), r(-1, 4), r(0, 1)),
            sq(r(0, 1), r(1, 2), r(-1, 4), r(1, 1)),
            sq(r(1, 2), r(1, 1), r(-1, 1), r(-1, 2)),
            sq(r(1, 2), r(1, 1), r(0, 1), r(1, 1)),
        ];
        SclElement::new(vec![UpDown, O, Up, UpDown, Down, O, Up], O, over(cubes)).unwrap()
    }

    fn three_up() -> SclElement {
        let cubes = vec![
            sq(r(-1, 1), r(-1, 3), r(-1, 1), r(1, 1)),
            sq(r(-1, 3), r(1, 3), r(-1, 1), r(1, 1)),
            sq(r(1, 3), r(1, 1), r(-1, 1), r(1, 1)),
        ];
        let cfg = CubeConfig::new(2, Mode::Disjoint, cubes).unwrap();
        SclElement::new(vec![Color::Up; 3], Color::Up, cfg).unwrap()
    }

    #[test]
    fn figure_composition_colors() {
        use Color::*;
        let c = seven_inputs().compose_at(2, &three_up()).unwrap();
        assert_eq!(c.input_colors(), &[UpDown, O, Up, Up, Up, UpDown, Down, O, Up]);
        assert_eq!(c.output_color(), O);
        assert_eq!(c.arity(), 9);
    }

    #[test]
    fn composition_checks_colors() {
        let e = seven_inputs().compose_at(1, &three_up());
        assert!(matches!(e, Err(CubeError::ColorMismatch { .. })));
    }

    #[test]
    fn unit_law() {
        let a = seven_inputs();
        for i in 0..a.arity() {
            let unit = SclElement::identity(a.input_colors()[i]);
            assert_eq!(a.compose_at(i, &unit).unwrap(), a);
        }
        assert_eq!(SclElement::identity(Color::O).compose_at(0, &a).unwrap(), a);
    }

    #[test]
    fn color_sort_enumerates_positions() {
        use Color::*;
        let s = color_sort(&[Up, O, Up]);
        assert_eq!(s.alpha(Up), &[0, 2]);
        assert_eq!(s.alpha(O), &[1]);
        assert!(s.alpha(Down).is_empty() && s.alpha(UpDown).is_empty());
        assert_eq!(color_sort(&[O, O, O]).alpha(O), &[0, 1, 2]);
    }

    #[test]
    fn open_cubes_project_disjointly() {
        let e = seven_inputs();
        let sort = color_sort(e.input_colors());
        let open = sort.restrict_config(&e, Color::O);
        assert!(open.validate().is_ok());
        assert!(projection_pi(&open).unwrap().with_mode(Mode::Disjoint).is_ok());
    }

    #[test]
    fn non_canonical_sorts_are_checked() {
        use Color::*;
        let colors = [Up, O, Up];
        assert!(ColorSort::from_maps(&colors, [vec![1], vec![2, 0], vec![], vec![]]).is_some());
        assert!(ColorSort::from_maps(&colors, [vec![0], vec![2, 1], vec![], vec![]]).is_none());
        assert!(ColorSort::from_maps(&colors, [vec![1], vec![2], vec![], vec![]]).is_none());
    }
}
