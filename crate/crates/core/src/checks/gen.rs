//! Random exact configurations with coordinates in `(1/64)ℤ`.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::cubes::{Color, CubeConfig, LittleCube, Mode, SclElement};
use crate::perm::Perm;
use crate::rational::Rational;

pub const DENOMINATOR: i64 = 64;
const ATTEMPTS: usize = 64;

/// Largest side, in units of `1/64`, tried at the given attempt.
fn max_side(attempt: usize) -> i64 {
    (2 * DENOMINATOR >> (attempt / 8)).max(2)
}

fn side(rng: &mut impl Rng, max: i64, at_bottom: bool) -> (Rational, Rational) {
    let len = rng.gen_range(1..=max);
    let lo = if at_bottom {
        -DENOMINATOR
    } else {
        rng.gen_range(-DENOMINATOR..=DENOMINATOR - len)
    };
    (Rational::new(lo, DENOMINATOR), Rational::new(lo + len, DENOMINATOR))
}

fn random_cube(rng: &mut impl Rng, dim: usize, max: i64, lower_face: bool) -> LittleCube {
    let sides: Vec<_> = (0..dim).map(|axis| side(rng, max, lower_face && axis + 1 == dim)).collect();
    LittleCube::from_box(&sides).expect("sides lie in J")
}

/// Cube `i` of `k` side-by-side full height slabs.
fn slot(dim: usize, i: usize, k: usize) -> LittleCube {
    let w = 2 * DENOMINATOR / k as i64;
    let lo = -DENOMINATOR + i as i64 * w;
    let mut sides = vec![(Rational::new(lo, DENOMINATOR), Rational::new(lo + w, DENOMINATOR))];
    sides.extend((1..dim).map(|_| (Rational::from_integer(-1), Rational::from_integer(1))));
    LittleCube::from_box(&sides).expect("slots lie in J")
}

/// `k` side-by-side full height slabs.
pub(crate) fn slabs(dim: usize, k: usize, mode: Mode) -> CubeConfig {
    CubeConfig::new(dim, mode, (0..k).map(|i| slot(dim, i, k)).collect()).expect("slabs are disjoint")
}

/// A random valid configuration. Sizes shrink as attempts are rejected, and
/// side-by-side slabs are used if every attempt fails.
pub fn gen_config(rng: &mut impl Rng, dim: usize, arity: usize, mode: Mode) -> CubeConfig {
    assert!(arity <= DENOMINATOR as usize, "arity too large for the grid");
    let lower = mode == Mode::LowerFace;
    for attempt in 0..ATTEMPTS {
        let cubes = (0..arity).map(|_| random_cube(rng, dim, max_side(attempt), lower)).collect();
        if let Ok(c) = CubeConfig::new(dim, mode, cubes) {
            return c;
        }
    }
    slabs(dim, arity, mode)
}

/// A random element of `SCL(colors; output)`.
pub fn gen_scl_with_colors(rng: &mut impl Rng, colors: Vec<Color>, output: Color) -> SclElement {
    let k = colors.len();
    for attempt in 0..ATTEMPTS {
        let cubes = colors
            .iter()
            .map(|&c| random_cube(rng, 2, max_side(attempt), c == Color::O))
            .collect();
        let config = CubeConfig::new(2, Mode::Overlapping, cubes).expect("little cubes");
        if let Ok(e) = SclElement::new(colors.clone(), output, config) {
            return e;
        }
    }
    let cubes = (0..k).map(|i| slot(2, i, k)).collect();
    let config = CubeConfig::new(2, Mode::Overlapping, cubes).expect("little cubes");
    SclElement::new(colors, output, config).expect("slabs satisfy every color clause")
}

/// Random colors when the output is `o`, monochromatic otherwise.
pub fn gen_scl(rng: &mut impl Rng, arity: usize, output: Color) -> SclElement {
    let colors = if output == Color::O {
        (0..arity).map(|_| *Color::ALL.choose(rng).expect("nonempty")).collect()
    } else {
        vec![output; arity]
    };
    gen_scl_with_colors(rng, colors, output)
}

pub fn gen_perm(rng: &mut impl Rng, n: usize) -> Perm {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    Perm::new(v).expect("a shuffle is a permutation")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checks::trial_rng;
    use crate::cubes::meets_lower_face;

    #[test]
    fn generated_configs_validate() {
        for t in 0..200 {
            let mut rng = trial_rng(7, "gen", t);
            let k = t % 7;
            for (dim, mode) in [(1, Mode::Disjoint), (2, Mode::Disjoint), (2, Mode::LowerFace), (2, Mode::Overlapping)] {
                let c = gen_config(&mut rng, dim, k, mode);
                assert_eq!(c.arity(), k);
                assert!(c.validate().is_ok());
                if mode == Mode::LowerFace {
                    assert!(c.cubes().iter().all(meets_lower_face));
                }
                for cube in c.cubes() {
                    for f in cube.factors() {
                        let (lo, hi) = f.image();
                        let bound = num_bigint::BigInt::from(64);
                        assert!(*lo.denom() <= bound && *hi.denom() <= bound);
                    }
                }
            }
            let output = Color::ALL[t % 4];
            let e = gen_scl(&mut rng, k.min(5), output);
            assert!(e.validate().is_ok());
        }
        assert_eq!(gen_config(&mut trial_rng(0, "gen", 0), 2, 0, Mode::Disjoint).arity(), 0);
    }

    #[test]
    fn slabs_cover_the_fallback() {
        let c = CubeConfig::new(2, Mode::LowerFace, (0..6).map(|i| slot(2, i, 6)).collect()).unwrap();
        assert_eq!(c.arity(), 6);
    }
}
