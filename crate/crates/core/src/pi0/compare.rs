//! Components of free cube-operad algebras against free algebras over the
//! component operads.
//!
//! Configurations are enumerated from a grid of boxes, labelled by
//! generators, sent to their component and canonicalized. The resulting set
//! of classes must be exactly the free algebra over the component operad, and
//! composing grid representatives must agree with composing components.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::free::{canonicalize, enumerate_free, FreeElement, FreeModel, Generators};
use super::operad::{As, Com, ComponentOperad, Pi0Scl, SclComponent};
use crate::cubes::{pi0_class, pi0_class_scl, Color, CubeConfig, LittleCube, Mode, Pi0Class, SclElement};
use crate::error::CubeError;
use crate::rational::Rational;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Pi0Comparison {
    pub operad: String,
    pub configurations: usize,
    pub components: usize,
    pub free_classes: usize,
    pub normal_forms: usize,
    pub bijective: bool,
    pub compositions_checked: usize,
    pub composition_mismatches: usize,
}

impl Pi0Comparison {
    pub fn ok(&self) -> bool {
        self.bijective && self.composition_mismatches == 0
    }
}

fn grid_intervals(points: &[Rational]) -> Vec<(Rational, Rational)> {
    let mut out = Vec::new();
    for (i, a) in points.iter().enumerate() {
        for b in &points[i + 1..] {
            out.push((a.clone(), b.clone()));
        }
    }
    out
}

/// Boxes whose sides join points of a uniform grid with `steps[axis]` cells.
fn grid_cubes(steps: &[i64]) -> Vec<LittleCube> {
    let mut boxes: Vec<Vec<(Rational, Rational)>> = vec![Vec::new()];
    for &n in steps {
        let points: Vec<Rational> = (0..=n).map(|i| Rational::new(2 * i - n, n)).collect();
        let intervals = grid_intervals(&points);
        boxes = boxes
            .iter()
            .flat_map(|b| {
                intervals.iter().map(move |iv| {
                    let mut b = b.clone();
                    b.push(iv.clone());
                    b
                })
            })
            .collect();
    }
    boxes
        .iter()
        .map(|b| LittleCube::from_box(b).expect("grid boxes are little"))
        .collect()
}

fn cube_tuples(cubes: &[LittleCube], k: usize) -> Vec<Vec<LittleCube>> {
    (0..k).fold(vec![Vec::new()], |acc, _| {
        acc.iter()
            .flat_map(|p| {
                cubes.iter().map(move |c| {
                    let mut p = p.clone();
                    p.push(c.clone());
                    p
                })
            })
            .collect()
    })
}

fn label_tuples(gens: &Generators, colors: &[Color]) -> Vec<Vec<String>> {
    colors.iter().fold(vec![Vec::new()], |acc, &c| {
        acc.iter()
            .flat_map(|p| {
                gens.of(c).iter().map(move |l| {
                    let mut p = p.clone();
                    p.push(l.clone());
                    p
                })
            })
            .collect()
    })
}

/// Grid configurations up to `max_arity`,
/// keeping only those valid in `mode`.
fn grid_configs(steps: &[i64], mode: Mode, max_arity: usize) -> Vec<CubeConfig> {
    let dim = steps.len();
    let cubes = grid_cubes(steps);
    let mut out = Vec::new();
    for k in 0..=max_arity {
        for t in cube_tuples(&cubes, k) {
            if let Ok(c) = CubeConfig::new(dim, mode, t) {
                out.push(c);
            }
        }
    }
    out
}

fn finish<O: FreeModel>(
    operad: &O,
    gens: &Generators,
    configurations: usize,
    classes: BTreeSet<(Color, FreeElement<O::Op>)>,
    max_arity: usize,
) -> Pi0Comparison {
    let mut free_classes = 0;
    let mut normal_forms = 0;
    let mut bijective = true;
    for &s in operad.colors() {
        let free = enumerate_free(operad, gens, s, max_arity);
        let nfs = operad.normal_forms(gens, s, max_arity);
        let ours: BTreeSet<FreeElement<O::Op>> =
            classes.iter().filter(|(c, _)| *c == s).map(|(_, e)| e.clone()).collect();
        let images: BTreeSet<_> = ours.iter().map(|e| operad.normal_form(e)).collect();
        bijective &= ours == free && images == nfs && images.len() == ours.len();
        free_classes += free.len();
        normal_forms += nfs.len();
    }
    Pi0Comparison {
        operad: operad.name().to_string(),
        configurations,
        components: classes.len(),
        free_classes,
        normal_forms,
        bijective,
        ..Default::default()
    }
}

/// Composes one representative configuration per component and compares
/// with composition of the components.
fn check_compositions<R, Op: Eq>(
    reps: &[(Op, R)],
    compose_geo: impl Fn(&R, usize, &R) -> Result<Option<Op>, CubeError>,
    compose_sym: impl Fn(&Op, usize, &Op) -> Option<Op>,
    arity: impl Fn(&Op) -> usize,
    report: &mut Pi0Comparison,
) {
    for (a, ra) in reps {
        for (b, rb) in reps {
            for i in 0..arity(a) {
                let Some(sym) = compose_sym(a, i, b) else { continue };
                report.compositions_checked += 1;
                match compose_geo(ra, i, rb) {
                    Ok(Some(geo)) if geo == sym => {}
                    _ => report.composition_mismatches += 1,
                }
            }
        }
    }
}

fn order_of(class: Pi0Class) -> Vec<usize> {
    class.order().map(<[usize]>::to_vec).unwrap_or_default()
}

/// Little intervals over `gens`: components are words.
pub fn pi0_of_free_c1(gens: &Generators, max_arity: usize) -> Result<Pi0Comparison, CubeError> {
    let configs = grid_configs(&[4], Mode::Disjoint, max_arity);
    let mut classes = BTreeSet::new();
    let mut reps: BTreeMap<Vec<usize>, CubeConfig> = BTreeMap::new();
    for c in &configs {
        let op = order_of(pi0_class(c)?);
        for x in label_tuples(gens, &vec![Color::O; c.arity()]) {
            classes.insert((Color::O, canonicalize(&As, &FreeElement { op: op.clone(), inputs: x })));
        }
        reps.entry(op).or_insert_with(|| c.clone());
    }
    let mut report = finish(&As, gens, configs.len(), classes, max_arity);
    let reps: Vec<_> = reps.into_iter().collect();
    check_compositions(
        &reps,
        |a, i, b| Ok(Some(order_of(pi0_class(&a.compose_at(i, b)?)?))),
        |a, i, b| As.compose_at(a, i, b).ok(),
        Vec::len,
        &mut report,
    );
    Ok(report)
}

/// Little squares over `gens`: each arity is connected.
pub fn pi0_of_free_c2(gens: &Generators, max_arity: usize) -> Result<Pi0Comparison, CubeError> {
    let configs = grid_configs(&[2, 2], Mode::Disjoint, max_arity);
    let mut classes = BTreeSet::new();
    let mut reps: BTreeMap<usize, CubeConfig> = BTreeMap::new();
    for c in &configs {
        if pi0_class(c)? != Pi0Class::Point {
            return Ok(Pi0Comparison {
                operad: Com.name().to_string(),
                ..Default::default()
            });
        }
        for x in label_tuples(gens, &vec![Color::O; c.arity()]) {
            classes.insert((Color::O, canonicalize(&Com, &FreeElement { op: c.arity(), inputs: x })));
        }
        reps.entry(c.arity()).or_insert_with(|| c.clone());
    }
    let mut report = finish(&Com, gens, configs.len(), classes, max_arity);
    let reps: Vec<_> = reps.into_iter().collect();
    check_compositions(
        &reps,
        |a, i, b| {
            let c = a.compose_at(i, b)?;
            Ok((pi0_class(&c)? == Pi0Class::Point).then_some(c.arity()))
        },
        |a, i, b| Com.compose_at(a, i, b).ok(),
        |a| *a,
        &mut report,
    );
    Ok(report)
}

fn scl_component(e: &SclElement) -> Result<SclComponent, CubeError> {
    Ok(SclComponent {
        inputs: e.input_colors().to_vec(),
        output: e.output_color(),
        open_order: order_of(pi0_class_scl(e)?),
    })
}

fn sorted_colors(k: usize) -> Vec<Vec<Color>> {
    (0..k).fold(vec![Vec::new()], |acc, _| {
        acc.iter()
            .flat_map(|p: &Vec<Color>| {
                Color::ALL
                    .iter()
                    .filter(move |&&c| p.last().is_none_or(|&l| l <= c))
                    .map(move |&c| {
                        let mut p = p.clone();
                        p.push(c);
                        p
                    })
            })
            .collect()
    })
}

/// Swiss Cheese squares with mixed colors over `gens`.
pub fn pi0_of_free_scl(gens: &Generators, max_arity: usize) -> Result<Pi0Comparison, CubeError> {
    let cubes = grid_cubes(&[max_arity.max(1) as i64, 2]);
    let mut classes = BTreeSet::new();
    let mut reps: BTreeMap<SclComponent, SclElement> = BTreeMap::new();
    let mut configurations = 0;
    for k in 0..=max_arity {
        let tuples = cube_tuples(&cubes, k);
        for colors in sorted_colors(k) {
            for &output in &Color::ALL {
                if output != Color::O && colors.iter().any(|&c| c != output) {
                    continue;
                }
                for t in &tuples {
                    let config = CubeConfig::new(2, Mode::Overlapping, t.clone())?;
                    let Ok(e) = SclElement::new(colors.clone(), output, config) else { continue };
                    configurations += 1;
                    let op = scl_component(&e)?;
                    for x in label_tuples(gens, &colors) {
                        classes.insert((output, canonicalize(&Pi0Scl, &FreeElement { op: op.clone(), inputs: x })));
                    }
                    reps.entry(op).or_insert(e);
                }
            }
        }
    }
    let mut report = finish(&Pi0Scl, gens, configurations, classes, max_arity);
    let reps: Vec<_> = reps.into_iter().collect();
    check_compositions(
        &reps,
        |a, i, b| Ok(Some(scl_component(&a.compose_at(i, b)?)?)),
        |a, i, b| Pi0Scl.compose_at(a, i, b).ok(),
        |a| a.inputs.len(),
        &mut report,
    );
    Ok(report)
}
