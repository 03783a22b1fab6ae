//! The component operads: `Com`, `As` and `π₀SCL`.

use std::fmt::Debug;

use itertools::Itertools;
use serde::Serialize;

use crate::cubes::{count_color, splice_colors, Color};
use crate::error::AlgebraError;
use crate::perm::Perm;

/// A discrete colored operad with finitely many operations per profile.
/// Uncolored operads use `Color::O` as their only color.
pub trait ComponentOperad {
    type Op: Clone + Ord + Debug;

    fn name(&self) -> &'static str;
    fn colors(&self) -> &'static [Color];
    fn inputs(&self, op: &Self::Op) -> Vec<Color>;
    fn output(&self, op: &Self::Op) -> Color;
    /// Right action: input `i` of the result is input `σ(i)` of `op`.
    fn act(&self, op: &Self::Op, sigma: &Perm) -> Self::Op;
    fn compose_at(&self, a: &Self::Op, i: usize, b: &Self::Op) -> Result<Self::Op, AlgebraError>;
    fn unit(&self, color: Color) -> Self::Op;
    /// Every operation with the given profile.
    fn operations(&self, inputs: &[Color], output: Color) -> Vec<Self::Op>;

    /// `a(b₁, .., bₙ)`, substituting from the last input down so earlier
    /// indices stay put.
    fn compose_all(&self, a: &Self::Op, inner: &[Self::Op]) -> Result<Self::Op, AlgebraError> {
        let arity = self.inputs(a).len();
        if inner.len() != arity {
            return Err(AlgebraError::IndexOutOfRange {
                index: inner.len(),
                arity,
            });
        }
        let mut out = a.clone();
        for (i, b) in inner.iter().enumerate().rev() {
            out = self.compose_at(&out, i, b)?;
        }
        Ok(out)
    }
}

/// Block substitution on orderings: `σ` lists input indices left to right;
/// entry `i` is replaced by the block `τ` shifted to `i`, and larger entries
/// move up by `|τ| - 1`.
pub fn as_compose(sigma: &[usize], i: usize, tau: &[usize]) -> Result<Vec<usize>, AlgebraError> {
    if i >= sigma.len() {
        return Err(AlgebraError::IndexOutOfRange {
            index: i,
            arity: sigma.len(),
        });
    }
    Ok(substitute_block(sigma, i, tau, tau.len()))
}

fn substitute_block(order: &[usize], i: usize, block: &[usize], inner_arity: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(order.len() + block.len());
    for &e in order {
        if e < i {
            out.push(e);
        } else if e == i {
            out.extend(block.iter().map(|&b| b + i));
        } else {
            out.push(e + inner_arity - 1);
        }
    }
    out
}

/// Right action on orderings: the entry `e` becomes `σ⁻¹(e)`.
fn act_on_order(order: &[usize], sigma: &Perm) -> Vec<usize> {
    let inv = sigma.inverse();
    order.iter().map(|&e| inv.apply(e)).collect()
}

/// One point in every arity.
#[derive(Clone, Copy, Debug, Default)]
pub struct Com;

/// Orderings of the inputs.
#[derive(Clone, Copy, Debug, Default)]
pub struct As;

/// Components of the Swiss Cheese operad for links.
#[derive(Clone, Copy, Debug, Default)]
pub struct Pi0Scl;

impl ComponentOperad for Com {
    type Op = usize;

    fn name(&self) -> &'static str {
        "Com"
    }
    fn colors(&self) -> &'static [Color] {
        &[Color::O]
    }
    fn inputs(&self, op: &usize) -> Vec<Color> {
        vec![Color::O; *op]
    }
    fn output(&self, _: &usize) -> Color {
        Color::O
    }
    fn act(&self, op: &usize, _: &Perm) -> usize {
        *op
    }
    fn compose_at(&self, a: &usize, i: usize, b: &usize) -> Result<usize, AlgebraError> {
        if i >= *a {
            return Err(AlgebraError::IndexOutOfRange { index: i, arity: *a });
        }
        Ok(a + b - 1)
    }
    fn unit(&self, _: Color) -> usize {
        1
    }
    fn operations(&self, inputs: &[Color], output: Color) -> Vec<usize> {
        if output == Color::O && inputs.iter().all(|&c| c == Color::O) {
            vec![inputs.len()]
        } else {
            Vec::new()
        }
    }
}

impl ComponentOperad for As {
    type Op = Vec<usize>;

    fn name(&self) -> &'static str {
        "As"
    }
    fn colors(&self) -> &'static [Color] {
        &[Color::O]
    }
    fn inputs(&self, op: &Vec<usize>) -> Vec<Color> {
        vec![Color::O; op.len()]
    }
    fn output(&self, _: &Vec<usize>) -> Color {
        Color::O
    }
    fn act(&self, op: &Vec<usize>, sigma: &Perm) -> Vec<usize> {
        act_on_order(op, sigma)
    }
    fn compose_at(&self, a: &Vec<usize>, i: usize, b: &Vec<usize>) -> Result<Vec<usize>, AlgebraError> {
        as_compose(a, i, b)
    }
    fn unit(&self, _: Color) -> Vec<usize> {
        vec![0]
    }
    fn operations(&self, inputs: &[Color], output: Color) -> Vec<Vec<usize>> {
        if output == Color::O && inputs.iter().all(|&c| c == Color::O) {
            Perm::all(inputs.len()).map(Vec::from).collect()
        } else {
            Vec::new()
        }
    }
}

/// A component of `SCL(t; s)`: a point when `s ≠ o`, otherwise the
/// left-to-right ordering of the `o`-colored inputs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SclComponent {
    pub inputs: Vec<Color>,
    pub output: Color,
    pub open_order: Vec<usize>,
}

impl SclComponent {
    pub fn new(inputs: Vec<Color>, output: Color, open_order: Vec<usize>) -> Result<Self, AlgebraError> {
        if output != Color::O {
            if inputs.iter().any(|&c| c != output) {
                return Err(AlgebraError::EmptyComponent);
            }
            if !open_order.is_empty() {
                return Err(AlgebraError::ColorMismatch("closed output carries an ordering".into()));
            }
        } else {
            let mut open: Vec<usize> = (0..inputs.len()).filter(|&i| inputs[i] == Color::O).collect();
            let mut given = open_order.clone();
            given.sort_unstable();
            open.sort_unstable();
            if given != open {
                return Err(AlgebraError::ColorMismatch(
                    "ordering must list exactly the o-colored inputs".into(),
                ));
            }
        }
        Ok(SclComponent {
            inputs,
            output,
            open_order,
        })
    }
}

impl ComponentOperad for Pi0Scl {
    type Op = SclComponent;

    fn name(&self) -> &'static str {
        "Pi0SCL"
    }
    fn colors(&self) -> &'static [Color] {
        &Color::ALL
    }
    fn inputs(&self, op: &SclComponent) -> Vec<Color> {
        op.inputs.clone()
    }
    fn output(&self, op: &SclComponent) -> Color {
        op.output
    }
    fn act(&self, op: &SclComponent, sigma: &Perm) -> SclComponent {
        SclComponent {
            inputs: (0..op.inputs.len()).map(|i| op.inputs[sigma.apply(i)]).collect(),
            output: op.output,
            open_order: act_on_order(&op.open_order, sigma),
        }
    }
    fn compose_at(&self, a: &SclComponent, i: usize, b: &SclComponent) -> Result<SclComponent, AlgebraError> {
        if i >= a.inputs.len() {
            return Err(AlgebraError::IndexOutOfRange {
                index: i,
                arity: a.inputs.len(),
            });
        }
        if a.inputs[i] != b.output {
            return Err(AlgebraError::ColorMismatch(format!(
                "input {i} has color {}, inner output is {}",
                a.inputs[i], b.output
            )));
        }
        let open_order = if a.output == Color::O {
            substitute_block(&a.open_order, i, &b.open_order, b.inputs.len())
        } else {
            Vec::new()
        };
        Ok(SclComponent {
            inputs: splice_colors(&a.inputs, i, &b.inputs),
            output: a.output,
            open_order,
        })
    }
    fn unit(&self, color: Color) -> SclComponent {
        SclComponent {
            inputs: vec![color],
            output: color,
            open_order: if color == Color::O { vec![0] } else { Vec::new() },
        }
    }
    fn operations(&self, inputs: &[Color], output: Color) -> Vec<SclComponent> {
        if output != Color::O {
            if inputs.iter().all(|&c| c == output) {
                return vec![SclComponent {
                    inputs: inputs.to_vec(),
                    output,
                    open_order: Vec::new(),
                }];
            }
            return Vec::new();
        }
        let open: Vec<usize> = (0..inputs.len()).filter(|&i| inputs[i] == Color::O).collect();
        let k = count_color(inputs, Color::O);
        open.iter()
            .copied()
            .permutations(k)
            .map(|order| SclComponent {
                inputs: inputs.to_vec(),
                output,
                open_order: order,
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn as_units() {
        for s in Perm::all(3) {
            let s: Vec<usize> = s.into();
            assert_eq!(as_compose(&[0], 0, &s).unwrap(), s);
            for i in 0..3 {
                assert_eq!(as_compose(&s, i, &[0]).unwrap(), s);
            }
        }
        assert!(as_compose(&[0, 1], 2, &[0]).is_err());
    }

    #[test]
    fn as_block_expansion() {
        assert_eq!(as_compose(&[1, 0], 0, &[0, 1]).unwrap(), vec![2, 0, 1]);
        assert_eq!(as_compose(&[0, 1], 1, &[1, 0]).unwrap(), vec![0, 2, 1]);
        assert_eq!(as_compose(&[1, 0, 2], 1, &[]).unwrap(), vec![0, 1]);
    }

    #[test]
    fn as_orderings_invert_rank_composition() {
        // orderings and ranks are inverse permutations; the two compositions agree
        for s in Perm::all(3) {
            for t in Perm::all(2) {
                for i in 0..3 {
                    let ranks = s.compose_at(i, &t);
                    let orders = as_compose(s.inverse().images(), i, t.inverse().images()).unwrap();
                    assert_eq!(ranks.inverse().images(), orders.as_slice());
                }
            }
        }
    }

    fn check_laws<O: ComponentOperad>(op: &O, max: usize) {
        let colors = op.colors();
        let mut tuples: Vec<Vec<Color>> = vec![Vec::new()];
        let mut layer: Vec<Vec<Color>> = vec![Vec::new()];
        for _ in 0..max {
            layer = layer
                .iter()
                .flat_map(|t| colors.iter().map(move |&c| [t.as_slice(), &[c]].concat()))
                .collect();
            tuples.extend(layer.iter().cloned());
        }
        let profiles: Vec<(Vec<Color>, Color)> = tuples
            .iter()
            .flat_map(|t| colors.iter().map(move |&s| (t.clone(), s)))
            .collect();
        let ops: Vec<O::Op> = profiles.iter().flat_map(|(t, s)| op.operations(t, *s)).collect();
        for a in &ops {
            let n = op.inputs(a).len();
            for i in 0..n {
                let u = op.unit(op.inputs(a)[i]);
                assert_eq!(&op.compose_at(a, i, &u).unwrap(), a);
            }
            assert_eq!(&op.compose_at(&op.unit(op.output(a)), 0, a).unwrap(), a);
            for s in Perm::all(n) {
                for t in Perm::all(n) {
                    assert_eq!(op.act(&op.act(a, &s), &t), op.act(a, &s.then_after(&t)));
                }
            }
        }
        for a in &ops {
            for b in &ops {
                let ta = op.inputs(a);
                for i in 0..ta.len() {
                    if op.output(b) != ta[i] {
                        continue;
                    }
                    let ab = op.compose_at(a, i, b).unwrap();
                    let tb = op.inputs(b);
                    // equivariance in the outer slot
                    for s in Perm::all(ta.len()) {
                        if ta[s.apply(i)] != op.output(b) {
                            continue;
                        }
                        let lhs = op.compose_at(&op.act(a, &s), i, b).unwrap();
                        let rhs = op.act(
                            &op.compose_at(a, s.apply(i), b).unwrap(),
                            &s.compose_at(i, &Perm::identity(tb.len())),
                        );
                        assert_eq!(lhs, rhs);
                    }
                    for c in &ops {
                        for j in 0..tb.len() {
                            if op.output(c) == tb[j] {
                                let lhs = op.compose_at(&ab, i + j, c).unwrap();
                                let rhs = op.compose_at(a, i, &op.compose_at(b, j, c).unwrap()).unwrap();
                                assert_eq!(lhs, rhs);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn com_laws() {
        check_laws(&Com, 4);
    }

    #[test]
    fn as_laws() {
        check_laws(&As, 3);
    }

    #[test]
    fn scl_component_laws() {
        check_laws(&Pi0Scl, 2);
    }

    #[test]
    fn scl_component_composition() {
        use Color::*;
        let a = SclComponent::new(vec![UpDown, O, Up, UpDown, Down, O, Up], O, vec![5, 1]).unwrap();
        let b = Pi0Scl.operations(&[Up, Up, Up], Up).pop().unwrap();
        let c = Pi0Scl.compose_at(&a, 2, &b).unwrap();
        assert_eq!(c.inputs, vec![UpDown, O, Up, Up, Up, UpDown, Down, O, Up]);
        assert_eq!(c.open_order, vec![7, 1]);
        assert!(Pi0Scl.compose_at(&a, 1, &b).is_err());
        assert_eq!(Pi0Scl.operations(&[O, Up], Up).len(), 0);
        assert_eq!(Pi0Scl.operations(&[O, Up, O], O).len(), 2);
    }
}
