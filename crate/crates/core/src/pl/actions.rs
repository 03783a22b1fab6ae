//! The actions `κ` of little squares on fat long knots, `λ` of little
//! intervals on framed string links, and `μ` of the colored operad on both.

use super::geom::Affine1;
use super::knot::FatKnot;
use super::link::FatLink;
use crate::cubes::{
    canonical_ordering, projection_pi, Color, ColorSort, CubeConfig, Direction, Mode, SclElement,
};
use crate::error::GeometryError;

/// An input or output of `μ`.
#[derive(Clone, Debug)]
pub enum Fat {
    Knot(FatKnot),
    Link(FatLink),
}

impl Fat {
    pub fn kind(&self) -> &'static str {
        match self {
            Fat::Knot(_) => "knot",
            Fat::Link(_) => "link",
        }
    }

    pub fn as_knot(&self) -> Option<&FatKnot> {
        match self {
            Fat::Knot(k) => Some(k),
            Fat::Link(_) => None,
        }
    }

    pub fn as_link(&self) -> Option<&FatLink> {
        match self {
            Fat::Link(l) => Some(l),
            Fat::Knot(_) => None,
        }
    }
}

fn check_arity(config: &CubeConfig, found: usize) -> Result<(), GeometryError> {
    if config.arity() != found {
        return Err(GeometryError::ArityMismatch {
            expected: config.arity(),
            found,
        });
    }
    Ok(())
}

/// `L^{σ(1)}_π f_{σ(1)} ∘ ⋯ ∘ L^{σ(k)}_π f_{σ(k)}` for the given `σ`, listed
/// as `[σ(1), .., σ(k)]`. The order is not checked against `config`.
pub fn kappa_act_with_order(
    config: &CubeConfig,
    knots: &[&FatKnot],
    order: &[usize],
) -> Result<FatKnot, GeometryError> {
    check_arity(config, knots.len())?;
    Ok(order.iter().fold(FatKnot::identity(), |acc, &i| {
        let piece = knots[i].conjugate(Affine1::from(config.cube(i).factor(0)));
        acc.then_after(&piece)
    }))
}

/// `κ(L, f̲)` composed along the canonical ordering permutation.
pub fn kappa_act(config: &CubeConfig, knots: &[&FatKnot], direction: Direction) -> Result<FatKnot, GeometryError> {
    check_arity(config, knots.len())?;
    let order = canonical_ordering(config, direction)?;
    kappa_act_with_order(config, knots, &order)
}

/// `λ(L, f̲)`: each link conjugated into its interval, `ι` elsewhere.
pub fn lambda_act(config: &CubeConfig, links: &[&FatLink]) -> Result<FatLink, GeometryError> {
    if config.dim() != 1 {
        return Err(crate::error::CubeError::DimensionMismatch {
            expected: 1,
            found: config.dim(),
        }
        .into());
    }
    check_arity(config, links.len())?;
    let report = config.validate_as(Mode::Disjoint);
    if !report.is_ok() {
        return Err(crate::error::CubeError::Invalid(report).into());
    }
    let pieces = config
        .cubes()
        .iter()
        .zip(links)
        .map(|(c, l)| (Affine1::from(c.factor(0)), (*l).clone()))
        .collect();
    Ok(FatLink::concat(pieces))
}

/// `φ̂^s(f)`: `f` on the upper strand, the lower strand, or on both.
pub fn phi_hat(s: Color, f: &FatKnot) -> Result<FatLink, GeometryError> {
    let id = FatKnot::identity();
    match s {
        Color::Up => Ok(FatLink::standard().pre(f, &id)),
        Color::Down => Ok(FatLink::standard().pre(&id, f)),
        Color::UpDown => Ok(FatLink::standard().post(f)),
        Color::O => Err(GeometryError::Presentation("φ̂ is defined for closed colors only".into())),
    }
}

fn check_kinds(e: &SclElement, inputs: &[Fat]) -> Result<(), GeometryError> {
    if inputs.len() != e.arity() {
        return Err(GeometryError::ArityMismatch {
            expected: e.arity(),
            found: inputs.len(),
        });
    }
    for (index, (c, x)) in e.input_colors().iter().zip(inputs).enumerate() {
        let expected = if *c == Color::O { "link" } else { "knot" };
        if x.kind() != expected {
            return Err(GeometryError::KindMismatch { index, expected });
        }
    }
    Ok(())
}

/// `μ(e, x̲)` with the canonical color sort.
pub fn mu_act(e: &SclElement, inputs: &[Fat]) -> Result<Fat, GeometryError> {
    mu_act_with_sort(e, inputs, &ColorSort::canonical(e.input_colors()))
}

/// `μ(e, x̲)` with a chosen color sort. For output `o` this is
/// `κ_rev(α_↕L) ∘ λ(α_oL_π) ∘ [κ(α_↑L) ⊔ κ(α_↓L)]`.
pub fn mu_act_with_sort(e: &SclElement, inputs: &[Fat], sort: &ColorSort) -> Result<Fat, GeometryError> {
    check_kinds(e, inputs)?;
    let knots_of = |s: Color| -> Vec<&FatKnot> {
        sort.restrict_inputs(inputs, s)
            .into_iter()
            .map(|x| x.as_knot().expect("kinds checked"))
            .collect()
    };
    let kappa = |s: Color, direction: Direction| kappa_act(&sort.restrict_config(e, s), &knots_of(s), direction);
    match e.output_color() {
        Color::O => {
            let up = kappa(Color::Up, Direction::Standard)?;
            let down = kappa(Color::Down, Direction::Standard)?;
            let both = kappa(Color::UpDown, Direction::Reverse)?;
            let open = projection_pi(&sort.restrict_config(e, Color::O))?.with_mode(Mode::Disjoint)?;
            let links: Vec<&FatLink> = sort
                .restrict_inputs(inputs, Color::O)
                .into_iter()
                .map(|x| x.as_link().expect("kinds checked"))
                .collect();
            Ok(Fat::Link(lambda_act(&open, &links)?.pre(&up, &down).post(&both)))
        }
        Color::UpDown => Ok(Fat::Knot(kappa(Color::UpDown, Direction::Reverse)?)),
        s => Ok(Fat::Knot(kappa(s, Direction::Standard)?)),
    }
}
