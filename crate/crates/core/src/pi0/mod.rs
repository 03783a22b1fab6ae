//! Component monoids and operads: knot words, string-link normal forms and
//! the free algebras over `Com`, `As` and `π₀SCL`.

mod compare;
mod free;
mod operad;
mod syntax;
mod words;

pub use compare::{pi0_of_free_c1, pi0_of_free_c2, pi0_of_free_scl, Pi0Comparison};
pub use free::{
    canonicalize, compare_free_models, compare_link_monoid, enumerate_free, enumerate_links, free_act,
    link_to_normal_form, normal_form_to_link, open_product, FreeElement, FreeModel, Generators, ModelComparison,
    MonoidComparison, NormalForm,
};
pub use operad::{as_compose, As, Com, ComponentOperad, Pi0Scl, SclComponent};
pub use syntax::{format_knot_word, format_link_word, parse_knot_word, parse_link_word};
pub use words::{braid_unit, knot_mul, link_mul, phi, Alphabet, KnotWord, LinkNormalForm};
