//! Tube models of fat long knots and fat string 2-links, the actions of the
//! cube operads on them, and the framing and linking invariants.

mod actions;
pub mod catalog;
mod diagnostics;
mod geom;
mod invariants;
mod knot;
mod link;
mod presentation;
mod sample;
mod tube;

pub use geom::{segment_closest, segment_distance, Affine1};
pub use invariants::{
    close_above, close_below, crossings, curve_distance, framing_number, framing_pair, link_invariants,
    linking_number, linking_number_with_shear, linking_of_strands, self_crossings, shear, strand_of, tube_framing, tubes_linking,
    Crossing, LinkInvariants, CONTACT_DISTANCE, CROSSING_GUARD, MAX_SHEAR_ATTEMPTS,
};
pub use knot::{compose, cube1_conjugate, evaluate, standard_knot, twist, FatKnot};
pub use link::{evaluate_link, iota, standard_link, FatLink, Strand};
pub use sample::{
    knot_deviation, link_deviation, materialize_knot, materialize_link, materialize_strand, sample_points,
    CHORD_TOLERANCE,
};
pub use tube::{Boundary, Tube};
pub use actions::{kappa_act, kappa_act_with_order, lambda_act, mu_act, mu_act_with_sort, phi_hat, Fat};
pub use diagnostics::{knot_diagnostics, link_diagnostics, tube_diagnostics, tubes_diagnostics, DiagnosticReport};
pub use presentation::{parse_presentation, Presentation, PresentationError, TubeData};
pub use catalog::{load as load_catalog, CatalogError, CATALOG_ENV};
