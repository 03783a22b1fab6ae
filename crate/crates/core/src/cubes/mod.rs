//! Exact little cubes: the operads of overlapping, disjoint and lower-face
//! cubes, the Swiss Cheese operad for links, and the ordering combinatorics
//! used by the knot action.

mod affine;
mod config;
pub mod format;
mod order;
mod pi0;
mod scl;
mod validation;

pub use affine::AffineInc;
pub use config::{almost_disjoint, heights_t, meets_lower_face, projection_pi, CubeConfig, LittleCube, Mode};
pub use order::{
    canonical_ordering, ordering_order, ordering_permutations, partial_order, Direction, LinearExtensions,
    PartialOrderDag,
};
pub use pi0::{pi0_class, pi0_class_scl, Pi0Class};
pub use scl::{color_sort, count_color, scl_validate, splice_colors, Color, ColorSort, SclElement};
pub use validation::{Clause, ValidationReport, Violation};
