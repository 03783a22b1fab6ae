//! Little cubes operads, the four-colored Swiss Cheese operad for links, and
//! their actions on piecewise-linear fat long knots and fat string 2-links.
//!
//! - [`cubes`]: exact rational configurations and operad structure.
//! - [`pi0`]: the component operads, free algebras and the knot and string
//!   link monoids.
//! - [`pl`]: tube models of knots and links, the three actions, and the
//!   framing and linking invariants.
//! - [`checks`]: seeded property suites tying the layers together.

pub mod checks;
pub mod cubes;
pub mod error;
pub mod perm;
pub mod pi0;
pub mod pl;
pub mod rational;

pub use error::{AlgebraError, CubeError, GeometryError, ParseError};
pub use perm::Perm;
pub use rational::Rational;
