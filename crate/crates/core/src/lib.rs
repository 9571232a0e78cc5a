//! Knot and link invariants from planar diagrams.
//!
//! * [`laurent`]: exact Laurent polynomials in `v` and `z`.
//! * [`diagram`]: oriented PD-code diagrams and their moves.
//! * [`skein`]: HOMFLY, Conway and zeroth-coefficient polynomials by
//!   memoized skein recursion.
//! * [`clasp`]: Conway and HOMFLY models of clasp number two knots and the
//!   obstructions derived from them.
//! * [`tangle`]: rational tangles, Montesinos knots and the catalog of
//!   genus two, clasp number two fibered knots.
//! * [`openbook`]: fundamental groups of open books on the three-holed
//!   sphere.
//! * [`census`]: named diagrams shipped with the crate.
//! * [`reps`]: representation counts of link groups into small symmetric
//!   groups.
//! * [`report`]: clasp number bounds for five knots of genus two.

pub mod census;
pub mod clasp;
pub mod diagram;
pub mod error;
pub mod laurent;
pub mod openbook;
mod perm;
pub mod report;
pub mod reps;
pub mod skein;
pub mod tangle;

pub use diagram::{CanonicalKey, Components, Crossing, Diagram};
pub use error::{DiagramError, ParseError, SkeinError};
pub use laurent::{extract_p_i, LaurentPoly, Monomial};
pub use skein::{SkeinConfig, SkeinEngine};
