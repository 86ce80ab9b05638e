//! Finite-scale verification of pointwise dynamical properties.
//!
//! Decides, at explicitly bounded scale, whether a point of an interval,
//! circle or line map is expansive, sensitive, shadowable, transitive, and
//! so on; classifies how a sequence of maps converges to a limit; and
//! cross-validates the index-set tail conditions that transfer pointwise
//! properties to limits. Verdicts are three-valued and every confirmed or
//! refuted verdict carries a witness that an independent recomputation can
//! check.

pub mod dyadic;
pub mod errors;
pub mod interval;
pub mod maps;
pub mod pointwise;
pub mod rational;
pub mod scale;
pub mod space;
pub mod verdict;

pub use errors::{DynError, DynResult};
pub use rational::Rational;
pub use scale::ScaleConfig;
pub use space::{bounded_distance, distance, Point, Space};
pub use verdict::{Status, Verdict, Witness};
