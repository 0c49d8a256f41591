//! Exact super Gromov-Witten invariants of a point and of projective space.
//!
//! The crate computes two families of numbers with exact rational arithmetic:
//!
//! * genus-zero invariants of a point target, obtained by integrating
//!   tautological classes over the moduli spaces `M̄_{0,k}` ([`point_sgw`],
//!   built on [`taut0`]);
//! * degree-one invariants of `P^n` with hyperplane-class insertions, obtained
//!   by torus localization over the fixed graphs of the moduli of maps
//!   ([`graphs`], [`localize`]).
//!
//! Every invariant is a rational multiple of a power of the formal parameter
//! `kappa`, represented by [`Invariant`]. The degree-one three-point
//! invariants assemble into a deformed cohomology ring ([`quantum`]).
//!
//! ```
//! use sgw::point_sgw::sgw_point;
//!
//! let x4 = sgw_point(4).unwrap();
//! assert_eq!(x4.to_string(), "-1/2 * kappa^-3");
//! ```

pub mod cli;
pub mod error;
pub mod exact;
pub mod graphs;
pub mod invariant;
pub mod localize;
pub mod point_sgw;
pub mod quantum;
pub mod reference;
pub mod taut0;

pub use error::{Error, Result};
pub use exact::Rational;
pub use invariant::Invariant;
