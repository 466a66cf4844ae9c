//! Exact computational model of a connected nilpotent Lie group that
//! interprets the real field with a predicate for the integers.
//!
//! The reals are replaced by the computable field `Q(sqrt 2)` ([`QuadRat`]).
//! On top of it live the Heisenberg quotient `G = H3/Γ` ([`group`]), the
//! extended group `G' = H'/Γ` ([`gprime`]), affine incidence geometry with
//! the von Staudt constructions ([`geometry`]), the interpretation pipeline
//! ([`interp`]), an input language ([`termlang`]) and seeded invariant
//! suites ([`check`]).

pub mod check;
pub mod error;
pub mod geometry;
pub mod gprime;
pub mod group;
pub mod interp;
pub mod qfield;
pub mod termlang;

pub use error::{Error, Result};
pub use geometry::{AffLine, AffPoint};
pub use gprime::GPrimeElem;
pub use group::{EPoint, GElem, HElem, LineSubgroup};
pub use interp::RNum;
pub use qfield::{QuadRat, Rational};
