//! Exact toggle dynamics on rectangle posets.
//!
//! Everything in this crate is computed over arbitrary-precision rational
//! numbers; there is no floating point and no tolerance anywhere. The crate
//! covers three levels of the same dynamics:
//!
//! * combinatorial rowmotion on order ideals of `[r] x [s]` ([`poset`]),
//! * piecewise-linear rowmotion on rational points, realized as the tropical
//!   instance of a generic toggle algebra ([`algebra`], [`dynamics`]),
//! * birational rowmotion on positive rational labelings ([`dynamics`]),
//!   together with its closed-form evaluation through solid minors of a
//!   lattice-path matrix ([`minors`], [`paths`], [`closed_form`]).
//!
//! On top of the dynamics sit generalized Stanley-Thomas words
//! ([`st_words`]) and a toggle-based RSK map with a Greene-style
//! characterization and full inversion ([`rsk`]).
//!
//! The crate is `no_std` (with `alloc`); all IO, JSON formats and the
//! verification harness live in the companion CLI crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod closed_form;
pub mod dynamics;
pub mod error;
pub mod matrix;
pub mod minors;
pub mod paths;
pub mod poset;
pub mod rational;
pub mod rsk;
pub mod st_words;

pub use error::Error;
pub use rational::Rational;
