//! IO companion to `rowmotion-core`: JSON schemas for labelings, chain-sum
//! profiles and reports, seeded random labelings, and the verification
//! suite the `verify` subcommand runs.

pub mod json;
pub mod random;
pub mod suite;
