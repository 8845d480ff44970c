//! Exact decision procedures for fractional revival (FR) and pretty good
//! fractional revival (PGFR) on Cayley graphs over finite abelian groups,
//! plus a continuous-time quantum walk simulator for cross-checking.
//!
//! The exact side works in the cyclotomic ring `Z[omega_L]` (`L` the group
//! exponent) and decides PGFR by computing the integer kernel of the
//! eigenvalue-difference matrix and the image of the `X_2` functional on it.

pub mod cyclotomic;
pub mod deciders;
pub mod error;
pub mod families;
pub mod graphs;
pub mod groups;
pub mod lattice;
pub mod simulator;

pub use error::{Error, Result};
