//! Exact computation of non-lc ideals and multiplier ideals.
//!
//! Two fully algorithmic engines:
//!
//! * [`monomial`] — monomial ideals on affine n-space, decided through
//!   valuation conditions over primitive rays with exact linear feasibility;
//! * [`curve`] — effective Q-divisors on the affine plane, through embedded
//!   resolution by iterated point blow-ups.
//!
//! The [`harness`] module holds brute-force oracles, seeded instance
//! generators, and executable checks for the structural theorems the engines
//! can witness (restriction, subadditivity, resolution independence, jumping
//! numbers, inversion of adjunction).
//!
//! All arithmetic is exact rational arithmetic; there is no floating point
//! anywhere in the crate.

pub mod divisor;
pub mod curve;
pub mod monomial;
pub mod feasibility;
pub mod harness;
pub mod input;
pub mod linalg;
pub mod poly;
pub mod rational;

pub use rational::Rational;
