//! Exact arithmetic around the Josephus problem.
//!
//! * [`josephus`] computes survivor seats `J_k(n)` by direct simulation and by
//!   the linear recurrence, plus the binary rotation rule for `J_2`.
//! * [`fixed_points`] generates the fixed-point sequence of `J_3` over
//!   arbitrary-precision integers.
//! * [`frac_base`] is the canonical modular fractional-base codec (base 3/2
//!   and its `a/b` generalization) together with the digit-suffix rule that
//!   links consecutive fixed points.
//! * [`congruence`] holds the Bézout / CRT machinery relating consecutive
//!   fixed points to residues modulo `3^p` and `2^q`.
//! * [`cli`] is the command-line front end.

pub mod cli;
pub mod congruence;
pub mod error;
pub mod fixed_points;
pub mod frac_base;
pub mod josephus;
pub mod reference;

pub use error::{Error, Result};

/// Arbitrary-precision non-negative integer.
pub type Natural = num_bigint::BigUint;
