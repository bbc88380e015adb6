#![no_std]
#![warn(missing_debug_implementations)]

//! Exact arithmetic for the trace authentication code
//! `E_k(s) = (s + k^(p^r), Tr(s k))` over `F_{p^n}`.
//!
//! Everything here is pure and allocation-light:
//!
//! - [`field`]: prime-power fields `F_{p^n}` (odd `p`) with trace, Frobenius
//!   and the quadratic character.
//! - [`cyclotomic`]: exact elements of `Z[zeta_p]`, the value ring of every
//!   character sum.
//! - [`charsum`]: additive characters, Gauss sums and the Weil sums
//!   `S(a, b) = sum_x chi(a x^(p^u+1) + b x)`, both by direct summation and by
//!   closed form, plus the linearized equation solver the closed forms need.
//! - [`authcode`]: encoding and verification, key counting, and the exact
//!   impersonation / substitution probabilities.
//! - [`bounds`]: combinatorial and information-theoretic lower bounds and the
//!   entropies of the encoding rules.
//!
//! Exhaustive scans are exposed as range kernels (`*_partial`) so a caller
//! with threads can split the outer loop and merge the partial results; the
//! merges are exact so the outcome never depends on the split.

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod arith;
pub mod authcode;
pub mod bounds;
mod caps;
pub mod charsum;
pub mod cyclotomic;
mod error;
pub mod field;
mod linalg;
mod poly;

pub use caps::Caps;
pub use error::{Error, Result};

/// Exact probability or bound value, always kept in lowest terms.
pub type Rational = num_rational::Ratio<u64>;
