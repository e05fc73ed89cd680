//! Exact digit-level combinatorics.
//!
//! This crate provides base-`b` digit machinery (digital dominance, carry-free
//! pairs, weighted digit statistics), an exact sparse multivariate polynomial
//! ring over the rationals, generalized and Gaussian binomial coefficients,
//! multivariable Sierpinski matrices with their Kronecker structure, and
//! instance verifiers for the digital binomial theorem and its q-, p,q-,
//! multivariable and three-parameter analogs.
//!
//! Every verifier compares a closed-form side against an independent
//! brute-force sum over the dominated digit set and returns a
//! [`VerificationReport`].
//!
//! The crate is `no_std` and only requires `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod binomlib;
pub mod digits;
pub mod exactalg;
pub mod identities;
pub mod report;
pub mod sierpinski;

pub use digits::{DigitError, DigitVector, Natural};
pub use exactalg::{Coefficient, Monomial, PolyError, Polynomial, Rational, Variable};
pub use report::{IdentityKind, Mode, VerificationReport};
pub use sierpinski::{MatrixError, SierpinskiMatrix, VariableVectors};
