//! Exact arithmetic: rationals and sparse multivariate polynomials over them.
//!
//! Polynomials are kept in a canonical form (no zero coefficients, monomials
//! in graded order), so equality of two polynomials is structural equality of
//! their term maps.

mod parse;
mod polynomial;
mod rational;
mod variable;

use alloc::string::String;
use core::fmt::Debug;

use thiserror::Error;

pub use polynomial::{Monomial, Polynomial};
pub use rational::Rational;
pub use variable::{Family, Variable, MAX_INDEX};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable {0} has no binding")]
    UnboundVariable(Variable),
    #[error("division leaves a nonzero remainder")]
    InexactDivision,
    #[error("division by zero")]
    DivisionByZero,
    #[error("only monomial or univariate divisors are supported")]
    UnsupportedDivisor,
    #[error("variable index {0} is out of range (at most 31)")]
    VariableIndex(usize),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
}

/// A commutative Q-algebra: the entry type for generalized binomials and
/// Sierpinski matrices.
///
/// Implemented by [`Polynomial`] for symbolic work and by [`Rational`] for
/// evaluations at a point.
pub trait Coefficient: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn scaled(&self, c: &Rational) -> Self;
    fn from_rational(c: Rational) -> Self;

    /// `self += other`; implementors may avoid the copy `plus` makes.
    fn accumulate(&mut self, other: &Self) {
        *self = self.plus(other);
    }
}

impl Coefficient for Rational {
    fn zero() -> Self {
        Rational::ZERO
    }

    fn one() -> Self {
        Rational::ONE
    }

    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }

    fn plus(&self, other: &Self) -> Self {
        self + other
    }

    fn times(&self, other: &Self) -> Self {
        self * other
    }

    fn scaled(&self, c: &Rational) -> Self {
        self * c
    }

    fn from_rational(c: Rational) -> Self {
        c
    }
}

impl Coefficient for Polynomial {
    fn zero() -> Self {
        Polynomial::zero()
    }

    fn one() -> Self {
        Polynomial::one()
    }

    fn is_zero(&self) -> bool {
        Polynomial::is_zero(self)
    }

    fn plus(&self, other: &Self) -> Self {
        self + other
    }

    fn times(&self, other: &Self) -> Self {
        self * other
    }

    fn scaled(&self, c: &Rational) -> Self {
        self.scale(c)
    }

    fn from_rational(c: Rational) -> Self {
        Polynomial::constant(c)
    }

    fn accumulate(&mut self, other: &Self) {
        *self += other;
    }
}
