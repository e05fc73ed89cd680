//! Outcome of a single identity check.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::exactalg::Polynomial;

/// Every identity the crate can check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityKind {
    DigitalBinomial,
    QDigital,
    SpecialCase,
    Rothe,
    QBinomialFormula,
    SumQ,
    DerivX,
    DigitSumTotal,
    DerivQ,
    Multivariable,
    ThreeParameter,
    PqAnalog,
    ChuVandermonde,
}

impl IdentityKind {
    pub const ALL: [IdentityKind; 13] = [
        IdentityKind::DigitalBinomial,
        IdentityKind::QDigital,
        IdentityKind::SpecialCase,
        IdentityKind::Rothe,
        IdentityKind::QBinomialFormula,
        IdentityKind::SumQ,
        IdentityKind::DerivX,
        IdentityKind::DigitSumTotal,
        IdentityKind::DerivQ,
        IdentityKind::Multivariable,
        IdentityKind::ThreeParameter,
        IdentityKind::PqAnalog,
        IdentityKind::ChuVandermonde,
    ];

    /// Kebab-case name used on the command line and in JSON.
    pub fn name(self) -> &'static str {
        match self {
            IdentityKind::DigitalBinomial => "digital-binomial",
            IdentityKind::QDigital => "q-digital",
            IdentityKind::SpecialCase => "special-case",
            IdentityKind::Rothe => "rothe",
            IdentityKind::QBinomialFormula => "q-binomial-formula",
            IdentityKind::SumQ => "sum-q",
            IdentityKind::DerivX => "deriv-x",
            IdentityKind::DigitSumTotal => "digit-sum-total",
            IdentityKind::DerivQ => "deriv-q",
            IdentityKind::Multivariable => "multivariable",
            IdentityKind::ThreeParameter => "three-parameter",
            IdentityKind::PqAnalog => "pq-analog",
            IdentityKind::ChuVandermonde => "chu-vandermonde",
        }
    }
}

impl fmt::Display for IdentityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityKind {
    type Err = UnknownIdentity;

    fn from_str(s: &str) -> Result<Self, UnknownIdentity> {
        IdentityKind::ALL.iter().copied().find(|k| k.name() == s).ok_or(UnknownIdentity)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("unknown identity name")]
pub struct UnknownIdentity;

/// How the two sides were compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Structural equality of canonical polynomials.
    Symbolic,
    /// Equality of exact values at seeded random rational points. A screen,
    /// not a proof.
    RandomEval { seed: u64 },
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Symbolic => "symbolic",
            Mode::RandomEval { .. } => "random_eval",
        }
    }

    pub fn seed(self) -> Option<u64> {
        match self {
            Mode::Symbolic => None,
            Mode::RandomEval { seed } => Some(seed),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub identity: IdentityKind,
    /// Integer parameters in a fixed order, e.g. `[("b", 3), ("n", 5)]`.
    pub params: Vec<(&'static str, u64)>,
    pub passed: bool,
    /// In random-eval mode the two sides are the constant values at the first
    /// disagreeing point, or at the first point when all agree.
    pub lhs: Polynomial,
    pub rhs: Polynomial,
    pub mode: Mode,
    /// Number of sample points in random-eval mode.
    pub eval_points: Option<usize>,
}

impl VerificationReport {
    pub(crate) fn symbolic(
        identity: IdentityKind,
        params: Vec<(&'static str, u64)>,
        lhs: Polynomial,
        rhs: Polynomial,
    ) -> Self {
        VerificationReport { identity, params, passed: lhs == rhs, lhs, rhs, mode: Mode::Symbolic, eval_points: None }
    }

    /// `lhs − rhs`; zero exactly when a symbolic check passed.
    pub fn difference(&self) -> Polynomial {
        &self.lhs - &self.rhs
    }

    pub fn param(&self, name: &str) -> Option<u64> {
        self.params.iter().find(|p| p.0 == name).map(|p| p.1)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.identity)?;
        for (k, v) in &self.params {
            write!(f, " {k}={v}")?;
        }
        write!(f, " [{}", self.mode.name())?;
        if let Some(seed) = self.mode.seed() {
            write!(f, ", seed {seed}")?;
        }
        if let Some(points) = self.eval_points {
            write!(f, ", {points} points")?;
        }
        writeln!(f, "]: {}", if self.passed { "pass" } else { "FAIL" })?;
        writeln!(f, "  lhs = {}", self.lhs)?;
        write!(f, "  rhs = {}", self.rhs)?;
        if !self.passed {
            write!(f, "\n  lhs - rhs = {}", self.difference())?;
        }
        Ok(())
    }
}
