//! Maps an identity name plus integer parameters onto its verifier.

use digibinom::binomlib::{self, BinomError};
use digibinom::identities::{self, IdentityError};
use digibinom::{IdentityKind, Mode, VerificationReport};

/// Parameters gathered from the command line; each identity reads the ones it needs.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CaseParams {
    pub n: Option<u64>,
    pub levels: Option<u64>,
    pub k: Option<u64>,
    pub b: Option<u64>,
    pub p: Option<u64>,
    pub q: Option<u64>,
}

impl CaseParams {
    pub fn get(&self, flag: &str) -> Option<u64> {
        match flag {
            "n" => self.n,
            "N" => self.levels,
            "k" => self.k,
            "b" => self.b,
            "p" => self.p,
            "q" => self.q,
            _ => None,
        }
    }

    pub fn set(&mut self, flag: &str, v: u64) {
        let slot = match flag {
            "n" => &mut self.n,
            "N" => &mut self.levels,
            "k" => &mut self.k,
            "b" => &mut self.b,
            "p" => &mut self.p,
            "q" => &mut self.q,
            _ => panic!("unknown flag {flag}"),
        };
        *slot = Some(v);
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error("{identity} needs --{flag}")]
    Missing { identity: IdentityKind, flag: &'static str },
    #[error("--{flag} {value} is too large")]
    TooLarge { flag: &'static str, value: u64 },
    #[error("{0} only supports symbolic mode")]
    SymbolicOnly(IdentityKind),
    #[error(transparent)]
    Identity(#[from] IdentityError),
    #[error(transparent)]
    Binom(#[from] BinomError),
}

impl VerifyError {
    /// Size guards, as opposed to invalid parameters.
    pub fn is_guard(&self) -> bool {
        matches!(
            self,
            VerifyError::Identity(IdentityError::TooLargeForSymbolic { .. } | IdentityError::TooManyDigits { .. })
                | VerifyError::Binom(BinomError::TooLarge(_))
        )
    }
}

/// The flags an identity reads, in report order.
pub fn flags(identity: IdentityKind) -> &'static [&'static str] {
    use IdentityKind::*;
    match identity {
        DigitalBinomial | QDigital => &["n"],
        SpecialCase | Rothe | SumQ | DerivX | DigitSumTotal | DerivQ | PqAnalog => &["N"],
        QBinomialFormula => &["N", "k"],
        Multivariable | ThreeParameter => &["b", "n"],
        ChuVandermonde => &["p", "q"],
    }
}

fn small(flag: &'static str, value: u64) -> Result<u32, VerifyError> {
    u32::try_from(value).map_err(|_| VerifyError::TooLarge { flag, value })
}

pub fn verify_case(identity: IdentityKind, params: &CaseParams, mode: Mode) -> Result<VerificationReport, VerifyError> {
    use IdentityKind::*;
    if mode != Mode::Symbolic && identity != Multivariable {
        return Err(VerifyError::SymbolicOnly(identity));
    }
    let arg = |flag| params.get(flag).ok_or(VerifyError::Missing { identity, flag });
    let levels = || small("N", arg("N")?);
    let report = match identity {
        DigitalBinomial => identities::verify_digital_binomial(arg("n")?)?,
        QDigital => identities::verify_q_digital(arg("n")?)?,
        SpecialCase => identities::verify_special_case(levels()?)?,
        Rothe => identities::verify_rothe(levels()?)?,
        QBinomialFormula => {
            let k = arg("k")?;
            let k = i64::try_from(k).map_err(|_| VerifyError::TooLarge { flag: "k", value: k })?;
            identities::verify_q_binomial_formula(levels()?, k)?
        }
        SumQ => identities::identity_sum_q(levels()?)?,
        DerivX => identities::identity_deriv_x(levels()?)?,
        DigitSumTotal => identities::verify_digit_sum_total(levels()?)?,
        DerivQ => identities::identity_deriv_q(levels()?)?,
        PqAnalog => identities::verify_pq_analog(levels()?)?,
        Multivariable => identities::verify_multivariable(small("b", arg("b")?)?, arg("n")?, mode)?,
        ThreeParameter => identities::verify_three_parameter(small("b", arg("b")?)?, arg("n")?)?,
        ChuVandermonde => binomlib::chu_vandermonde_check(small("p", arg("p")?)?, small("q", arg("q")?)?)?,
    };
    Ok(report)
}
