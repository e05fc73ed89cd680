//! Runs one verifier over a grid of parameters.

use std::fmt::Write as _;

use digibinom::{IdentityKind, Mode};
use rayon::prelude::*;
use serde::Serialize;

use crate::dispatch::{flags, verify_case, CaseParams, VerifyError};
use crate::range::ParamRange;
use crate::report::Params;

/// Ranges per flag; `None` where the flag was not given.
#[derive(Debug, Clone, Copy, Default)]
pub struct SweepRanges {
    pub n: Option<ParamRange>,
    pub levels: Option<ParamRange>,
    pub k: Option<ParamRange>,
    pub b: Option<ParamRange>,
    pub p: Option<ParamRange>,
    pub q: Option<ParamRange>,
}

impl SweepRanges {
    fn get(&self, flag: &str) -> Option<ParamRange> {
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
}

fn value(params: &CaseParams, flag: &str) -> u64 {
    params.get(flag).expect("case sets every flag")
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SweepError {
    #[error("{identity} sweeps need --{flag}")]
    MissingRange { identity: IdentityKind, flag: &'static str },
    #[error("{params}: {source}")]
    Case { params: String, source: VerifyError },
}

/// Expands the ranges into cases in lexicographic flag order. `k` defaults to
/// `0..=N` and `q` to `0..=p`.
pub fn cases(identity: IdentityKind, ranges: &SweepRanges) -> Result<Vec<CaseParams>, SweepError> {
    let mut out = vec![CaseParams::default()];
    for &flag in flags(identity) {
        let dependent = match flag {
            "k" => Some("N"),
            "q" => Some("p"),
            _ => None,
        };
        let given = ranges.get(flag);
        if given.is_none() && dependent.is_none() {
            return Err(SweepError::MissingRange { identity, flag });
        }
        out = out
            .into_iter()
            .flat_map(|case| {
                let range = given.unwrap_or_else(|| ParamRange { start: 0, end: value(&case, dependent.unwrap()) });
                range.iter().map(move |v| {
                    let mut c = case;
                    c.set(flag, v);
                    c
                })
            })
            .collect();
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Passed,
    Failed,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseOutcome {
    pub params: Params,
    pub outcome: Outcome,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub identity: String,
    pub mode: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub cases: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    /// Failed and skipped cases, in case order.
    pub exceptions: Vec<CaseOutcome>,
}

fn params_of(identity: IdentityKind, case: &CaseParams) -> Params {
    Params(flags(identity).iter().map(|&f| (f.to_string(), value(case, f))).collect())
}

fn describe(p: &Params) -> String {
    p.0.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")
}

pub fn run(
    identity: IdentityKind,
    ranges: &SweepRanges,
    mode: Mode,
    parallel: bool,
) -> Result<SweepSummary, SweepError> {
    let cases = cases(identity, ranges)?;
    let one = |case: &CaseParams| match verify_case(identity, case, mode) {
        Ok(r) if r.passed => Ok(Outcome::Passed),
        Ok(_) => Ok(Outcome::Failed),
        Err(e) if e.is_guard() => Ok(Outcome::Skipped),
        Err(e) => Err(e),
    };
    let results: Vec<Result<Outcome, VerifyError>> =
        if parallel { cases.par_iter().map(one).collect() } else { cases.iter().map(one).collect() };

    let mut summary = SweepSummary {
        identity: identity.name().to_string(),
        mode: mode.name().to_string(),
        seed: mode.seed(),
        cases: cases.len(),
        passed: 0,
        failed: 0,
        skipped: 0,
        exceptions: Vec::new(),
    };
    for (case, result) in cases.iter().zip(results) {
        let outcome =
            result.map_err(|source| SweepError::Case { params: describe(&params_of(identity, case)), source })?;
        match outcome {
            Outcome::Passed => summary.passed += 1,
            Outcome::Failed => summary.failed += 1,
            Outcome::Skipped => summary.skipped += 1,
        }
        if outcome != Outcome::Passed {
            summary.exceptions.push(CaseOutcome { params: params_of(identity, case), outcome });
        }
    }
    Ok(summary)
}

impl SweepSummary {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = write!(s, "{} [{}", self.identity, self.mode);
        if let Some(seed) = self.seed {
            let _ = write!(s, ", seed {seed}");
        }
        let _ = writeln!(s, "]");
        let _ = writeln!(
            s,
            "cases: {}  passed: {}  failed: {}  skipped: {}",
            self.cases, self.passed, self.failed, self.skipped
        );
        for e in &self.exceptions {
            let tag = if e.outcome == Outcome::Failed { "FAIL" } else { "skip" };
            let _ = writeln!(s, "{tag} {}", describe(&e.params));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Option<ParamRange> {
        Some(s.parse().unwrap())
    }

    #[test]
    fn case_expansion() {
        let chu = cases(IdentityKind::ChuVandermonde, &SweepRanges { p: r("0..8"), ..Default::default() }).unwrap();
        assert_eq!(chu.len(), 45);
        let qbf =
            cases(IdentityKind::QBinomialFormula, &SweepRanges { levels: r("1..3"), ..Default::default() }).unwrap();
        assert_eq!(qbf.len(), 2 + 3 + 4);
        let multi =
            cases(IdentityKind::Multivariable, &SweepRanges { b: r("2..4"), n: r("0..9"), ..Default::default() });
        assert_eq!(multi.unwrap().len(), 30);
        assert!(cases(IdentityKind::QDigital, &SweepRanges::default()).is_err());
    }

    #[test]
    fn serial_and_parallel_agree() {
        let ranges = SweepRanges { b: r("2..3"), n: r("0..40"), ..Default::default() };
        let a = run(IdentityKind::ThreeParameter, &ranges, Mode::Symbolic, false).unwrap();
        let b = run(IdentityKind::ThreeParameter, &ranges, Mode::Symbolic, true).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_text(), b.to_text());
        assert!(a.all_passed());
    }

    #[test]
    fn guard_hits_are_skipped() {
        let ranges = SweepRanges { b: r("2"), n: r("8191"), ..Default::default() };
        let s = run(IdentityKind::Multivariable, &ranges, Mode::Symbolic, false).unwrap();
        assert_eq!((s.passed, s.skipped), (0, 1));
        assert_eq!(
            s.to_text(),
            "multivariable [symbolic]\ncases: 1  passed: 0  failed: 0  skipped: 1\nskip b=2 n=8191\n"
        );
    }

    #[test]
    fn invalid_case_is_an_error() {
        let ranges = SweepRanges { levels: r("0..3"), ..Default::default() };
        assert!(matches!(run(IdentityKind::Rothe, &ranges, Mode::Symbolic, false), Err(SweepError::Case { .. })));
    }
}
