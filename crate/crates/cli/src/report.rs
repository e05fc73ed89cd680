//! JSON form of a [`VerificationReport`]:
//! `{identity, params, mode, passed, lhs, rhs, seed?}`.

use std::fmt;

use digibinom::identities::RANDOM_EVAL_POINTS;
use digibinom::{IdentityKind, Mode, Polynomial, VerificationReport};
use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Every parameter name a report can carry.
const PARAM_NAMES: [&str; 6] = ["b", "n", "N", "k", "p_idx", "q_idx"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub identity: String,
    pub params: Params,
    pub mode: String,
    pub passed: bool,
    pub lhs: String,
    pub rhs: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

/// Parameters as a JSON object, keeping the report's order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Params(pub Vec<(String, u64)>);

impl Serialize for Params {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for Params {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct ParamsVisitor;

        impl<'de> Visitor<'de> for ParamsVisitor {
            type Value = Params;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an object of integer parameters")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<Params, A::Error> {
                let mut out = Vec::new();
                while let Some((k, v)) = access.next_entry::<String, u64>()? {
                    out.push((k, v));
                }
                Ok(Params(out))
            }
        }

        deserializer.deserialize_map(ParamsVisitor)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReportJsonError {
    #[error("unknown identity `{0}`")]
    Identity(String),
    #[error("unknown parameter `{0}`")]
    Param(String),
    #[error("unknown mode `{0}`")]
    Mode(String),
    #[error("random_eval report without a seed")]
    MissingSeed,
    #[error("polynomial field `{field}`: {message}")]
    Polynomial { field: &'static str, message: String },
}

impl From<&VerificationReport> for ReportJson {
    fn from(r: &VerificationReport) -> Self {
        ReportJson {
            identity: r.identity.name().to_string(),
            params: Params(r.params.iter().map(|&(k, v)| (k.to_string(), v)).collect()),
            mode: r.mode.name().to_string(),
            passed: r.passed,
            lhs: r.lhs.to_string(),
            rhs: r.rhs.to_string(),
            seed: r.mode.seed(),
        }
    }
}

impl TryFrom<&ReportJson> for VerificationReport {
    type Error = ReportJsonError;

    fn try_from(j: &ReportJson) -> Result<Self, ReportJsonError> {
        let identity: IdentityKind = j.identity.parse().map_err(|_| ReportJsonError::Identity(j.identity.clone()))?;
        let params = j
            .params
            .0
            .iter()
            .map(|(k, v)| {
                let name = PARAM_NAMES.iter().find(|n| **n == k).ok_or_else(|| ReportJsonError::Param(k.clone()))?;
                Ok((*name, *v))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let (mode, eval_points) = match j.mode.as_str() {
            "symbolic" => (Mode::Symbolic, None),
            "random_eval" => {
                (Mode::RandomEval { seed: j.seed.ok_or(ReportJsonError::MissingSeed)? }, Some(RANDOM_EVAL_POINTS))
            }
            other => return Err(ReportJsonError::Mode(other.to_string())),
        };
        let poly = |field: &'static str, text: &str| {
            text.parse::<Polynomial>().map_err(|e| ReportJsonError::Polynomial { field, message: e.to_string() })
        };
        Ok(VerificationReport {
            identity,
            params,
            passed: j.passed,
            lhs: poly("lhs", &j.lhs)?,
            rhs: poly("rhs", &j.rhs)?,
            mode,
            eval_points,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use digibinom::identities::{verify_multivariable, verify_q_binomial_formula, verify_q_digital};

    fn round_trip(r: &VerificationReport) {
        let text = serde_json::to_string(&ReportJson::from(r)).unwrap();
        let back: ReportJson = serde_json::from_str(&text).unwrap();
        assert_eq!(&VerificationReport::try_from(&back).unwrap(), r);
    }

    #[test]
    fn reports_round_trip() {
        round_trip(&verify_q_digital(7).unwrap());
        round_trip(&verify_q_binomial_formula(4, 2).unwrap());
        round_trip(&verify_multivariable(3, 5, Mode::Symbolic).unwrap());
        round_trip(&verify_multivariable(2, 100, Mode::RandomEval { seed: 9 }).unwrap());
    }

    #[test]
    fn layout() {
        let j = ReportJson::from(&verify_q_binomial_formula(3, 1).unwrap());
        let text = serde_json::to_string(&j).unwrap();
        assert_eq!(
            text,
            r#"{"identity":"q-binomial-formula","params":{"N":3,"k":1},"mode":"symbolic","passed":true,"lhs":"1 + q + q^2","rhs":"1 + q + q^2"}"#
        );
        let seeded = ReportJson::from(&verify_multivariable(2, 3, Mode::RandomEval { seed: 5 }).unwrap());
        assert!(serde_json::to_string(&seeded).unwrap().ends_with(r#""seed":5}"#));
    }

    #[test]
    fn rejects_malformed() {
        let mut j = ReportJson::from(&verify_q_digital(3).unwrap());
        j.lhs = "x +".into();
        assert!(matches!(VerificationReport::try_from(&j), Err(ReportJsonError::Polynomial { field: "lhs", .. })));
        j.mode = "random_eval".into();
        assert_eq!(VerificationReport::try_from(&j), Err(ReportJsonError::MissingSeed));
    }
}
