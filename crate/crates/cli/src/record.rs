//! JSON output records. Integers are written as bare JSON numbers of any size.

use frobenius_core::reduce::{ReductionStep, StepKind};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    #[serde(with = "int_vec")]
    pub input: Vec<BigInt>,
    #[serde(with = "int_opt")]
    pub g: Option<BigInt>,
    pub case: String,
    #[serde(with = "int_opt")]
    pub nbar: Option<BigInt>,
    pub steps: usize,
    pub reduction_chain: Vec<StepRecord>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepRecord {
    pub step: String,
    #[serde(with = "int_vec")]
    pub before: Vec<BigInt>,
    #[serde(with = "int_vec")]
    pub after: Vec<BigInt>,
    #[serde(with = "int_opt", default, skip_serializing_if = "Option::is_none")]
    pub d: Option<BigInt>,
}

impl From<&ReductionStep<BigInt>> for StepRecord {
    fn from(s: &ReductionStep<BigInt>) -> Self {
        let d = match &s.kind {
            StepKind::Johnson { d, .. } => Some(d.clone()),
            _ => None,
        };
        StepRecord { step: s.kind.name().to_string(), before: s.before.clone(), after: s.after.clone(), d }
    }
}

impl OutputRecord {
    pub fn failure(input: Vec<BigInt>, case: &str, error: String) -> Self {
        OutputRecord { input, g: None, case: case.to_string(), nbar: None, steps: 0, reduction_chain: Vec::new(), error: Some(error) }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records always serialize")
    }
}

fn to_number(v: &BigInt) -> serde_json::Number {
    v.to_string().parse().expect("integer literals are valid JSON numbers")
}

fn from_number<E: serde::de::Error>(n: serde_json::Number) -> Result<BigInt, E> {
    n.as_str().parse().map_err(|_| E::custom(format!("{n} is not an integer")))
}

mod int_vec {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(to_number))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<serde_json::Number>::deserialize(d)?.into_iter().map(from_number).collect()
    }
}

mod int_opt {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
        v.as_ref().map(to_number).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigInt>, D::Error> {
        Option::<serde_json::Number>::deserialize(d)?.map(from_number).transpose()
    }
}
