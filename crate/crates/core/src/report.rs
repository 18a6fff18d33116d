//! Verification reports.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::Scalar;

/// `{"check":…, "instances":k, "violations":[…], "constants":{…}}` plus
/// check-specific details.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub check: String,
    pub instances: usize,
    pub violations: Vec<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub constants: BTreeMap<String, BTreeMap<String, Scalar>>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub details: BTreeMap<String, Value>,
}

impl Report {
    pub fn new(check: &str) -> Report {
        Report { check: check.to_string(), ..Default::default() }
    }

    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violation(&mut self, v: impl Into<String>) {
        self.violations.push(v.into());
    }

    pub fn constant(&mut self, family: &str, key: impl Into<String>, v: Scalar) {
        self.constants.entry(family.to_string()).or_default().insert(key.into(), v);
    }

    pub fn detail(&mut self, key: &str, v: impl Serialize) {
        self.details.insert(key.to_string(), serde_json::to_value(v).expect("serializable"));
    }

    /// Folds another report of the same check into this one.
    pub fn merge(mut self, o: Report) -> Report {
        self.instances += o.instances;
        self.violations.extend(o.violations);
        for (k, m) in o.constants {
            self.constants.entry(k).or_default().extend(m);
        }
        for (k, v) in o.details {
            match (self.details.get_mut(&k), v) {
                (Some(Value::Number(a)), Value::Number(b)) if a.is_u64() && b.is_u64() => {
                    *a = (a.as_u64().unwrap() + b.as_u64().unwrap()).into();
                }
                (Some(Value::Array(a)), Value::Array(b)) => a.extend(b),
                (_, v) => {
                    self.details.insert(k, v);
                }
            }
        }
        self
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("serializable")
    }
}
