//! Machine-readable verification reports.

use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Budget,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timings {
    pub elapsed_ms: u128,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub check: String,
    pub instance: Map<String, Value>,
    pub verdict: Verdict,
    pub timings: Timings,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Value::is_null")]
    pub details: Value,
}

impl Report {
    pub fn new(check: &str, instance: Value) -> Self {
        let instance = match instance {
            Value::Object(m) => m,
            other => {
                let mut m = Map::new();
                m.insert("value".into(), other);
                m
            }
        };
        Report {
            check: check.to_string(),
            instance,
            verdict: Verdict::Pass,
            timings: Timings { elapsed_ms: 0 },
            counterexample: None,
            seed: None,
            details: Value::Null,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// Marks failure, keeping the first counterexample.
    pub fn fail(&mut self, why: impl Into<String>) {
        self.verdict = Verdict::Fail;
        if self.counterexample.is_none() {
            self.counterexample = Some(why.into());
        }
    }

    pub fn require(&mut self, ok: bool, why: impl FnOnce() -> String) {
        if !ok {
            self.fail(why());
        }
    }

    pub fn detail(&mut self, key: &str, value: impl Serialize) {
        if !self.details.is_object() {
            self.details = Value::Object(Map::new());
        }
        let v = serde_json::to_value(value).unwrap_or(Value::Null);
        self.details.as_object_mut().unwrap().insert(key.to_string(), v);
    }

    pub fn finish(mut self, start: Instant) -> Self {
        self.timings.elapsed_ms = start.elapsed().as_millis();
        self
    }

    /// Sort key used when merging reports from parallel sweeps.
    pub fn instance_key(&self) -> String {
        format!("{}:{}", self.check, Value::Object(self.instance.clone()))
    }

    /// One line for humans.
    pub fn summary(&self) -> String {
        let verdict = match self.verdict {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Budget => "BUDGET",
        };
        let mut line = format!(
            "{verdict} {} {} ({} ms)",
            self.check,
            Value::Object(self.instance.clone()),
            self.timings.elapsed_ms
        );
        if let Some(c) = &self.counterexample {
            line.push_str(&format!(" counterexample: {c}"));
        }
        line
    }
}
