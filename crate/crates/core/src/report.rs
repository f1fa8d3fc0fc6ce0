//! Check reports shared by the bound checks and the verification suites.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::{Serialize, Serializer};
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped(String),
}

impl Status {
    pub fn is_fail(&self) -> bool {
        matches!(self, Status::Fail)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => f.write_str("pass"),
            Status::Fail => f.write_str("fail"),
            Status::Skipped(reason) => write!(f, "skipped({reason})"),
        }
    }
}

impl Serialize for Status {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Outcome of one named check on one group.
#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct CheckReport {
    pub check_name: String,
    pub group_name: String,
    pub inputs: BTreeMap<String, Value>,
    pub computed: BTreeMap<String, Value>,
    pub status: Status,
    pub margin: Option<i64>,
}

/// JSON number for an order, falling back to a string past `u64`.
pub fn order_value(n: u128) -> Value {
    match u64::try_from(n) {
        Ok(n) => Value::from(n),
        Err(_) => Value::from(n.to_string()),
    }
}

impl CheckReport {
    pub fn new(check_name: impl Into<String>, group_name: impl Into<String>) -> Self {
        CheckReport {
            check_name: check_name.into(),
            group_name: group_name.into(),
            inputs: BTreeMap::new(),
            computed: BTreeMap::new(),
            status: Status::Pass,
            margin: None,
        }
    }

    pub fn input(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.inputs.insert(key.to_string(), value.into());
        self
    }

    pub fn computed(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.computed.insert(key.to_string(), value.into());
        self
    }

    pub fn record(&mut self, key: &str, value: impl Into<Value>) {
        self.computed.insert(key.to_string(), value.into());
    }

    pub fn verdict(mut self, pass: bool) -> Self {
        self.status = if pass { Status::Pass } else { Status::Fail };
        self
    }

    pub fn skipped(mut self, reason: impl Into<String>) -> Self {
        self.status = Status::Skipped(reason.into());
        self
    }

    pub fn margin(mut self, bound: i64, attained: i64) -> Self {
        self.margin = Some(bound - attained);
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}
