use serde::Serialize;
use serde_json::{json, Value};

use super::SuiteResult;
use crate::error::{Error, Result};

fn suite_value(s: &SuiteResult, timestamp: u64) -> Value {
    let mut v = serde_json::to_value(s).expect("reports serialize");
    let obj = v.as_object_mut().expect("suite is an object");
    obj.insert("tool_version".into(), json!(env!("CARGO_PKG_VERSION")));
    obj.insert("timestamp".into(), json!(timestamp));
    v
}

/// One suite becomes an object, several become an array of objects.
pub fn to_json(results: &[SuiteResult], timestamp: u64) -> String {
    let value = match results {
        [one] => suite_value(one, timestamp),
        many => Value::Array(many.iter().map(|s| suite_value(s, timestamp)).collect()),
    };
    let mut out = serde_json::to_string_pretty(&value).expect("json");
    out.push('\n');
    out
}

#[derive(Serialize)]
struct CsvRow<'a> {
    suite: &'a str,
    check_name: &'a str,
    group_name: &'a str,
    inputs: String,
    computed: String,
    status: String,
    margin: Option<i64>,
}

/// One row per report; `inputs` and `computed` hold JSON objects.
pub fn to_csv(results: &[SuiteResult]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for s in results {
        for r in &s.reports {
            w.serialize(CsvRow {
                suite: &s.suite,
                check_name: &r.check_name,
                group_name: &r.group_name,
                inputs: serde_json::to_string(&r.inputs).expect("json"),
                computed: serde_json::to_string(&r.computed).expect("json"),
                status: r.status.to_string(),
                margin: r.margin,
            })
            .map_err(|e| Error::Malformed(e.to_string()))?;
        }
    }
    let bytes = w.into_inner().map_err(|e| Error::Malformed(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv is utf-8"))
}
