mod common;

use centra::harness::{to_csv, to_json, Summary, Verifier, SUITES};
use centra::report::{CheckReport, Status};
use centra::simplerec::RecognitionTable;
use centra::Caps;
use common::{longest_chain, Finite};
use serde_json::Value;

fn count(reports: &[CheckReport], pred: impl Fn(&Status) -> bool) -> usize {
    reports.iter().filter(|r| pred(&r.status)).count()
}

#[test]
fn cdim_bounds_suite() {
    let v = Verifier::new(Caps::default()).unwrap();
    let s = v.run("cdim-bounds").unwrap();
    assert_eq!(s.reports.len(), 3 + 5 + 7);
    assert_eq!(s.summary.fail, 0, "{:#?}", s.reports);
    assert_eq!(s.summary.total, s.reports.len());
    assert_eq!(s.summary.pass + s.summary.fail + s.summary.skipped, s.summary.total);
    assert_eq!(s.summary, Summary::of(&s.reports));

    for r in &s.reports {
        let name = r.group_name.as_str();
        if !["GL(2,2)", "GL(2,3)", "A4", "A5", "PSL(2,7)"].contains(&name) {
            continue;
        }
        let g = v.entry(name).unwrap().group.clone();
        let expected = longest_chain(&Finite::new(&g).centralizer_lattice()) + 1;
        assert_eq!(r.computed["cdim_terms"], expected as i64, "{name}");
    }
}

#[test]
fn summaries_are_consistent() {
    let v = Verifier::new(Caps::default()).unwrap();
    for suite in ["khukhro", "theorem2-data"] {
        let s = v.run(suite).unwrap();
        assert_eq!(s.summary.pass, count(&s.reports, |st| *st == Status::Pass));
        assert_eq!(s.summary.fail, count(&s.reports, Status::is_fail));
        assert_eq!(s.summary.skipped, count(&s.reports, |st| matches!(st, Status::Skipped(_))));
        assert!(!s.has_failures(), "{suite}");
    }
    assert!(v.run("no-such-suite").is_err());
    assert_eq!(SUITES.len(), 6);
}

#[test]
fn json_layout() {
    let v = Verifier::new(Caps::default()).unwrap();
    let one = v.run("khukhro").unwrap();
    let parsed: Value = serde_json::from_str(&to_json(std::slice::from_ref(&one), 7)).unwrap();
    for key in ["suite", "reports", "summary", "tool_version", "timestamp"] {
        assert!(parsed.get(key).is_some(), "missing {key}");
    }
    assert_eq!(parsed["timestamp"], 7);
    assert_eq!(parsed["reports"].as_array().unwrap().len(), one.reports.len());
    let report = &parsed["reports"][0];
    for key in ["check_name", "group_name", "inputs", "computed", "status", "margin"] {
        assert!(report.get(key).is_some(), "report missing {key}");
    }
    assert_eq!(report["status"], "pass");

    let two = vec![one.clone(), v.run("theorem2-data").unwrap()];
    let parsed: Value = serde_json::from_str(&to_json(&two, 7)).unwrap();
    assert_eq!(parsed.as_array().unwrap().len(), 2);
    assert!(!parsed[1]["tables"].as_array().unwrap().is_empty());

    let again = v.run("khukhro").unwrap();
    assert_eq!(to_json(&[again], 7), to_json(&[one], 7));
}

#[test]
fn csv_layout() {
    let v = Verifier::new(Caps::default()).unwrap();
    let s = v.run("cdim-bounds").unwrap();
    let text = to_csv(std::slice::from_ref(&s)).unwrap();
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let header: Vec<String> = reader.headers().unwrap().iter().map(str::to_string).collect();
    assert_eq!(header, ["suite", "check_name", "group_name", "inputs", "computed", "status", "margin"]);
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), s.reports.len());
    for row in &rows {
        assert_eq!(&row[0], "cdim-bounds");
        let computed: Value = serde_json::from_str(&row[4]).unwrap();
        assert!(computed.get("cdim_terms").is_some());
    }
}

#[test]
fn tight_caps_become_skips() {
    let caps = Caps { enumeration: 200, ..Caps::default() };
    let v = Verifier::new(caps).unwrap();
    let s = v.run("cdim-bounds").unwrap();
    assert_eq!(s.summary.fail, 0);
    let a7 = s.reports.iter().find(|r| r.group_name == "A7").unwrap();
    match &a7.status {
        Status::Skipped(reason) => assert!(reason.starts_with("cap"), "{reason}"),
        other => panic!("A7 under a 200-element cap gave {other}"),
    }
    let a4 = s.reports.iter().find(|r| r.group_name == "A4").unwrap();
    assert_eq!(a4.status, Status::Pass);
}

#[test]
fn shifted_table_fails_and_reproduces() {
    let text = include_str!("fixtures/shifted_table.txt");
    let table = RecognitionTable::parse(text).unwrap();
    let caps = Caps::default();
    let v = Verifier::with_table(caps, table.clone()).unwrap();
    let s = v.run("radical-relations").unwrap();
    let failing: Vec<&CheckReport> = s.reports.iter().filter(|r| r.status.is_fail()).collect();
    assert!(!failing.is_empty());
    assert!(failing.iter().any(|r| r.group_name == "A5"));
    for r in failing.iter().filter(|r| r.check_name == "factor_count") {
        assert!(r.computed.contains_key("error"), "{r:?}");
        let g = v.entry(&r.group_name).unwrap().group.clone();
        assert!(centra::simplerec::check_factor_count_with(&g, &table, &r.group_name).is_err());
    }
}
