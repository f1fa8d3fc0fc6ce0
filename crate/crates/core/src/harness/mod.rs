//! Verification suites over the corpus and their JSON/CSV reports.

mod emit;
mod suites;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

pub use emit::{to_csv, to_json};

use crate::caps::Caps;
use crate::corpus::{corpus_with_caps, khukhro_entries, CorpusEntry, KhukhroEntry};
use crate::error::{Error, Result};
use crate::report::{CheckReport, Status};
use crate::simplerec::RecognitionTable;

pub const SUITES: &[&str] = &["cdim-bounds", "structure", "radical-relations", "khukhro", "finext", "theorem2-data"];

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn of(reports: &[CheckReport]) -> Self {
        let mut s = Summary { total: reports.len(), ..Summary::default() };
        for r in reports {
            match r.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Skipped(_) => s.skipped += 1,
            }
        }
        s
    }
}

/// Rows of recorded data with no verdict attached.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DataTable {
    pub name: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteResult {
    pub suite: String,
    pub reports: Vec<CheckReport>,
    pub summary: Summary,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub tables: Vec<DataTable>,
}

impl SuiteResult {
    fn new(suite: &str, reports: Vec<CheckReport>, tables: Vec<DataTable>) -> Self {
        SuiteResult { suite: suite.to_string(), summary: Summary::of(&reports), reports, tables }
    }

    pub fn has_failures(&self) -> bool {
        self.summary.fail > 0
    }
}

/// Inputs shared by all suites.
pub struct Verifier {
    pub corpus: Vec<CorpusEntry>,
    pub khukhro: Vec<KhukhroEntry>,
    pub table: RecognitionTable,
    pub caps: Caps,
}

impl Verifier {
    pub fn new(caps: Caps) -> Result<Self> {
        Verifier::with_table(caps, RecognitionTable::builtin().clone())
    }

    pub fn with_table(caps: Caps, table: RecognitionTable) -> Result<Self> {
        let khukhro = khukhro_entries()?
            .into_iter()
            .map(|mut k| {
                k.group = k.group.recapped(caps);
                k.q = k.q.reparent(&k.group)?;
                k.e = k.e.reparent(&k.group)?;
                Ok(k)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Verifier { corpus: corpus_with_caps(caps)?, khukhro, table, caps })
    }

    pub fn entry(&self, name: &str) -> Option<&CorpusEntry> {
        self.corpus.iter().find(|e| e.name == name)
    }

    pub fn run(&self, suite: &str) -> Result<SuiteResult> {
        match suite {
            "cdim-bounds" => Ok(self.suite_cdim_bounds()),
            "structure" => Ok(self.suite_structure()),
            "radical-relations" => Ok(self.suite_radical_relations()),
            "khukhro" => Ok(self.suite_khukhro()),
            "finext" => Ok(self.suite_finext()),
            "theorem2-data" => Ok(self.suite_theorem2_data()),
            other => Err(Error::Unsupported(format!("unknown suite `{other}`"))),
        }
    }

    pub fn run_all(&self) -> Vec<SuiteResult> {
        SUITES.iter().map(|s| self.run(s).expect("known suite")).collect()
    }

    /// Applies `f` to every corpus entry in parallel, keeping corpus order.
    fn per_entry<F>(&self, f: F) -> Vec<CheckReport>
    where
        F: Fn(&CorpusEntry) -> Vec<CheckReport> + Sync + Send,
    {
        self.corpus.par_iter().map(f).collect::<Vec<_>>().into_iter().flatten().collect()
    }
}

/// Runs a check, turning cap errors into skips and other errors into
/// failures that carry the message.
pub(crate) fn guarded(check: &str, group: &str, f: impl FnOnce() -> Result<CheckReport>) -> CheckReport {
    match f() {
        Ok(r) => r,
        Err(e @ (Error::CapExceeded { .. } | Error::LatticeTooLarge(_))) => {
            CheckReport::new(check, group).skipped(format!("cap: {e}"))
        }
        Err(e) => CheckReport::new(check, group).computed("error", e.to_string()).verdict(false),
    }
}

pub fn suite_cdim_bounds() -> Result<SuiteResult> {
    Ok(Verifier::new(Caps::from_env()?)?.suite_cdim_bounds())
}

pub fn suite_structure() -> Result<SuiteResult> {
    Ok(Verifier::new(Caps::from_env()?)?.suite_structure())
}

pub fn suite_radical_relations() -> Result<SuiteResult> {
    Ok(Verifier::new(Caps::from_env()?)?.suite_radical_relations())
}

pub fn suite_khukhro() -> Result<SuiteResult> {
    Ok(Verifier::new(Caps::from_env()?)?.suite_khukhro())
}

pub fn suite_finext() -> Result<SuiteResult> {
    Ok(Verifier::new(Caps::from_env()?)?.suite_finext())
}

pub fn suite_theorem2_data() -> Result<SuiteResult> {
    Ok(Verifier::new(Caps::from_env()?)?.suite_theorem2_data())
}

pub(crate) fn table(name: &str, columns: &[&str], rows: Vec<Vec<Value>>) -> DataTable {
    DataTable { name: name.to_string(), columns: columns.iter().map(|c| c.to_string()).collect(), rows }
}
