use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

/// One compared pair.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CaseRecord {
    pub case_id: String,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
    /// Elapsed milliseconds; `None` when timings are suppressed.
    pub ms: Option<f64>,
}

impl CaseRecord {
    pub fn new(case_id: impl Into<String>, lhs: String, rhs: String) -> Self {
        let pass = lhs == rhs;
        CaseRecord { case_id: case_id.into(), lhs, rhs, pass, ms: None }
    }
}

/// What a case computes: both sides plus an optional warning.
pub struct Outcome {
    pub lhs: String,
    pub rhs: String,
    pub warning: Option<String>,
}

impl Outcome {
    pub fn new(lhs: impl ToString, rhs: impl ToString) -> Self {
        Outcome { lhs: lhs.to_string(), rhs: rhs.to_string(), warning: None }
    }

    pub fn with_warning(mut self, w: Option<String>) -> Self {
        self.warning = w;
        self
    }
}

pub(crate) type CaseFn = Box<dyn Fn() -> Outcome + Send + Sync>;

/// A case id with its deferred computation.
pub(crate) struct Case {
    pub id: String,
    pub run: CaseFn,
}

impl Case {
    pub fn new(id: impl Into<String>, run: impl Fn() -> Outcome + Send + Sync + 'static) -> Self {
        Case { id: id.into(), run: Box::new(run) }
    }

    pub fn execute(&self) -> (CaseRecord, Option<String>) {
        let start = Instant::now();
        let out = (self.run)();
        let ms = start.elapsed().as_secs_f64() * 1000.0;
        let mut rec = CaseRecord::new(self.id.clone(), out.lhs, out.rhs);
        rec.ms = Some((ms * 1000.0).round() / 1000.0);
        (rec, out.warning.map(|w| format!("{}: {w}", self.id)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Report {
    pub suite: String,
    pub params: BTreeMap<String, serde_json::Value>,
    pub tool_version: String,
    pub cases: Vec<CaseRecord>,
    pub summary: Summary,
    pub warnings: Vec<String>,
}

impl Report {
    pub fn new(suite: &str, params: BTreeMap<String, serde_json::Value>, cases: Vec<CaseRecord>, warnings: Vec<String>) -> Self {
        let passed = cases.iter().filter(|c| c.pass).count();
        let summary = Summary { total: cases.len(), passed, failed: cases.len() - passed };
        Report {
            suite: suite.to_string(),
            params,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            cases,
            summary,
            warnings,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn strip_timings(&mut self) {
        for c in &mut self.cases {
            c.ms = None;
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["caseId", "lhs", "rhs", "pass", "ms"]).expect("in-memory write");
        for c in &self.cases {
            let ms = c.ms.map(|m| m.to_string()).unwrap_or_default();
            w.write_record([c.case_id.as_str(), &c.lhs, &c.rhs, if c.pass { "true" } else { "false" }, &ms])
                .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let _ = writeln!(out, "suite {} ({}) version {}", self.suite, params.join(", "), self.tool_version);
        for c in &self.cases {
            let status = if c.pass { "PASS" } else { "FAIL" };
            let _ = write!(out, "{status} {}", c.case_id);
            if !c.pass {
                let _ = write!(out, ": lhs = {} ; rhs = {}", c.lhs, c.rhs);
            }
            if let Some(ms) = c.ms {
                let _ = write!(out, " [{ms} ms]");
            }
            out.push('\n');
        }
        for w in &self.warnings {
            let _ = writeln!(out, "warning: {w}");
        }
        let s = self.summary;
        let _ = writeln!(out, "total {} passed {} failed {}", s.total, s.passed, s.failed);
        out
    }
}
