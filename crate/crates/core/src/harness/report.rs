use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Entry {
    pub graph6: String,
    pub detail: String,
}

/// Outcome of one check over one corpus. Entries are sorted by graph6 key,
/// so everything except `elapsed_ms` is deterministic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub corpus: String,
    /// Graphs produced by the source before filtering.
    pub considered: usize,
    pub scanned: usize,
    /// Hard assertion failures.
    pub violations: Vec<Entry>,
    /// Outcomes of contested claims; never affect the exit status.
    pub findings: Vec<Entry>,
    /// graph6 keys of graphs that exceeded the per-graph budget.
    pub timeouts: Vec<String>,
    pub counters: BTreeMap<String, u64>,
    pub notes: Vec<String>,
    pub elapsed_ms: u64,
    pub version: String,
}

#[derive(Serialize)]
struct Body<'a> {
    check: &'a str,
    corpus: &'a str,
    considered: usize,
    scanned: usize,
    violations: &'a [Entry],
    findings: &'a [Entry],
    timeouts: &'a [String],
    counters: &'a BTreeMap<String, u64>,
    notes: &'a [String],
    version: &'a str,
}

impl CheckReport {
    pub fn new(check: &str, corpus: &str) -> CheckReport {
        CheckReport {
            check: check.to_string(),
            corpus: corpus.to_string(),
            considered: 0,
            scanned: 0,
            violations: Vec::new(),
            findings: Vec::new(),
            timeouts: Vec::new(),
            counters: BTreeMap::new(),
            notes: Vec::new(),
            elapsed_ms: 0,
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    pub(crate) fn finish(&mut self, elapsed: Duration) {
        self.violations.sort();
        self.findings.sort();
        self.timeouts.sort();
        self.elapsed_ms = elapsed.as_millis() as u64;
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn counter(&self, key: &str) -> u64 {
        self.counters.get(key).copied().unwrap_or(0)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The report without timing, for byte-level comparisons.
    pub fn body_json(&self) -> String {
        let body = Body {
            check: &self.check,
            corpus: &self.corpus,
            considered: self.considered,
            scanned: self.scanned,
            violations: &self.violations,
            findings: &self.findings,
            timeouts: &self.timeouts,
            counters: &self.counters,
            notes: &self.notes,
            version: &self.version,
        };
        serde_json::to_string_pretty(&body).expect("report serializes")
    }

    pub fn findings_json(&self) -> String {
        serde_json::to_string_pretty(&self.findings).expect("findings serialize")
    }

    /// One row per violation, finding or timeout.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["graph6", "check", "kind", "detail"]).unwrap();
        for (kind, entries) in [("violation", &self.violations), ("finding", &self.findings)] {
            for e in entries {
                w.write_record([e.graph6.as_str(), self.check.as_str(), kind, e.detail.as_str()]).unwrap();
            }
        }
        for t in &self.timeouts {
            w.write_record([t.as_str(), self.check.as_str(), "timeout", ""]).unwrap();
        }
        String::from_utf8(w.into_inner().unwrap()).unwrap()
    }

    pub fn to_human(&self) -> String {
        let mut s = String::new();
        let status = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(s, "{} [{status}]", self.check).unwrap();
        writeln!(s, "  corpus:     {}", self.corpus).unwrap();
        writeln!(s, "  considered: {}", self.considered).unwrap();
        writeln!(s, "  scanned:    {}", self.scanned).unwrap();
        writeln!(s, "  violations: {}", self.violations.len()).unwrap();
        writeln!(s, "  findings:   {}", self.findings.len()).unwrap();
        writeln!(s, "  timeouts:   {}", self.timeouts.len()).unwrap();
        for (k, v) in &self.counters {
            writeln!(s, "  {k}: {v}").unwrap();
        }
        for n in &self.notes {
            writeln!(s, "  note: {n}").unwrap();
        }
        for (title, entries) in [("violations", &self.violations), ("findings", &self.findings)] {
            if !entries.is_empty() {
                writeln!(s, "{title}:").unwrap();
                for e in entries {
                    writeln!(s, "  {}  {}", e.graph6, e.detail).unwrap();
                }
            }
        }
        if !self.timeouts.is_empty() {
            writeln!(s, "timeouts:").unwrap();
            for t in &self.timeouts {
                writeln!(s, "  {t}").unwrap();
            }
        }
        writeln!(s, "elapsed: {} ms, version {}", self.elapsed_ms, self.version).unwrap();
        s
    }
}
