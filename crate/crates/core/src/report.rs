//! Machine- and human-readable result reports.
//!
//! Reports are fully determined by their inputs: no timestamps, timings,
//! hostnames, or thread counts, so the same scenario produces byte-identical
//! output on every run at any parallelism.

use std::fmt;

use serde::Serialize;

pub const REPORT_FORMAT: &str = "conecert-report/1";

/// Caveat attached whenever any assignment is merely exhausted.
pub const EXHAUSTED_NOTE: &str = "exhausted assignments only bound the search; \
exhaustion is never evidence of left-orderability.";

/// Caveat attached whenever any assignment falls outside a certificate
/// construction and carries a fallback-search status instead.
pub const REPORTED_ONLY_NOTE: &str = "assignments marked [reported only] fall outside \
the certificate construction; their bounded-search status is reported, not adjudicated.";

/// Overall outcome of a scenario.
///
/// `NotLeftOrderable` is asserted only when every sign assignment carries a
/// verified identity-product witness.  `Inconclusive` means some assignment
/// lacks one (exhausted search or failed verification) — never a claim of
/// left-orderability.  `ChecksOnly` marks scenarios with no element list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "NOT-LEFT-ORDERABLE")]
    NotLeftOrderable,
    #[serde(rename = "INCONCLUSIVE")]
    Inconclusive,
    #[serde(rename = "CHECKS-ONLY")]
    ChecksOnly,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::NotLeftOrderable => "NOT-LEFT-ORDERABLE",
            Verdict::Inconclusive => "INCONCLUSIVE",
            Verdict::ChecksOnly => "CHECKS-ONLY",
        })
    }
}

/// Outcome of one sign assignment.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RowStatus {
    /// A witness product was found or supplied, and re-verified to be the
    /// identity.
    Verified,
    /// Bounded search found nothing up to the given product length.
    Exhausted { depth: usize },
    /// A supplied witness did not verify; carries the reduced value.
    Failed { reason: String },
}

impl fmt::Display for RowStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RowStatus::Verified => f.write_str("verified"),
            RowStatus::Exhausted { depth } => write!(f, "exhausted(depth={depth})"),
            RowStatus::Failed { reason } => write!(f, "FAILED: {reason}"),
        }
    }
}

/// One line of the per-assignment table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AssignmentRow {
    /// One `+`/`-` per list element, e.g. `+-++`.
    pub signs: String,
    pub status: RowStatus,
    /// Witness as indices into the element list; each index is used with
    /// the sign this row assigns it.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    /// The same witness spelled with element names.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_text: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub length: Option<usize>,
    /// True when the status comes from a fallback bounded search rather
    /// than the certificate constructor; such rows are informational and
    /// are not adjudicated by the construction.
    pub reported_only: bool,
}

/// A named pass/fail entry from the group-checks phase.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> CheckResult {
        CheckResult { name: name.into(), passed, detail: detail.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub format: &'static str,
    pub scenario: String,
    pub verdict: Verdict,
    pub checks: Vec<CheckResult>,
    pub elements: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub depth: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mode: Option<String>,
    /// Seed used by any randomized property checks (aggregate runs); plain
    /// scenario runs are deterministic and record it only for provenance.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub assignments: Vec<AssignmentRow>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(scenario: impl Into<String>, verdict: Verdict) -> Report {
        Report {
            format: REPORT_FORMAT,
            scenario: scenario.into(),
            verdict,
            checks: Vec::new(),
            elements: Vec::new(),
            depth: None,
            mode: None,
            seed: None,
            assignments: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn any_check_failed(&self) -> bool {
        self.checks.iter().any(|c| !c.passed)
    }

    pub fn any_verification_failure(&self) -> bool {
        self.assignments.iter().any(|r| matches!(r.status, RowStatus::Failed { .. }))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        line(format!("{} — scenario {}", REPORT_FORMAT, self.scenario));
        line(format!("verdict: {}", self.verdict));
        if !self.checks.is_empty() {
            line("checks:".to_string());
            for c in &self.checks {
                let mark = if c.passed { "pass" } else { "FAIL" };
                line(format!("  [{mark}] {} — {}", c.name, c.detail));
            }
        }
        if !self.elements.is_empty() {
            line(format!("elements: {}", self.elements.join(", ")));
        }
        if let Some(seed) = self.seed {
            line(format!("seed: {seed}"));
        }
        if let Some(d) = self.depth {
            let mode = self.mode.as_deref().unwrap_or("bfs");
            line(format!("assignments (depth {d}, mode {mode}):"));
        } else if !self.assignments.is_empty() {
            line("assignments:".to_string());
        }
        for row in &self.assignments {
            let mut entry = format!("  {}  {}", row.signs, row.status);
            if let Some(len) = row.length {
                entry.push_str(&format!("  length {len}"));
            }
            if let Some(text) = &row.witness_text {
                entry.push_str(&format!("  witness: {text}"));
            }
            if row.reported_only {
                entry.push_str("  [reported only]");
            }
            line(entry);
        }
        for note in &self.notes {
            line(format!("note: {note}"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut r = Report::new("demo", Verdict::Inconclusive);
        r.checks.push(CheckResult::new("rank", true, "rank = 8"));
        r.elements = vec!["a".into(), "b".into()];
        r.depth = Some(4);
        r.mode = Some("bfs".into());
        r.assignments.push(AssignmentRow {
            signs: "++".into(),
            status: RowStatus::Verified,
            witness: Some(vec![0, 1]),
            witness_text: Some("a b".into()),
            length: Some(2),
            reported_only: false,
        });
        r.assignments.push(AssignmentRow {
            signs: "-+".into(),
            status: RowStatus::Exhausted { depth: 4 },
            witness: None,
            witness_text: None,
            length: None,
            reported_only: true,
        });
        r.notes.push("exhausted rows bound the search only".into());
        r
    }

    #[test]
    fn serialization_is_deterministic() {
        let a = sample().to_json();
        let b = sample().to_json();
        assert_eq!(a, b);
        assert!(a.contains("\"INCONCLUSIVE\""));
        assert!(a.contains("\"exhausted\""));
        assert!(a.ends_with('\n'));

        let t = sample().to_text();
        assert!(t.contains("verdict: INCONCLUSIVE"));
        assert!(t.contains("exhausted(depth=4)"));
        assert!(t.contains("[reported only]"));
        assert!(t.contains("[pass] rank"));
    }

    #[test]
    fn failure_predicates() {
        let mut r = sample();
        assert!(!r.any_verification_failure());
        assert!(!r.any_check_failed());
        r.assignments[0].status = RowStatus::Failed { reason: "reduced to a^2".into() };
        assert!(r.any_verification_failure());
        r.checks[0].passed = false;
        assert!(r.any_check_failed());
    }
}
