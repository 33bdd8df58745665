//! Regression of computed `(chi, tau)` against expectations.

use crate::batch::FanResult;
use crate::error::HarnessError;
use crate::reference::ReferenceTable;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckStatus {
    Match,
    Mismatch {
        expected: (i64, i64),
        computed: (i64, i64),
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckEntry {
    pub id: String,
    pub origin: String,
    pub status: CheckStatus,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckSummary {
    pub entries: Vec<CheckEntry>,
    pub matched: usize,
    pub mismatched: usize,
}

impl CheckSummary {
    fn push(&mut self, id: &str, origin: &str, expected: (i64, i64), computed: (i64, i64)) {
        let status = if expected == computed {
            self.matched += 1;
            CheckStatus::Match
        } else {
            self.mismatched += 1;
            CheckStatus::Mismatch { expected, computed }
        };
        self.entries.push(CheckEntry {
            id: id.to_string(),
            origin: origin.to_string(),
            status,
        });
    }

    pub fn exit_code(&self) -> i32 {
        if self.mismatched > 0 {
            2
        } else {
            0
        }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            match &e.status {
                CheckStatus::Match => out.push_str(&format!("match    id {} ({})\n", e.id, e.origin)),
                CheckStatus::Mismatch { expected, computed } => out.push_str(&format!(
                    "MISMATCH id {} ({}): expected {:?}, computed {:?}\n",
                    e.id, e.origin, expected, computed
                )),
            }
        }
        out.push_str(&format!(
            "{} matched, {} mismatched\n",
            self.matched, self.mismatched
        ));
        out
    }
}

/// Compares every successful report against its table row.
/// Failed computations are skipped; they are reported elsewhere.
pub fn check_reference(results: &[FanResult], table: &ReferenceTable) -> Result<CheckSummary, HarnessError> {
    let mut summary = CheckSummary::default();
    for r in results {
        let Ok(report) = &r.outcome else { continue };
        let row = table
            .get(r.id())
            .ok_or_else(|| HarnessError::UnknownId(r.id().to_string()))?;
        summary.push(
            r.id(),
            &r.origin,
            (row.chi_m, row.tau_m),
            (report.chi_m, report.tau_m),
        );
    }
    Ok(summary)
}

/// Compares reports against the `expect` lines of their own files.
pub fn check_expectations(results: &[FanResult]) -> CheckSummary {
    let mut summary = CheckSummary::default();
    for r in results {
        let (Ok(report), Some(expected)) = (&r.outcome, r.file.as_ref().and_then(|f| f.expected)) else {
            continue;
        };
        summary.push(r.id(), &r.origin, expected, (report.chi_m, report.tau_m));
    }
    summary
}
