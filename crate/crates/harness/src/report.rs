//! Aggregation of verdict logs.

use std::collections::BTreeMap;
use std::fmt;

use qcong::families::{FamilyId, Sign};

use crate::record::{Status, VerdictRecord};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Counts {
    pub verified: usize,
    pub failed: usize,
    pub counterexamples: usize,
    pub skipped: usize,
}

impl Counts {
    pub fn add(&mut self, status: Status) {
        match status {
            Status::Verified => self.verified += 1,
            Status::Failed => self.failed += 1,
            Status::Counterexample => self.counterexamples += 1,
            Status::Skipped => self.skipped += 1,
        }
    }

    pub fn merge(&mut self, other: &Counts) {
        self.verified += other.verified;
        self.failed += other.failed;
        self.counterexamples += other.counterexamples;
        self.skipped += other.skipped;
    }

    pub fn total(&self) -> usize {
        self.verified + self.failed + self.counterexamples + self.skipped
    }

    /// 1 when a proven family failed, else 2 on a counterexample, else 0.
    pub fn exit_code(&self) -> i32 {
        if self.failed > 0 {
            1
        } else if self.counterexamples > 0 {
            2
        } else {
            0
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LogSummary {
    pub rows: BTreeMap<(FamilyId, Option<Sign>), Counts>,
    pub totals: Counts,
    pub notable: Vec<VerdictRecord>,
}

pub fn summarize(records: &[VerdictRecord]) -> LogSummary {
    let mut s = LogSummary::default();
    for r in records {
        s.rows.entry((r.family, r.variant)).or_default().add(r.status);
        s.totals.add(r.status);
        if matches!(r.status, Status::Failed | Status::Counterexample) {
            s.notable.push(r.clone());
        }
    }
    s
}

impl fmt::Display for LogSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let line = |f: &mut fmt::Formatter<'_>, fam: &str, var: &str, c: &Counts| {
            writeln!(
                f,
                "{fam:<12} {var:<7} {:>9} {:>7} {:>15} {:>8} {:>8}",
                c.verified,
                c.failed,
                c.counterexamples,
                c.skipped,
                c.total()
            )
        };
        writeln!(
            f,
            "{:<12} {:<7} {:>9} {:>7} {:>15} {:>8} {:>8}",
            "family", "variant", "verified", "failed", "counterexample", "skipped", "total"
        )?;
        for ((fam, var), c) in &self.rows {
            let var = var.map(|s| s.to_string()).unwrap_or_else(|| "-".into());
            line(f, fam.name(), &var, c)?;
        }
        line(f, "TOTAL", "", &self.totals)?;
        for r in &self.notable {
            let var = r.variant.map(|s| format!(" {s}")).unwrap_or_default();
            writeln!(f, "{:?}: {} {}{}", r.status, r.family, r.params, var)?;
        }
        Ok(())
    }
}
