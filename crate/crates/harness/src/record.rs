//! The JSONL verdict log: one self-describing record per tuple.

use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;
use std::time::{Duration, SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};

use qcong::congruence::Fingerprint;
use qcong::families::{FamilyId, Params, Sign};
use qcong::Strategy;

use crate::config::Tuple;
use crate::error::{HarnessError, Result};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    /// A proven family did not hold: a bug.
    Failed,
    /// A conjectural instance did not hold.
    Counterexample,
    /// Parameters outside the family's constraints.
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub schema: u32,
    pub family: FamilyId,
    pub params: Params,
    pub variant: Option<Sign>,
    pub status: Status,
    pub holds: Option<bool>,
    pub modulus: Option<String>,
    pub fingerprint: Option<Fingerprint>,
    /// `(exponent, coefficient)` of the lowest remainder term.
    pub remainder_low_term: Option<(i64, String)>,
    pub reason: Option<String>,
    pub strategy: Strategy,
    pub elapsed_ms: u64,
    pub version: String,
    pub timestamp: u64,
}

impl VerdictRecord {
    pub fn new(family: FamilyId, tuple: &Tuple, status: Status, strategy: Strategy, elapsed: Duration) -> Self {
        VerdictRecord {
            schema: SCHEMA_VERSION,
            family,
            params: tuple.params.clone(),
            variant: tuple.variant,
            status,
            holds: None,
            modulus: None,
            fingerprint: None,
            remainder_low_term: None,
            reason: None,
            strategy,
            elapsed_ms: elapsed.as_millis() as u64,
            version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp: SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0),
        }
    }

    pub fn tuple(&self) -> Tuple {
        Tuple { params: self.params.clone(), variant: self.variant }
    }

    /// The record with timing fields zeroed, for comparisons across runs.
    pub fn untimed(&self) -> Self {
        VerdictRecord { elapsed_ms: 0, timestamp: 0, ..self.clone() }
    }

    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }
}

/// Reads every record. With `tolerate_partial_tail`, an unterminated last
/// line (an interrupted write) is dropped instead of rejected; the returned
/// offset is where the complete records end.
pub fn read_log(path: &Path, tolerate_partial_tail: bool) -> Result<(Vec<VerdictRecord>, u64)> {
    let file = File::open(path).map_err(HarnessError::io(path))?;
    let mut reader = BufReader::new(file);
    let mut out = Vec::new();
    let mut offset = 0u64;
    let mut buf = String::new();
    let mut line_no = 0;
    loop {
        buf.clear();
        let n = reader.read_line(&mut buf).map_err(HarnessError::io(path))?;
        if n == 0 {
            break;
        }
        line_no += 1;
        let complete = buf.ends_with('\n');
        let text = buf.trim();
        if text.is_empty() {
            offset += n as u64;
            continue;
        }
        let bad = |msg: String| HarnessError::Log { path: path.to_path_buf(), line: line_no, msg };
        match serde_json::from_str::<VerdictRecord>(text) {
            Ok(rec) if rec.schema != SCHEMA_VERSION => {
                return Err(bad(format!("unsupported schema version {}", rec.schema)));
            }
            Ok(rec) if complete || !tolerate_partial_tail => {
                out.push(rec);
                offset += n as u64;
            }
            Ok(_) => break,
            Err(_) if !complete && tolerate_partial_tail => break,
            Err(e) => return Err(bad(e.to_string())),
        }
    }
    Ok((out, offset))
}
