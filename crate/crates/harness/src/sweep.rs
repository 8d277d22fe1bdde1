//! Lattice enumeration, parallel evaluation and the ordered log writer.

use std::collections::BTreeSet;
use std::fs::OpenOptions;
use std::io::{BufWriter, Write};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use qcong::families::SumSpec;

use crate::config::{SweepConfig, Tuple};
use crate::error::{HarnessError, Result};
use crate::record::{read_log, Status, VerdictRecord};
use crate::report::Counts;

/// Tuples evaluated between two flushes of the log.
const CHUNK: usize = 64;

pub const THREADS_ENV: &str = "QCONG_THREADS";

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepReport {
    /// Outcomes of the tuples executed by this run.
    pub counts: Counts,
    /// Tuples already present in the log on resume.
    pub resumed: usize,
    /// Tuples left unexecuted after a counterexample stopped the sweep.
    pub not_run: usize,
    pub failures: Vec<VerdictRecord>,
    pub counterexamples: Vec<VerdictRecord>,
    pub elapsed: Duration,
}

impl SweepReport {
    pub fn executed(&self) -> usize {
        self.counts.total()
    }

    pub fn exit_code(&self) -> i32 {
        self.counts.exit_code()
    }
}

pub fn thread_count(cfg: &SweepConfig) -> usize {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
        .or(cfg.threads)
        .unwrap_or_else(|| std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1))
}

/// Evaluates one tuple; constraint violations become skipped records.
pub fn evaluate(cfg: &SweepConfig, tuple: &Tuple) -> VerdictRecord {
    let spec = SumSpec::new(cfg.family, tuple.params.clone(), tuple.variant).with_regime(cfg.regime());
    let start = Instant::now();
    let built = spec.build();
    let (status, rest) = match built {
        Err(e) => (Status::Skipped, Err(e.to_string())),
        Ok(inst) => {
            let v = inst.check(cfg.strategy);
            let status = match (v.holds, spec.is_conjectural()) {
                (true, _) => Status::Verified,
                (false, false) => Status::Failed,
                (false, true) => Status::Counterexample,
            };
            (status, Ok((inst.modulus.description.clone(), v)))
        }
    };
    let mut rec = VerdictRecord::new(cfg.family, tuple, status, cfg.strategy, start.elapsed());
    match rest {
        Err(reason) => rec.reason = Some(reason),
        Ok((modulus, v)) => {
            rec.holds = Some(v.holds);
            rec.modulus = Some(modulus);
            rec.fingerprint = v.fingerprint;
            rec.remainder_low_term = v.remainder_low_term.map(|(e, c)| (e, c.to_string()));
        }
    }
    rec
}

/// Runs the sweep, appending one record per executed tuple in lattice order.
pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepReport> {
    run_sweep_with(cfg, evaluate)
}

/// [`run_sweep`] with a custom per-tuple evaluator.
pub fn run_sweep_with<F>(cfg: &SweepConfig, eval: F) -> Result<SweepReport>
where
    F: Fn(&SweepConfig, &Tuple) -> VerdictRecord + Sync,
{
    let start = Instant::now();
    let lattice = cfg.lattice()?;
    let path = &cfg.output;
    let mut done = BTreeSet::new();
    if cfg.resume && path.exists() {
        let (records, end) = read_log(path, true)?;
        done.extend(records.iter().map(|r| r.tuple()));
        // Drop a half-written final line.
        let f = OpenOptions::new().write(true).open(path).map_err(HarnessError::io(path))?;
        f.set_len(end).map_err(HarnessError::io(path))?;
    }
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(HarnessError::io(dir))?;
    }
    let file = OpenOptions::new()
        .create(true)
        .write(true)
        .append(cfg.resume)
        .truncate(!cfg.resume)
        .open(path)
        .map_err(HarnessError::io(path))?;
    let mut out = BufWriter::new(file);

    let pending: Vec<&Tuple> = lattice.iter().filter(|t| !done.contains(*t)).collect();
    let mut report = SweepReport { resumed: lattice.len() - pending.len(), ..Default::default() };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(thread_count(cfg))
        .build()
        .map_err(|e| HarnessError::Invalid(e.to_string()))?;

    let mut executed = 0;
    for chunk in pending.chunks(CHUNK) {
        // `collect` keeps input order, so the log order is the lattice order.
        let records: Vec<VerdictRecord> = pool.install(|| chunk.par_iter().map(|t| eval(cfg, t)).collect());
        for rec in records {
            writeln!(out, "{}", rec.to_line()).map_err(HarnessError::io(path))?;
            report.counts.add(rec.status);
            match rec.status {
                Status::Failed => report.failures.push(rec),
                Status::Counterexample => report.counterexamples.push(rec),
                _ => {}
            }
        }
        out.flush().map_err(HarnessError::io(path))?;
        executed += chunk.len();
        if cfg.stop_on_counterexample && !report.counterexamples.is_empty() {
            break;
        }
    }
    report.not_run = pending.len() - executed;
    report.elapsed = start.elapsed();
    Ok(report)
}
