//! Sweeps, verdict logs and the `qcong` command line.

pub mod cli;
pub mod config;
pub mod error;
pub mod record;
pub mod report;
pub mod sweep;

pub use config::{ParamRange, SweepConfig, Tuple};
pub use error::{HarnessError, Result};
pub use record::{read_log, Status, VerdictRecord};
pub use report::{summarize, Counts, LogSummary};
pub use sweep::{evaluate, run_sweep, run_sweep_with, SweepReport};
