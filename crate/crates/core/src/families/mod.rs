//! Executable statements: every sum, modulus, identity, recurrence and
//! conjecture of the catalogue, as builders returning exact Laurent
//! polynomials and checkers returning booleans or [`Verdict`]s.
//!
//! [`Verdict`]: crate::congruence::Verdict

pub mod ballot_sums;
pub mod classical;
pub mod conjectures;
pub mod corollaries;
pub mod cyclic;
pub mod lemma;
pub mod pq;
pub mod registry;
pub mod st;
pub mod weight;

pub use registry::{FamilyId, FamilyKind, ParamValue, Params, SumSpec};
pub use weight::{Sign, Weight};

use crate::congruence::{divides, Modulus, Strategy, Verdict};
use crate::cyclotomic::{q_integer_signature, qbinomial_signature, CycSignature};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// A sum together with the modulus it is claimed (or conjectured) to be
/// divisible by.
#[derive(Clone, Debug)]
pub struct Instance {
    pub sum: LaurentPoly,
    pub modulus: Modulus,
}

impl Instance {
    pub fn check(&self, strategy: Strategy) -> Verdict {
        divides(&self.modulus, &self.sum, strategy)
    }
}

pub(crate) fn require(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::ConstraintViolation(what()))
    }
}

pub(crate) fn require_parity(sum: i64, what: &str) -> Result<()> {
    if sum.rem_euclid(2) == 1 {
        Ok(())
    } else {
        Err(Error::ParityViolation(format!("{what} = {sum} must be odd")))
    }
}

/// Assembles a factored modulus and its bracket description.
#[derive(Default)]
pub(crate) struct ModulusBuilder {
    sig: CycSignature,
    parts: Vec<String>,
}

impl ModulusBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Multiplies by `[n]^e`; `[1]` and `e = 0` leave no trace.
    pub fn int(mut self, n: i64, e: u32) -> Result<Self> {
        if e == 0 || n == 1 {
            return Ok(self);
        }
        self.sig = self.sig.mul(&q_integer_signature(n)?.pow(e));
        self.parts.push(if e == 1 { format!("[{n}]") } else { format!("[{n}]^{e}") });
        Ok(self)
    }

    pub fn binom(mut self, m: i64, k: i64) -> Result<Self> {
        self.sig = self.sig.mul(&qbinomial_signature(m, k)?);
        self.parts.push(format!("[{m} ⊂ {k}]"));
        Ok(self)
    }

    /// Divides by `[n]`.
    pub fn over_int(mut self, n: i64) -> Result<Self> {
        self.sig = self.sig.div(&q_integer_signature(n)?);
        self.parts.insert(0, format!("1/[{n}]"));
        Ok(self)
    }

    pub fn signature(mut self, sig: &CycSignature, text: impl Into<String>) -> Self {
        self.sig = self.sig.mul(sig);
        self.parts.push(text.into());
        self
    }

    pub fn build(self) -> Result<Modulus> {
        let text = if self.parts.is_empty() { "1".to_string() } else { self.parts.join("·") };
        Modulus::factored(self.sig, text)
    }
}
