//! Exact verification of divisibility statements for sums of products of
//! q-binomial coefficients and powers of q-integers.
//!
//! The value type is [`LaurentPoly`]. Objects such as `[n]`, `[m ⊂ k]`,
//! q-ballot and q-super-Catalan numbers live in [`qkit`]; their cyclotomic
//! factorizations in [`cyclotomic`]; divisibility decisions in
//! [`congruence`]; and the catalogue of sums, identities and conjectures in
//! [`families`].

pub mod congruence;
pub mod cyclotomic;
pub mod error;
pub mod families;
pub mod laurent;
pub mod qkit;

pub use congruence::{divides, quotient, Modulus, Strategy, Verdict};
pub use cyclotomic::CycSignature;
pub use error::{Error, Result};
pub use laurent::LaurentPoly;
