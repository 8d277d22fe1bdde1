//! Weighted sums of powers of q-ballot numbers.

use crate::congruence::Modulus;
use crate::cyclotomic::super_catalan_signature;
use crate::error::Result;
use crate::laurent::LaurentPoly;
use crate::qkit::{cache, Factor};

use super::weight::{Sign, Weight};
use super::{require, require_parity, ModulusBuilder};

/// Rate for ballot sums: `r` (plus) or `r - 1` (minus).
pub fn ballot_rate(sign: Sign, r: i64) -> i64 {
    match sign {
        Sign::Plus => r,
        Sign::Minus => r - 1,
    }
}

/// `Σ_{k=0}^n w(k) [2k+1]^r A_{n,k}(q)^s`.
pub fn theorem3_sum(n: i64, s: i64, r: i64, j: i64, sign: Sign) -> Result<LaurentPoly> {
    require(n >= 1 && s >= 1, || format!("need n, s >= 1, got n={n}, s={s}"))?;
    require(r >= 0 && j >= 0, || format!("need r, j >= 0, got r={r}, j={j}"))?;
    require_parity(r + s, "r + s")?;
    require(j <= s, || format!("j = {j} exceeds s = {s}"))?;
    let w = Weight::new(sign, j, ballot_rate(sign, r));
    w.sum(0..=n, |k| {
        cache().product(&[(Factor::Integer(2 * k + 1), r as u32), (Factor::Ballot(n, k), s as u32)])
    })
}

/// `[2n ⊂ n]`.
pub fn theorem3_modulus(n: i64) -> Result<Modulus> {
    ModulusBuilder::new().binom(2 * n, n)?.build()
}

/// `[m+n+1] Σ_{k=0}^m w(k) [2k+1]^r A_{m,k}(q)^s A_{n,k}(q)^t`; ballot numbers
/// with `k > n` vanish.
pub fn theorem4_sum(m: i64, n: i64, s: i64, t: i64, r: i64, j: i64, sign: Sign) -> Result<LaurentPoly> {
    require(m >= 1 && n >= 1 && s >= 1 && t >= 1, || format!("need m, n, s, t >= 1, got m={m}, n={n}, s={s}, t={t}"))?;
    require(r >= 0 && j >= 0, || format!("need r, j >= 0, got r={r}, j={j}"))?;
    require_parity(r + s + t, "r + s + t")?;
    require(j <= s + t, || format!("j = {j} exceeds s + t = {}", s + t))?;
    let w = Weight::new(sign, j, ballot_rate(sign, r));
    let sum = w.sum(0..=m, |k| {
        cache().product(&[
            (Factor::Integer(2 * k + 1), r as u32),
            (Factor::Ballot(m, k), s as u32),
            (Factor::Ballot(n, k), t as u32),
        ])
    })?;
    Ok(&cache().q_integer(m + n + 1)? * &sum)
}

/// q-super-Catalan number `[2m]![2n]! / ([m+n]![m]![n]!)`.
pub fn theorem4_modulus(m: i64, n: i64) -> Result<Modulus> {
    ModulusBuilder::new()
        .signature(&super_catalan_signature(m, n)?, format!("[{}]![{}]!/([{}]![{m}]![{n}]!)", 2 * m, 2 * n, m + n))
        .build()
}
