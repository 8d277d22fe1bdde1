//! Cyclotomic polynomials and factored ("signature") forms of q-factorial
//! products.
//!
//! `Φ_d` is computed over the integers by recursive exact division,
//! `Φ_d = (q^d - 1) / ∏_{e | d, e < d} Φ_e`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// Divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn phi_table() -> &'static RwLock<HashMap<u64, LaurentPoly>> {
    static TABLE: OnceLock<RwLock<HashMap<u64, LaurentPoly>>> = OnceLock::new();
    TABLE.get_or_init(Default::default)
}

/// The `d`-th cyclotomic polynomial `Φ_d(q)`, `d >= 1`.
pub fn cyclotomic(d: u64) -> LaurentPoly {
    assert!(d >= 1, "cyclotomic index must be positive");
    if let Some(p) = phi_table().read().unwrap().get(&d) {
        return p.clone();
    }
    let mut value = &LaurentPoly::monomial(1, d as i64) - &LaurentPoly::one();
    for e in divisors(d) {
        if e < d {
            value = value
                .exact_div(&cyclotomic(e))
                .expect("Φ_e divides q^d - 1 for e | d");
        }
    }
    phi_table().write().unwrap().entry(d).or_insert(value).clone()
}

/// Number of times `Φ_d` divides `p`, by repeated trial division.
pub fn multiplicity(p: &LaurentPoly, d: u64) -> u32 {
    assert!(!p.is_zero());
    let phi = cyclotomic(d);
    let mut count = 0;
    let mut cur = p.clone();
    while let Ok(next) = cur.exact_div(&phi) {
        cur = next;
        count += 1;
    }
    count
}

/// A product `±q^t ∏ Φ_d^{e_d}` with integer exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CycSignature {
    exponents: BTreeMap<u64, i64>,
    unit_exp: i64,
    unit_negative: bool,
}

impl CycSignature {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn phi(d: u64) -> Self {
        Self::one().with_factor(d, 1)
    }

    pub fn with_factor(mut self, d: u64, e: i64) -> Self {
        self.add_exponent(d, e);
        self
    }

    pub fn with_unit(mut self, negative: bool, exp: i64) -> Self {
        self.unit_negative ^= negative;
        self.unit_exp += exp;
        self
    }

    fn add_exponent(&mut self, d: u64, e: i64) {
        assert!(d >= 1);
        if e == 0 {
            return;
        }
        let slot = self.exponents.entry(d).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.exponents.remove(&d);
        }
    }

    pub fn exponent(&self, d: u64) -> i64 {
        self.exponents.get(&d).copied().unwrap_or(0)
    }

    /// `(d, e_d)` pairs in ascending `d`, zero exponents omitted.
    pub fn factors(&self) -> impl DoubleEndedIterator<Item = (u64, i64)> + '_ {
        self.exponents.iter().map(|(&d, &e)| (d, e))
    }

    pub fn unit(&self) -> (bool, i64) {
        (self.unit_negative, self.unit_exp)
    }

    pub fn is_one(&self) -> bool {
        self.exponents.is_empty() && self.unit_exp == 0 && !self.unit_negative
    }

    /// No cyclotomic factors (units are ignored).
    pub fn has_no_factors(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn is_polynomial(&self) -> bool {
        self.exponents.values().all(|&e| e >= 0)
    }

    fn check_nonnegative(&self) -> Result<()> {
        match self.exponents.iter().find(|(_, &e)| e < 0) {
            Some((&d, _)) => Err(Error::NegativeExponent { index: d }),
            None => Ok(()),
        }
    }

    pub fn mul(&self, other: &CycSignature) -> CycSignature {
        let mut out = self.clone();
        for (d, e) in other.factors() {
            out.add_exponent(d, e);
        }
        out.unit_exp += other.unit_exp;
        out.unit_negative ^= other.unit_negative;
        out
    }

    pub fn div(&self, other: &CycSignature) -> CycSignature {
        self.mul(&other.inverse())
    }

    pub fn inverse(&self) -> CycSignature {
        CycSignature {
            exponents: self.exponents.iter().map(|(&d, &e)| (d, -e)).collect(),
            unit_exp: -self.unit_exp,
            unit_negative: self.unit_negative,
        }
    }

    pub fn pow(&self, k: u32) -> CycSignature {
        let k = k as i64;
        CycSignature {
            exponents: self.exponents.iter().map(|(&d, &e)| (d, e * k)).filter(|&(_, e)| e != 0).collect(),
            unit_exp: self.unit_exp * k,
            unit_negative: self.unit_negative && k % 2 == 1,
        }
    }

    /// Part with positive exponents and the reciprocal of the part with
    /// negative exponents, so that `self = numer / denom`. Units go to `numer`.
    pub fn split(&self) -> (CycSignature, CycSignature) {
        let mut numer = CycSignature::one().with_unit(self.unit_negative, self.unit_exp);
        let mut denom = CycSignature::one();
        for (d, e) in self.factors() {
            if e > 0 {
                numer.add_exponent(d, e);
            } else {
                denom.add_exponent(d, -e);
            }
        }
        (numer, denom)
    }

    /// Degree in `q` of `∏ Φ_d^{e_d}`, excluding the unit.
    pub fn degree(&self) -> i64 {
        self.factors().map(|(d, e)| euler_phi(d) as i64 * e).sum()
    }

    /// `unit · ∏ Φ_d^{e_d}` as a Laurent polynomial.
    pub fn expand(&self) -> Result<LaurentPoly> {
        self.check_nonnegative()?;
        let mut acc = LaurentPoly::unit(self.unit_negative, self.unit_exp);
        for (d, e) in self.factors() {
            acc = &acc * &cyclotomic(d).pow(e as u32);
        }
        Ok(acc)
    }

    /// Pointwise minimum of exponents; units ignored.
    pub fn gcd(&self, other: &CycSignature) -> Result<CycSignature> {
        self.check_nonnegative()?;
        other.check_nonnegative()?;
        let mut out = CycSignature::one();
        for (d, e) in self.factors() {
            let f = other.exponent(d);
            out.add_exponent(d, e.min(f));
        }
        Ok(out)
    }
}

impl fmt::Display for CycSignature {
    /// `Φ3 · Φ4^2`, prefixed by the unit when it is not 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.unit_negative || self.unit_exp != 0 {
            let sign = if self.unit_negative { "-" } else { "" };
            parts.push(match self.unit_exp {
                0 => format!("{sign}1"),
                1 => format!("{sign}q"),
                e => format!("{sign}q^{e}"),
            });
        }
        for (d, e) in self.factors() {
            parts.push(if e == 1 { format!("Φ{d}") } else { format!("Φ{d}^{e}") });
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" · "))
        }
    }
}

pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// `[n] = ∏_{d | n, d > 1} Φ_d`.
pub fn q_integer_signature(n: i64) -> Result<CycSignature> {
    if n < 1 {
        return Err(Error::OutOfRange(format!("[{n}] has no cyclotomic factorization")));
    }
    Ok(divisors(n as u64)
        .into_iter()
        .filter(|&d| d > 1)
        .fold(CycSignature::one(), |s, d| s.with_factor(d, 1)))
}

/// Factorization of `[m ⊂ k]` by the floor criterion: `Φ_d` occurs exactly
/// once when `⌊k/d⌋ + ⌊(m-k)/d⌋ < ⌊m/d⌋`.
pub fn qbinomial_signature(m: i64, k: i64) -> Result<CycSignature> {
    if m < 0 || k < 0 || k > m {
        return Err(Error::OutOfRange(format!("binomial signature needs 0 <= k <= m, got m={m}, k={k}")));
    }
    let mut sig = CycSignature::one();
    for d in 1..=m {
        if k / d + (m - k) / d < m / d {
            assert!(d >= 2, "floor criterion selected Φ1 for [{m} ⊂ {k}]");
            sig.add_exponent(d as u64, 1);
        }
    }
    Ok(sig)
}

/// Signature of `∏ [n_i]! / ∏ [m_j]!`, using
/// `[n]! = (q-1)^{-n} ∏_{d <= n} Φ_d^{⌊n/d⌋}`.
pub fn factorial_ratio_signature(numer: &[i64], denom: &[i64]) -> Result<CycSignature> {
    if let Some(&bad) = numer.iter().chain(denom).find(|&&x| x < 0) {
        return Err(Error::NegativeArgument(bad));
    }
    let top = numer.iter().chain(denom).copied().max().unwrap_or(0);
    let mut sig = CycSignature::one();
    for d in 1..=top {
        let e: i64 = numer.iter().map(|n| n / d).sum::<i64>() - denom.iter().map(|n| n / d).sum::<i64>();
        sig.add_exponent(d as u64, e);
    }
    // The (q-1)^{-n} prefactors: Φ_1 = q - 1.
    let prefactor: i64 = numer.iter().sum::<i64>() - denom.iter().sum::<i64>();
    sig.add_exponent(1, -prefactor);
    Ok(sig)
}

/// Signature of the q-super-Catalan number `[2m]![2n]! / ([m+n]![m]![n]!)`.
pub fn super_catalan_signature(m: i64, n: i64) -> Result<CycSignature> {
    factorial_ratio_signature(&[2 * m, 2 * n], &[m + n, m, n])
}

/// Coprimality of the q-super-Catalan number `S(m, n)` with `[2m+1]`.
pub fn lemma61_check(m: i64, n: i64) -> Result<bool> {
    let sc = super_catalan_signature(m, n)?;
    let odd = q_integer_signature(2 * m + 1)?;
    Ok(sc.gcd(&odd)?.has_no_factors())
}

/// Coprimality of `[2n ⊂ n]` with `[2n+1]`.
pub fn central_binomial_coprime(n: i64) -> Result<bool> {
    let b = qbinomial_signature(2 * n, n)?;
    Ok(b.gcd(&q_integer_signature(2 * n + 1)?)?.has_no_factors())
}
