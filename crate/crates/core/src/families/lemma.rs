//! The four single-binomial sums with Pochhammer factors
//! `(q^{-k};q)_s (q^{k+1};q)_s`, their closed forms at `r = 0`, the
//! generalization with `x = q^a`, and the three-term recurrence in `r`.

use crate::congruence::Modulus;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::qkit::{cache, q_pochhammer, q_shifted, Factor};

use super::weight::{binom2, pentagonal};
use super::{require, ModulusBuilder};

/// The four weights `w_v(k)`, `v = 1..=4`:
/// `q^{-k}`, `q^{k²}`, `(-1)^k q^{C(k,2)}`, `(-1)^k q^{(3k²+k)/2}`.
fn base_weight(variant: u8, k: i64) -> (bool, i64) {
    match variant {
        1 => (false, -k),
        2 => (false, k * k),
        3 => (k % 2 != 0, binom2(k)),
        4 => (k % 2 != 0, pentagonal(k)),
        _ => unreachable!(),
    }
}

fn check_variant(variant: u8) -> Result<()> {
    require((1..=4).contains(&variant), || format!("variant must be 1..4, got {variant}"))
}

/// `(q^{-k};q)_s (q^{k+1};q)_s`.
fn pochhammer_pair(k: i64, s: i64) -> Result<LaurentPoly> {
    Ok(&q_pochhammer(-k, s)? * &q_pochhammer(k + 1, s)?)
}

/// `Σ_{k=0}^n w_v(k) q^{-2rk} [2k+1]^{2r+1} [2n+1 ⊂ n-k] (q^{-k};q)_s (q^{k+1};q)_s`.
///
/// `n = 0` is accepted; the recurrence in `r` needs it.
pub fn theorem22_sum(n: i64, r: i64, s: i64, variant: u8) -> Result<LaurentPoly> {
    check_variant(variant)?;
    require(n >= 0 && r >= 0 && s >= 0, || format!("need n, r, s >= 0, got n={n}, r={r}, s={s}"))?;
    let mut acc = LaurentPoly::zero();
    // (q^{-k};q)_s vanishes for k < s.
    for k in s.min(n + 1)..=n {
        let core = cache().product(&[
            (Factor::Integer(2 * k + 1), (2 * r + 1) as u32),
            (Factor::Binomial(2 * n + 1, n - k), 1),
        ])?;
        let t = (&core * &pochhammer_pair(k, s)?).shift(base_weight(variant, k).1 - 2 * r * k);
        if base_weight(variant, k).0 {
            acc -= t;
        } else {
            acc += t;
        }
    }
    Ok(acc)
}

/// `[2n+1] [2n ⊂ n]`.
pub fn theorem22_modulus(n: i64) -> Result<Modulus> {
    ModulusBuilder::new().int(2 * n + 1, 1)?.binom(2 * n, n)?.build()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub lhs: LaurentPoly,
    pub rhs: LaurentPoly,
    pub equal: bool,
}

impl IdentityCheck {
    pub fn new(lhs: LaurentPoly, rhs: LaurentPoly) -> Self {
        let equal = lhs == rhs;
        IdentityCheck { lhs, rhs, equal }
    }
}

/// Closed forms of the four `r = 0` sums. With `X = [2n+1][2n ⊂ n][n ⊂ s]`:
/// 1. `(-1)^s q^{C(s,2) - sn - n} X (q;q)_s²`
/// 2. `(-1)^s q^{C(s,2)} X (q;q)_s²`
/// 3. `0`
/// 4. `q^{s²} X (q;q)_n (q;q)_s`
pub fn lemma21_rhs(n: i64, s: i64, variant: u8) -> Result<LaurentPoly> {
    check_variant(variant)?;
    require(n >= 1 && s >= 0, || format!("need n >= 1, s >= 0, got n={n}, s={s}"))?;
    let x = cache().product(&[
        (Factor::Integer(2 * n + 1), 1),
        (Factor::Binomial(2 * n, n), 1),
        (Factor::Binomial(n, s), 1),
    ])?;
    let qs = q_shifted(s)?;
    let sign = |p: LaurentPoly| if s % 2 == 1 { -p } else { p };
    Ok(match variant {
        1 => sign((&x * &qs.pow(2)).shift(binom2(s) - s * n - n)),
        2 => sign((&x * &qs.pow(2)).shift(binom2(s))),
        3 => LaurentPoly::zero(),
        _ => (&(&x * &q_shifted(n)?) * &qs).shift(s * s),
    })
}

pub fn lemma21_check(n: i64, s: i64, variant: u8) -> Result<IdentityCheck> {
    require(n >= 1, || format!("need n >= 1, got {n}"))?;
    Ok(IdentityCheck::new(theorem22_sum(n, 0, s, variant)?, lemma21_rhs(n, s, variant)?))
}

/// As [`lemma21_rhs`], except that the alternating variant is
/// `δ_{s,n} q^{-n} [2n+1][2n ⊂ n] (q;q)_n²` rather than `0`: at `s = n` only
/// the `k = n` term survives and it is nonzero. This is the `x = 1` value of
/// the generalization checked by [`remark_x_identity_check`].
pub fn lemma21_rhs_corrected(n: i64, s: i64, variant: u8) -> Result<LaurentPoly> {
    if variant != 3 || s != n {
        return lemma21_rhs(n, s, variant);
    }
    require(n >= 1, || format!("need n >= 1, got {n}"))?;
    let x = cache().product(&[(Factor::Integer(2 * n + 1), 1), (Factor::Binomial(2 * n, n), 1)])?;
    Ok((&x * &q_shifted(n)?.pow(2)).shift(-n))
}

pub fn lemma21_check_corrected(n: i64, s: i64, variant: u8) -> Result<IdentityCheck> {
    require(n >= 1, || format!("need n >= 1, got {n}"))?;
    Ok(IdentityCheck::new(theorem22_sum(n, 0, s, variant)?, lemma21_rhs_corrected(n, s, variant)?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RemarkCheck {
    pub equal: bool,
    /// `(q^a;q)_{n+1} = 0`, so both cross-multiplied sides vanish.
    pub degenerate: bool,
}

/// The alternating sum with `(x q^{-k};q)_s (x q^{k+1};q)_s` at `x = q^a`,
/// compared with its closed form after multiplying through by
/// `(x;q)_{n+1}`:
///
/// `LHS · (x;q)_{n+1} = x^n q^{-n} [2n+1][2n ⊂ n][s ⊂ n] (x;q)_{s-n} (x;q)_{s+1} (q;q)_n²`.
pub fn remark_x_identity_check(n: i64, s: i64, a: i64) -> Result<RemarkCheck> {
    require(n >= 1 && s >= n, || format!("need n >= 1 and s >= n, got n={n}, s={s}"))?;
    let mut lhs = LaurentPoly::zero();
    for k in 0..=n {
        let t = &cache().product(&[(Factor::Integer(2 * k + 1), 1), (Factor::Binomial(2 * n + 1, n - k), 1)])?
            * &(&q_pochhammer(a - k, s)? * &q_pochhammer(a + k + 1, s)?);
        let t = t.shift(binom2(k));
        if k % 2 == 1 {
            lhs -= t;
        } else {
            lhs += t;
        }
    }
    let denom = q_pochhammer(a, n + 1)?;
    let left = &lhs * &denom;
    let right = cache().product(&[
        (Factor::Integer(2 * n + 1), 1),
        (Factor::Binomial(2 * n, n), 1),
        (Factor::Binomial(s, n), 1),
    ])?;
    let right = &(&(&right * &q_pochhammer(a, s - n)?) * &q_pochhammer(a, s + 1)?) * &q_shifted(n)?.pow(2);
    let right = right.shift(a * n - n);
    Ok(RemarkCheck { equal: left == right, degenerate: denom.is_zero() })
}

/// The recurrence
/// `A_r(n,s) = q^{-2n}[2n+1]² A_{r-1}(n,s)
///   - q^{-2n}[2n][2n+1](1+q^{n-s})(1+q^{n+s+1}) A_{r-1}(n-1,s)
///   + q^{-n-s}[2n][2n+1] A_{r-1}(n-1,s+1)`
/// for the variant-`v` sum `A_r(n,s)`; needs `n, r >= 1`.
pub fn three_term_recurrence_check(n: i64, r: i64, s: i64, variant: u8) -> Result<IdentityCheck> {
    if n < 1 || r < 1 {
        return Err(Error::ConstraintViolation(format!("need n, r >= 1, got n={n}, r={r}")));
    }
    let c = cache();
    let odd = c.q_integer(2 * n + 1)?;
    let even_odd = &c.q_integer(2 * n)? * &odd;
    let plus_one = |e: i64| &LaurentPoly::one() + &LaurentPoly::monomial(1, e);
    let first = (&odd.pow(2) * &theorem22_sum(n, r - 1, s, variant)?).shift(-2 * n);
    let middle = &(&even_odd * &(&plus_one(n - s) * &plus_one(n + s + 1))) * &theorem22_sum(n - 1, r - 1, s, variant)?;
    let last = &even_odd * &theorem22_sum(n - 1, r - 1, s + 1, variant)?;
    let rhs = &(&first - &middle.shift(-2 * n)) + &last.shift(-n - s);
    Ok(IdentityCheck::new(theorem22_sum(n, r, s, variant)?, rhs))
}
