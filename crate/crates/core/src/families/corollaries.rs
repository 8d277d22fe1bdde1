//! Specializations of the four main families. Each builder returns the sum
//! and its stated modulus; all of them are theorems, so every instance must
//! divide.

use crate::error::Result;
use crate::qkit::{cache, Factor};

use super::ballot_sums::ballot_rate;
use super::cyclic::Shape;
use super::weight::{Sign, Weight};
use super::{require, require_parity, Instance, ModulusBuilder};

fn positive(pairs: &[(&str, i64)]) -> Result<()> {
    for &(name, v) in pairs {
        require(v >= 1, || format!("{name} = {v} must be >= 1"))?;
    }
    Ok(())
}

fn nonnegative(pairs: &[(&str, i64)]) -> Result<()> {
    for &(name, v) in pairs {
        require(v >= 0, || format!("{name} = {v} must be >= 0"))?;
    }
    Ok(())
}

fn bound_j(j: i64, bound: i64, what: &str) -> Result<()> {
    require(j <= bound, || format!("j = {j} exceeds {what} = {bound}"))
}

/// `Σ_{k=0}^{upper} ε_k [2k+1]^{2r+1} ∏ binomials(k)`, with the odd-power
/// weight `ε_k`.
fn eps_sum<F>(upper: i64, r: i64, j: i64, sign: Sign, binomials: F) -> Result<crate::laurent::LaurentPoly>
where
    F: Fn(i64) -> Vec<(Factor, u32)>,
{
    let w = Weight::new(sign, j, Shape::OddPower.rate(sign, r));
    w.sum(0..=upper, |k| {
        let mut factors = vec![(Factor::Integer(2 * k + 1), (2 * r + 1) as u32)];
        factors.extend(binomials(k));
        cache().product(&factors)
    })
}

fn bin(top: i64, bottom: i64, e: i64) -> (Factor, u32) {
    (Factor::Binomial(top, bottom), e as u32)
}

/// Which ballot pairing of the two-ballot corollary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BallotPair {
    /// `A_{n+1,k}^s A_{n,k}^t` modulo the q-Catalan number `[2n ⊂ n]/[n+1]`.
    NextN,
    /// `A_{2n,k}^s A_{n,k}^t` modulo `[4n ⊂ n]/[3n+1]`.
    DoubleN,
}

/// `Σ_{k=0}^n τ_k [2k+1]^r A_{M,k}^s A_{n,k}^t` with `M = n+1` or `M = 2n`.
pub fn two_ballot(pair: BallotPair, n: i64, s: i64, t: i64, r: i64, j: i64, sign: Sign) -> Result<Instance> {
    positive(&[("n", n), ("s", s), ("t", t)])?;
    nonnegative(&[("r", r), ("j", j)])?;
    require_parity(r + s + t, "r + s + t")?;
    bound_j(j, s + t, "s + t")?;
    let big = match pair {
        BallotPair::NextN => n + 1,
        BallotPair::DoubleN => 2 * n,
    };
    let w = Weight::new(sign, j, ballot_rate(sign, r));
    let sum = w.sum(0..=n, |k| {
        cache().product(&[
            (Factor::Integer(2 * k + 1), r as u32),
            (Factor::Ballot(big, k), s as u32),
            (Factor::Ballot(n, k), t as u32),
        ])
    })?;
    let modulus = match pair {
        BallotPair::NextN => ModulusBuilder::new().over_int(n + 1)?.binom(2 * n, n)?.build()?,
        BallotPair::DoubleN => ModulusBuilder::new().over_int(3 * n + 1)?.binom(4 * n, n)?.build()?,
    };
    Ok(Instance { sum, modulus })
}

/// `Σ_{k=0}^m ε_k [2k+1]^{2r+1} [m+n+1 ⊂ m-k]^a [m+n+1 ⊂ n-k]^a`
/// modulo `[m+n+1][m+n ⊂ m]`; `j <= 2a`.
pub fn mnrs(a: i64, m: i64, n: i64, r: i64, j: i64, sign: Sign) -> Result<Instance> {
    positive(&[("a", a), ("m", m), ("n", n)])?;
    nonnegative(&[("r", r), ("j", j)])?;
    bound_j(j, 2 * a, "2a")?;
    let sum = eps_sum(m, r, j, sign, |k| vec![bin(m + n + 1, m - k, a), bin(m + n + 1, n - k, a)])?;
    let modulus = ModulusBuilder::new().int(m + n + 1, 1)?.binom(m + n, m)?.build()?;
    Ok(Instance { sum, modulus })
}

/// `Σ_{k=0}^m ε_k [2k+1]^{2r+1} [l+m+1 ⊂ l-k]^a [m+n+1 ⊂ m-k]^a [n+l+1 ⊂ n-k]^a`
/// modulo `[m+n+1][m+n ⊂ m]`; `j <= 3a`.
pub fn lmn(a: i64, l: i64, m: i64, n: i64, r: i64, j: i64, sign: Sign) -> Result<Instance> {
    positive(&[("a", a), ("l", l), ("m", m), ("n", n)])?;
    nonnegative(&[("r", r), ("j", j)])?;
    bound_j(j, 3 * a, "3a")?;
    let sum = eps_sum(m, r, j, sign, |k| {
        vec![bin(l + m + 1, l - k, a), bin(m + n + 1, m - k, a), bin(n + l + 1, n - k, a)]
    })?;
    let modulus = ModulusBuilder::new().int(m + n + 1, 1)?.binom(m + n, m)?.build()?;
    Ok(Instance { sum, modulus })
}

/// `Σ_{k=0}^{n-1} ε_k [2k+1]^{2r+1} [2n ⊂ n-k]^a [2n ⊂ n-k-1]^a [2n-1 ⊂ n-k-1]^b`
/// modulo `[n][2n ⊂ n]`; `a, n >= 1`, `b >= 0`, `j <= 2a + b`.
pub fn central(a: i64, b: i64, n: i64, r: i64, j: i64, sign: Sign) -> Result<Instance> {
    positive(&[("a", a), ("n", n)])?;
    nonnegative(&[("b", b), ("r", r), ("j", j)])?;
    bound_j(j, 2 * a + b, "2a + b")?;
    let sum = eps_sum(n - 1, r, j, sign, |k| {
        vec![bin(2 * n, n - k, a), bin(2 * n, n - k - 1, a), bin(2 * n - 1, n - k - 1, b)]
    })?;
    let modulus = ModulusBuilder::new().int(n, 1)?.binom(2 * n, n)?.build()?;
    Ok(Instance { sum, modulus })
}

/// `Σ_{k=0}^n ε_k [2k+1]^{2r+1} [2n+1 ⊂ n-k]^a [2n+3 ⊂ n-k+1]^b [2n+5 ⊂ n-k+2]^c`
/// modulo `[2n+5][2n+1 ⊂ n]`; `j <= a + b + c`.
pub fn n1n2n3(a: i64, b: i64, c: i64, n: i64, r: i64, j: i64, sign: Sign) -> Result<Instance> {
    positive(&[("a", a), ("b", b), ("c", c), ("n", n)])?;
    nonnegative(&[("r", r), ("j", j)])?;
    bound_j(j, a + b + c, "a + b + c")?;
    let sum = eps_sum(n, r, j, sign, |k| {
        vec![bin(2 * n + 1, n - k, a), bin(2 * n + 3, n - k + 1, b), bin(2 * n + 5, n - k + 2, c)]
    })?;
    let modulus = ModulusBuilder::new().int(2 * n + 5, 1)?.binom(2 * n + 1, n)?.build()?;
    Ok(Instance { sum, modulus })
}

/// `Σ_{k=0}^n ε_k [2k+1]^{2r+1} [6n+1 ⊂ 3n-k]^a [4n+1 ⊂ 2n-k]^b [2n+1 ⊂ n-k]^c`
/// modulo `[2n+1][6n+1 ⊂ n]` (`second = false`) or `[2n+1][6n+1 ⊂ 3n]`.
pub fn two_four_six(second: bool, a: i64, b: i64, c: i64, n: i64, r: i64, j: i64, sign: Sign) -> Result<Instance> {
    positive(&[("a", a), ("b", b), ("c", c), ("n", n)])?;
    nonnegative(&[("r", r), ("j", j)])?;
    bound_j(j, a + b + c, "a + b + c")?;
    let sum = eps_sum(n, r, j, sign, |k| {
        vec![bin(6 * n + 1, 3 * n - k, a), bin(4 * n + 1, 2 * n - k, b), bin(2 * n + 1, n - k, c)]
    })?;
    let bottom = if second { 3 * n } else { n };
    let modulus = ModulusBuilder::new().int(2 * n + 1, 1)?.binom(6 * n + 1, bottom)?.build()?;
    Ok(Instance { sum, modulus })
}

/// First: `[3n+1] Σ ε_k [2k+1]^{2r+1} [8n+1 ⊂ 4n-k]^a [4n+1 ⊂ 2n-k]^b [2n+1 ⊂ n-k]^c`
/// modulo `[2n+1][4n+1][8n+1 ⊂ 3n]`.
/// Second: `Σ ε_k [2k+1]^{2r+1} [8n+1 ⊂ 4n-k]^a [6n+1 ⊂ 3n-k]^b [4n+1 ⊂ 2n-k]^c`
/// modulo `[4n+1][8n+1 ⊂ 3n]`.
pub fn two_four_eight(second: bool, a: i64, b: i64, c: i64, n: i64, r: i64, j: i64, sign: Sign) -> Result<Instance> {
    positive(&[("a", a), ("b", b), ("c", c), ("n", n)])?;
    nonnegative(&[("r", r), ("j", j)])?;
    bound_j(j, a + b + c, "a + b + c")?;
    if second {
        let sum = eps_sum(n, r, j, sign, |k| {
            vec![bin(8 * n + 1, 4 * n - k, a), bin(6 * n + 1, 3 * n - k, b), bin(4 * n + 1, 2 * n - k, c)]
        })?;
        let modulus = ModulusBuilder::new().int(4 * n + 1, 1)?.binom(8 * n + 1, 3 * n)?.build()?;
        Ok(Instance { sum, modulus })
    } else {
        let sum = eps_sum(n, r, j, sign, |k| {
            vec![bin(8 * n + 1, 4 * n - k, a), bin(4 * n + 1, 2 * n - k, b), bin(2 * n + 1, n - k, c)]
        })?;
        let sum = &cache().q_integer(3 * n + 1)? * &sum;
        let modulus = ModulusBuilder::new()
            .int(2 * n + 1, 1)?
            .int(4 * n + 1, 1)?
            .binom(8 * n + 1, 3 * n)?
            .build()?;
        Ok(Instance { sum, modulus })
    }
}

/// `Σ_{k=0}^n ε_k [2k+1]^{2r+1} ∏_{i=1}^m [2n+2i-1 ⊂ n+i-k-1]^{a_i}` modulo
/// `[2n+2m-1][2n+1 ⊂ n]`; `m >= 2`, `j <= Σ a_i`.
pub fn staircase(n: i64, a: &[i64], r: i64, j: i64, sign: Sign) -> Result<Instance> {
    require(a.len() >= 2, || format!("need m >= 2 exponents, got {}", a.len()))?;
    positive(&[("n", n)])?;
    for &x in a {
        positive(&[("a_i", x)])?;
    }
    nonnegative(&[("r", r), ("j", j)])?;
    bound_j(j, a.iter().sum(), "a_1 + ... + a_m")?;
    let m = a.len() as i64;
    let sum = eps_sum(n, r, j, sign, |k| {
        (1..=m).map(|i| bin(2 * n + 2 * i - 1, n + i - k - 1, a[(i - 1) as usize])).collect()
    })?;
    let modulus = ModulusBuilder::new().int(2 * n + 2 * m - 1, 1)?.binom(2 * n + 1, n)?.build()?;
    Ok(Instance { sum, modulus })
}
