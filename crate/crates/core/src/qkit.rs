//! q-integers, q-factorials, Gaussian binomials, q-shifted factorials,
//! q-ballot and q-super-Catalan numbers, all as exact Laurent polynomials.
//!
//! Values are memoized in a process-wide [`QObjectCache`]. The cache is
//! append-only; two threads racing on the same key compute identical values
//! and the first insert wins.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{OnceLock, RwLock};

use crate::cyclotomic;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// One factor of a memoized product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Factor {
    /// `[n]`
    Integer(i64),
    /// Gaussian binomial `[top ⊂ bottom]`.
    Binomial(i64, i64),
    /// q-ballot number `A_{n,k}(q)`; zero when `k > n`.
    Ballot(i64, i64),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Key {
    Integer(i64),
    Factorial(i64),
    Binomial(i64, i64),
    Ballot(i64, i64),
    Product(Vec<(Factor, u32)>),
}

/// Memo tables for the q-objects. Use [`cache`] for the shared instance.
#[derive(Default)]
pub struct QObjectCache {
    table: RwLock<HashMap<Key, LaurentPoly>>,
}

impl QObjectCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.table.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn get_or_try<F>(&self, key: Key, compute: F) -> Result<LaurentPoly>
    where
        F: FnOnce() -> Result<LaurentPoly>,
    {
        if let Some(v) = self.table.read().unwrap().get(&key) {
            return Ok(v.clone());
        }
        let value = compute()?;
        let mut table = self.table.write().unwrap();
        Ok(table.entry(key).or_insert(value).clone())
    }

    pub fn q_integer(&self, n: i64) -> Result<LaurentPoly> {
        if n < 0 {
            return Err(Error::NegativeArgument(n));
        }
        self.get_or_try(Key::Integer(n), || Ok(LaurentPoly::from_i64s(0, &vec![1; n as usize])))
    }

    pub fn q_factorial(&self, n: i64) -> Result<LaurentPoly> {
        if n < 0 {
            return Err(Error::NegativeArgument(n));
        }
        self.get_or_try(Key::Factorial(n), || {
            if n == 0 {
                return Ok(LaurentPoly::one());
            }
            Ok(&self.q_factorial(n - 1)? * &self.q_integer(n)?)
        })
    }

    /// Gaussian binomial by the product formula, for any integers `m`, `k`.
    /// Zero when `k < 0`, and zero when `0 <= m < k`.
    pub fn q_binomial(&self, m: i64, k: i64) -> LaurentPoly {
        if k < 0 || (m >= 0 && k > m) {
            return LaurentPoly::zero();
        }
        if k == 0 {
            return LaurentPoly::one();
        }
        // Symmetry keeps the product short for nonnegative m.
        let k = if m >= 0 { k.min(m - k) } else { k };
        self.get_or_try(Key::Binomial(m, k), || Ok(binomial_product_formula(m, k)))
            .expect("binomial product formula is infallible")
    }

    pub fn ballot(&self, n: i64, k: i64) -> Result<LaurentPoly> {
        check_ballot_range(n, k)?;
        self.get_or_try(Key::Ballot(n, k), || Ok(ballot_difference(self, n, k)))
    }

    fn factor(&self, f: Factor) -> Result<LaurentPoly> {
        match f {
            Factor::Integer(n) => self.q_integer(n),
            Factor::Binomial(m, k) => Ok(self.q_binomial(m, k)),
            Factor::Ballot(n, k) if k > n && n >= 0 => Ok(LaurentPoly::zero()),
            Factor::Ballot(n, k) => self.ballot(n, k),
        }
    }

    /// Memoized product `∏ f^e` over the given factors. The key is
    /// order-independent.
    pub fn product(&self, factors: &[(Factor, u32)]) -> Result<LaurentPoly> {
        let mut key: Vec<(Factor, u32)> = Vec::with_capacity(factors.len());
        let mut sorted = factors.to_vec();
        sorted.sort();
        for (f, e) in sorted {
            if e == 0 {
                continue;
            }
            match key.last_mut() {
                Some((g, acc)) if *g == f => *acc += e,
                _ => key.push((f, e)),
            }
        }
        match key.len() {
            0 => return Ok(LaurentPoly::one()),
            1 if key[0].1 == 1 => return self.factor(key[0].0),
            _ => {}
        }
        self.get_or_try(Key::Product(key.clone()), || {
            let mut powers = Vec::with_capacity(key.len());
            for &(f, e) in &key {
                let base = self.factor(f)?;
                if base.is_zero() {
                    return Ok(LaurentPoly::zero());
                }
                powers.push(base.pow(e));
            }
            // Multiply the short ones first.
            powers.sort_by_key(|p| p.coeffs().len());
            Ok(powers.iter().fold(LaurentPoly::one(), |acc, p| &acc * p))
        })
    }
}

/// The shared process-wide cache.
pub fn cache() -> &'static QObjectCache {
    static CACHE: OnceLock<QObjectCache> = OnceLock::new();
    CACHE.get_or_init(QObjectCache::new)
}

fn check_ballot_range(n: i64, k: i64) -> Result<()> {
    if n < 0 || k < 0 || k > n {
        return Err(Error::OutOfRange(format!("ballot number needs 0 <= k <= n, got n={n}, k={k}")));
    }
    Ok(())
}

fn binomial_product_formula(m: i64, k: i64) -> LaurentPoly {
    let mut num = LaurentPoly::one();
    let mut den = LaurentPoly::one();
    for i in 1..=k {
        num = &num * &one_minus_q_pow(m - i + 1);
        den = &den * &one_minus_q_pow(i);
    }
    num.exact_div(&den).expect("Gaussian binomial is a Laurent polynomial")
}

fn ballot_difference(c: &QObjectCache, n: i64, k: i64) -> LaurentPoly {
    &c.q_binomial(2 * n, n - k) - &c.q_binomial(2 * n, n - k - 1)
}

/// `1 - q^e`.
pub fn one_minus_q_pow(e: i64) -> LaurentPoly {
    &LaurentPoly::one() - &LaurentPoly::monomial(1, e)
}

/// `[n] = 1 + q + ... + q^{n-1}`.
pub fn q_integer(n: i64) -> Result<LaurentPoly> {
    cache().q_integer(n)
}

/// `[n]! = [n][n-1]...[1]`.
pub fn q_factorial(n: i64) -> Result<LaurentPoly> {
    cache().q_factorial(n)
}

/// Gaussian binomial `[m ⊂ k]`; zero out of range.
pub fn q_binomial(m: i64, k: i64) -> LaurentPoly {
    cache().q_binomial(m, k)
}

/// Gaussian binomial by the Pascal recurrence
/// `[m ⊂ k] = [m-1 ⊂ k-1] + q^k [m-1 ⊂ k]`, uncached; defined for `m >= 0`.
pub fn q_binomial_pascal(m: i64, k: i64) -> LaurentPoly {
    assert!(m >= 0);
    if k < 0 || k > m {
        return LaurentPoly::zero();
    }
    let mut row = vec![LaurentPoly::one()];
    for top in 1..=m {
        let mut next = Vec::with_capacity(top as usize + 1);
        for j in 0..=top {
            let left = if j >= 1 { row[(j - 1) as usize].clone() } else { LaurentPoly::zero() };
            let right = if j < top { row[j as usize].clone().shift(j) } else { LaurentPoly::zero() };
            next.push(&left + &right);
        }
        row = next;
    }
    row.swap_remove(k as usize)
}

/// q-shifted factorial `(q^a; q)_s = (1 - q^a)(1 - q^{a+1})...(1 - q^{a+s-1})`.
pub fn q_pochhammer(a: i64, s: i64) -> Result<LaurentPoly> {
    if s < 0 {
        return Err(Error::NegativeArgument(s));
    }
    Ok((0..s).fold(LaurentPoly::one(), |acc, i| &acc * &one_minus_q_pow(a + i)))
}

/// `(q; q)_s`.
pub fn q_shifted(s: i64) -> Result<LaurentPoly> {
    q_pochhammer(1, s)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BallotForm {
    /// `q^{n-k} [2k+1] [2n+1 ⊂ n-k] / [2n+1]`
    Quotient,
    /// `[2n ⊂ n-k] - [2n ⊂ n-k-1]`
    Difference,
}

/// q-ballot number `A_{n,k}(q)` for `0 <= k <= n`.
pub fn ballot(n: i64, k: i64, form: BallotForm) -> Result<LaurentPoly> {
    check_ballot_range(n, k)?;
    match form {
        BallotForm::Difference => cache().ballot(n, k),
        BallotForm::Quotient => {
            let num = (&q_integer(2 * k + 1)? * &q_binomial(2 * n + 1, n - k)).shift(n - k);
            Ok(num
                .exact_div(&q_integer(2 * n + 1)?)
                .expect("[2n+1] divides q^{n-k}[2k+1][2n+1 ⊂ n-k]"))
        }
    }
}

/// q-super-Catalan number `[2m]![2n]! / ([m+n]! [m]! [n]!)`, expanded from
/// its cyclotomic factorization.
pub fn super_catalan(m: i64, n: i64) -> Result<LaurentPoly> {
    cyclotomic::super_catalan_signature(m, n)?.expand()
}

/// Same value computed as a quotient of expanded q-factorials.
pub fn super_catalan_by_division(m: i64, n: i64) -> Result<LaurentPoly> {
    let num = &q_factorial(2 * m)? * &q_factorial(2 * n)?;
    let den = &(&q_factorial(m + n)? * &q_factorial(m)?) * &q_factorial(n)?;
    num.exact_div(&den)
}

/// `C(a_1, ..., a_l; k) = ∏ [a_i + a_{i+1} + 1 ⊂ a_i - k]` with `a_{l+1} = a_1`.
pub fn product_c(a: &[i64], k: i64) -> Result<LaurentPoly> {
    if a.is_empty() {
        return Err(Error::OutOfRange("C(...; k) needs a nonempty list".into()));
    }
    if let Some(&bad) = a.iter().find(|&&x| x < 0) {
        return Err(Error::NegativeArgument(bad));
    }
    if k < 0 {
        return Err(Error::NegativeArgument(k));
    }
    let factors: Vec<(Factor, u32)> = (0..a.len())
        .map(|i| {
            let next = a[(i + 1) % a.len()];
            (Factor::Binomial(a[i] + next + 1, a[i] - k), 1)
        })
        .collect();
    cache().product(&factors)
}
