//! The q-binomial theorem, q-Chu–Vandermonde in two forms, and the q-Dixon
//! identity with its limiting case, each with both sides computed.

use crate::error::Result;
use crate::laurent::LaurentPoly;
use crate::qkit::{q_binomial, q_pochhammer, q_shifted};

use super::lemma::IdentityCheck;
use super::require;
use super::weight::{binom2, pentagonal};

fn signed(negative: bool, p: LaurentPoly) -> LaurentPoly {
    if negative {
        -p
    } else {
        p
    }
}

/// `(x;q)_N = Σ_{k=0}^N (-1)^k q^{C(k,2)} [N ⊂ k] x^k` at `x = q^a`.
pub fn qbt_check(big_n: i64, a: i64) -> Result<IdentityCheck> {
    require(big_n >= 0, || format!("N = {big_n} must be >= 0"))?;
    let lhs = q_pochhammer(a, big_n)?;
    let mut rhs = LaurentPoly::zero();
    for k in 0..=big_n {
        rhs += signed(k % 2 == 1, q_binomial(big_n, k).shift(binom2(k) + a * k));
    }
    Ok(IdentityCheck::new(lhs, rhs))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChuForm {
    /// Kernel `q^{s(s+2k+1)}`.
    Standard,
    /// Kernel `q^{(n_1-k-s)(n_2-k-s)}`.
    Remark,
}

/// `[n_1+n_2+1 ⊂ n_1-k] = Σ_{s=0}^{n_1-k} K(s) (q;q)_{n_1+k+1} (q;q)_{n_2-k}
///   / ((q;q)_s (q;q)_{s+2k+1} (q;q)_{n_1-k-s} (q;q)_{n_2-k-s})`.
///
/// Each summand is evaluated as `K(s) [n_1+k+1 ⊂ n_1-k-s] [n_2-k ⊂ s]`, the
/// same ratio of q-shifted factorials; for `k > n_2` the top `n_2 - k` is
/// negative and the Gaussian binomial is its product-formula continuation.
pub fn chu_check(n1: i64, n2: i64, k: i64, form: ChuForm) -> Result<IdentityCheck> {
    require(n1 >= 0 && n2 >= 0 && (0..=n1).contains(&k), || format!("need 0 <= k <= n1, n2 >= 0, got n1={n1}, n2={n2}, k={k}"))?;
    let lhs = q_binomial(n1 + n2 + 1, n1 - k);
    let mut rhs = LaurentPoly::zero();
    for s in 0..=n1 - k {
        let kernel = match form {
            ChuForm::Standard => s * (s + 2 * k + 1),
            ChuForm::Remark => (n1 - k - s) * (n2 - k - s),
        };
        let term = &q_binomial(n1 + k + 1, n1 - k - s) * &q_binomial(n2 - k, s);
        rhs += term.shift(kernel);
    }
    Ok(IdentityCheck::new(lhs, rhs))
}

/// Same identity computed from q-shifted factorials by exact division, for
/// `k <= n_2` where every index is nonnegative.
pub fn chu_check_by_division(n1: i64, n2: i64, k: i64) -> Result<IdentityCheck> {
    require(n1 >= 0 && (0..=n1.min(n2)).contains(&k), || format!("need 0 <= k <= min(n1, n2), got n1={n1}, n2={n2}, k={k}"))?;
    let lhs = q_binomial(n1 + n2 + 1, n1 - k);
    let num = &q_shifted(n1 + k + 1)? * &q_shifted(n2 - k)?;
    let mut rhs = LaurentPoly::zero();
    for s in 0..=(n1 - k).min(n2 - k) {
        let den = &(&q_shifted(s)? * &q_shifted(s + 2 * k + 1)?) * &(&q_shifted(n1 - k - s)? * &q_shifted(n2 - k - s)?);
        rhs += num.exact_div(&den)?.shift(s * (s + 2 * k + 1));
    }
    Ok(IdentityCheck::new(lhs, rhs))
}

/// `Σ_{k=-n}^n (-1)^k q^{(3k²+k)/2} [l+m ⊂ l+k][m+n ⊂ m+k][n+l ⊂ n+k]
///   = (q;q)_{l+m+n} / ((q;q)_l (q;q)_m (q;q)_n)`.
pub fn dixon_full_check(l: i64, m: i64, n: i64) -> Result<IdentityCheck> {
    require(l >= 0 && m >= 0 && n >= 0, || format!("need l, m, n >= 0, got {l}, {m}, {n}"))?;
    let mut lhs = LaurentPoly::zero();
    for k in -n..=n {
        let t = &(&q_binomial(l + m, l + k) * &q_binomial(m + n, m + k)) * &q_binomial(n + l, n + k);
        lhs += signed(k % 2 != 0, t.shift(pentagonal(k)));
    }
    let den = &(&q_shifted(l)? * &q_shifted(m)?) * &q_shifted(n)?;
    let rhs = q_shifted(l + m + n)?.exact_div(&den)?;
    Ok(IdentityCheck::new(lhs, rhs))
}

/// The `l, m -> ∞` limit:
/// `Σ_{k=-n}^n (-1)^k q^{(3k²+k)/2} [2n ⊂ n-k] = [2n ⊂ n] (q;q)_n`.
pub fn dixon_limit_check(n: i64) -> Result<IdentityCheck> {
    require(n >= 0, || format!("n = {n} must be >= 0"))?;
    let mut lhs = LaurentPoly::zero();
    for k in -n..=n {
        lhs += signed(k % 2 != 0, q_binomial(2 * n, n - k).shift(pentagonal(k)));
    }
    let rhs = &q_binomial(2 * n, n) * &q_shifted(n)?;
    Ok(IdentityCheck::new(lhs, rhs))
}
