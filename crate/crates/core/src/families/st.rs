//! Structure of the normalized sums
//! `S_r(n; j) = F(n) Σ_S(n; j)` and `T_r(n; j) = F(n) Σ_T(n; j)` with
//! `F(n) = (q;q)_{n_1} (q;q)_{n_m} / (q;q)_{n_1 + n_m + 1}`, where `Σ_S` and
//! `Σ_T` are the plus and minus `[2k+1][k]^r[k+1]^r` cyclic sums.
//!
//! `F` is not a polynomial, so every relation is checked after clearing it.

use crate::error::Result;
use crate::laurent::LaurentPoly;
use crate::qkit::{cache, q_pochhammer, q_shifted};

use super::cyclic::{raw_sum, Shape};
use super::lemma::IdentityCheck;
use super::require;
use super::weight::Sign;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StKind {
    S,
    T,
}

impl StKind {
    pub fn sign(self) -> Sign {
        match self {
            StKind::S => Sign::Plus,
            StKind::T => Sign::Minus,
        }
    }
}

/// Kernel of the reduction from `m` to `m - 1` binomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kernel {
    /// `q^{l²+l}`, lowering `j` by one.
    Standard,
    /// `q^{(n_1-l)(n_2-l)}`, keeping `j`.
    Remark,
}

fn sigma(kind: StKind, n: &[i64], j: i64, r: i64) -> Result<LaurentPoly> {
    raw_sum(n, j, r, kind.sign(), Shape::Pronic)
}

fn validate(n: &[i64], r: i64) -> Result<()> {
    require(!n.is_empty() && n.iter().all(|&x| x >= 1), || format!("every n_i must be >= 1, got {n:?}"))?;
    require(r >= 0, || format!("r = {r} must be >= 0"))
}

/// `X(n_1..n_m; j) = Σ_l K(l) [n_1 ⊂ l] B(l) X(l, n_3..n_m; j')` where for
/// `m >= 3`, `B(l) = [n_2 + n_3 + 1 ⊂ n_2 - l]`, and for `m = 2`,
/// `B(l) = [n_2 ⊂ l]` with `X(l; j')` on the right.
///
/// Both sides are multiplied by `(q;q)_{n_1 + n_m + 1}`.
pub fn st_recurrence_check(kind: StKind, n: &[i64], j: i64, r: i64, kernel: Kernel) -> Result<IdentityCheck> {
    validate(n, r)?;
    require(n.len() >= 2, || "the reduction needs m >= 2".into())?;
    let m = n.len();
    let (n1, n2, nm) = (n[0], n[1], n[m - 1]);
    let top = n1 + nm + 1;
    let lhs = &(&q_shifted(n1)? * &q_shifted(nm)?) * &sigma(kind, n, j, r)?;

    let sub_j = match kernel {
        Kernel::Standard => j - 1,
        Kernel::Remark => j,
    };
    let c = cache();
    let mut rhs = LaurentPoly::zero();
    for l in 0..=n1 {
        let (b, sub, last) = if m >= 3 {
            let mut sub = vec![l];
            sub.extend_from_slice(&n[2..]);
            (c.q_binomial(n2 + n[2] + 1, n2 - l), sub, nm)
        } else {
            (c.q_binomial(n2, l), vec![l], l)
        };
        if b.is_zero() {
            continue;
        }
        let den = l + last + 1;
        let k_exp = match kernel {
            Kernel::Standard => l * l + l,
            Kernel::Remark => (n1 - l) * (n2 - l),
        };
        let factor = &(&(&c.q_binomial(n1, l) * &b) * &(&q_shifted(l)? * &q_shifted(last)?)) * &q_pochhammer(den + 1, top - den)?;
        rhs += (&factor * &sigma(kind, &sub, sub_j, r)?).shift(k_exp);
    }
    Ok(IdentityCheck::new(lhs, rhs))
}

/// Exponents in the `q -> q^{-1}` relation between `j = 0` and
/// `j = m` (`S`) or `j = m - 1` (`T`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QinvExponents {
    /// `n_2 + ... + n_{m-1} + n_1 n_2 + ... + n_{m-1} n_m - r`.
    pub displayed: i64,
    /// `Σ_cyc n_i n_{i+1} + Σ n_i - r`, relating the bare sums.
    pub sum_level: i64,
    /// `n_1 n_m + n_1 + n_m + 1`, with `F(q^{-1}) = -q^{this} F(q)`.
    pub prefactor: i64,
}

pub fn qinv_exponents(n: &[i64], r: i64) -> QinvExponents {
    let m = n.len();
    let inner: i64 = if m >= 2 { n[1..m - 1].iter().sum() } else { 0 };
    let chain: i64 = n.windows(2).map(|w| w[0] * w[1]).sum();
    let cyc: i64 = (0..m).map(|i| n[i] * n[(i + 1) % m]).sum();
    let total: i64 = n.iter().sum();
    QinvExponents {
        displayed: inner + chain - r,
        sum_level: cyc + total - r,
        prefactor: n[0] * n[m - 1] + n[0] + n[m - 1] + 1,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QinvCheck {
    pub exponents: QinvExponents,
    /// `Σ(n; 0, q) = q^{sum_level} Σ(n; j*, q^{-1})`.
    pub sum_level: bool,
    /// `X(n; 0, q) = u X(n; j*, q^{-1})` for `u = -q^{sum_level - prefactor}`,
    /// the unit obtained by carrying the prefactor through `q -> q^{-1}`.
    pub prefactor_level: bool,
    /// The same relation with `u = q^{displayed}`. This form is off by a
    /// factor `-q^{-1}` and fails whenever `m >= 2`.
    pub displayed: bool,
}

impl QinvCheck {
    pub fn corrected_holds(&self) -> bool {
        self.sum_level && self.prefactor_level
    }
}

/// Checks the `q -> q^{-1}` symmetry of `S` or `T`.
pub fn qinv_symmetry_check(kind: StKind, n: &[i64], r: i64) -> Result<QinvCheck> {
    validate(n, r)?;
    let m = n.len() as i64;
    let j_star = match kind {
        StKind::S => m,
        StKind::T => m - 1,
    };
    let ex = qinv_exponents(n, r);
    let at_zero = sigma(kind, n, 0, r)?;
    let flipped = sigma(kind, n, j_star, r)?.subst_qinv();
    let sum_level = at_zero == flipped.clone().shift(ex.sum_level);

    // X(0,q) = u X(j*,q^{-1}) with X = (Pn / Pd) Σ, cleared of denominators:
    // Pn(q) Σ(0,q) Pd(q^{-1}) = u Pn(q^{-1}) Σ(j*,q^{-1}) Pd(q).
    let (n1, nm) = (n[0], n[n.len() - 1]);
    let pn = &q_shifted(n1)? * &q_shifted(nm)?;
    let pd = q_shifted(n1 + nm + 1)?;
    let left = &(&pn * &at_zero) * &pd.subst_qinv();
    let right = &(&pn.subst_qinv() * &flipped) * &pd;
    let with_unit = |negative: bool, e: i64| {
        let r = right.clone().shift(e);
        left == if negative { -r } else { r }
    };
    Ok(QinvCheck {
        exponents: ex,
        sum_level,
        prefactor_level: with_unit(true, ex.sum_level - ex.prefactor),
        displayed: with_unit(false, ex.displayed),
    })
}
