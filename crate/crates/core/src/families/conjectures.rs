//! Open divisibility statements. A failing instance is a counterexample to
//! report, never a panic.

use crate::error::Result;
use crate::qkit::{cache, Factor};

use super::cyclic::{self, CyclicSpec, Regime};
use super::weight::{Sign, Weight};
use super::{require, require_parity, Instance, ModulusBuilder};

/// `η_k = q^{j(k²+k)}` or `(-1)^k q^{C(k+1,2) + j(k²+k)}`.
pub fn eta(sign: Sign, j: i64) -> Weight {
    let rate = match sign {
        Sign::Plus => 0,
        Sign::Minus => -1,
    };
    Weight::new(sign, j, rate)
}

/// The four displays generalizing the `(2n, 4n, 6n)` and `(2n, 4n, 8n)`
/// corollaries, numbered `1..=4`:
/// 1. `[4n+1] Σ η_k A_{3n,k}^r A_{2n,k}^s A_{n,k}^t` mod `[6n+1 ⊂ n]/[6n+1]`
/// 2. the same sum mod `[6n+1 ⊂ 3n]/[6n+1]`
/// 3. `[8n+1] Σ η_k A_{4n,k}^r A_{2n,k}^s A_{n,k}^t` mod `[8n+1 ⊂ 3n]`
/// 4. `[6n+1][8n+1] Σ η_k A_{4n,k}^r A_{3n,k}^s A_{2n,k}^t` mod `[8n+1 ⊂ 3n]`
pub fn multi_ballot(display: u8, n: i64, r: i64, s: i64, t: i64, j: i64, sign: Sign) -> Result<Instance> {
    require((1..=4).contains(&display), || format!("display must be 1..4, got {display}"))?;
    require(n >= 1 && r >= 1 && s >= 1 && t >= 1, || format!("need n, r, s, t >= 1, got n={n}, r={r}, s={s}, t={t}"))?;
    require(j >= 0, || format!("j = {j} must be >= 0"))?;
    require_parity(r + s + t, "r + s + t")?;
    let (tops, front): ([i64; 3], Vec<i64>) = match display {
        1 | 2 => ([3 * n, 2 * n, n], vec![4 * n + 1]),
        3 => ([4 * n, 2 * n, n], vec![8 * n + 1]),
        _ => ([4 * n, 3 * n, 2 * n], vec![6 * n + 1, 8 * n + 1]),
    };
    let exps = [r, s, t];
    let inner = eta(sign, j).sum(0..=n, |k| {
        let factors: Vec<(Factor, u32)> = tops.iter().zip(exps).map(|(&top, e)| (Factor::Ballot(top, k), e as u32)).collect();
        cache().product(&factors)
    })?;
    let mut sum = inner;
    for f in front {
        sum = &cache().q_integer(f)? * &sum;
    }
    let modulus = match display {
        1 => ModulusBuilder::new().over_int(6 * n + 1)?.binom(6 * n + 1, n)?.build()?,
        2 => ModulusBuilder::new().over_int(6 * n + 1)?.binom(6 * n + 1, 3 * n)?.build()?,
        _ => ModulusBuilder::new().binom(8 * n + 1, 3 * n)?.build()?,
    };
    Ok(Instance { sum, modulus })
}

/// `Σ_{k=0}^n η_k ∏_{i=1}^m A_{n+i-1,k}^{r_i}` modulo the q-Catalan number
/// `[2n ⊂ n]/[n+1]`; `r_1 + ... + r_m` odd.
pub fn ballot_ladder(n: i64, rs: &[i64], j: i64, sign: Sign) -> Result<Instance> {
    require(!rs.is_empty(), || "need m >= 1".into())?;
    require(n >= 1, || format!("n = {n} must be >= 1"))?;
    require(rs.iter().all(|&x| x >= 1), || format!("every r_i must be >= 1, got {rs:?}"))?;
    require(j >= 0, || format!("j = {j} must be >= 0"))?;
    require_parity(rs.iter().sum(), "r_1 + ... + r_m")?;
    let sum = eta(sign, j).sum(0..=n, |k| {
        let factors: Vec<(Factor, u32)> =
            rs.iter().enumerate().map(|(i, &e)| (Factor::Ballot(n + i as i64, k), e as u32)).collect();
        cache().product(&factors)
    })?;
    let modulus = ModulusBuilder::new().over_int(n + 1)?.binom(2 * n, n)?.build()?;
    Ok(Instance { sum, modulus })
}

/// Which of the two cyclic families is extended to every `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CyclicFamily {
    OddPower,
    Pronic,
}

/// The cyclic families with the bound `j <= m` lifted.
pub fn all_j(family: CyclicFamily, spec: &CyclicSpec) -> Result<Instance> {
    match family {
        CyclicFamily::OddPower => Ok(Instance {
            sum: cyclic::theorem1_sum(spec, Regime::Conjectural)?,
            modulus: cyclic::theorem1_modulus(&spec.n)?,
        }),
        CyclicFamily::Pronic => Ok(Instance {
            sum: cyclic::theorem2_sum(spec, Regime::Conjectural)?,
            modulus: cyclic::theorem2_modulus(spec)?,
        }),
    }
}
