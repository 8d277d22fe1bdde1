//! The single-binomial sums
//! `P_r(n,j) = Σ q^{j(k²+k) - (r+1)k} [2k+1][k]^r[k+1]^r [2n+1 ⊂ n-k]` and
//! `Q_r(n,j) = Σ (-1)^k q^{C(k,2) + j(k²+k) - rk} [2k+1][k]^r[k+1]^r [2n+1 ⊂ n-k]`.

use std::fmt;
use std::str::FromStr;

use crate::congruence::Modulus;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::qkit::{cache, q_shifted};

use super::cyclic::{raw_sum, Shape};
use super::weight::Sign;
use super::{require, ModulusBuilder};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Which {
    P,
    Q,
}

impl Which {
    pub fn sign(self) -> Sign {
        match self {
            Which::P => Sign::Plus,
            Which::Q => Sign::Minus,
        }
    }
}

impl fmt::Display for Which {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Which::P => "P",
            Which::Q => "Q",
        })
    }
}

impl FromStr for Which {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "P" | "p" => Ok(Which::P),
            "Q" | "q" => Ok(Which::Q),
            _ => Err(Error::Parse(format!("expected P or Q, got `{s}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Direct,
    Recurrence,
}

fn direct(which: Which, n: i64, j: i64, r: i64) -> Result<LaurentPoly> {
    raw_sum(&[n], j, r, which.sign(), Shape::Pronic)
}

/// `P_r(n,j)` or `Q_r(n,j)` for `n >= 0`.
///
/// The recurrence method uses
/// `X_r(n,j) = q^{-n}[n][n+1] X_{r-1}(n,j) - q^{-n}[2n][2n+1] X_{r-1}(n-1,j)`
/// down to `r = 0` or `n = 0`, where it falls back to the definition.
pub fn pq_value(which: Which, n: i64, j: i64, r: i64, method: Method) -> Result<LaurentPoly> {
    require(n >= 0 && r >= 0, || format!("need n, r >= 0, got n={n}, r={r}"))?;
    match method {
        Method::Direct => direct(which, n, j, r),
        Method::Recurrence => {
            // row[n'] holds X_{r'}(n', j) for the current r'.
            let mut row: Vec<LaurentPoly> = (0..=n).map(|x| direct(which, x, j, 0)).collect::<Result<_>>()?;
            for level in 1..=r {
                let mut next = Vec::with_capacity(row.len());
                next.push(direct(which, 0, j, level)?);
                for x in 1..=n {
                    let c = cache();
                    let a = &(&c.q_integer(x)? * &c.q_integer(x + 1)?) * &row[x as usize];
                    let b = &(&c.q_integer(2 * x)? * &c.q_integer(2 * x + 1)?) * &row[(x - 1) as usize];
                    next.push((&a - &b).shift(-x));
                }
                row = next;
            }
            Ok(row.swap_remove(n as usize))
        }
    }
}

/// The printed closed forms; `None` where none is given (`r > 2` for `P`,
/// `r > 1` for `Q`, or `j` outside `{0, 1}`).
pub fn pq_closed_form(which: Which, n: i64, j: i64, r: i64) -> Result<Option<LaurentPoly>> {
    require(n >= 1, || format!("need n >= 1, got {n}"))?;
    let c = cache();
    let x = &c.q_integer(2 * n + 1)? * &c.q_binomial(2 * n, n);
    let bn = c.q_integer(n)?;
    Ok(match (which, j, r) {
        (Which::P, 0, 0) => Some(x.shift(-n)),
        (Which::P, 1, 0) => Some(x),
        (Which::P, 0, 1) => Some((&bn * &x).shift(-2 * n)),
        (Which::P, 1, 1) => Some(&bn * &x),
        (Which::P, 0, 2) => Some((&(&c.q_integer(2)? * &bn.pow(2)) * &x).shift(-3 * n)),
        (Which::P, 1, 2) => Some((&(&c.q_integer(2)? * &bn.pow(2)) * &x).shift(-1)),
        (Which::Q, 0, 0) => Some(LaurentPoly::zero()),
        (Which::Q, 1, 0) => Some(&x * &q_shifted(n)?),
        (Which::Q, 0, 1) if n == 1 => Some(-(&c.q_integer(2)? * &c.q_integer(3)?).shift(-1)),
        (Which::Q, 0, 1) => Some(LaurentPoly::zero()),
        (Which::Q, 1, 1) => Some(-(&(&x * &bn.pow(2)) * &q_shifted(n - 1)?).shift(1)),
        _ => None,
    })
}

/// `[2n+1][2n ⊂ n][n]^{min(2, r)}` for `P`, `[2n+1][2n ⊂ n][n]^{min(2, 2r)}`
/// for `Q`.
pub fn pq_modulus(which: Which, n: i64, r: i64) -> Result<Modulus> {
    let e = match which {
        Which::P => r.min(2),
        Which::Q => (2 * r).min(2),
    };
    ModulusBuilder::new().int(2 * n + 1, 1)?.binom(2 * n, n)?.int(n, e as u32)?.build()
}

/// `P_r(n, j)` or `Q_r(n, j)` with `j ∈ {0, 1}`, `n >= 1`.
pub fn pq_sum(which: Which, n: i64, j: i64, r: i64) -> Result<LaurentPoly> {
    require(n >= 1 && r >= 0, || format!("need n >= 1, r >= 0, got n={n}, r={r}"))?;
    require(j == 0 || j == 1, || format!("j must be 0 or 1, got {j}"))?;
    direct(which, n, j, r)
}
