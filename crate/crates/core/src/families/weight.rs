use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "plus",
            Sign::Minus => "minus",
        })
    }
}

impl FromStr for Sign {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plus" | "+" => Ok(Sign::Plus),
            "minus" | "-" => Ok(Sign::Minus),
            _ => Err(Error::Parse(format!("unknown variant `{s}` (expected plus or minus)"))),
        }
    }
}

/// Summand weight
/// `q^{j(k²+k) - c k}` (plus) or `(-1)^k q^{C(k,2) + j(k²+k) - c k}` (minus),
/// where `c` is the rate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Weight {
    pub sign: Sign,
    pub j: i64,
    pub rate: i64,
}

impl Weight {
    pub fn new(sign: Sign, j: i64, rate: i64) -> Self {
        Weight { sign, j, rate }
    }

    pub fn exponent(&self, k: i64) -> i64 {
        let base = self.j * (k * k + k) - self.rate * k;
        match self.sign {
            Sign::Plus => base,
            Sign::Minus => base + k * (k - 1) / 2,
        }
    }

    pub fn is_negative(&self, k: i64) -> bool {
        self.sign == Sign::Minus && k % 2 != 0
    }

    /// The weight at `k` as a unit monomial.
    pub fn at(&self, k: i64) -> LaurentPoly {
        LaurentPoly::unit(self.is_negative(k), self.exponent(k))
    }

    /// `weight(k) * p`, without a full multiplication.
    pub fn apply(&self, k: i64, p: LaurentPoly) -> LaurentPoly {
        let p = p.shift(self.exponent(k));
        if self.is_negative(k) {
            -p
        } else {
            p
        }
    }

    /// `Σ_{k in ks} weight(k) * term(k)`.
    pub fn sum<I, F>(&self, ks: I, mut term: F) -> Result<LaurentPoly>
    where
        I: IntoIterator<Item = i64>,
        F: FnMut(i64) -> Result<LaurentPoly>,
    {
        let mut acc = LaurentPoly::zero();
        for k in ks {
            let t = term(k)?;
            if !t.is_zero() {
                acc += self.apply(k, t);
            }
        }
        Ok(acc)
    }
}

/// `k(k-1)/2`.
pub fn binom2(k: i64) -> i64 {
    k * (k - 1) / 2
}

/// `(3k² + k)/2`, an integer for every `k`.
pub fn pentagonal(k: i64) -> i64 {
    let twice = 3 * k * k + k;
    debug_assert!(twice % 2 == 0);
    twice / 2
}
