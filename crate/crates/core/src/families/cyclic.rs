//! Sums over cyclic products of Gaussian binomials
//! `C(n_1..n_m; k) = ∏ [n_i + n_{i+1} + 1 ⊂ n_i - k]`, `n_{m+1} = n_1`,
//! weighted by odd powers of `[2k+1]` or by `[2k+1][k]^r[k+1]^r`.

use crate::congruence::Modulus;
use crate::cyclotomic::factorial_ratio_signature;
use crate::error::Result;
use crate::laurent::LaurentPoly;
use crate::qkit::{cache, Factor};

use super::weight::{Sign, Weight};
use super::{require, ModulusBuilder};

/// Whether the proven bound `j <= m` is enforced.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Regime {
    #[default]
    Proven,
    Conjectural,
}

/// Shape of the `k`-dependent q-integer factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Shape {
    /// `[2k+1]^{2r+1}`
    OddPower,
    /// `[2k+1][k]^r[k+1]^r`
    Pronic,
}

impl Shape {
    pub fn rate(self, sign: Sign, r: i64) -> i64 {
        match (self, sign) {
            (Shape::OddPower, Sign::Plus) => 2 * r + 1,
            (Shape::OddPower, Sign::Minus) => 2 * r,
            (Shape::Pronic, Sign::Plus) => r + 1,
            (Shape::Pronic, Sign::Minus) => r,
        }
    }

    pub(crate) fn factors(self, k: i64, r: i64) -> Vec<(Factor, u32)> {
        let r = r as u32;
        match self {
            Shape::OddPower => vec![(Factor::Integer(2 * k + 1), 2 * r + 1)],
            Shape::Pronic => vec![(Factor::Integer(2 * k + 1), 1), (Factor::Integer(k), r), (Factor::Integer(k + 1), r)],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclicSpec {
    pub n: Vec<i64>,
    pub j: i64,
    pub r: i64,
    pub sign: Sign,
}

impl CyclicSpec {
    pub fn new(n: Vec<i64>, j: i64, r: i64, sign: Sign) -> Self {
        CyclicSpec { n, j, r, sign }
    }

    pub fn m(&self) -> usize {
        self.n.len()
    }

    fn first(&self) -> i64 {
        self.n[0]
    }

    fn last(&self) -> i64 {
        self.n[self.n.len() - 1]
    }

    pub fn validate(&self, regime: Regime) -> Result<()> {
        require(!self.n.is_empty(), || "need m >= 1".into())?;
        require(self.n.iter().all(|&x| x >= 1), || format!("every n_i must be >= 1, got {:?}", self.n))?;
        require(self.r >= 0, || format!("r = {} must be >= 0", self.r))?;
        require(self.j >= 0, || format!("j = {} must be >= 0", self.j))?;
        if regime == Regime::Proven {
            require(self.j <= self.m() as i64, || format!("j = {} exceeds m = {}", self.j, self.m()))?;
        }
        Ok(())
    }
}

/// `Σ_{k=0}^{n_1} w(k) · shape(k) · C(n; k)` without parameter checks; `n`
/// may contain zeros and `j` may be negative.
pub fn raw_sum(n: &[i64], j: i64, r: i64, sign: Sign, shape: Shape) -> Result<LaurentPoly> {
    let w = Weight::new(sign, j, shape.rate(sign, r));
    let m = n.len();
    w.sum(0..=n[0], |k| {
        let mut factors = shape.factors(k, r);
        for i in 0..m {
            factors.push((Factor::Binomial(n[i] + n[(i + 1) % m] + 1, n[i] - k), 1));
        }
        cache().product(&factors)
    })
}

/// Sum with weight `q^{j(k²+k) - (2r+1)k}` or `(-1)^k q^{C(k,2) + j(k²+k) - 2rk}`
/// and factor `[2k+1]^{2r+1}`.
pub fn theorem1_sum(spec: &CyclicSpec, regime: Regime) -> Result<LaurentPoly> {
    spec.validate(regime)?;
    raw_sum(&spec.n, spec.j, spec.r, spec.sign, Shape::OddPower)
}

/// `[n_1 + n_m + 1] · [n_1 + n_m ⊂ n_1]`.
pub fn theorem1_modulus(n: &[i64]) -> Result<Modulus> {
    let (a, b) = (n[0], n[n.len() - 1]);
    ModulusBuilder::new().int(a + b + 1, 1)?.binom(a + b, a)?.build()
}

/// Sum with weight `q^{j(k²+k) - (r+1)k}` or `(-1)^k q^{C(k,2) + j(k²+k) - rk}`
/// and factor `[2k+1][k]^r[k+1]^r`.
pub fn theorem2_sum(spec: &CyclicSpec, regime: Regime) -> Result<LaurentPoly> {
    spec.validate(regime)?;
    raw_sum(&spec.n, spec.j, spec.r, spec.sign, Shape::Pronic)
}

/// The first modulus times `[n_1]^{min(1,r)}` and `[n_m]^{min(1, C(r,2))}`
/// (plus) or `[n_m]^{min(1, r)}` (minus).
pub fn theorem2_modulus(spec: &CyclicSpec) -> Result<Modulus> {
    let (a, b, r) = (spec.first(), spec.last(), spec.r);
    let last_exp = match spec.sign {
        Sign::Plus => (r * (r - 1) / 2).min(1),
        Sign::Minus => r.min(1),
    };
    ModulusBuilder::new()
        .int(a + b + 1, 1)?
        .binom(a + b, a)?
        .int(a, r.min(1) as u32)?
        .int(b, last_exp as u32)?
        .build()
}

/// The restated form: `[n_1]! ∏ [n_i + n_{i+1} + 1]! / [2n_i + 1]!` (with
/// `n_{m+1} = -1`) times `Σ w(k) [2k+1]^{2r+1} ∏ [2n_i + 1 ⊂ n_i - k]`.
///
/// Returned as `(numerator, denominator)` where the numerator is the sum
/// times the cyclotomic factors with positive exponent and the denominator
/// collects the rest; the expression is a Laurent polynomial exactly when
/// the denominator divides the numerator.
pub fn theorem62_parts(spec: &CyclicSpec, regime: Regime) -> Result<(LaurentPoly, Modulus)> {
    spec.validate(regime)?;
    let n = &spec.n;
    let m = n.len();
    let w = Weight::new(spec.sign, spec.j, Shape::OddPower.rate(spec.sign, spec.r));
    let sum = w.sum(0..=n[0], |k| {
        let mut factors = Shape::OddPower.factors(k, spec.r);
        factors.extend(n.iter().map(|&x| (Factor::Binomial(2 * x + 1, x - k), 1)));
        cache().product(&factors)
    })?;
    let mut numer = vec![n[0]];
    numer.extend((0..m).map(|i| if i + 1 < m { n[i] + n[i + 1] + 1 } else { n[i] }));
    let denom: Vec<i64> = n.iter().map(|&x| 2 * x + 1).collect();
    let (top, bottom) = factorial_ratio_signature(&numer, &denom)?.split();
    let numerator = &sum * &top.expand()?;
    let modulus = ModulusBuilder::new().signature(&bottom, "prefactor denominator").build()?;
    Ok((numerator, modulus))
}

/// The restated expression itself; `NotDivisible` if it is not a Laurent
/// polynomial.
pub fn theorem62_expression(spec: &CyclicSpec, regime: Regime) -> Result<LaurentPoly> {
    let (numer, denom) = theorem62_parts(spec, regime)?;
    numer.exact_div(&denom.poly())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::congruence::{divides, quotient, Strategy};
    use crate::error::Error;
    use crate::qkit::{q_binomial, q_integer};

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn spec(n: &[i64], j: i64, r: i64, sign: Sign) -> CyclicSpec {
        CyclicSpec::new(n.to_vec(), j, r, sign)
    }

    fn three_two() -> LaurentPoly {
        &q_integer(3).unwrap() * &q_binomial(2, 1)
    }

    // Term-by-term expansion straight from the definition, independent of
    // the product cache.
    fn naive_theorem1(n: &[i64], j: i64, r: i64, sign: Sign) -> LaurentPoly {
        let m = n.len();
        let mut acc = LaurentPoly::zero();
        for k in 0..=n[0] {
            let mut t = q_integer(2 * k + 1).unwrap().pow((2 * r + 1) as u32);
            for i in 0..m {
                t = &t * &crate::qkit::q_binomial_pascal(n[i] + n[(i + 1) % m] + 1, n[i] - k);
            }
            let e = match sign {
                Sign::Plus => j * (k * k + k) - (2 * r + 1) * k,
                Sign::Minus => k * (k - 1) / 2 + j * (k * k + k) - 2 * r * k,
            };
            let t = t.shift(e);
            acc = if sign == Sign::Minus && k % 2 == 1 { &acc - &t } else { &acc + &t };
        }
        acc
    }

    #[test]
    fn theorem1_examples() {
        let s = theorem1_sum(&spec(&[1], 0, 0, Sign::Plus), Regime::Proven).unwrap();
        assert_eq!(s, &p("q^-1") * &(&p("1 + q") * &p("1 + q + q^2")));
        let s = theorem1_sum(&spec(&[1], 1, 0, Sign::Plus), Regime::Proven).unwrap();
        assert_eq!(s, three_two());
        let s = theorem1_sum(&spec(&[1], 0, 0, Sign::Minus), Regime::Proven).unwrap();
        assert!(s.is_zero());
    }

    #[test]
    fn theorem1_matches_naive_expansion() {
        for n in [vec![1], vec![3], vec![2, 1], vec![1, 3, 2]] {
            for j in 0..=n.len() as i64 {
                for r in 0..2 {
                    for sign in Sign::BOTH {
                        let got = theorem1_sum(&spec(&n, j, r, sign), Regime::Proven).unwrap();
                        assert_eq!(got, naive_theorem1(&n, j, r, sign), "n={n:?} j={j} r={r} {sign}");
                    }
                }
            }
        }
    }

    #[test]
    fn constraints() {
        let bad = theorem1_sum(&spec(&[1], 2, 0, Sign::Plus), Regime::Proven);
        assert!(matches!(bad, Err(Error::ConstraintViolation(_))));
        assert!(theorem1_sum(&spec(&[1], 2, 0, Sign::Plus), Regime::Conjectural).is_ok());
        assert!(theorem1_sum(&spec(&[0], 0, 0, Sign::Plus), Regime::Proven).is_err());
        assert!(theorem2_sum(&spec(&[], 0, 0, Sign::Plus), Regime::Proven).is_err());
    }

    #[test]
    fn moduli() {
        assert_eq!(theorem1_modulus(&[1]).unwrap().poly(), three_two());
        let m = theorem2_modulus(&spec(&[1], 0, 1, Sign::Plus)).unwrap();
        assert_eq!(m.poly(), three_two());
        let m = theorem2_modulus(&spec(&[2], 0, 2, Sign::Plus)).unwrap();
        let want = &(&q_integer(5).unwrap() * &q_binomial(4, 2)) * &q_integer(2).unwrap().pow(2);
        assert_eq!(m.poly(), want);
        let m = theorem2_modulus(&spec(&[2, 3], 0, 1, Sign::Minus)).unwrap();
        let want = &(&(&q_integer(6).unwrap() * &q_binomial(5, 2)) * &q_integer(2).unwrap()) * &q_integer(3).unwrap();
        assert_eq!(m.poly(), want);
        let m = theorem2_modulus(&spec(&[2, 3], 0, 1, Sign::Plus)).unwrap();
        let want = &(&q_integer(6).unwrap() * &q_binomial(5, 2)) * &q_integer(2).unwrap();
        assert_eq!(m.poly(), want);
    }

    #[test]
    fn theorem2_examples() {
        let x = three_two();
        let s = theorem2_sum(&spec(&[1], 0, 0, Sign::Plus), Regime::Proven).unwrap();
        assert_eq!(s, x.clone().shift(-1));
        assert_eq!(s, theorem1_sum(&spec(&[1], 0, 0, Sign::Plus), Regime::Proven).unwrap());
        let s = theorem2_sum(&spec(&[1], 0, 1, Sign::Plus), Regime::Proven).unwrap();
        assert_eq!(s, x.clone().shift(-2));
        let s = theorem2_sum(&spec(&[1], 0, 1, Sign::Minus), Regime::Proven).unwrap();
        assert_eq!(s, -(&q_integer(2).unwrap() * &q_integer(3).unwrap()).shift(-1));
    }

    #[test]
    fn r_zero_sums_agree() {
        for n in [vec![2], vec![1, 2], vec![2, 2, 1]] {
            for j in 0..=n.len() as i64 {
                for sign in Sign::BOTH {
                    let a = theorem1_sum(&spec(&n, j, 0, sign), Regime::Proven).unwrap();
                    let b = theorem2_sum(&spec(&n, j, 0, sign), Regime::Proven).unwrap();
                    assert_eq!(a, b);
                }
            }
        }
    }

    #[test]
    fn small_sweep_holds() {
        for n in [vec![1], vec![2], vec![3], vec![1, 2], vec![2, 2], vec![1, 1, 2]] {
            for j in 0..=n.len() as i64 {
                for r in 0..3 {
                    for sign in Sign::BOTH {
                        let s = spec(&n, j, r, sign);
                        let v = divides(&theorem1_modulus(&n).unwrap(), &theorem1_sum(&s, Regime::Proven).unwrap(), Strategy::Both);
                        assert!(v.holds, "first family {s:?}");
                        let v = divides(&theorem2_modulus(&s).unwrap(), &theorem2_sum(&s, Regime::Proven).unwrap(), Strategy::Both);
                        assert!(v.holds, "second family {s:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn restated_form_examples() {
        let e = theorem62_expression(&spec(&[1], 0, 0, Sign::Plus), Regime::Proven).unwrap();
        assert_eq!(e, p("q^-1"));
        let e = theorem62_expression(&spec(&[1], 0, 0, Sign::Minus), Regime::Proven).unwrap();
        assert!(e.is_zero());
        assert!(theorem62_expression(&spec(&[1, 1], 0, 0, Sign::Plus), Regime::Proven).is_ok());
    }

    #[test]
    fn restated_form_equals_first_quotient() {
        for n in [vec![1], vec![2], vec![1, 2], vec![3, 1], vec![1, 2, 2]] {
            for j in 0..=n.len() as i64 {
                for r in 0..2 {
                    for sign in Sign::BOTH {
                        let s = spec(&n, j, r, sign);
                        let restated = theorem62_expression(&s, Regime::Proven).unwrap();
                        let q = quotient(&theorem1_modulus(&n).unwrap(), &theorem1_sum(&s, Regime::Proven).unwrap()).unwrap();
                        assert_eq!(restated, q, "{s:?}");
                    }
                }
            }
        }
    }
}
