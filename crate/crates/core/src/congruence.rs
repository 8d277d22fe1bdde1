//! Deciding `A ≡ 0 (mod D)` in the Laurent ring: `A / D` must again be a
//! Laurent polynomial with integer coefficients.

use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::cyclotomic::{cyclotomic, CycSignature};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModulusForm {
    Expanded(LaurentPoly),
    Factored(CycSignature),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Modulus {
    pub form: ModulusForm,
    pub description: String,
}

impl Modulus {
    pub fn expanded(poly: LaurentPoly, description: impl Into<String>) -> Self {
        assert!(!poly.is_zero(), "zero modulus");
        Modulus { form: ModulusForm::Expanded(poly), description: description.into() }
    }

    /// Factored modulus; every exponent must be nonnegative.
    pub fn factored(sig: CycSignature, description: impl Into<String>) -> Result<Self> {
        if let Some((d, _)) = sig.factors().find(|&(_, e)| e < 0) {
            return Err(Error::NegativeExponent { index: d });
        }
        Ok(Modulus { form: ModulusForm::Factored(sig), description: description.into() })
    }

    pub fn poly(&self) -> LaurentPoly {
        match &self.form {
            ModulusForm::Expanded(p) => p.clone(),
            ModulusForm::Factored(s) => s.expand().expect("factored modulus is a polynomial"),
        }
    }

    pub fn signature(&self) -> Option<&CycSignature> {
        match &self.form {
            ModulusForm::Factored(s) => Some(s),
            ModulusForm::Expanded(_) => None,
        }
    }

    /// Same modulus with the factored form expanded.
    pub fn to_expanded(&self) -> Modulus {
        Modulus::expanded(self.poly(), self.description.clone())
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.form {
            ModulusForm::Factored(s) => write!(f, "{} = {}", self.description, s),
            ModulusForm::Expanded(_) => f.write_str(&self.description),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    /// One long division by the expanded modulus.
    Expanded,
    /// Successive division by each `Φ_d`, largest `d` first.
    Factorwise,
    /// Both, asserting agreement.
    Both,
}

impl std::str::FromStr for Strategy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "expanded" => Ok(Strategy::Expanded),
            "factorwise" => Ok(Strategy::Factorwise),
            "both" => Ok(Strategy::Both),
            _ => Err(Error::Parse(format!("unknown strategy `{s}`"))),
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Expanded => "expanded",
            Strategy::Factorwise => "factorwise",
            Strategy::Both => "both",
        })
    }
}

/// Compact summary of a (possibly huge) quotient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fingerprint {
    /// `(min_exp, max_exp)`, `None` for the zero quotient.
    pub span: Option<(i64, i64)>,
    /// Up to three lowest coefficients, as decimal strings.
    pub head: Vec<String>,
    /// Up to three highest coefficients.
    pub tail: Vec<String>,
    /// First 64 bits of SHA-256 over the rendered polynomial, hex.
    pub hash: String,
}

impl Fingerprint {
    pub fn of(p: &LaurentPoly) -> Self {
        let cs = p.coeffs();
        let show = |c: &BigInt| c.to_string();
        let head = cs.iter().take(3).map(show).collect();
        let tail = cs.iter().skip(cs.len().saturating_sub(3)).map(show).collect();
        let digest = Sha256::digest(p.to_string().as_bytes());
        let hash = digest[..8].iter().map(|b| format!("{b:02x}")).collect();
        Fingerprint { span: p.max_exp().map(|hi| (p.min_exp(), hi)), head, tail, hash }
    }
}

#[derive(Clone, Debug)]
pub struct Verdict {
    pub holds: bool,
    /// The exact quotient when `holds`; not persisted.
    pub quotient: Option<LaurentPoly>,
    pub fingerprint: Option<Fingerprint>,
    /// Lowest nonzero term of the remainder when the division failed.
    pub remainder_low_term: Option<(i64, BigInt)>,
    pub strategy: Strategy,
    pub elapsed: Duration,
}

fn low_term(err: Error) -> Option<(i64, BigInt)> {
    match err {
        Error::NotDivisible { remainder } => remainder.terms().next().map(|(e, c)| (e, c.clone())),
        other => panic!("unexpected error during division: {other}"),
    }
}

fn divide_expanded(d: &Modulus, a: &LaurentPoly) -> std::result::Result<LaurentPoly, Error> {
    a.exact_div(&d.poly())
}

fn divide_factorwise(d: &Modulus, a: &LaurentPoly) -> std::result::Result<LaurentPoly, Error> {
    let sig = match &d.form {
        ModulusForm::Expanded(p) => return a.exact_div(p),
        ModulusForm::Factored(s) => s,
    };
    let mut cur = a.clone();
    for (idx, e) in sig.factors().rev() {
        let phi = cyclotomic(idx);
        for _ in 0..e {
            if cur.is_zero() {
                return Ok(cur);
            }
            cur = cur.exact_div(&phi)?;
        }
    }
    let (neg, exp) = sig.unit();
    cur = cur.shift(-exp);
    Ok(if neg { -cur } else { cur })
}

/// Decides whether `d` divides `a`. A failed division is a `holds = false`
/// verdict, not an error.
pub fn divides(d: &Modulus, a: &LaurentPoly, strategy: Strategy) -> Verdict {
    let start = Instant::now();
    let result = match strategy {
        Strategy::Expanded => divide_expanded(d, a),
        Strategy::Factorwise => divide_factorwise(d, a),
        Strategy::Both => {
            let x = divide_expanded(d, a);
            let y = divide_factorwise(d, a);
            assert_eq!(
                x.is_ok(),
                y.is_ok(),
                "expanded and factorwise strategies disagree for modulus {}",
                d.description
            );
            if let (Ok(qx), Ok(qy)) = (&x, &y) {
                assert_eq!(qx, qy, "strategies produced different quotients");
            }
            x
        }
    };
    let elapsed = start.elapsed();
    match result {
        Ok(q) => Verdict {
            holds: true,
            fingerprint: Some(Fingerprint::of(&q)),
            quotient: Some(q),
            remainder_low_term: None,
            strategy,
            elapsed,
        },
        Err(e) => Verdict {
            holds: false,
            quotient: None,
            fingerprint: None,
            remainder_low_term: low_term(e),
            strategy,
            elapsed,
        },
    }
}

/// The exact Laurent quotient `a / d`.
pub fn quotient(d: &Modulus, a: &LaurentPoly) -> Result<LaurentPoly> {
    divide_expanded(d, a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::{q_integer_signature, qbinomial_signature};
    use proptest::prelude::{prop, prop_assert_eq, proptest};

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn three_times_two_choose_one() -> Modulus {
        let sig = q_integer_signature(3).unwrap().mul(&qbinomial_signature(2, 1).unwrap());
        Modulus::factored(sig, "[3]·[2 ⊂ 1]").unwrap()
    }

    #[test]
    fn divides_examples() {
        let d = three_times_two_choose_one();
        let a = &p("q^-1") * &(&p("1 + q") * &p("1 + q + q^2"));
        for s in [Strategy::Expanded, Strategy::Factorwise, Strategy::Both] {
            let v = divides(&d, &a, s);
            assert!(v.holds);
            assert_eq!(v.quotient.unwrap(), p("q^-1"));
        }
        let v = divides(&Modulus::expanded(p("1 + q"), "[2]"), &p("1 + q + q^2"), Strategy::Both);
        assert!(!v.holds);
        assert!(v.remainder_low_term.is_some());
        let v = divides(&d, &LaurentPoly::zero(), Strategy::Both);
        assert!(v.holds);
        assert_eq!(v.quotient.unwrap(), LaurentPoly::zero());
    }

    #[test]
    fn quotient_examples() {
        let d = three_times_two_choose_one();
        let a = &p("q^-1") * &d.poly();
        assert_eq!(quotient(&d, &a).unwrap(), p("q^-1"));
        assert_eq!(quotient(&d, &d.poly()).unwrap(), LaurentPoly::one());
        assert_eq!(quotient(&d, &LaurentPoly::zero()).unwrap(), LaurentPoly::zero());
        assert!(matches!(quotient(&d, &p("1 + q")), Err(Error::NotDivisible { .. })));
    }

    #[test]
    fn factored_modulus_with_unit() {
        let sig = CycSignature::phi(2).with_unit(true, 3);
        let d = Modulus::factored(sig, "-q^3[2]").unwrap();
        let a = p("1 + 2*q + q^2");
        let v = divides(&d, &a, Strategy::Both);
        assert_eq!(v.quotient.unwrap(), p("-q^-3 - q^-2"));
    }

    #[test]
    fn factored_rejects_negative_exponents() {
        assert!(Modulus::factored(CycSignature::phi(3).inverse(), "1/[3]").is_err());
    }

    #[test]
    fn fingerprint_shape() {
        let f = Fingerprint::of(&p("1 + 2*q + 3*q^2 + 4*q^3 + 5*q^4"));
        assert_eq!(f.span, Some((0, 4)));
        assert_eq!(f.head, vec!["1", "2", "3"]);
        assert_eq!(f.tail, vec!["3", "4", "5"]);
        assert_eq!(f.hash.len(), 16);
        assert_eq!(Fingerprint::of(&LaurentPoly::zero()).span, None);
    }

    proptest! {
        #[test]
        fn strategies_agree_and_units_are_invisible(
            mults in prop::collection::vec(-3i64..4, 1..5),
            d1 in 1u64..13, d2 in 1u64..13, t in -5i64..6, perturb in prop::bool::ANY
        ) {
            let sig = CycSignature::phi(d1).with_factor(d2, 1);
            let modulus = Modulus::factored(sig, "test").unwrap();
            let mut a = &LaurentPoly::from_i64s(-2, &mults) * &modulus.poly();
            if perturb {
                a = &a + &LaurentPoly::one();
            }
            let v = divides(&modulus, &a, Strategy::Both);
            let shifted = divides(&modulus, &a.clone().shift(t), Strategy::Both);
            prop_assert_eq!(v.holds, shifted.holds);
            let expanded = divides(&modulus.to_expanded(), &a, Strategy::Factorwise);
            prop_assert_eq!(v.holds, expanded.holds);
            if let Some(q) = v.quotient {
                prop_assert_eq!(&q * &modulus.poly(), a);
            }
        }
    }
}
