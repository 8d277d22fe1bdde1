//! Laurent polynomials in one variable `q` with arbitrary-precision integer
//! coefficients.
//!
//! Storage is dense between the lowest and highest exponent present. Every
//! constructor and every operation returns the canonical form: no zero
//! coefficient at either end, and the zero polynomial is the empty sequence
//! anchored at exponent 0. Equality is therefore plain structural equality.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    min_exp: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { min_exp: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    /// `c * q^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        Self::from_coeffs(e, vec![c.into()])
    }

    /// `sign * q^e` with `sign` in `{1, -1}`; the units of the ring.
    pub fn unit(negative: bool, e: i64) -> Self {
        Self::monomial(if negative { -1 } else { 1 }, e)
    }

    pub fn from_coeffs(min_exp: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPoly { min_exp, coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(min_exp: i64, coeffs: &[i64]) -> Self {
        Self::from_coeffs(min_exp, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == self.coeffs.len() {
            self.coeffs.clear();
            self.min_exp = 0;
            return;
        }
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.min_exp += lead_zeros as i64;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.min_exp == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent present (0 for the zero polynomial).
    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    /// Highest exponent present, `None` for zero.
    pub fn max_exp(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.min_exp + self.coeffs.len() as i64 - 1)
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^e`.
    pub fn coeff(&self, e: i64) -> BigInt {
        let idx = e - self.min_exp;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    /// Iterates over `(exponent, coefficient)` for the nonzero terms.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.min_exp + i as i64, c))
    }

    /// True when the polynomial is `±q^e`.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].magnitude().is_one()
    }

    /// Multiplies by `q^e`.
    pub fn shift(mut self, e: i64) -> Self {
        if !self.is_zero() {
            self.min_exp += e;
        }
        self
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.min_exp, self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// The polynomial `a(q^{-1})`.
    pub fn subst_qinv(&self) -> Self {
        match self.max_exp() {
            None => Self::zero(),
            Some(hi) => {
                let mut coeffs = self.coeffs.clone();
                coeffs.reverse();
                LaurentPoly { min_exp: -hi, coeffs }
            }
        }
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, q0: &BigRational) -> Result<BigRational> {
        if self.is_zero() {
            return Ok(BigRational::zero());
        }
        if q0.is_zero() {
            if self.min_exp < 0 {
                return Err(Error::ZeroBase);
            }
            return Ok(BigRational::from_integer(self.coeff(0)));
        }
        // Horner over the dense part, then the monomial factor.
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q0 + BigRational::from_integer(c.clone());
        }
        let unit = q0.pow(self.min_exp as i32);
        Ok(acc * unit)
    }

    /// Value at `q = 1`: the sum of the coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    fn max_abs_i64(coeffs: &[BigInt]) -> Option<Vec<i64>> {
        coeffs.iter().map(|c| c.to_i64()).collect()
    }

    /// Exact quotient `a / d` in the Laurent ring over the integers.
    ///
    /// Monomial factors are stripped from both operands first, then integer
    /// long division runs from the top coefficient. Each quotient coefficient
    /// must be an integer multiple of the divisor's leading coefficient; for
    /// the monic divisors used throughout this crate that is automatic.
    pub fn exact_div(&self, d: &LaurentPoly) -> Result<LaurentPoly> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let num = &self.coeffs;
        let den = &d.coeffs;
        let shift = self.min_exp - d.min_exp;
        if den.len() == 1 {
            let (qs, rs): (Vec<_>, Vec<_>) = num.iter().map(|c| c.div_rem(&den[0])).unzip();
            if rs.iter().any(|r| !r.is_zero()) {
                return Err(Error::NotDivisible {
                    remainder: Self::from_coeffs(self.min_exp, rs),
                });
            }
            return Ok(Self::from_coeffs(shift, qs));
        }
        if num.len() < den.len() {
            return Err(Error::NotDivisible { remainder: self.clone() });
        }
        let m = den.len();
        let qlen = num.len() - m + 1;
        let lead = &den[m - 1];
        let unit_lead = lead.magnitude().is_one();
        let lead_neg = lead.is_negative();
        let small_den = Self::max_abs_i64(den);
        let mut rem = num.clone();
        let mut quot = vec![BigInt::zero(); qlen];
        for i in (0..qlen).rev() {
            let top = std::mem::take(&mut rem[i + m - 1]);
            if top.is_zero() {
                continue;
            }
            let c = if unit_lead {
                if lead_neg {
                    -top
                } else {
                    top
                }
            } else {
                let (qc, r) = top.div_rem(lead);
                if !r.is_zero() {
                    rem[i + m - 1] = top;
                    return Err(Error::NotDivisible {
                        remainder: Self::from_coeffs(self.min_exp, rem),
                    });
                }
                qc
            };
            match &small_den {
                Some(ds) => {
                    for (j, &dj) in ds[..m - 1].iter().enumerate() {
                        if dj != 0 {
                            rem[i + j] -= &c * dj;
                        }
                    }
                }
                None => {
                    for (j, dj) in den[..m - 1].iter().enumerate() {
                        if !dj.is_zero() {
                            rem[i + j] -= &c * dj;
                        }
                    }
                }
            }
            quot[i] = c;
        }
        if rem[..m - 1].iter().any(|r| !r.is_zero()) {
            rem.truncate(m - 1);
            return Err(Error::NotDivisible {
                remainder: Self::from_coeffs(self.min_exp, rem),
            });
        }
        Ok(Self::from_coeffs(shift, quot))
    }

    /// True when `d` divides `self` in the Laurent ring.
    pub fn is_divisible_by(&self, d: &LaurentPoly) -> bool {
        self.exact_div(d).is_ok()
    }
}

fn mul_dense(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len() + b.len() - 1;
    let small_a = LaurentPoly::max_abs_i64(a);
    let small_b = LaurentPoly::max_abs_i64(b);
    if let (Some(sa), Some(sb)) = (&small_a, &small_b) {
        let ma = sa.iter().map(|x| x.unsigned_abs() as u128).max().unwrap_or(0);
        let mb = sb.iter().map(|x| x.unsigned_abs() as u128).max().unwrap_or(0);
        let fits = ma
            .checked_mul(mb)
            .and_then(|p| p.checked_mul(sa.len().min(sb.len()) as u128))
            .is_some_and(|bound| bound < (1u128 << 126));
        if fits {
            let mut out = vec![0i128; n];
            for (i, &x) in sa.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let x = x as i128;
                for (o, &y) in out[i..].iter_mut().zip(sb.iter()) {
                    *o += x * y as i128;
                }
            }
            return out.into_iter().map(BigInt::from).collect();
        }
    }
    let mut out = vec![BigInt::zero(); n];
    match (&small_a, &small_b) {
        (_, Some(sb)) => mul_big_small(a, sb, &mut out),
        (Some(sa), None) => mul_big_small(b, sa, &mut out),
        (None, None) => {
            for (i, x) in a.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (o, y) in out[i..].iter_mut().zip(b.iter()) {
                    if !y.is_zero() {
                        *o += x * y;
                    }
                }
            }
        }
    }
    out
}

fn mul_big_small(big: &[BigInt], small: &[i64], out: &mut [BigInt]) {
    for (j, &y) in small.iter().enumerate() {
        if y == 0 {
            continue;
        }
        for (o, x) in out[j..].iter_mut().zip(big.iter()) {
            if !x.is_zero() {
                *o += x * y;
            }
        }
    }
}

fn add_into(a: &LaurentPoly, b: &LaurentPoly, negate_b: bool) -> LaurentPoly {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate_b { -b.clone() } else { b.clone() };
    }
    let lo = a.min_exp.min(b.min_exp);
    let hi = a.max_exp().unwrap().max(b.max_exp().unwrap());
    let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
    for (i, c) in a.coeffs.iter().enumerate() {
        coeffs[(a.min_exp - lo) as usize + i] += c;
    }
    let off = (b.min_exp - lo) as usize;
    for (i, c) in b.coeffs.iter().enumerate() {
        if negate_b {
            coeffs[off + i] -= c;
        } else {
            coeffs[off + i] += c;
        }
    }
    LaurentPoly::from_coeffs(lo, coeffs)
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        add_into(self, rhs, false)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self + rhs;
    }
}

impl AddAssign for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        *self += &rhs;
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        add_into(self, rhs, true)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self - rhs;
    }
}

impl SubAssign for LaurentPoly {
    fn sub_assign(&mut self, rhs: LaurentPoly) {
        *self -= &rhs;
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.coeffs.iter_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly::from_coeffs(self.min_exp + rhs.min_exp, mul_dense(&self.coeffs, &rhs.coeffs))
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        let mut acc = LaurentPoly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::monomial(c, 0)
    }
}

impl fmt::Display for LaurentPoly {
    /// Renders terms in ascending exponent order as `c*q^e + ...`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let neg = c.is_negative();
            let mag = c.magnitude();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let qpart = match e {
                0 => None,
                1 => Some("q".to_string()),
                _ => Some(format!("q^{e}")),
            };
            match qpart {
                None => write!(f, "{mag}")?,
                Some(qp) if mag.is_one() => f.write_str(&qp)?,
                Some(qp) => write!(f, "{mag}*{qp}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Parses the rendering produced by `Display`. Also accepts `q^(-3)`,
    /// `q^1`, repeated exponents and arbitrary whitespace.
    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if chars.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let err = |msg: &str, pos: usize| Error::Parse(format!("{msg} at position {pos} in `{s}`"));
        let mut pos = 0;
        let mut acc = LaurentPoly::zero();
        let read_int = |pos: &mut usize| -> Option<BigInt> {
            let start = *pos;
            while *pos < chars.len() && chars[*pos].is_ascii_digit() {
                *pos += 1;
            }
            if *pos == start {
                None
            } else {
                chars[start..*pos].iter().collect::<String>().parse().ok()
            }
        };
        let mut first = true;
        while pos < chars.len() {
            let mut negative = false;
            match chars[pos] {
                '+' => pos += 1,
                '-' => {
                    negative = true;
                    pos += 1;
                }
                _ if !first => return Err(err("expected `+` or `-`", pos)),
                _ => {}
            }
            first = false;
            let coef = read_int(&mut pos);
            let mut exp = 0i64;
            let has_q = if coef.is_some() {
                if pos < chars.len() && chars[pos] == '*' {
                    pos += 1;
                    if pos >= chars.len() || chars[pos] != 'q' {
                        return Err(err("expected `q` after `*`", pos));
                    }
                    true
                } else {
                    pos < chars.len() && chars[pos] == 'q'
                }
            } else {
                if pos >= chars.len() || chars[pos] != 'q' {
                    return Err(err("expected a coefficient or `q`", pos));
                }
                true
            };
            if has_q {
                pos += 1;
                exp = 1;
                if pos < chars.len() && chars[pos] == '^' {
                    pos += 1;
                    let paren = pos < chars.len() && chars[pos] == '(';
                    if paren {
                        pos += 1;
                    }
                    let mut eneg = false;
                    if pos < chars.len() && (chars[pos] == '-' || chars[pos] == '+') {
                        eneg = chars[pos] == '-';
                        pos += 1;
                    }
                    let e = read_int(&mut pos)
                        .and_then(|v| v.to_i64())
                        .ok_or_else(|| err("bad exponent", pos))?;
                    exp = if eneg { -e } else { e };
                    if paren {
                        if pos >= chars.len() || chars[pos] != ')' {
                            return Err(err("expected `)`", pos));
                        }
                        pos += 1;
                    }
                }
            }
            let mut c = coef.unwrap_or_else(BigInt::one);
            if negative {
                c = -c;
            }
            acc += &LaurentPoly::monomial(c, exp);
        }
        Ok(acc)
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
