//! The closed catalogue of divisibility families addressable by id.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::congruence::{Strategy, Verdict};
use crate::error::{Error, Result};

use super::ballot_sums::{theorem3_modulus, theorem3_sum, theorem4_modulus, theorem4_sum};
use super::conjectures::{all_j, ballot_ladder, multi_ballot, CyclicFamily};
use super::corollaries::{self, BallotPair};
use super::cyclic::{self, CyclicSpec, Regime};
use super::lemma::{theorem22_modulus, theorem22_sum};
use super::pq::{pq_modulus, pq_sum, Which};
use super::weight::Sign;
use super::Instance;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    Thm1,
    Thm2,
    Thm3,
    Thm4,
    Thm22,
    Thm62,
    Pq,
    C63a,
    C63b,
    C71,
    C72,
    C73,
    C74,
    C75a,
    C75b,
    C76a,
    C76b,
    C77,
    Conj246n1,
    Conj246n2,
    Conj246n3,
    Conj246n4,
    ConjFinal,
    ConjAllJ,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    Theorem,
    Conjecture,
}

/// Parameter declaration of a family.
#[derive(Clone, Copy, Debug)]
pub struct FamilyInfo {
    pub id: FamilyId,
    pub name: &'static str,
    pub kind: FamilyKind,
    /// Takes a plus/minus variant.
    pub signed: bool,
    /// Required integer parameters.
    pub ints: &'static [&'static str],
    /// A list parameter and the integer parameter holding its length.
    pub list: Option<(&'static str, &'static str)>,
    pub summary: &'static str,
}

macro_rules! info {
    ($id:ident, $name:literal, $kind:ident, $signed:literal, [$($p:literal),*], $list:expr, $summary:literal) => {
        FamilyInfo {
            id: FamilyId::$id,
            name: $name,
            kind: FamilyKind::$kind,
            signed: $signed,
            ints: &[$($p),*],
            list: $list,
            summary: $summary,
        }
    };
}

const CATALOGUE: &[FamilyInfo] = &[
    info!(Thm1, "thm1", Theorem, true, ["m", "j", "r"], Some(("n", "m")),
        "Σ w [2k+1]^{2r+1} C(n;k) mod [n1+nm+1][n1+nm ⊂ n1]"),
    info!(Thm2, "thm2", Theorem, true, ["m", "j", "r"], Some(("n", "m")),
        "Σ w [2k+1][k]^r[k+1]^r C(n;k) mod the strengthened modulus"),
    info!(Thm3, "thm3", Theorem, true, ["n", "s", "r", "j"], None,
        "Σ w [2k+1]^r A_{n,k}^s mod [2n ⊂ n]"),
    info!(Thm4, "thm4", Theorem, true, ["m", "n", "s", "t", "r", "j"], None,
        "[m+n+1] Σ w [2k+1]^r A_{m,k}^s A_{n,k}^t mod the q-super-Catalan number"),
    info!(Thm22, "thm22", Theorem, false, ["n", "r", "s", "v"], None,
        "four Pochhammer-weighted sums mod [2n+1][2n ⊂ n]"),
    info!(Thm62, "thm62", Theorem, true, ["m", "j", "r"], Some(("n", "m")),
        "factorial-prefactor form is a Laurent polynomial"),
    info!(Pq, "pq", Theorem, true, ["n", "j", "r"], None,
        "P_r (plus) or Q_r (minus) mod [2n+1][2n ⊂ n][n]^e"),
    info!(C63a, "C63a", Theorem, true, ["n", "s", "t", "r", "j"], None,
        "Σ τ [2k+1]^r A_{n+1,k}^s A_{n,k}^t mod [2n ⊂ n]/[n+1]"),
    info!(C63b, "C63b", Theorem, true, ["n", "s", "t", "r", "j"], None,
        "Σ τ [2k+1]^r A_{2n,k}^s A_{n,k}^t mod [4n ⊂ n]/[3n+1]"),
    info!(C71, "C71", Theorem, true, ["a", "m", "n", "r", "j"], None,
        "two alternating binomial powers mod [m+n+1][m+n ⊂ m]"),
    info!(C72, "C72", Theorem, true, ["a", "l", "m", "n", "r", "j"], None,
        "three rotating binomial powers mod [m+n+1][m+n ⊂ m]"),
    info!(C73, "C73", Theorem, true, ["a", "b", "n", "r", "j"], None,
        "central binomial powers mod [n][2n ⊂ n]"),
    info!(C74, "C74", Theorem, true, ["a", "b", "c", "n", "r", "j"], None,
        "(n, n+1, n+2) binomials mod [2n+5][2n+1 ⊂ n]"),
    info!(C75a, "C75a", Theorem, true, ["a", "b", "c", "n", "r", "j"], None,
        "(3n, 2n, n) binomials mod [2n+1][6n+1 ⊂ n]"),
    info!(C75b, "C75b", Theorem, true, ["a", "b", "c", "n", "r", "j"], None,
        "(3n, 2n, n) binomials mod [2n+1][6n+1 ⊂ 3n]"),
    info!(C76a, "C76a", Theorem, true, ["a", "b", "c", "n", "r", "j"], None,
        "[3n+1] × (4n, 2n, n) binomials mod [2n+1][4n+1][8n+1 ⊂ 3n]"),
    info!(C76b, "C76b", Theorem, true, ["a", "b", "c", "n", "r", "j"], None,
        "(4n, 3n, 2n) binomials mod [4n+1][8n+1 ⊂ 3n]"),
    info!(C77, "C77", Theorem, true, ["m", "n", "r", "j"], Some(("a", "m")),
        "staircase binomial powers mod [2n+2m-1][2n+1 ⊂ n]"),
    info!(Conj246n1, "Conj246n_1", Conjecture, true, ["n", "r", "s", "t", "j"], None,
        "[4n+1] Σ η A_{3n}^r A_{2n}^s A_n^t mod [6n+1 ⊂ n]/[6n+1]"),
    info!(Conj246n2, "Conj246n_2", Conjecture, true, ["n", "r", "s", "t", "j"], None,
        "[4n+1] Σ η A_{3n}^r A_{2n}^s A_n^t mod [6n+1 ⊂ 3n]/[6n+1]"),
    info!(Conj246n3, "Conj246n_3", Conjecture, true, ["n", "r", "s", "t", "j"], None,
        "[8n+1] Σ η A_{4n}^r A_{2n}^s A_n^t mod [8n+1 ⊂ 3n]"),
    info!(Conj246n4, "Conj246n_4", Conjecture, true, ["n", "r", "s", "t", "j"], None,
        "[6n+1][8n+1] Σ η A_{4n}^r A_{3n}^s A_{2n}^t mod [8n+1 ⊂ 3n]"),
    info!(ConjFinal, "ConjFinal", Conjecture, true, ["m", "n", "j"], Some(("r", "m")),
        "Σ η ∏ A_{n+i-1,k}^{r_i} mod [2n ⊂ n]/[n+1]"),
    info!(ConjAllJ, "ConjAllJ", Conjecture, true, ["thm", "m", "j", "r"], Some(("n", "m")),
        "thm1 (thm=1) or thm2 (thm=2) without the bound j <= m"),
];

impl FamilyId {
    pub fn all() -> impl Iterator<Item = FamilyId> {
        CATALOGUE.iter().map(|i| i.id)
    }

    pub fn info(self) -> &'static FamilyInfo {
        CATALOGUE.iter().find(|i| i.id == self).expect("every id is catalogued")
    }

    pub fn name(self) -> &'static str {
        self.info().name
    }

    pub fn kind(self) -> FamilyKind {
        self.info().kind
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CATALOGUE
            .iter()
            .find(|i| i.name.eq_ignore_ascii_case(s))
            .map(|i| i.id)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

impl Serialize for FamilyId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for FamilyId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParamValue {
    Int(i64),
    List(Vec<i64>),
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(v) => write!(f, "{v}"),
            ParamValue::List(v) => {
                let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                f.write_str(&parts.join(":"))
            }
        }
    }
}

impl FromStr for ParamValue {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parse = |t: &str| t.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad integer `{t}`")));
        if s.contains(':') {
            Ok(ParamValue::List(s.split(':').map(parse).collect::<Result<_>>()?))
        } else {
            Ok(ParamValue::Int(parse(s)?))
        }
    }
}

/// Named parameters, ordered by name. Renders as `a=1,n=1:2`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Params(pub BTreeMap<String, ParamValue>);

impl Params {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: &str, value: ParamValue) -> Self {
        self.0.insert(name.to_string(), value);
        self
    }

    pub fn int(self, name: &str, v: i64) -> Self {
        self.with(name, ParamValue::Int(v))
    }

    pub fn list(self, name: &str, v: Vec<i64>) -> Self {
        self.with(name, ParamValue::List(v))
    }

    pub fn get(&self, name: &str) -> Option<&ParamValue> {
        self.0.get(name)
    }

    fn get_int(&self, name: &str) -> Result<i64> {
        match self.0.get(name) {
            Some(ParamValue::Int(v)) => Ok(*v),
            Some(ParamValue::List(_)) => Err(Error::Parse(format!("parameter `{name}` must be a single integer"))),
            None => Err(Error::Parse(format!("missing parameter `{name}`"))),
        }
    }

    /// The list parameter, with a single integer replicated to `len`.
    fn get_list(&self, name: &str, len: i64) -> Result<Vec<i64>> {
        if len < 1 {
            return Err(Error::ConstraintViolation(format!("list length must be >= 1, got {len}")));
        }
        match self.0.get(name) {
            Some(ParamValue::Int(v)) => Ok(vec![*v; len as usize]),
            Some(ParamValue::List(v)) if v.len() as i64 == len => Ok(v.clone()),
            Some(ParamValue::List(v)) => {
                Err(Error::Parse(format!("parameter `{name}` has {} entries, expected {len}", v.len())))
            }
            None => Err(Error::Parse(format!("missing parameter `{name}`"))),
        }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Params {
    type Err = Error;
    /// `k=v,k=v,...` where a list value is colon-separated.
    fn from_str(s: &str) -> Result<Self> {
        let mut out = Params::new();
        for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (k, v) = item.split_once('=').ok_or_else(|| Error::Parse(format!("expected key=value, got `{item}`")))?;
            let k = k.trim();
            if out.0.insert(k.to_string(), v.parse()?).is_some() {
                return Err(Error::Parse(format!("parameter `{k}` given twice")));
            }
        }
        Ok(out)
    }
}

/// A fully specified instance of a catalogued family.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SumSpec {
    pub family: FamilyId,
    pub params: Params,
    pub sign: Option<Sign>,
    pub regime: Regime,
}

impl SumSpec {
    pub fn new(family: FamilyId, params: Params, sign: Option<Sign>) -> Self {
        SumSpec { family, params, sign, regime: Regime::Proven }
    }

    pub fn with_regime(mut self, regime: Regime) -> Self {
        self.regime = regime;
        self
    }

    /// A failing instance refutes a conjecture rather than exposing a bug.
    pub fn is_conjectural(&self) -> bool {
        self.family.kind() == FamilyKind::Conjecture || self.regime == Regime::Conjectural
    }

    fn check_names(&self) -> Result<()> {
        let info = self.family.info();
        for name in self.params.0.keys() {
            let known = info.ints.contains(&name.as_str()) || info.list.is_some_and(|(l, _)| l == name);
            if !known {
                return Err(Error::Parse(format!("family {} has no parameter `{name}`", info.name)));
            }
        }
        match (info.signed, self.sign) {
            (true, None) => Err(Error::Parse(format!("family {} needs --variant plus|minus", info.name))),
            (false, Some(_)) => Err(Error::Parse(format!("family {} takes no plus/minus variant", info.name))),
            _ => Ok(()),
        }
    }

    fn cyclic_spec(&self) -> Result<CyclicSpec> {
        let p = &self.params;
        let m = p.get_int("m")?;
        Ok(CyclicSpec::new(p.get_list("n", m)?, p.get_int("j")?, p.get_int("r")?, self.sign.unwrap()))
    }

    /// Builds the sum and its modulus.
    pub fn build(&self) -> Result<Instance> {
        self.check_names()?;
        let p = &self.params;
        let i = |name: &str| p.get_int(name);
        let sign = self.sign.unwrap_or(Sign::Plus);
        use FamilyId::*;
        match self.family {
            Thm1 => {
                let spec = self.cyclic_spec()?;
                Ok(Instance { sum: cyclic::theorem1_sum(&spec, self.regime)?, modulus: cyclic::theorem1_modulus(&spec.n)? })
            }
            Thm2 => {
                let spec = self.cyclic_spec()?;
                Ok(Instance { sum: cyclic::theorem2_sum(&spec, self.regime)?, modulus: cyclic::theorem2_modulus(&spec)? })
            }
            Thm62 => {
                let (sum, modulus) = cyclic::theorem62_parts(&self.cyclic_spec()?, self.regime)?;
                Ok(Instance { sum, modulus })
            }
            Thm3 => {
                let n = i("n")?;
                Ok(Instance { sum: theorem3_sum(n, i("s")?, i("r")?, i("j")?, sign)?, modulus: theorem3_modulus(n)? })
            }
            Thm4 => {
                let (m, n) = (i("m")?, i("n")?);
                let sum = theorem4_sum(m, n, i("s")?, i("t")?, i("r")?, i("j")?, sign)?;
                Ok(Instance { sum, modulus: theorem4_modulus(m, n)? })
            }
            Thm22 => {
                let (n, v) = (i("n")?, i("v")?);
                let v = u8::try_from(v).map_err(|_| Error::ConstraintViolation(format!("variant must be 1..4, got {v}")))?;
                super::require(n >= 1, || format!("n = {n} must be >= 1"))?;
                Ok(Instance { sum: theorem22_sum(n, i("r")?, i("s")?, v)?, modulus: theorem22_modulus(n)? })
            }
            Pq => {
                let (n, r) = (i("n")?, i("r")?);
                let which = if sign == Sign::Plus { Which::P } else { Which::Q };
                Ok(Instance { sum: pq_sum(which, n, i("j")?, r)?, modulus: pq_modulus(which, n, r)? })
            }
            C63a | C63b => {
                let pair = if self.family == C63a { BallotPair::NextN } else { BallotPair::DoubleN };
                corollaries::two_ballot(pair, i("n")?, i("s")?, i("t")?, i("r")?, i("j")?, sign)
            }
            C71 => corollaries::mnrs(i("a")?, i("m")?, i("n")?, i("r")?, i("j")?, sign),
            C72 => corollaries::lmn(i("a")?, i("l")?, i("m")?, i("n")?, i("r")?, i("j")?, sign),
            C73 => corollaries::central(i("a")?, i("b")?, i("n")?, i("r")?, i("j")?, sign),
            C74 => corollaries::n1n2n3(i("a")?, i("b")?, i("c")?, i("n")?, i("r")?, i("j")?, sign),
            C75a | C75b => {
                corollaries::two_four_six(self.family == C75b, i("a")?, i("b")?, i("c")?, i("n")?, i("r")?, i("j")?, sign)
            }
            C76a | C76b => {
                corollaries::two_four_eight(self.family == C76b, i("a")?, i("b")?, i("c")?, i("n")?, i("r")?, i("j")?, sign)
            }
            C77 => {
                let a = p.get_list("a", i("m")?)?;
                corollaries::staircase(i("n")?, &a, i("r")?, i("j")?, sign)
            }
            Conj246n1 | Conj246n2 | Conj246n3 | Conj246n4 => {
                let display = match self.family {
                    Conj246n1 => 1,
                    Conj246n2 => 2,
                    Conj246n3 => 3,
                    _ => 4,
                };
                multi_ballot(display, i("n")?, i("r")?, i("s")?, i("t")?, i("j")?, sign)
            }
            ConjFinal => {
                let rs = p.get_list("r", i("m")?)?;
                ballot_ladder(i("n")?, &rs, i("j")?, sign)
            }
            ConjAllJ => {
                let family = match i("thm")? {
                    1 => CyclicFamily::OddPower,
                    2 => CyclicFamily::Pronic,
                    t => return Err(Error::ConstraintViolation(format!("thm must be 1 or 2, got {t}"))),
                };
                all_j(family, &self.cyclic_spec()?)
            }
        }
    }

    pub fn check(&self, strategy: Strategy) -> Result<Verdict> {
        Ok(self.build()?.check(strategy))
    }
}
