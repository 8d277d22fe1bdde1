//! Sweep configuration: a flat `key = value` file.
//!
//! ```text
//! # comments start with '#'
//! version = 1
//! family = thm1
//! variant = plus,minus
//! strategy = both
//! m = 1..3
//! n = 1..5
//! j = 0..m
//! r = 0..2
//! ```
//!
//! Reserved keys are `version`, `family`, `variant`, `strategy`, `threads`,
//! `output`, `resume`, `conjectural` and `stop_on_counterexample`. Every
//! other key names a family parameter. A parameter value is a comma-separated
//! list of alternatives; each alternative is an inclusive range `lo..hi`, a
//! single bound, or a colon tuple `1:2:3` giving a whole list parameter.
//! Bounds are sums and differences of integers and earlier parameters, so
//! `j = 0..m+3` and `j = 0..s+t` are allowed. A range entry of a list
//! parameter applies to every component independently.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use qcong::families::cyclic::Regime;
use qcong::families::{FamilyId, ParamValue, Params, Sign};
use qcong::Strategy;

use crate::error::{HarnessError, Result};

pub const CONFIG_VERSION: u32 = 1;

/// `c0 + Σ ±name`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bound {
    pub constant: i64,
    pub terms: Vec<(bool, String)>,
}

impl Bound {
    pub fn constant(c: i64) -> Self {
        Bound { constant: c, terms: Vec::new() }
    }

    fn eval(&self, env: &BTreeMap<String, i64>) -> Option<i64> {
        let mut v = self.constant;
        for (neg, name) in &self.terms {
            let x = *env.get(name)?;
            v += if *neg { -x } else { x };
        }
        Some(v)
    }

    fn deps(&self) -> impl Iterator<Item = &str> {
        self.terms.iter().map(|(_, n)| n.as_str())
    }
}

impl FromStr for Bound {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err("empty bound".into());
        }
        let mut out = Bound::constant(0);
        let mut rest = s.as_str();
        let mut neg = false;
        if let Some(r) = rest.strip_prefix('-') {
            neg = true;
            rest = r;
        }
        loop {
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let tok = &rest[..end];
            if tok.is_empty() {
                return Err(format!("malformed bound `{s}`"));
            }
            if let Ok(v) = tok.parse::<i64>() {
                out.constant += if neg { -v } else { v };
            } else if tok.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') && !tok.starts_with(|c: char| c.is_ascii_digit()) {
                out.terms.push((neg, tok.to_string()));
            } else {
                return Err(format!("malformed bound `{s}`"));
            }
            if end == rest.len() {
                break;
            }
            neg = rest.as_bytes()[end] == b'-';
            rest = &rest[end + 1..];
        }
        Ok(out)
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (neg, name) in &self.terms {
            match (first, neg) {
                (true, true) => write!(f, "-{name}")?,
                (true, false) => write!(f, "{name}")?,
                (false, true) => write!(f, "-{name}")?,
                (false, false) => write!(f, "+{name}")?,
            }
            first = false;
        }
        if first {
            write!(f, "{}", self.constant)
        } else if self.constant > 0 {
            write!(f, "+{}", self.constant)
        } else if self.constant < 0 {
            write!(f, "{}", self.constant)
        } else {
            Ok(())
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Alt {
    Range(Bound, Bound),
    Tuple(Vec<i64>),
}

impl fmt::Display for Alt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Alt::Range(lo, hi) if lo == hi => write!(f, "{lo}"),
            Alt::Range(lo, hi) => write!(f, "{lo}..{hi}"),
            Alt::Tuple(v) => {
                let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                f.write_str(&parts.join(":"))
            }
        }
    }
}

/// The alternatives for one parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamRange(pub Vec<Alt>);

impl ParamRange {
    pub fn range(lo: i64, hi: i64) -> Self {
        ParamRange(vec![Alt::Range(Bound::constant(lo), Bound::constant(hi))])
    }

    pub fn value(v: i64) -> Self {
        Self::range(v, v)
    }

    fn deps(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for alt in &self.0 {
            if let Alt::Range(lo, hi) = alt {
                out.extend(lo.deps().chain(hi.deps()).map(str::to_string));
            }
        }
        out
    }

    /// Scalar values, ascending and deduplicated.
    fn scalars(&self, env: &BTreeMap<String, i64>) -> BTreeSet<i64> {
        let mut out = BTreeSet::new();
        for alt in &self.0 {
            if let Alt::Range(lo, hi) = alt {
                if let (Some(lo), Some(hi)) = (lo.eval(env), hi.eval(env)) {
                    out.extend(lo..=hi);
                }
            }
        }
        out
    }

    fn tuples(&self) -> impl Iterator<Item = &Vec<i64>> {
        self.0.iter().filter_map(|a| match a {
            Alt::Tuple(v) => Some(v),
            Alt::Range(..) => None,
        })
    }
}

impl FromStr for ParamRange {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let mut alts = Vec::new();
        for part in s.split(',').map(str::trim) {
            if part.is_empty() {
                return Err(format!("empty alternative in `{s}`"));
            }
            let alt = if let Some((lo, hi)) = part.split_once("..") {
                Alt::Range(lo.parse()?, hi.parse()?)
            } else if part.contains(':') {
                let v = part.split(':').map(|t| t.trim().parse::<i64>().map_err(|_| format!("bad tuple `{part}`")));
                Alt::Tuple(v.collect::<std::result::Result<_, _>>()?)
            } else {
                let b: Bound = part.parse()?;
                Alt::Range(b.clone(), b)
            };
            alts.push(alt);
        }
        Ok(ParamRange(alts))
    }
}

impl fmt::Display for ParamRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// One point of the lattice.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tuple {
    pub params: Params,
    pub variant: Option<Sign>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub family: FamilyId,
    pub ranges: BTreeMap<String, ParamRange>,
    /// Empty for unsigned families.
    pub variants: Vec<Sign>,
    pub strategy: Strategy,
    /// `None` uses every core; `QCONG_THREADS` overrides both.
    pub threads: Option<usize>,
    pub output: PathBuf,
    pub resume: bool,
    /// Lifts the proven parameter bounds where a family has them.
    pub conjectural: bool,
    pub stop_on_counterexample: bool,
}

impl SweepConfig {
    pub fn new(family: FamilyId, output: impl Into<PathBuf>) -> Self {
        let variants = if family.info().signed { Sign::BOTH.to_vec() } else { Vec::new() };
        SweepConfig {
            family,
            ranges: BTreeMap::new(),
            variants,
            strategy: Strategy::Both,
            threads: None,
            output: output.into(),
            resume: false,
            conjectural: false,
            stop_on_counterexample: true,
        }
    }

    pub fn with_range(mut self, name: &str, range: ParamRange) -> Self {
        self.ranges.insert(name.to_string(), range);
        self
    }

    pub fn regime(&self) -> Regime {
        if self.conjectural {
            Regime::Conjectural
        } else {
            Regime::Proven
        }
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(HarnessError::io(path))?;
        let mut cfg = Self::parse(&text)?;
        if cfg.output.is_relative() {
            if let Some(dir) = path.parent() {
                cfg.output = dir.join(&cfg.output);
            }
        }
        Ok(cfg)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut family = None;
        let mut fields: Vec<(usize, String, String)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let body = raw.split('#').next().unwrap().trim();
            if body.is_empty() {
                continue;
            }
            let (k, v) = body.split_once('=').ok_or(HarnessError::Config { line, msg: format!("expected key = value, got `{body}`") })?;
            let (k, v) = (k.trim().to_string(), v.trim().to_string());
            if fields.iter().any(|(_, seen, _)| *seen == k) {
                return Err(HarnessError::Config { line, msg: format!("duplicate key `{k}`") });
            }
            if k == "family" {
                family = Some(v.parse::<FamilyId>().map_err(|e| HarnessError::Config { line, msg: e.to_string() })?);
            }
            fields.push((line, k, v));
        }
        let family = family.ok_or_else(|| HarnessError::Invalid("missing `family`".into()))?;
        let mut cfg = SweepConfig::new(family, "sweep.jsonl");
        let bad = |line: usize, msg: String| HarnessError::Config { line, msg };
        let flag = |line: usize, v: &str| match v {
            "true" => Ok(true),
            "false" => Ok(false),
            _ => Err(bad(line, format!("expected true or false, got `{v}`"))),
        };
        for (line, k, v) in fields {
            match k.as_str() {
                "family" => {}
                "version" => {
                    if v != CONFIG_VERSION.to_string() {
                        return Err(bad(line, format!("unsupported config version {v}")));
                    }
                }
                "variant" => {
                    cfg.variants = v
                        .split(',')
                        .map(|t| t.trim().parse::<Sign>().map_err(|e| bad(line, e.to_string())))
                        .collect::<Result<_>>()?;
                }
                "strategy" => cfg.strategy = v.parse().map_err(|e: qcong::Error| bad(line, e.to_string()))?,
                "threads" => {
                    let n: usize = v.parse().map_err(|_| bad(line, format!("bad thread count `{v}`")))?;
                    cfg.threads = (n > 0).then_some(n);
                }
                "output" => cfg.output = PathBuf::from(v),
                "resume" => cfg.resume = flag(line, &v)?,
                "conjectural" => cfg.conjectural = flag(line, &v)?,
                "stop_on_counterexample" => cfg.stop_on_counterexample = flag(line, &v)?,
                _ => {
                    let range = v.parse().map_err(|e| bad(line, e))?;
                    cfg.ranges.insert(k, range);
                }
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<()> {
        let info = self.family.info();
        let list = info.list.map(|(l, _)| l);
        let declared: Vec<&str> = info.ints.iter().copied().chain(list).collect();
        for name in self.ranges.keys() {
            if !declared.contains(&name.as_str()) {
                return Err(HarnessError::Invalid(format!("family {} has no parameter `{name}`", info.name)));
            }
        }
        for name in &declared {
            if !self.ranges.contains_key(*name) {
                return Err(HarnessError::Invalid(format!("no range for parameter `{name}`")));
            }
        }
        for (name, range) in &self.ranges {
            let is_list = list == Some(name.as_str());
            if !is_list && range.tuples().next().is_some() {
                return Err(HarnessError::Invalid(format!("`{name}` is a scalar parameter; tuples are not allowed")));
            }
            for dep in range.deps() {
                if !info.ints.contains(&dep.as_str()) {
                    return Err(HarnessError::Invalid(format!("bound of `{name}` refers to `{dep}`, not a scalar parameter")));
                }
            }
        }
        match (info.signed, self.variants.is_empty()) {
            (true, true) => Err(HarnessError::Invalid(format!("family {} needs at least one variant", info.name))),
            (false, false) => Err(HarnessError::Invalid(format!("family {} takes no variant", info.name))),
            _ => Ok(()),
        }?;
        self.scalar_order().map(|_| ())
    }

    /// Scalar parameters ordered so every bound refers only to earlier ones.
    fn scalar_order(&self) -> Result<Vec<&'static str>> {
        let info = self.family.info();
        let mut done: Vec<&'static str> = Vec::new();
        while done.len() < info.ints.len() {
            let next = info.ints.iter().find(|name| {
                !done.contains(name) && self.ranges[**name].deps().iter().all(|d| done.contains(&d.as_str()))
            });
            match next {
                Some(name) => done.push(name),
                None => return Err(HarnessError::Invalid("parameter bounds refer to each other in a cycle".into())),
            }
        }
        Ok(done)
    }

    /// Every tuple of the lattice, sorted and deduplicated.
    pub fn lattice(&self) -> Result<Vec<Tuple>> {
        let order = self.scalar_order()?;
        let mut envs = vec![BTreeMap::<String, i64>::new()];
        for name in order {
            let range = &self.ranges[name];
            envs = envs
                .into_iter()
                .flat_map(|env| {
                    range.scalars(&env).into_iter().map(move |v| {
                        let mut e = env.clone();
                        e.insert(name.to_string(), v);
                        e
                    })
                })
                .collect();
        }
        let info = self.family.info();
        let mut out = BTreeSet::new();
        for env in envs {
            let base = env.iter().fold(Params::new(), |p, (k, v)| p.int(k, *v));
            let lists: Vec<Params> = match info.list {
                None => vec![base],
                Some((name, len_name)) => list_values(&self.ranges[name], &env, env[len_name])
                    .into_iter()
                    .map(|v| base.clone().with(name, ParamValue::List(v)))
                    .collect(),
            };
            for params in lists {
                if self.variants.is_empty() {
                    out.insert(Tuple { params, variant: None });
                } else {
                    for &s in &self.variants {
                        out.insert(Tuple { params: params.clone(), variant: Some(s) });
                    }
                }
            }
        }
        Ok(out.into_iter().collect())
    }
}

fn list_values(range: &ParamRange, env: &BTreeMap<String, i64>, len: i64) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = range.tuples().filter(|t| t.len() as i64 == len).cloned().collect();
    let scalars: Vec<i64> = range.scalars(env).into_iter().collect();
    if len >= 1 && !scalars.is_empty() {
        let mut acc: Vec<Vec<i64>> = vec![Vec::new()];
        for _ in 0..len {
            acc = acc.into_iter().flat_map(|p| scalars.iter().map(move |&s| [p.clone(), vec![s]].concat())).collect();
        }
        out.extend(acc);
    }
    out
}

impl fmt::Display for SweepConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "version = {CONFIG_VERSION}")?;
        writeln!(f, "family = {}", self.family)?;
        if !self.variants.is_empty() {
            let v: Vec<String> = self.variants.iter().map(|s| s.to_string()).collect();
            writeln!(f, "variant = {}", v.join(","))?;
        }
        writeln!(f, "strategy = {}", self.strategy)?;
        if let Some(t) = self.threads {
            writeln!(f, "threads = {t}")?;
        }
        writeln!(f, "output = {}", self.output.display())?;
        writeln!(f, "resume = {}", self.resume)?;
        writeln!(f, "conjectural = {}", self.conjectural)?;
        writeln!(f, "stop_on_counterexample = {}", self.stop_on_counterexample)?;
        for (k, v) in &self.ranges {
            writeln!(f, "{k} = {v}")?;
        }
        Ok(())
    }
}
