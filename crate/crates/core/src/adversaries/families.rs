//! Named instance families.
//!
//! Identifiers are stable strings such as `fig1`, `theorem2:n=6` or
//! `thm4:case=3b.1`; [`FamilyId`] parses and prints them.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::model::Instance;

/// Branches of the three-machine lower-bound case tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Thm4Case {
    C1,
    C2_1,
    C2_2,
    C2_3,
    C3a1,
    C3a2,
    C3a3,
    C3b1,
    C3b2,
}

impl Thm4Case {
    pub const ALL: [Thm4Case; 9] = [
        Thm4Case::C1,
        Thm4Case::C2_1,
        Thm4Case::C2_2,
        Thm4Case::C2_3,
        Thm4Case::C3a1,
        Thm4Case::C3a2,
        Thm4Case::C3a3,
        Thm4Case::C3b1,
        Thm4Case::C3b2,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Thm4Case::C1 => "1",
            Thm4Case::C2_1 => "2.1",
            Thm4Case::C2_2 => "2.2",
            Thm4Case::C2_3 => "2.3",
            Thm4Case::C3a1 => "3a.1",
            Thm4Case::C3a2 => "3a.2",
            Thm4Case::C3a3 => "3a.3",
            Thm4Case::C3b1 => "3b.1",
            Thm4Case::C3b2 => "3b.2",
        }
    }

    /// `(p4, p5)` following the common prefix `7, 4, 4`.
    pub fn tail(self) -> (i64, i64) {
        match self {
            Thm4Case::C1 | Thm4Case::C2_1 | Thm4Case::C3a1 => (7, 11),
            Thm4Case::C2_2 | Thm4Case::C3a3 => (11, 7),
            Thm4Case::C2_3 | Thm4Case::C3a2 => (4, 11),
            Thm4Case::C3b1 => (7, 8),
            Thm4Case::C3b2 => (8, 7),
        }
    }
}

impl fmt::Display for Thm4Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Thm4Case {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().replace(['(', ')'], "");
        Thm4Case::ALL
            .into_iter()
            .find(|c| c.id() == s)
            .ok_or_else(|| Error::InvalidParam(format!("unknown case id {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    /// `<1, 1, 2>` on two machines.
    Fig1,
    /// `n - 3` unit jobs, then `n`, `2n + 3`, `2n`. Requires `n >= 4`.
    Theorem2(u64),
    /// `6x` unit jobs.
    Corollary21(u64),
    Lemma4,
    Lemma5a,
    Lemma5b,
    /// `33x` unit jobs.
    Lemma6(u64),
    Thm4(Thm4Case),
}

impl FamilyId {
    pub fn validate(&self) -> Result<()> {
        match *self {
            FamilyId::Theorem2(n) if n < 4 => Err(Error::InvalidParam(format!(
                "theorem2 needs n >= 4, got {n}"
            ))),
            FamilyId::Corollary21(0) | FamilyId::Lemma6(0) => {
                Err(Error::InvalidParam(format!("{self} needs x >= 1")))
            }
            _ => Ok(()),
        }
    }

    /// The machine count the family was built for.
    pub fn natural_machines(&self) -> usize {
        match self {
            FamilyId::Fig1 | FamilyId::Theorem2(_) | FamilyId::Corollary21(_) => 2,
            _ => 3,
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyId::Fig1 => write!(f, "fig1"),
            FamilyId::Theorem2(n) => write!(f, "theorem2:n={n}"),
            FamilyId::Corollary21(x) => write!(f, "corollary21:x={x}"),
            FamilyId::Lemma4 => write!(f, "lemma4"),
            FamilyId::Lemma5a => write!(f, "lemma5a"),
            FamilyId::Lemma5b => write!(f, "lemma5b"),
            FamilyId::Lemma6(x) => write!(f, "lemma6:x={x}"),
            FamilyId::Thm4(c) => write!(f, "thm4:case={c}"),
        }
    }
}

fn split_param<'a>(name: &str, rest: Option<&'a str>, key: &str) -> Result<&'a str> {
    let rest = rest.ok_or_else(|| Error::InvalidParam(format!("{name} needs {key}=<value>")))?;
    rest.trim()
        .strip_prefix(key)
        .and_then(|r| r.strip_prefix('='))
        .ok_or_else(|| Error::InvalidParam(format!("{name} expects {key}=<value>, got {rest:?}")))
}

fn int_param(name: &str, rest: Option<&str>, key: &str) -> Result<u64> {
    let v = split_param(name, rest, key)?;
    v.trim()
        .parse()
        .map_err(|_| Error::InvalidParam(format!("{name}: {key} must be a non-negative integer, got {v:?}")))
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, rest) = match s.split_once(':') {
            Some((n, r)) => (n, Some(r)),
            None => (s, None),
        };
        let no_params = |id: FamilyId| match rest {
            None => Ok(id),
            Some(r) => Err(Error::InvalidParam(format!("{name} takes no parameters, got {r:?}"))),
        };
        let id = match name.to_ascii_lowercase().as_str() {
            "fig1" => no_params(FamilyId::Fig1)?,
            "theorem2" => FamilyId::Theorem2(int_param(name, rest, "n")?),
            "corollary21" => FamilyId::Corollary21(int_param(name, rest, "x")?),
            "lemma4" => no_params(FamilyId::Lemma4)?,
            "lemma5a" => no_params(FamilyId::Lemma5a)?,
            "lemma5b" => no_params(FamilyId::Lemma5b)?,
            "lemma6" => FamilyId::Lemma6(int_param(name, rest, "x")?),
            "thm4" => FamilyId::Thm4(split_param(name, rest, "case")?.parse()?),
            other => return Err(Error::InvalidParam(format!("unknown family {other:?}"))),
        };
        id.validate()?;
        Ok(id)
    }
}

pub fn named_instance(family: &FamilyId) -> Result<Instance> {
    family.validate()?;
    let units = |count: u64| vec![1i64; count as usize];
    let values: Vec<i64> = match *family {
        FamilyId::Fig1 => vec![1, 1, 2],
        FamilyId::Theorem2(n) => {
            let n = n as i64;
            let mut v = units(n as u64 - 3);
            v.extend([n, 2 * n + 3, 2 * n]);
            v
        }
        FamilyId::Corollary21(x) => units(6 * x),
        FamilyId::Lemma4 => vec![16, 16, 1],
        FamilyId::Lemma5a => vec![17, 14, 1, 1],
        FamilyId::Lemma5b => vec![1, 1, 14, 17],
        FamilyId::Lemma6(x) => units(33 * x),
        FamilyId::Thm4(case) => {
            let (p4, p5) = case.tail();
            vec![7, 4, 4, p4, p5]
        }
    };
    Instance::from_integers(values)
}

/// Expands `theorem2:n=4..8` (inclusive range) into one id per value. A plain id
/// expands to itself.
pub fn parse_family_range(spec: &str) -> Result<Vec<FamilyId>> {
    let Some((head, tail)) = spec.split_once("..") else {
        return Ok(vec![spec.parse()?]);
    };
    let (prefix, start) = head
        .rsplit_once('=')
        .ok_or_else(|| Error::InvalidParam(format!("range {spec:?} needs <family>:<key>=<a>..<b>")))?;
    let start: u64 = start
        .trim()
        .parse()
        .map_err(|_| Error::InvalidParam(format!("bad range start in {spec:?}")))?;
    let end: u64 = tail
        .trim()
        .parse()
        .map_err(|_| Error::InvalidParam(format!("bad range end in {spec:?}")))?;
    if end < start {
        return Err(Error::InvalidParam(format!("empty range in {spec:?}")));
    }
    (start..=end)
        .map(|v| format!("{prefix}={v}").parse())
        .collect()
}
