//! Reference catalog of the DO polynomials listed alongside the
//! classification, reproduced exactly as printed.
//!
//! Items `R1-1..R1-6` belong to the first kind and `R2-1..R2-15` to the
//! second. Each item has an `(n, d)` instance family and a printed polynomial
//! whose exponents are formulas in the item's parameters. Two printed items
//! carry a coefficient that differs from the actual polynomial (`R1-4`
//! last term, `R2-9` middle term); they are kept as printed so that the
//! verify module can report them.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::classify::RuleId;
use crate::dickson::DicksonKind;
use crate::error::{Error, Result};
use crate::field::validate_odd_prime;
use crate::poly::SparsePoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CatalogItem {
    kind: DicksonKind,
    number: u8,
}

/// Exponent parameters; each item reads only the ones it names.
/// `p` is required for items stated for a range of primes and must match
/// for items tied to one prime.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CatalogParams {
    pub p: Option<u64>,
    pub i: u32,
    pub k: u32,
    pub l: u32,
    pub m: u32,
}

/// One printed term: coefficient, instantiated exponent and a symbolic label
/// identifying the term independently of the parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrintedTerm {
    pub coeff: u64,
    pub exponent: u64,
    pub label: &'static str,
}

enum Prime {
    Exactly(u64),
    Above(u64),
}

fn pw(p: u64, e: u32) -> Result<u64> {
    p.checked_pow(e).ok_or(Error::ExponentOverflow)
}

fn mul(a: u64, b: u64) -> Result<u64> {
    a.checked_mul(b).ok_or(Error::ExponentOverflow)
}

impl CatalogItem {
    pub fn new(kind: DicksonKind, number: u8) -> Result<Self> {
        let max = match kind {
            DicksonKind::First => 6,
            DicksonKind::Second => 15,
        };
        if number == 0 || number > max {
            return Err(Error::UnknownItem(format!("{}-{number}", family(kind))));
        }
        Ok(CatalogItem { kind, number })
    }

    pub fn all() -> Vec<CatalogItem> {
        let first = (1..=6).map(|number| CatalogItem {
            kind: DicksonKind::First,
            number,
        });
        let second = (1..=15).map(|number| CatalogItem {
            kind: DicksonKind::Second,
            number,
        });
        first.chain(second).collect()
    }

    pub fn kind(self) -> DicksonKind {
        self.kind
    }

    pub fn number(self) -> u8 {
        self.number
    }

    fn prime(self) -> Prime {
        match (self.kind, self.number) {
            (DicksonKind::First, 5 | 6) => Prime::Above(3),
            (DicksonKind::First, _) => Prime::Exactly(3),
            (DicksonKind::Second, 1..=10) => Prime::Exactly(3),
            (DicksonKind::Second, 11..=13) => Prime::Exactly(5),
            (DicksonKind::Second, _) => Prime::Above(5),
        }
    }

    /// Whether the item is stated for characteristic `p`.
    pub fn admits(self, p: u64) -> bool {
        match self.prime() {
            Prime::Exactly(q) => p == q,
            Prime::Above(q) => p > q && validate_odd_prime(p).is_ok(),
        }
    }

    /// Names of the parameters the item's formulas use.
    pub fn parameter_names(self) -> &'static [&'static str] {
        match (self.kind, self.number) {
            (DicksonKind::First, 1 | 5 | 6) => &["i", "l", "m"],
            (DicksonKind::First, _) => &["l", "m"],
            (DicksonKind::Second, 6..=10 | 13) => &["k"],
            (DicksonKind::Second, _) => &["k", "l"],
        }
    }

    /// The classification rule the item's instances fall under.
    pub fn rule(self) -> RuleId {
        match (self.kind, self.number) {
            (DicksonKind::First, 1) => RuleId::FirstI,
            (DicksonKind::First, 2) => RuleId::FirstIi,
            (DicksonKind::First, 3) => RuleId::FirstIii,
            (DicksonKind::First, 4) => RuleId::FirstIv,
            (DicksonKind::First, 5) => RuleId::FirstV,
            (DicksonKind::First, _) => RuleId::FirstVi,
            (DicksonKind::Second, 1 | 2 | 4 | 5) => RuleId::SecondP3I,
            (DicksonKind::Second, 3) => RuleId::SecondP3Ii,
            (DicksonKind::Second, 6) => RuleId::SecondP3Iii,
            (DicksonKind::Second, 7) => RuleId::SecondP3Iv,
            (DicksonKind::Second, 8) => RuleId::SecondP3V,
            (DicksonKind::Second, 9) => RuleId::SecondP3Vi,
            (DicksonKind::Second, 10) => RuleId::SecondP3Vii,
            (DicksonKind::Second, 11 | 12) => RuleId::SecondP5I,
            (DicksonKind::Second, 13) => RuleId::SecondP5Ii,
            (DicksonKind::Second, _) => RuleId::SecondLargeI,
        }
    }

    fn resolve_prime(self, params: &CatalogParams) -> Result<u64> {
        let p = match (self.prime(), params.p) {
            (Prime::Exactly(q), None) => q,
            (_, Some(p)) => p,
            (Prime::Above(_), None) => {
                return Err(Error::InvalidArgument(format!(
                    "{self} needs an explicit prime"
                )))
            }
        };
        validate_odd_prime(p)?;
        if !self.admits(p) {
            return Err(Error::InvalidArgument(format!(
                "{self} is not stated for p = {p}"
            )));
        }
        Ok(p)
    }

    /// The `(p, n, d)` instance the item describes for these parameters.
    pub fn instance(self, params: &CatalogParams) -> Result<(u64, u64, u64)> {
        let p = self.resolve_prime(params)?;
        let CatalogParams { i, k, l, m, .. } = *params;
        let (n, d) = match (self.kind, self.number) {
            (DicksonKind::First, 1 | 5) => (mul(2, pw(p, m)?)?, mul(pw(p, i)? + 1, pw(p, l)?)?),
            (DicksonKind::First, 6) => (mul(3, pw(p, m)?)?, mul(pw(p, i)? + 1, pw(p, l)?)?),
            (DicksonKind::First, number) => {
                let n0 = [4, 5, 7][number as usize - 2];
                (mul(n0, pw(p, m)?)?, mul(2, pw(p, l)?)?)
            }
            (DicksonKind::Second, number) => {
                let pattern = mul(pw(p, k)?, pw(p, l)? + 1)?;
                match number {
                    1 | 11 | 14 => (2, pattern),
                    2 | 12 | 15 => (3, pattern),
                    3 => (4, pattern / 2),
                    4 => (5, pattern),
                    5 => (6, pattern),
                    6 | 13 => (7, mul(2, pw(p, k)?)?),
                    7 => (10, mul(2, pw(p, k)?)?),
                    8 => (13, mul(2, pw(p, k)?)?),
                    9 => (15, mul(4, pw(p, k)?)?),
                    _ => (19, mul(2, pw(p, k)?)?),
                }
            }
        };
        Ok((p, n, d))
    }

    /// The printed terms with exponents instantiated.
    pub fn printed_terms(self, params: &CatalogParams) -> Result<Vec<PrintedTerm>> {
        let p = self.resolve_prime(params)?;
        let CatalogParams { i, k, l, m, .. } = *params;
        let term = |coeff: u64, exponent: u64, label: &'static str| PrintedTerm {
            coeff,
            exponent,
            label,
        };
        let terms = match (self.kind, self.number) {
            (DicksonKind::First, 1) => {
                let exp = pw(p, l + m + i)? + pw(p, l + m)?;
                vec![term(1, exp, "x^(p^(l+m+i)+p^(l+m))")]
            }
            (DicksonKind::First, number @ 2..=4) => {
                let base = pw(p, l + m)?;
                match number {
                    2 => vec![
                        term(2, mul(2, base)?, "x^(2p^(l+m))"),
                        term(2, mul(4, base)?, "x^(4p^(l+m))"),
                    ],
                    3 => vec![
                        term(1, mul(2, base)?, "x^(2p^(l+m))"),
                        term(2, mul(4, base)?, "x^(4p^(l+m))"),
                    ],
                    _ => vec![
                        term(2, mul(2, base)?, "x^(2p^(l+m))"),
                        term(2, mul(4, base)?, "x^(4p^(l+m))"),
                        term(1, mul(6, base)?, "x^(6p^(l+m))"),
                    ],
                }
            }
            (DicksonKind::First, number) => {
                let (_, _, d) = self.instance(params)?;
                let coeff = if number == 5 { p - 2 } else { p - 3 };
                vec![term(coeff, mul(d, pw(p, m)?)?, "x^(d p^m)")]
            }
            (DicksonKind::Second, number) => {
                let pk = pw(p, k)?;
                let single = mul(pk, pw(p, l)? + 1);
                match number {
                    1 | 4 => vec![term(2, single?, "x^(p^k(p^l+1))")],
                    2 | 3 => vec![term(1, single?, "x^(p^k(p^l+1))")],
                    5 => vec![
                        term(1, single?, "x^(p^k(p^l+1))"),
                        term(2, mul(pw(p, k + 1)?, pw(p, l)? + 1)?, "x^(p^(k+1)(p^l+1))"),
                    ],
                    6 => vec![
                        term(1, mul(4, pk)?, "x^(4p^k)"),
                        term(2, mul(2, pw(p, k + 1)?)?, "x^(2p^(k+1))"),
                    ],
                    7 => vec![
                        term(1, mul(4, pk)?, "x^(4p^k)"),
                        term(1, mul(2, pw(p, k + 1)?)?, "x^(2p^(k+1))"),
                        term(2, mul(10, pk)?, "x^(10p^k)"),
                    ],
                    8 => vec![
                        term(1, mul(4, pk)?, "x^(4p^k)"),
                        term(1, mul(10, pk)?, "x^(10p^k)"),
                        term(1, mul(12, pk)?, "x^(12p^k)"),
                    ],
                    9 => vec![
                        term(1, mul(4, pk)?, "x^(4p^k)"),
                        term(1, mul(4, pw(p, k + 1)?)?, "x^(4p^(k+1))"),
                        term(1, mul(28, pk)?, "x^(28p^k)"),
                    ],
                    10 => vec![
                        term(1, mul(4, pk)?, "x^(4p^k)"),
                        term(1, mul(2, pw(p, k + 1)?)?, "x^(2p^(k+1))"),
                        term(2, mul(10, pk)?, "x^(10p^k)"),
                        term(2, mul(2, pw(p, k + 2)?)?, "x^(2p^(k+2))"),
                    ],
                    11 => vec![term(4, single?, "x^(p^k(p^l+1))")],
                    12 => vec![term(3, single?, "x^(p^k(p^l+1))")],
                    13 => vec![
                        term(4, mul(2, pk)?, "x^(2p^k)"),
                        term(1, mul(6, pk)?, "x^(6p^k)"),
                    ],
                    14 => vec![term(p - 1, single?, "x^(p^k(p^l+1))")],
                    _ => vec![term(p - 2, single?, "x^(p^k(p^l+1))")],
                }
            }
        };
        Ok(terms)
    }
}

impl fmt::Display for CatalogParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(p) = self.p {
            write!(f, "p={p} ")?;
        }
        write!(f, "i={} k={} l={} m={}", self.i, self.k, self.l, self.m)
    }
}

fn family(kind: DicksonKind) -> &'static str {
    match kind {
        DicksonKind::First => "R1",
        DicksonKind::Second => "R2",
    }
}

impl fmt::Display for CatalogItem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", family(self.kind), self.number)
    }
}

impl FromStr for CatalogItem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownItem(s.to_string());
        let (fam, num) = s.split_once('-').ok_or_else(unknown)?;
        let kind = match fam {
            "R1" => DicksonKind::First,
            "R2" => DicksonKind::Second,
            _ => return Err(unknown()),
        };
        let number: u8 = num.parse().map_err(|_| unknown())?;
        CatalogItem::new(kind, number).map_err(|_| unknown())
    }
}

impl Serialize for CatalogItem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CatalogItem {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The printed polynomial of `item` for `params`.
pub fn printed_poly(item: CatalogItem, params: &CatalogParams) -> Result<SparsePoly> {
    let p = item.resolve_prime(params)?;
    let terms = item.printed_terms(params)?;
    Ok(SparsePoly::from_terms(
        p,
        terms.into_iter().map(|t| (t.exponent, t.coeff)),
    ))
}
