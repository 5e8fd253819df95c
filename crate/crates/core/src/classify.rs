//! Dembowski-Ostrom detection and the closed-form classification rules.
//!
//! A constant-free polynomial over F_p is DO when every exponent is
//! `p^i + p^j`. The rule oracles decide, from `(p, n, d)` alone, whether the
//! reversed Dickson polynomial is DO; the sweep harness checks them against
//! the detector.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dickson::DicksonKind;
use crate::error::{Error, Result};
use crate::poly::SparsePoly;

/// `v = v0 * p^m` with `gcd(v0, p) = 1`.
pub fn strip_p_powers(mut v: u64, p: u64) -> (u64, u32) {
    assert!(v >= 1, "strip_p_powers needs a positive integer");
    let mut m = 0;
    while v.is_multiple_of(p) {
        v /= p;
        m += 1;
    }
    (v, m)
}

/// `Some(k)` when `v = p^k`.
pub fn p_power_exponent(v: u64, p: u64) -> Option<u32> {
    if v == 0 {
        return None;
    }
    match strip_p_powers(v, p) {
        (1, k) => Some(k),
        _ => None,
    }
}

/// `Some(a)` when `v = p^a + 1`.
fn plus_one_pattern(v: u64, p: u64) -> Option<u32> {
    if v < 2 {
        return None;
    }
    p_power_exponent(v - 1, p)
}

/// Exponent written as `p^i + p^j`, `i <= j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwoPowerWitness {
    pub exponent: u64,
    pub i: u32,
    pub j: u32,
}

/// Canonical decomposition `e = p^i + p^j` (least `i`), if one exists.
pub fn decompose_two_powers(e: u64, p: u64) -> Option<TwoPowerWitness> {
    let mut low = 1u64;
    let mut i = 0u32;
    while low <= e / 2 {
        if let Some(j) = p_power_exponent(e - low, p) {
            return Some(TwoPowerWitness { exponent: e, i, j });
        }
        low = low.checked_mul(p)?;
        i += 1;
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoVerdict {
    pub is_do: bool,
    /// One witness per monomial, ascending; empty unless `is_do`.
    pub witnesses: Vec<TwoPowerWitness>,
    /// Least exponent with no decomposition.
    pub failing_exponent: Option<u64>,
    pub trivially_zero: bool,
}

pub fn is_do(f: &SparsePoly) -> Result<DoVerdict> {
    if f.has_constant_term() {
        return Err(Error::ConstantTermPresent);
    }
    let mut witnesses = Vec::with_capacity(f.len());
    for t in f.exponents() {
        match decompose_two_powers(t, f.p()) {
            Some(w) => witnesses.push(w),
            None => {
                return Ok(DoVerdict {
                    is_do: false,
                    witnesses: Vec::new(),
                    failing_exponent: Some(t),
                    trivially_zero: false,
                })
            }
        }
    }
    Ok(DoVerdict {
        is_do: true,
        witnesses,
        failing_exponent: None,
        trivially_zero: f.is_zero(),
    })
}

/// Case tags of the classification rules. First-kind cases are numbered
/// i-vi; second-kind cases carry the characteristic regime (p = 3, p = 5,
/// p > 5) and their case number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleId {
    FirstI,
    FirstIi,
    FirstIii,
    FirstIv,
    FirstV,
    FirstVi,
    SecondP3I,
    SecondP3Ii,
    SecondP3Iii,
    SecondP3Iv,
    SecondP3V,
    SecondP3Vi,
    SecondP3Vii,
    SecondP5I,
    SecondP5Ii,
    SecondLargeI,
}

impl RuleId {
    pub const ALL: [RuleId; 16] = [
        RuleId::FirstI,
        RuleId::FirstIi,
        RuleId::FirstIii,
        RuleId::FirstIv,
        RuleId::FirstV,
        RuleId::FirstVi,
        RuleId::SecondP3I,
        RuleId::SecondP3Ii,
        RuleId::SecondP3Iii,
        RuleId::SecondP3Iv,
        RuleId::SecondP3V,
        RuleId::SecondP3Vi,
        RuleId::SecondP3Vii,
        RuleId::SecondP5I,
        RuleId::SecondP5Ii,
        RuleId::SecondLargeI,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            RuleId::FirstI => "Thm2.1-i",
            RuleId::FirstIi => "Thm2.1-ii",
            RuleId::FirstIii => "Thm2.1-iii",
            RuleId::FirstIv => "Thm2.1-iv",
            RuleId::FirstV => "Thm2.1-v",
            RuleId::FirstVi => "Thm2.1-vi",
            RuleId::SecondP3I => "T2.3-i",
            RuleId::SecondP3Ii => "T2.3-ii",
            RuleId::SecondP3Iii => "T2.3-iii",
            RuleId::SecondP3Iv => "T2.3-iv",
            RuleId::SecondP3V => "T2.3-v",
            RuleId::SecondP3Vi => "T2.3-vi",
            RuleId::SecondP3Vii => "T2.3-vii",
            RuleId::SecondP5I => "T2.4-i",
            RuleId::SecondP5Ii => "T2.4-ii",
            RuleId::SecondLargeI => "T2.5-i",
        }
    }

    pub fn kind(self) -> DicksonKind {
        match self {
            RuleId::FirstI
            | RuleId::FirstIi
            | RuleId::FirstIii
            | RuleId::FirstIv
            | RuleId::FirstV
            | RuleId::FirstVi => DicksonKind::First,
            _ => DicksonKind::Second,
        }
    }

    /// Index values the rule admits: the p-free part `n0` for the first
    /// kind, `n` itself for the second.
    pub fn indices(self) -> &'static [u64] {
        match self {
            RuleId::FirstI | RuleId::FirstV => &[2],
            RuleId::FirstIi => &[4],
            RuleId::FirstIii => &[5],
            RuleId::FirstIv => &[7],
            RuleId::FirstVi => &[3],
            RuleId::SecondP3I => &[2, 3, 5, 6],
            RuleId::SecondP3Ii => &[4],
            RuleId::SecondP3Iii => &[7],
            RuleId::SecondP3Iv => &[10],
            RuleId::SecondP3V => &[13],
            RuleId::SecondP3Vi => &[15],
            RuleId::SecondP3Vii => &[19],
            RuleId::SecondP5I | RuleId::SecondLargeI => &[2, 3],
            RuleId::SecondP5Ii => &[7],
        }
    }

    /// Whether the rule is stated for characteristic `p`.
    pub fn applies_to(self, p: u64) -> bool {
        match self {
            RuleId::FirstI | RuleId::FirstIi | RuleId::FirstIii | RuleId::FirstIv => p == 3,
            RuleId::FirstV | RuleId::FirstVi => p > 3,
            RuleId::SecondP5I | RuleId::SecondP5Ii => p == 5,
            RuleId::SecondLargeI => p > 5,
            _ => p == 3,
        }
    }

    /// The p-free part of `d` the rule requires, given its pattern exponent
    /// (`None` for rules with a fixed `d0`).
    pub fn d0_for(self, p: u64, alpha: Option<u32>) -> Option<u64> {
        match self {
            RuleId::FirstI
            | RuleId::FirstV
            | RuleId::FirstVi
            | RuleId::SecondP3I
            | RuleId::SecondP5I
            | RuleId::SecondLargeI => p.checked_pow(alpha?)?.checked_add(1),
            RuleId::SecondP3Ii => Some(p.checked_pow(alpha?)?.div_ceil(2)),
            RuleId::SecondP3Vi => Some(4),
            _ => Some(2),
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl Serialize for RuleId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

impl<'de> Deserialize<'de> for RuleId {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl std::str::FromStr for RuleId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RuleId::ALL
            .into_iter()
            .find(|r| r.tag() == s)
            .ok_or_else(|| Error::UnknownItem(s.to_string()))
    }
}

/// Oracle outcome with the normalized parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleMatch {
    pub kind: DicksonKind,
    pub p: u64,
    pub n: u64,
    pub d: u64,
    pub matched: bool,
    pub rule_id: Option<RuleId>,
    /// p-free part of `n`, with `n = n0 * p^m`.
    pub n0: u64,
    pub m: u32,
    /// p-free part of `d`, with `d = d0 * p^k`.
    pub d0: u64,
    pub k: u32,
    /// The exponent solving the rule's `d0` pattern (`j`, `i` or `alpha`).
    pub pattern_exponent: Option<u32>,
}

impl RuleMatch {
    /// Rebuilds `(n, d)` from the rule and the recorded exponents, or `None`
    /// if the record is unmatched or inconsistent with its rule.
    pub fn reinstantiate(&self) -> Option<(u64, u64)> {
        let rule = self.rule_id.filter(|_| self.matched)?;
        if !rule.applies_to(self.p) {
            return None;
        }
        let n = self.n0.checked_mul(self.p.checked_pow(self.m)?)?;
        let index = match rule.kind() {
            DicksonKind::First => self.n0,
            DicksonKind::Second => n,
        };
        if !rule.indices().contains(&index) {
            return None;
        }
        let d0 = rule.d0_for(self.p, self.pattern_exponent)?;
        let d = d0.checked_mul(self.p.checked_pow(self.k)?)?;
        Some((n, d))
    }
}

fn base_match(kind: DicksonKind, p: u64, n: u64, d: u64) -> Result<RuleMatch> {
    if n < 2 {
        return Err(Error::BadIndex(n));
    }
    if d == 0 {
        return Err(Error::InvalidArgument("d must be at least 1".into()));
    }
    crate::field::validate_odd_prime(p)?;
    let (n0, m) = strip_p_powers(n, p);
    let (d0, k) = strip_p_powers(d, p);
    Ok(RuleMatch {
        kind,
        p,
        n,
        d,
        matched: false,
        rule_id: None,
        n0,
        m,
        d0,
        k,
        pattern_exponent: None,
    })
}

fn with_rule(mut base: RuleMatch, rule: RuleId, pattern: Option<u32>) -> RuleMatch {
    base.matched = true;
    base.rule_id = Some(rule);
    base.pattern_exponent = pattern;
    base
}

/// First-kind oracle on the p-free parts `(n0, d0)`.
pub fn classify_first(p: u64, n: u64, d: u64) -> Result<RuleMatch> {
    let base = base_match(DicksonKind::First, p, n, d)?;
    let (n0, d0) = (base.n0, base.d0);
    let hit = if p == 3 {
        match n0 {
            2 => plus_one_pattern(d0, p).map(|j| (RuleId::FirstI, Some(j))),
            4 if d0 == 2 => Some((RuleId::FirstIi, None)),
            5 if d0 == 2 => Some((RuleId::FirstIii, None)),
            7 if d0 == 2 => Some((RuleId::FirstIv, None)),
            _ => None,
        }
    } else {
        match n0 {
            2 => plus_one_pattern(d0, p).map(|i| (RuleId::FirstV, Some(i))),
            3 => plus_one_pattern(d0, p).map(|i| (RuleId::FirstVi, Some(i))),
            _ => None,
        }
    };
    Ok(match hit {
        Some((rule, pattern)) => with_rule(base, rule, pattern),
        None => base,
    })
}

/// Second-kind oracle; only `d` is normalized, `n` is taken as given.
pub fn classify_second(p: u64, n: u64, d: u64) -> Result<RuleMatch> {
    let base = base_match(DicksonKind::Second, p, n, d)?;
    let d0 = base.d0;
    let hit = match p {
        3 => match n {
            2 | 3 | 5 | 6 => plus_one_pattern(d0, p).map(|a| (RuleId::SecondP3I, Some(a))),
            4 => d0
                .checked_mul(2)
                .and_then(|v| plus_one_pattern(v, p))
                .map(|a| (RuleId::SecondP3Ii, Some(a))),
            7 if d0 == 2 => Some((RuleId::SecondP3Iii, None)),
            10 if d0 == 2 => Some((RuleId::SecondP3Iv, None)),
            13 if d0 == 2 => Some((RuleId::SecondP3V, None)),
            15 if d0 == 4 => Some((RuleId::SecondP3Vi, None)),
            19 if d0 == 2 => Some((RuleId::SecondP3Vii, None)),
            _ => None,
        },
        5 => match n {
            2 | 3 => plus_one_pattern(d0, p).map(|a| (RuleId::SecondP5I, Some(a))),
            7 if d0 == 2 => Some((RuleId::SecondP5Ii, None)),
            _ => None,
        },
        _ => match n {
            2 | 3 => plus_one_pattern(d0, p).map(|a| (RuleId::SecondLargeI, Some(a))),
            _ => None,
        },
    };
    Ok(match hit {
        Some((rule, pattern)) => with_rule(base, rule, pattern),
        None => base,
    })
}

pub fn classify(kind: DicksonKind, p: u64, n: u64, d: u64) -> Result<RuleMatch> {
    match kind {
        DicksonKind::First => classify_first(p, n, d),
        DicksonKind::Second => classify_second(p, n, d),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dickson::{first_kind_closed, second_kind_closed};

    fn brute_force_two_powers(e: u64, p: u64) -> bool {
        let mut powers = vec![1u64];
        while let Some(next) = powers.last().unwrap().checked_mul(p).filter(|&v| v <= e) {
            powers.push(next);
        }
        powers.iter().any(|&a| powers.iter().any(|&b| a + b == e))
    }

    #[test]
    fn stripping_examples() {
        assert_eq!(strip_p_powers(18, 3), (2, 2));
        assert_eq!(strip_p_powers(7, 3), (7, 0));
        assert_eq!(strip_p_powers(50, 5), (2, 2));
        assert_eq!(p_power_exponent(0, 3), None);
        assert_eq!(p_power_exponent(1, 3), Some(0));
        assert_eq!(p_power_exponent(27, 3), Some(3));
    }

    #[test]
    fn decomposition_examples() {
        for p in [3u64, 5, 7, 11, 13] {
            assert_eq!(
                decompose_two_powers(2, p),
                Some(TwoPowerWitness {
                    exponent: 2,
                    i: 0,
                    j: 0
                })
            );
        }
        assert_eq!(decompose_two_powers(8, 3), None);
        assert_eq!(decompose_two_powers(14, 3), None);
        assert_eq!(
            decompose_two_powers(10, 3),
            Some(TwoPowerWitness {
                exponent: 10,
                i: 0,
                j: 2
            })
        );
        assert_eq!(
            decompose_two_powers(18, 3),
            Some(TwoPowerWitness {
                exponent: 18,
                i: 2,
                j: 2
            })
        );
        assert_eq!(decompose_two_powers(1, 3), None);
    }

    #[test]
    fn decomposition_matches_enumeration() {
        for p in [3u64, 5, 7] {
            for e in 1..=20_000u64 {
                let w = decompose_two_powers(e, p);
                assert_eq!(
                    w.is_some(),
                    brute_force_two_powers(e, p),
                    "e = {e}, p = {p}"
                );
                if let Some(w) = w {
                    assert!(w.i <= w.j);
                    assert_eq!(p.pow(w.i) + p.pow(w.j), e);
                }
            }
        }
    }

    #[test]
    fn detector_examples() {
        let d4 = first_kind_closed(4, 2, 3).unwrap();
        assert_eq!(d4.to_string(), "2*x^2 + 2*x^4");
        let v = is_do(&d4).unwrap();
        assert!(v.is_do && !v.trivially_zero);
        let pairs: Vec<_> = v.witnesses.iter().map(|w| (w.i, w.j)).collect();
        assert_eq!(pairs, vec![(0, 0), (0, 1)]);

        let e16 = second_kind_closed(16, 1, 3).unwrap();
        assert_eq!(e16.to_string(), "1*x^2 + 2*x^3 + 1*x^8");
        let v = is_do(&e16).unwrap();
        assert!(!v.is_do);
        assert_eq!(v.failing_exponent, Some(3));
        assert!(v.witnesses.is_empty());

        let v = is_do(&SparsePoly::zero(3)).unwrap();
        assert!(v.is_do && v.trivially_zero && v.witnesses.is_empty());

        let with_const = SparsePoly::from_terms(3, [(0, 1), (2, 1)]);
        assert_eq!(is_do(&with_const), Err(Error::ConstantTermPresent));
    }

    #[test]
    fn first_kind_oracle_examples() {
        let r = classify_first(3, 6, 4).unwrap();
        assert!(r.matched);
        assert_eq!(r.rule_id, Some(RuleId::FirstI));
        assert_eq!((r.m, r.pattern_exponent, r.k), (1, Some(1), 0));

        let r = classify_first(3, 5, 2).unwrap();
        assert_eq!(r.rule_id, Some(RuleId::FirstIii));

        let r = classify_first(5, 3, 6).unwrap();
        assert_eq!(r.rule_id, Some(RuleId::FirstVi));
        assert_eq!((r.pattern_exponent, r.k, r.m), (Some(1), 0, 0));

        let r = classify_first(3, 8, 2).unwrap();
        assert!(!r.matched && r.rule_id.is_none());
        assert!(!is_do(&first_kind_closed(8, 2, 3).unwrap()).unwrap().is_do);

        assert_eq!(classify_first(3, 1, 2), Err(Error::BadIndex(1)));
    }

    #[test]
    fn second_kind_oracle_examples() {
        assert_eq!(
            classify_second(3, 15, 4).unwrap().rule_id,
            Some(RuleId::SecondP3Vi)
        );
        assert!(!classify_second(3, 15, 2).unwrap().matched);
        assert!(!classify_second(7, 5, 2).unwrap().matched);
        assert_eq!(
            classify_second(5, 7, 2).unwrap().rule_id,
            Some(RuleId::SecondP5Ii)
        );
        assert_eq!(
            classify_second(3, 4, 1).unwrap().rule_id,
            Some(RuleId::SecondP3Ii)
        );
        assert_eq!(classify_second(3, 0, 1), Err(Error::BadIndex(0)));
    }

    #[test]
    fn normalization_invariance() {
        for p in [3u64, 5, 7] {
            for n in 2..40 {
                for d in 1..30 {
                    let base = classify_first(p, n, d).unwrap();
                    for (n2, d2) in [(n * p, d), (n, d * p)] {
                        let other = classify_first(p, n2, d2).unwrap();
                        assert_eq!((base.matched, base.rule_id), (other.matched, other.rule_id));
                    }
                    let s = classify_second(p, n, d).unwrap();
                    let s2 = classify_second(p, n, d * p).unwrap();
                    assert_eq!((s.matched, s.rule_id), (s2.matched, s2.rule_id));
                }
            }
        }
        // n = 5 matches for p = 3 but n = 15 with d0 = 2 does not.
        assert!(classify_second(3, 5, 2).unwrap().matched);
        assert!(!classify_second(3, 15, 2).unwrap().matched);
    }

    #[test]
    fn matches_reinstantiate_exactly() {
        for p in [3u64, 5, 7, 11] {
            for n in 2..200 {
                for d in 1..200 {
                    for r in [
                        classify_first(p, n, d).unwrap(),
                        classify_second(p, n, d).unwrap(),
                    ] {
                        if r.matched {
                            assert_eq!(r.reinstantiate(), Some((n, d)), "{r:?}");
                        } else {
                            assert_eq!(r.reinstantiate(), None);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn rule_tags_round_trip() {
        for r in RuleId::ALL {
            assert_eq!(r.tag().parse::<RuleId>().unwrap(), r);
        }
        assert!("T9-i".parse::<RuleId>().is_err());
    }
}
