//! Sparse univariate polynomials over F_p.
//!
//! A polynomial is a map from exponent to a coefficient in `[1, p)`; zero
//! coefficients are never stored, so two polynomials are equal exactly when
//! their maps are. Exponents are `u64` and every operation that could grow
//! them is checked.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{add_mod, mul_mod, FieldElement, FieldParams};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SparsePoly {
    p: u64,
    terms: BTreeMap<u64, u64>,
}

impl SparsePoly {
    pub fn zero(p: u64) -> Self {
        SparsePoly {
            p,
            terms: BTreeMap::new(),
        }
    }

    /// `coeff * x^exp`, with `coeff` reduced mod p.
    pub fn monomial(p: u64, coeff: u64, exp: u64) -> Self {
        Self::from_terms(p, [(exp, coeff)])
    }

    /// Sums the given `(exponent, coefficient)` pairs; repeated exponents
    /// accumulate and zero results are dropped.
    pub fn from_terms<I>(p: u64, terms: I) -> Self
    where
        I: IntoIterator<Item = (u64, u64)>,
    {
        let mut map = BTreeMap::new();
        for (exp, coeff) in terms {
            let slot = map.entry(exp).or_insert(0);
            *slot = add_mod(*slot, coeff % p, p);
        }
        map.retain(|_, c| *c != 0);
        SparsePoly { p, terms: map }
    }

    /// Like [`from_terms`](Self::from_terms) but with signed coefficients.
    pub fn from_signed_terms<I>(p: u64, terms: I) -> Self
    where
        I: IntoIterator<Item = (u64, i64)>,
    {
        let pi = p as i128;
        Self::from_terms(
            p,
            terms
                .into_iter()
                .map(|(t, c)| (t, (c as i128).rem_euclid(pi) as u64)),
        )
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// `(exponent, coefficient)` pairs in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.terms.iter().map(|(&t, &c)| (t, c))
    }

    pub fn exponents(&self) -> impl Iterator<Item = u64> + '_ {
        self.terms.keys().copied()
    }

    /// Coefficient of `x^exp` (0 when absent).
    pub fn coeff(&self, exp: u64) -> u64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().next_back().copied()
    }

    pub fn has_constant_term(&self) -> bool {
        self.terms.contains_key(&0)
    }

    /// Copy with the constant term removed.
    pub fn without_constant(&self) -> Self {
        let mut out = self.clone();
        out.terms.remove(&0);
        out
    }

    /// Re-applies normalization; a no-op for every value built through this API.
    pub fn normalized(&self) -> Self {
        Self::from_terms(self.p, self.terms())
    }

    fn same_char(&self, other: &Self) -> Result<()> {
        if self.p == other.p {
            Ok(())
        } else {
            Err(Error::MixedCharacteristic(self.p, other.p))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_char(other)?;
        Ok(Self::from_terms(self.p, self.terms().chain(other.terms())))
    }

    pub fn neg(&self) -> Self {
        let p = self.p;
        SparsePoly {
            p,
            terms: self.terms.iter().map(|(&t, &c)| (t, p - c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: u64) -> Self {
        let p = self.p;
        Self::from_terms(p, self.terms().map(|(t, a)| (t, mul_mod(a, c % p, p))))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_char(other)?;
        let p = self.p;
        let mut acc: BTreeMap<u64, u64> = BTreeMap::new();
        for (s, a) in self.terms() {
            for (t, b) in other.terms() {
                let exp = s.checked_add(t).ok_or(Error::ExponentOverflow)?;
                let slot = acc.entry(exp).or_insert(0);
                *slot = add_mod(*slot, mul_mod(a, b, p), p);
            }
        }
        acc.retain(|_, c| *c != 0);
        Ok(SparsePoly { p, terms: acc })
    }

    /// `f^p` by the Frobenius rule `c x^t -> c x^(p t)`; coefficients are
    /// fixed because `c^p = c` in F_p.
    pub fn pow_p(&self) -> Result<Self> {
        self.map_exponents(self.p)
    }

    /// `f(x^d)`: every exponent `t` becomes `d t`.
    pub fn substitute_monomial(&self, d: u64) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidArgument(
                "substitution exponent must be at least 1".into(),
            ));
        }
        self.map_exponents(d)
    }

    fn map_exponents(&self, factor: u64) -> Result<Self> {
        let terms = self
            .terms
            .iter()
            .map(|(&t, &c)| {
                t.checked_mul(factor)
                    .map(|t| (t, c))
                    .ok_or(Error::ExponentOverflow)
            })
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(SparsePoly { p: self.p, terms })
    }

    /// Value at `x` in `field`, which must have characteristic `p`.
    pub fn evaluate(&self, field: &FieldParams, x: &FieldElement) -> Result<FieldElement> {
        if field.p() != self.p {
            return Err(Error::MixedCharacteristic(self.p, field.p()));
        }
        let mut acc = field.zero();
        for (t, c) in self.terms() {
            let term = field.mul(&field.scalar(c), &field.pow(x, t));
            acc = field.add(&acc, &term);
        }
        Ok(acc)
    }

    /// Exponents at which `self` and `other` disagree, as
    /// `(exponent, self coefficient, other coefficient)`.
    pub fn diff_terms(&self, other: &Self) -> Vec<(u64, u64, u64)> {
        let mut exps: Vec<u64> = self.exponents().chain(other.exponents()).collect();
        exps.sort_unstable();
        exps.dedup();
        exps.into_iter()
            .filter_map(|t| {
                let (a, b) = (self.coeff(t), other.coeff(t));
                (a != b).then_some((t, a, b))
            })
            .collect()
    }
}

/// Canonical rendering: ascending exponents, `c*x^t` joined by ` + `,
/// coefficient and exponent always printed; the zero polynomial is `0`.
impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (t, c)) in self.terms().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*x^{t}")?;
        }
        Ok(())
    }
}
