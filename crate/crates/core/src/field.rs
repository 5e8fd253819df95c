//! Exact arithmetic in F_p and GF(p^e) for odd primes p.
//!
//! Elements of GF(p^e) are coefficient vectors of length `e` (constant term
//! first) holding residues of F_p[x] modulo a fixed monic irreducible
//! polynomial. Every product is widened to `u128` and reduced immediately,
//! so nothing wraps for any 64-bit prime.
//!
//! Elements also have a dense integer *index* `sum c_i p^i` in `[0, q)`,
//! which the exhaustive map checks use as a table key.

use std::fmt;

use crate::error::{Error, Result};

#[inline]
pub(crate) fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 + b as u128) % m as u128) as u64
}

#[inline]
pub(crate) fn sub_mod(a: u64, b: u64, m: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        (m as u128 - (b - a) as u128) as u64
    }
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo the prime `m` by the extended Euclidean algorithm.
pub(crate) fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let quot = r0 / r1;
        (r0, r1) = (r1, r0 - quot * r1);
        (t0, t1) = (t1, t0 - quot * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(m as i128) as u64)
}

/// Deterministic Miller-Rabin, exact for every 64-bit input.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Returns `p` if it is an odd prime.
pub fn validate_odd_prime(p: u64) -> Result<u64> {
    if p == 2 {
        Err(Error::EvenPrime)
    } else if !is_prime(p) {
        Err(Error::Composite(p))
    } else {
        Ok(p)
    }
}

/// `base^exp`, or `None` on 64-bit overflow.
pub fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    base.checked_pow(exp)
}

// Dense polynomials over F_p, constant term first, no trailing zeros.
mod dense {
    use super::{add_mod, inv_mod, mul_mod, sub_mod};

    pub fn trim(v: &mut Vec<u64>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    pub fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let len = a.len().max(b.len());
        let mut out: Vec<u64> = (0..len)
            .map(|k| {
                sub_mod(
                    a.get(k).copied().unwrap_or(0),
                    b.get(k).copied().unwrap_or(0),
                    p,
                )
            })
            .collect();
        trim(&mut out);
        out
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = add_mod(out[i + j], mul_mod(x, y, p), p);
            }
        }
        trim(&mut out);
        out
    }

    /// Quotient and remainder of `a` by nonzero `b`.
    pub fn div_rem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
        assert!(!b.is_empty(), "division by the zero polynomial");
        let mut rem = a.to_vec();
        trim(&mut rem);
        if rem.len() < b.len() {
            return (Vec::new(), rem);
        }
        let lead_inv = inv_mod(*b.last().unwrap(), p).expect("nonzero leading coefficient");
        let db = b.len() - 1;
        let mut quot = vec![0u64; rem.len() - db];
        for k in (db..rem.len()).rev() {
            let c = mul_mod(rem[k], lead_inv, p);
            if c == 0 {
                continue;
            }
            quot[k - db] = c;
            for (j, &bj) in b.iter().enumerate() {
                let idx = k - db + j;
                rem[idx] = sub_mod(rem[idx], mul_mod(c, bj, p), p);
            }
        }
        trim(&mut rem);
        trim(&mut quot);
        (quot, rem)
    }

    pub fn rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        div_rem(a, b, p).1
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let (mut x, mut y) = (a.to_vec(), b.to_vec());
        trim(&mut x);
        trim(&mut y);
        while !y.is_empty() {
            let r = rem(&x, &y, p);
            x = y;
            y = r;
        }
        x
    }

    pub fn mul_mod_poly(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        rem(&mul(a, b, p), m, p)
    }

    pub fn pow_mod_poly(base: &[u64], mut exp: u64, m: &[u64], p: u64) -> Vec<u64> {
        let mut acc = rem(&[1], m, p);
        let mut b = rem(base, m, p);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mul_mod_poly(&acc, &b, m, p);
            }
            b = mul_mod_poly(&b, &b, m, p);
            exp >>= 1;
        }
        acc
    }

    /// Inverse of `a` modulo `m` via the extended Euclidean algorithm.
    pub fn inv_mod_poly(a: &[u64], m: &[u64], p: u64) -> Option<Vec<u64>> {
        let (mut r0, mut r1) = (m.to_vec(), rem(a, m, p));
        let (mut t0, mut t1): (Vec<u64>, Vec<u64>) = (Vec::new(), vec![1]);
        trim(&mut r0);
        while !r1.is_empty() {
            let (quot, r) = div_rem(&r0, &r1, p);
            let t = sub(&t0, &mul(&quot, &t1, p), p);
            r0 = std::mem::replace(&mut r1, r);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.len() != 1 {
            return None;
        }
        let scale = inv_mod(r0[0], p)?;
        let mut out: Vec<u64> = t0.iter().map(|&c| mul_mod(c, scale, p)).collect();
        trim(&mut out);
        Some(rem(&out, m, p))
    }
}

/// Monic `f` of degree `e >= 1` is irreducible over F_p iff
/// `gcd(x^(p^i) - x, f) = 1` for every `1 <= i <= e/2`.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let e = f.len() - 1;
    if e <= 1 {
        return e == 1;
    }
    if f[0] == 0 {
        return false;
    }
    let x = [0u64, 1];
    let mut h = x.to_vec();
    for _ in 1..=e / 2 {
        h = dense::pow_mod_poly(&h, p, f, p);
        let g = dense::gcd(&dense::sub(&h, &x, p), f, p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

/// Parameters of GF(p^e): the prime, the degree, the order and the modulus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldParams {
    p: u64,
    e: u32,
    q: u64,
    modulus: Vec<u64>,
}

/// Residue class in GF(p^e); only meaningful together with its [`FieldParams`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    coeffs: Vec<u64>,
}

impl FieldElement {
    /// Coefficients, constant term first; always `e` entries.
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.len() == 1 {
            return write!(f, "{}", self.coeffs[0]);
        }
        write!(f, "[")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Builds GF(p^e) with the least monic irreducible modulus of degree `e`.
///
/// Candidates `x^e + c_{e-1} x^{e-1} + ... + c_0` are visited in increasing
/// order of `sum c_i p^i`, so `c_{e-1}` is the most significant coefficient
/// and the constant term the least. For `e = 1` the modulus is `x` and the
/// field is F_p itself.
pub fn find_irreducible(p: u64, e: u32) -> Result<FieldParams> {
    validate_odd_prime(p)?;
    if e == 0 {
        return Err(Error::InvalidArgument(
            "extension degree must be at least 1".into(),
        ));
    }
    let q = checked_pow(p, e).ok_or(Error::Overflow { p, e })?;
    let deg = e as usize;
    if deg == 1 {
        return Ok(FieldParams {
            p,
            e,
            q,
            modulus: vec![0, 1],
        });
    }
    let mut candidate = vec![0u64; deg + 1];
    candidate[deg] = 1;
    for index in 0..q {
        let mut rest = index;
        for c in candidate.iter_mut().take(deg) {
            *c = rest % p;
            rest /= p;
        }
        if is_irreducible(&candidate, p) {
            return Ok(FieldParams {
                p,
                e,
                q,
                modulus: candidate,
            });
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

impl FieldParams {
    pub fn new(p: u64, e: u32) -> Result<Self> {
        find_irreducible(p, e)
    }

    pub fn prime_field(p: u64) -> Result<Self> {
        find_irreducible(p, 1)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Monic modulus, constant term first (length `e + 1`).
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            coeffs: vec![0; self.e as usize],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.scalar(1)
    }

    /// Image of the integer `c` in the prime subfield.
    pub fn scalar(&self, c: u64) -> FieldElement {
        let mut coeffs = vec![0; self.e as usize];
        coeffs[0] = c % self.p;
        FieldElement { coeffs }
    }

    /// Element with the given polynomial representative, reduced modulo the
    /// field modulus.
    pub fn element(&self, coeffs: &[u64]) -> FieldElement {
        let reduced: Vec<u64> = coeffs.iter().map(|&c| c % self.p).collect();
        self.wrap_dense(dense::rem(&reduced, &self.modulus, self.p))
    }

    fn wrap_dense(&self, mut v: Vec<u64>) -> FieldElement {
        v.resize(self.e as usize, 0);
        FieldElement { coeffs: v }
    }

    fn to_dense(&self, x: &FieldElement) -> Vec<u64> {
        let mut v = x.coeffs.clone();
        dense::trim(&mut v);
        v
    }

    /// Element whose index `sum c_i p^i` equals `index`.
    pub fn from_index(&self, index: u64) -> FieldElement {
        debug_assert!(index < self.q);
        let mut rest = index;
        let coeffs = (0..self.e)
            .map(|_| {
                let c = rest % self.p;
                rest /= self.p;
                c
            })
            .collect();
        FieldElement { coeffs }
    }

    pub fn index(&self, x: &FieldElement) -> u64 {
        x.coeffs.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    /// Index of the sum of the elements with indices `a` and `b`.
    pub fn add_index(&self, mut a: u64, mut b: u64) -> u64 {
        let (mut out, mut place) = (0u64, 1u64);
        for k in 0..self.e {
            let digit = (a % self.p + b % self.p) % self.p;
            out += digit * place;
            a /= self.p;
            b /= self.p;
            if k + 1 < self.e {
                place *= self.p;
            }
        }
        out
    }

    /// Index of the difference of the elements with indices `a` and `b`.
    pub fn sub_index(&self, mut a: u64, mut b: u64) -> u64 {
        let (mut out, mut place) = (0u64, 1u64);
        for k in 0..self.e {
            let digit = sub_mod(a % self.p, b % self.p, self.p);
            out += digit * place;
            a /= self.p;
            b /= self.p;
            if k + 1 < self.e {
                place *= self.p;
            }
        }
        out
    }

    /// All `q` elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(|i| self.from_index(i))
    }

    pub fn add(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        let coeffs = x
            .coeffs
            .iter()
            .zip(&y.coeffs)
            .map(|(&a, &b)| add_mod(a, b, self.p))
            .collect();
        FieldElement { coeffs }
    }

    pub fn sub(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        let coeffs = x
            .coeffs
            .iter()
            .zip(&y.coeffs)
            .map(|(&a, &b)| sub_mod(a, b, self.p))
            .collect();
        FieldElement { coeffs }
    }

    pub fn neg(&self, x: &FieldElement) -> FieldElement {
        self.sub(&self.zero(), x)
    }

    pub fn mul(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        let (p, e) = (self.p, self.e as usize);
        let mut prod = vec![0u64; 2 * e - 1];
        for (i, &a) in x.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.coeffs.iter().enumerate() {
                prod[i + j] = add_mod(prod[i + j], mul_mod(a, b, p), p);
            }
        }
        // Fold x^k (k >= e) back using x^e = -(c_{e-1} x^{e-1} + ... + c_0).
        for k in (e..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for j in 0..e {
                prod[k - e + j] = sub_mod(prod[k - e + j], mul_mod(c, self.modulus[j], p), p);
            }
        }
        prod.truncate(e);
        FieldElement { coeffs: prod }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self, x: &FieldElement) -> Option<FieldElement> {
        if x.is_zero() {
            return None;
        }
        dense::inv_mod_poly(&self.to_dense(x), &self.modulus, self.p).map(|v| self.wrap_dense(v))
    }

    /// `x^k` by square-and-multiply; `x^0 = 1` including `x = 0`.
    pub fn pow(&self, x: &FieldElement, mut k: u64) -> FieldElement {
        let mut acc = self.one();
        let mut base = x.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

/// Free-function form of [`FieldParams::pow`].
pub fn pow_element(field: &FieldParams, x: &FieldElement, k: u64) -> FieldElement {
    field.pow(x, k)
}

impl fmt::Display for FieldParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.e == 1 {
            write!(f, "F_{}", self.p)
        } else {
            write!(f, "GF({}^{})", self.p, self.e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_prime_validation() {
        assert_eq!(validate_odd_prime(3), Ok(3));
        assert_eq!(validate_odd_prime(2), Err(Error::EvenPrime));
        assert_eq!(validate_odd_prime(9), Err(Error::Composite(9)));
        assert_eq!(validate_odd_prime(1), Err(Error::Composite(1)));
        assert_eq!(
            validate_odd_prime(18446744073709551557),
            Ok(18446744073709551557)
        );
        assert!(validate_odd_prime(3215031751).is_err()); // strong pseudoprime to 2,3,5,7
    }

    #[test]
    fn primality_matches_trial_division() {
        let trial = |n: u64| {
            n >= 2
                && (2..n)
                    .take_while(|d| d * d <= n)
                    .all(|d| !n.is_multiple_of(d))
        };
        for n in 0..5000 {
            assert_eq!(is_prime(n), trial(n), "n = {n}");
        }
    }

    #[test]
    fn least_irreducible_moduli() {
        assert_eq!(find_irreducible(3, 2).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(find_irreducible(5, 2).unwrap().modulus(), &[2, 0, 1]);
        let f7 = find_irreducible(7, 1).unwrap();
        assert_eq!(f7.modulus(), &[0, 1]);
        assert_eq!(f7.q(), 7);
    }

    #[test]
    fn moduli_have_no_roots() {
        for (p, e) in [(3, 2), (3, 3), (5, 2), (5, 3), (7, 2), (7, 3), (11, 2)] {
            let field = find_irreducible(p, e).unwrap();
            let m = field.modulus();
            assert_eq!(*m.last().unwrap(), 1);
            for x in 0..p {
                let val = m
                    .iter()
                    .rev()
                    .fold(0, |acc, &c| add_mod(mul_mod(acc, x, p), c, p));
                assert_ne!(val, 0, "root {x} of modulus for ({p},{e})");
            }
        }
    }

    #[test]
    fn irreducibility_rejects_products_of_quadratics() {
        // (x^2+1)^2 over F_3 has no roots but is reducible.
        assert!(!is_irreducible(&[1, 0, 2, 0, 1], 3));
        let f = find_irreducible(3, 4).unwrap();
        assert!(is_irreducible(f.modulus(), 3));
    }

    #[test]
    fn overflow_and_bad_degree() {
        assert_eq!(
            find_irreducible(3, 41),
            Err(Error::Overflow { p: 3, e: 41 })
        );
        assert!(find_irreducible(3, 0).is_err());
        assert_eq!(find_irreducible(4, 2), Err(Error::Composite(4)));
    }

    #[test]
    fn deterministic_construction() {
        for (p, e) in [(3, 5), (5, 4), (13, 3)] {
            assert_eq!(
                find_irreducible(p, e).unwrap(),
                find_irreducible(p, e).unwrap()
            );
        }
    }

    #[test]
    fn pow_examples() {
        let gf9 = FieldParams::new(3, 2).unwrap();
        for x in gf9.elements() {
            assert_eq!(gf9.pow(&x, 9), x);
        }
        let gf25 = FieldParams::new(5, 2).unwrap();
        for x in gf25.elements().skip(1) {
            assert_eq!(gf25.pow(&x, 24), gf25.one());
        }
        let f5 = FieldParams::prime_field(5).unwrap();
        assert_eq!(pow_element(&f5, &f5.scalar(2), 3), f5.scalar(3));
        assert_eq!(f5.pow(&f5.zero(), 0), f5.one());
    }

    #[test]
    fn ring_axioms_exhaustive() {
        for (p, e) in [(3, 1), (5, 1), (7, 1), (3, 2), (5, 2), (7, 2), (3, 3)] {
            let field = FieldParams::new(p, e).unwrap();
            let all: Vec<_> = field.elements().collect();
            for x in &all {
                for y in &all {
                    assert_eq!(field.add(x, y), field.add(y, x));
                    assert_eq!(field.mul(x, y), field.mul(y, x));
                }
            }
            // Associativity and distributivity on a stride to keep q^3 small.
            let stride: Vec<_> = all
                .iter()
                .step_by(if field.q() > 9 { 3 } else { 1 })
                .collect();
            for x in &stride {
                for y in &stride {
                    for z in &stride {
                        assert_eq!(
                            field.add(&field.add(x, y), z),
                            field.add(x, &field.add(y, z))
                        );
                        assert_eq!(
                            field.mul(&field.mul(x, y), z),
                            field.mul(x, &field.mul(y, z))
                        );
                        assert_eq!(
                            field.mul(x, &field.add(y, z)),
                            field.add(&field.mul(x, y), &field.mul(x, z))
                        );
                    }
                }
            }
            for x in all.iter().skip(1) {
                let inv = field.inv(x).unwrap();
                assert_eq!(field.mul(x, &inv), field.one());
            }
            assert_eq!(field.inv(&field.zero()), None);
        }
    }

    #[test]
    fn frobenius_fixes_every_element() {
        for (p, e) in [
            (3, 1),
            (3, 2),
            (3, 3),
            (3, 4),
            (3, 5),
            (5, 2),
            (5, 3),
            (7, 2),
            (7, 3),
        ] {
            let field = FieldParams::new(p, e).unwrap();
            for x in field.elements() {
                assert_eq!(field.pow(&x, field.q()), x);
            }
        }
    }

    #[test]
    fn index_arithmetic_matches_elements() {
        let field = FieldParams::new(5, 2).unwrap();
        for a in 0..field.q() {
            assert_eq!(field.index(&field.from_index(a)), a);
            for b in 0..field.q() {
                let (x, y) = (field.from_index(a), field.from_index(b));
                assert_eq!(field.add_index(a, b), field.index(&field.add(&x, &y)));
                assert_eq!(field.sub_index(a, b), field.index(&field.sub(&x, &y)));
            }
        }
    }

    #[test]
    fn large_prime_field_does_not_overflow() {
        let p = 18446744073709551557u64;
        let f = FieldParams::prime_field(p).unwrap();
        let x = f.scalar(p - 1);
        assert_eq!(f.mul(&x, &x), f.one());
        assert_eq!(f.add(&x, &f.scalar(5)), f.scalar(4));
        assert_eq!(f.mul(&x, &f.inv(&x).unwrap()), f.one());
    }
}
