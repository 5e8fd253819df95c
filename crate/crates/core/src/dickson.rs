//! Reversed Dickson polynomials `D_n(a, x)` and `E_n(a, x)`.
//!
//! The constant-free specializations
//!
//! ```text
//! first kind:   D_n(1, x^d) - D_n(1, 0) = sum_{i=1}^{n/2} n/(n-i) C(n-i, i) (-x^d)^i
//! second kind:  E_n(1, x^d) - E_n(1, 0) = sum_{i=1}^{n/2}        C(n-i, i) (-x^d)^i
//! ```
//!
//! are built here along three independent routes: the closed form with
//! Lucas binomials, the three-term recurrence in F_p[x], and exact big-integer
//! coefficients reduced at the end.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{sub_mod, validate_odd_prime, FieldElement, FieldParams};
use crate::poly::SparsePoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DicksonKind {
    First,
    Second,
}

impl DicksonKind {
    pub const ALL: [DicksonKind; 2] = [DicksonKind::First, DicksonKind::Second];
}

impl fmt::Display for DicksonKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DicksonKind::First => "first",
            DicksonKind::Second => "second",
        })
    }
}

impl FromStr for DicksonKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "first" | "d" => Ok(DicksonKind::First),
            "second" | "e" => Ok(DicksonKind::Second),
            other => Err(Error::InvalidArgument(format!("unknown kind `{other}`"))),
        }
    }
}

/// One polynomial instance: kind, index `n`, substitution exponent `d`
/// and characteristic `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DicksonQuery {
    pub kind: DicksonKind,
    pub n: u64,
    pub d: u64,
    pub p: u64,
}

impl DicksonQuery {
    pub fn new(kind: DicksonKind, n: u64, d: u64, p: u64) -> Result<Self> {
        validate_odd_prime(p)?;
        if d == 0 {
            return Err(Error::InvalidArgument("d must be at least 1".into()));
        }
        Ok(DicksonQuery { kind, n, d, p })
    }

    /// Closed-form construction of the constant-free polynomial.
    pub fn construct(&self) -> Result<SparsePoly> {
        match self.kind {
            DicksonKind::First => first_kind_closed(self.n, self.d, self.p),
            DicksonKind::Second => second_kind_closed(self.n, self.d, self.p),
        }
    }
}

/// `C(n, k) mod p` as the product of base-p digit binomials.
pub fn lucas_binom(mut n: u64, mut k: u64, p: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut acc = 1u64;
    while k > 0 || n > 0 {
        let (nd, kd) = (n % p, k % p);
        if kd > nd {
            return 0;
        }
        acc = crate::field::mul_mod(acc, small_binom_mod(nd, kd, p), p);
        n /= p;
        k /= p;
    }
    acc
}

// C(n, k) mod p for n < p: numerator and denominator are units.
fn small_binom_mod(n: u64, k: u64, p: u64) -> u64 {
    use crate::field::{inv_mod, mul_mod};
    let k = k.min(n - k);
    let (mut num, mut den) = (1u64, 1u64);
    for j in 0..k {
        num = mul_mod(num, n - j, p);
        den = mul_mod(den, j + 1, p);
    }
    mul_mod(num, inv_mod(den, p).expect("k < p"), p)
}

fn signed(c: u64, i: u64, p: u64) -> u64 {
    if i % 2 == 1 {
        sub_mod(0, c, p)
    } else {
        c
    }
}

fn closed_form(n: u64, d: u64, p: u64, coeff: impl Fn(u64) -> u64) -> Result<SparsePoly> {
    let terms = (1..=n / 2)
        .map(|i| {
            let exp = d.checked_mul(i).ok_or(Error::ExponentOverflow)?;
            Ok((exp, signed(coeff(i), i, p)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SparsePoly::from_terms(p, terms))
}

/// First kind, `D_n(1, x^d) - D_n(1, 0)` over F_p.
///
/// `n/(n-i) C(n-i, i)` is taken as the integer `C(n-i, i) + C(n-i-1, i-1)`,
/// so no division happens even when `n - i` is divisible by p.
pub fn first_kind_closed(n: u64, d: u64, p: u64) -> Result<SparsePoly> {
    closed_form(n, d, p, |i| {
        (lucas_binom(n - i, i, p) + lucas_binom(n - i - 1, i - 1, p)) % p
    })
}

/// Second kind, `E_n(1, x^d) - E_n(1, 0)` over F_p.
pub fn second_kind_closed(n: u64, d: u64, p: u64) -> Result<SparsePoly> {
    closed_form(n, d, p, |i| lucas_binom(n - i, i, p))
}

pub fn construct(kind: DicksonKind, n: u64, d: u64, p: u64) -> Result<SparsePoly> {
    match kind {
        DicksonKind::First => first_kind_closed(n, d, p),
        DicksonKind::Second => second_kind_closed(n, d, p),
    }
}

/// Polynomials for `n = 0..=n_max` from `f_n = f_{n-1} - x f_{n-2}`, seeded
/// with `D_0 = 2, D_1 = 1` or `E_0 = E_1 = 1`. Each output has its constant
/// term dropped and `x` replaced by `x^d`.
pub fn generate_by_recurrence(
    kind: DicksonKind,
    n_max: u64,
    p: u64,
    d: u64,
) -> Result<Vec<SparsePoly>> {
    let seed0 = match kind {
        DicksonKind::First => 2,
        DicksonKind::Second => 1,
    };
    let x = SparsePoly::monomial(p, 1, 1);
    let mut prev = SparsePoly::monomial(p, seed0, 0);
    let mut cur = SparsePoly::monomial(p, 1, 0);
    let mut out = Vec::with_capacity(n_max as usize + 1);
    out.push(prev.without_constant().substitute_monomial(d)?);
    if n_max >= 1 {
        out.push(cur.without_constant().substitute_monomial(d)?);
    }
    for _ in 2..=n_max {
        let next = cur.sub(&x.mul(&prev)?)?;
        prev = std::mem::replace(&mut cur, next);
        out.push(cur.without_constant().substitute_monomial(d)?);
    }
    Ok(out)
}

/// Exact integer `C(n, k)`.
pub fn binom_exact(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::from(1u32);
    for j in 0..k {
        acc *= n - j;
        acc /= j + 1;
    }
    acc
}

/// Exact integer coefficient magnitude of `x^i` in the closed form:
/// `n C(n-i, i) / (n-i)` for the first kind, `C(n-i, i)` for the second.
pub fn exact_coefficient(kind: DicksonKind, n: u64, i: u64) -> BigUint {
    let b = binom_exact(n - i, i);
    match kind {
        DicksonKind::First => {
            let num = b * n;
            debug_assert_eq!(&num % (n - i), BigUint::from(0u32));
            num / (n - i)
        }
        DicksonKind::Second => b,
    }
}

/// Closed form from exact integer coefficients reduced mod p at the end.
pub fn closed_form_exact(kind: DicksonKind, n: u64, d: u64, p: u64) -> Result<SparsePoly> {
    closed_form(n, d, p, |i| {
        let r = exact_coefficient(kind, n, i) % p;
        r.iter_u64_digits().next().unwrap_or(0)
    })
}

/// `D_n(a, x)` or `E_n(a, x)` in `field` via `f_n = a f_{n-1} - x f_{n-2}`.
pub fn eval_reversed_dickson(
    kind: DicksonKind,
    n: u64,
    a: &FieldElement,
    x: &FieldElement,
    field: &FieldParams,
) -> FieldElement {
    let mut prev = match kind {
        DicksonKind::First => field.scalar(2),
        DicksonKind::Second => field.one(),
    };
    if n == 0 {
        return prev;
    }
    let mut cur = a.clone();
    for _ in 2..=n {
        let next = field.sub(&field.mul(a, &cur), &field.mul(x, &prev));
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}
