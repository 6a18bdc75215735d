//! Exact rational scalars.
//!
//! Every coefficient in the crate is a [`Scalar`]: an arbitrary-precision
//! rational kept in lowest terms with a positive denominator. Nothing is ever
//! rounded.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::ParseError;

pub type Scalar = BigRational;

/// The integer `n` as a scalar.
pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// `p/q` in lowest terms. Panics on `q == 0`.
pub fn frac(p: i64, q: i64) -> Scalar {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

fn small(s: &Scalar) -> Option<(i128, i128)> {
    Some((
        i128::from(s.numer().to_i64()?),
        i128::from(s.denom().to_i64()?),
    ))
}

fn reduced(n: i128, d: i128) -> Scalar {
    if d == 1 {
        return BigRational::from_integer(BigInt::from(n));
    }
    let g = n.gcd(&d);
    BigRational::new_raw(BigInt::from(n / g), BigInt::from(d / g))
}

/// `a * b`, using machine integers when both operands fit in `i64`.
pub fn mul(a: &Scalar, b: &Scalar) -> Scalar {
    match (small(a), small(b)) {
        (Some((an, ad)), Some((bn, bd))) => reduced(an * bn, ad * bd),
        _ => a * b,
    }
}

/// `*a += b`, with the same fast path as [`mul`].
pub fn add_assign(a: &mut Scalar, b: &Scalar) {
    match (small(a), small(b)) {
        (Some((an, ad)), Some((bn, bd))) if ad == bd => *a = reduced(an + bn, ad),
        // |an·bd + bn·ad| < 2^127 since every factor is below 2^63.
        (Some((an, ad)), Some((bn, bd))) => *a = reduced(an * bd + bn * ad, ad * bd),
        _ => *a += b,
    }
}

/// `(-1)^k`.
pub fn sign(k: usize) -> Scalar {
    if k.is_multiple_of(2) {
        one()
    } else {
        -one()
    }
}

/// `n!` as a scalar.
pub fn factorial(n: u64) -> Scalar {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    BigRational::from_integer(acc)
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> Scalar {
    if k > n {
        return zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    BigRational::from_integer(acc)
}

/// `base^exp` for a possibly negative exponent. `base` must be nonzero when
/// `exp < 0`.
pub fn pow(base: &Scalar, exp: i64) -> Scalar {
    let mut acc = one();
    for _ in 0..exp.unsigned_abs() {
        acc *= base;
    }
    if exp < 0 {
        acc.recip()
    } else {
        acc
    }
}

/// Canonical serialization: always `p/q`, denominator positive, lowest terms.
pub fn to_string(s: &Scalar) -> String {
    format!("{}/{}", s.numer(), s.denom())
}

/// Parses `p`, `-p`, `p/q`. Leading/trailing whitespace is ignored.
pub fn parse(text: &str) -> Result<Scalar, ParseError> {
    let t = text.trim();
    let bad = || ParseError::new(0, format!("invalid rational `{t}`"));
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(ParseError::new(0, format!("zero denominator in `{t}`")));
    }
    Ok(BigRational::new(num, den))
}

/// Returns `Some(n)` when `s` is an integer fitting in `i64`.
pub fn to_i64(s: &Scalar) -> Option<i64> {
    if !s.is_integer() {
        return None;
    }
    i64::try_from(s.numer().clone()).ok()
}

pub fn is_negative(s: &Scalar) -> bool {
    s.is_negative()
}
