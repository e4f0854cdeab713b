use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ScalarParseError;

/// Exact rational with arbitrary-precision parts. Always reduced, denominator positive.
pub type Rational = num_rational::BigRational;

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Integer square root by Newton iteration: the largest `r` with `r * r <= n`.
pub fn isqrt(n: &BigUint) -> BigUint {
    if n < &BigUint::from(2u32) {
        return n.clone();
    }
    // 2^ceil(bits/2) is an upper bound on the root; the iteration decreases monotonically from there.
    let mut x = BigUint::one() << n.bits().div_ceil(2);
    loop {
        let y = (&x + n / &x) >> 1u32;
        if y >= x {
            return x;
        }
        x = y;
    }
}

pub fn isqrt_exact(n: &BigUint) -> Option<BigUint> {
    let r = isqrt(n);
    (&r * &r == *n).then_some(r)
}

pub(crate) fn isqrt_exact_int(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    isqrt_exact(n.magnitude()).map(BigInt::from)
}

/// Exact square root of a nonnegative rational, if one exists.
///
/// Panics on negative input.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    assert!(!q.is_negative(), "rational_sqrt of negative value {q}");
    // q is reduced, so it is a square iff numerator and denominator both are.
    let n = isqrt_exact(q.numer().magnitude())?;
    let d = isqrt_exact(q.denom().magnitude())?;
    Some(Rational::new(BigInt::from(n), BigInt::from(d)))
}

pub fn is_rational_square(q: &Rational) -> bool {
    !q.is_negative() && rational_sqrt(q).is_some()
}

pub fn floor_to_int(q: &Rational) -> BigInt {
    q.numer().div_floor(q.denom())
}

pub fn ceil_to_int(q: &Rational) -> BigInt {
    -((-q.numer()).div_floor(q.denom()))
}

/// Parses `7`, `-3/2`, `+4` (whitespace already stripped).
pub fn parse_rational(s: &str) -> Result<Rational, ScalarParseError> {
    let bad = || ScalarParseError::new(s, "rational of the form p or p/q");
    let (neg, body) = match s.as_bytes().first() {
        Some(b'-') => (true, &s[1..]),
        Some(b'+') => (false, &s[1..]),
        _ => (false, s),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    if !digits(num) || den.is_some_and(|d| !digits(d)) {
        return Err(bad());
    }
    let n = BigInt::from_str(num).map_err(|_| bad())?;
    let d = match den {
        Some(d) => BigInt::from_str(d).map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(ScalarParseError::new(s, "nonzero denominator"));
    }
    let n = if neg { -n } else { n };
    Ok(Rational::new(n, d))
}
