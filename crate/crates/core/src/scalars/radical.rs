use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::interval::DyadicInterval;
use super::rational::{isqrt_exact_int, rational_sqrt, Rational};

/// Default cap for adaptive interval refinement.
pub const DEFAULT_PRECISION_CAP: u32 = 4096;

const START_BITS: u32 = 64;

/// Outcome of a certified sign decision.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Negative,
    Zero,
    Positive,
    /// The precision cap was exhausted before the sign was separated from zero.
    Undecided,
}

impl Sign {
    pub fn from_ordering(ord: Ordering) -> Sign {
        match ord {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }

    /// `Positive` or `Zero`.
    pub fn is_nonnegative(self) -> bool {
        matches!(self, Sign::Positive | Sign::Zero)
    }

    /// Rank in the order `Negative < Zero < Positive`; `None` when undecided.
    pub fn rank(self) -> Option<i8> {
        match self {
            Sign::Negative => Some(-1),
            Sign::Zero => Some(0),
            Sign::Positive => Some(1),
            Sign::Undecided => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Sign::Negative => "negative",
            Sign::Zero => "zero",
            Sign::Positive => "positive",
            Sign::Undecided => "undecided",
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Rational linear combination of square roots of non-square positive integers,
/// with at most one term per square class.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct Combination {
    constant: Rational,
    /// (radicand, coefficient), sorted by radicand, coefficients nonzero.
    terms: Vec<(BigInt, Rational)>,
}

impl Combination {
    /// Adds `coef·√q` for a positive rational `q`.
    fn push(&mut self, coef: Rational, q: &Rational) {
        assert!(q.is_positive(), "radicand must be positive");
        if coef.is_zero() {
            return;
        }
        // √(n/d) = √(n·d) / d
        let radicand = q.numer() * q.denom();
        let coef = coef / Rational::from_integer(q.denom().clone());
        if let Some(root) = isqrt_exact_int(&radicand) {
            self.constant += coef * Rational::from_integer(root);
            return;
        }
        for k in 0..self.terms.len() {
            let (existing, existing_coef) = &self.terms[k];
            let Some(root) = isqrt_exact_int(&(existing * &radicand)) else {
                continue;
            };
            // Same square class. The smaller radicand represents the class.
            let merged = if radicand < *existing {
                // √existing = root/radicand · √radicand
                let moved = existing_coef * Rational::new(root, radicand.clone());
                (radicand, coef + moved)
            } else {
                let moved = coef * Rational::new(root, existing.clone());
                (existing.clone(), existing_coef + moved)
            };
            self.terms.remove(k);
            if !merged.1.is_zero() {
                self.insert_sorted(merged);
            }
            return;
        }
        self.insert_sorted((radicand, coef));
    }

    fn insert_sorted(&mut self, term: (BigInt, Rational)) {
        let at = self.terms.partition_point(|(r, _)| *r < term.0);
        self.terms.insert(at, term);
    }

    fn enclose(&self, bits: u32) -> DyadicInterval {
        self.terms.iter().fold(
            DyadicInterval::enclose_rational(&self.constant, bits),
            |acc, (radicand, coef)| {
                let root = DyadicInterval::sqrt(&Rational::from_integer(radicand.clone()), bits);
                &acc + &root.scale(coef)
            },
        )
    }

    fn sign(&self, precision_cap_bits: u32) -> Sign {
        if self.terms.is_empty() {
            return Sign::from_ordering(self.constant.cmp(&Rational::zero()));
        }
        // A nonempty combination of square roots from distinct non-trivial square classes
        // is irrational, so the value is nonzero and refinement only has to separate it.
        let cap = precision_cap_bits.max(1);
        let mut bits = START_BITS.min(cap);
        loop {
            let iv = self.enclose(bits);
            if iv.is_positive() {
                return Sign::Positive;
            }
            if iv.is_negative() {
                return Sign::Negative;
            }
            if bits >= cap {
                return Sign::Undecided;
            }
            bits = bits.saturating_mul(2).min(cap);
        }
    }
}

/// Exact value `constant + Σ mₖ·√qₖ` with strictly positive multipliers and pairwise
/// distinct square classes among the radicands.
///
/// Radicands are kept as non-square positive integers. When two classes merge, the smaller
/// radicand is kept, so the stored form only depends on the value and on the radicands
/// that have been combined, not on the order of additions.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RadicalSum {
    inner: Combination,
}

impl RadicalSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_rational(constant: Rational) -> Self {
        RadicalSum { inner: Combination { constant, terms: Vec::new() } }
    }

    /// `√q` for `q ≥ 0`.
    pub fn sqrt_of(q: &Rational) -> Self {
        let mut out = Self::zero();
        out.push_term(Rational::one(), q);
        out
    }

    /// Adds `multiplier·√radicand`. Square radicands fold into the constant.
    ///
    /// Panics unless `multiplier > 0` and `radicand ≥ 0`.
    pub fn push_term(&mut self, multiplier: Rational, radicand: &Rational) {
        assert!(multiplier.is_positive(), "radical multiplier must be positive");
        assert!(!radicand.is_negative(), "radicand must be nonnegative");
        if radicand.is_zero() {
            return;
        }
        if let Some(root) = rational_sqrt(radicand) {
            self.inner.constant += multiplier * root;
        } else {
            self.inner.push(multiplier, radicand);
        }
    }

    pub fn add_rational(&mut self, q: &Rational) {
        self.inner.constant += q;
    }

    pub fn constant(&self) -> &Rational {
        &self.inner.constant
    }

    /// `(multiplier, radicand)` pairs in increasing radicand order.
    pub fn terms(&self) -> impl Iterator<Item = (&Rational, Rational)> + '_ {
        self.inner.terms.iter().map(|(r, m)| (m, Rational::from_integer(r.clone())))
    }

    pub fn term_count(&self) -> usize {
        self.inner.terms.len()
    }

    /// The exact value when it is rational.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.inner.terms.is_empty().then_some(&self.inner.constant)
    }

    /// Scales by a positive rational.
    pub fn scale(&self, c: &Rational) -> Self {
        assert!(c.is_positive(), "RadicalSum can only be scaled by a positive rational");
        let mut out = self.clone();
        out.inner.constant *= c;
        for (_, m) in &mut out.inner.terms {
            *m *= c;
        }
        out
    }

    /// Product of two sums with nonnegative constants; stays inside the positive cone.
    pub fn mul(&self, other: &Self) -> Self {
        assert!(
            !self.constant().is_negative() && !other.constant().is_negative(),
            "RadicalSum product requires nonnegative constants"
        );
        let mut out = Self::from_rational(self.constant() * other.constant());
        let lhs: Vec<_> = self.terms().collect();
        let rhs: Vec<_> = other.terms().collect();
        for (m, q) in &rhs {
            if self.constant().is_positive() {
                out.push_term(self.constant() * *m, q);
            }
        }
        for (m, q) in &lhs {
            if other.constant().is_positive() {
                out.push_term(other.constant() * *m, q);
            }
            for (n, p) in &rhs {
                out.push_term(*m * *n, &(q * p));
            }
        }
        out
    }

    /// Interval enclosure of the value at `bits` fractional bits.
    pub fn enclose(&self, bits: u32) -> DyadicInterval {
        self.inner.enclose(bits)
    }

    /// Decimal expansion truncated toward zero to `digits` places.
    pub fn to_decimal(&self, digits: usize) -> String {
        let scale = Rational::from_integer(BigInt::from(10).pow(digits as u32));
        let trunc = |q: &Rational| (q * &scale).trunc().to_integer();
        let (scaled, negative) = match self.as_rational() {
            Some(q) => (trunc(q), q.is_negative()),
            None => {
                let mut bits = 128;
                loop {
                    let iv = self.enclose(bits);
                    let (lo, hi) = (trunc(&iv.lo()), trunc(&iv.hi()));
                    if lo == hi && (iv.is_positive() || iv.is_negative()) {
                        break (lo, iv.is_negative());
                    }
                    bits *= 2;
                }
            }
        };
        let text = scaled.magnitude().to_string();
        let padded = format!("{:0>width$}", text, width = digits + 1);
        let (int_part, frac_part) = padded.split_at(padded.len() - digits);
        let sign = if negative { "-" } else { "" };
        if digits == 0 {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{frac_part}")
        }
    }
}

impl From<Rational> for RadicalSum {
    fn from(q: Rational) -> Self {
        Self::from_rational(q)
    }
}

impl fmt::Display for RadicalSum {
    /// `6`, `1 + sqrt(2)`, `3/2*sqrt(2) + sqrt(3)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.constant().is_zero() || self.term_count() == 0 {
            parts.push(self.constant().to_string());
        }
        for (m, q) in self.terms() {
            if m.is_one() {
                parts.push(format!("sqrt({q})"));
            } else {
                parts.push(format!("{m}*sqrt({q})"));
            }
        }
        f.write_str(&parts.join(" + "))
    }
}

/// `a + b`, re-canonicalized.
pub fn radical_sum_add(a: &RadicalSum, b: &RadicalSum) -> RadicalSum {
    let mut out = a.clone();
    out.inner.constant += b.constant();
    for (m, q) in b.terms() {
        out.inner.push(m.clone(), &q);
    }
    out
}

/// Certified sign of `a − b`.
pub fn radical_sum_compare(a: &RadicalSum, b: &RadicalSum, precision_cap_bits: u32) -> Sign {
    let mut diff = a.inner.clone();
    diff.constant -= b.constant();
    for (m, q) in b.terms() {
        diff.push(-m.clone(), &q);
    }
    diff.sign(precision_cap_bits)
}

/// Certified sign of `target − s`.
pub fn radical_sum_sign(target: &Rational, s: &RadicalSum, precision_cap_bits: u32) -> Sign {
    radical_sum_compare(&RadicalSum::from_rational(target.clone()), s, precision_cap_bits)
}
