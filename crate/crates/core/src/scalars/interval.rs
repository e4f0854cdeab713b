use std::ops::Add;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use super::rational::{ceil_to_int, floor_to_int, isqrt, Rational};

/// Closed interval `[lo, hi] / 2^bits` with integer endpoints at a shared binary scale.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DyadicInterval {
    lo: BigInt,
    hi: BigInt,
    bits: u32,
}

impl DyadicInterval {
    pub fn new(lo: BigInt, hi: BigInt, bits: u32) -> Self {
        assert!(lo <= hi, "dyadic interval with lo > hi");
        DyadicInterval { lo, hi, bits }
    }

    pub fn zero(bits: u32) -> Self {
        Self::new(BigInt::zero(), BigInt::zero(), bits)
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn lo(&self) -> Rational {
        Rational::new(self.lo.clone(), BigInt::from(1) << self.bits)
    }

    pub fn hi(&self) -> Rational {
        Rational::new(self.hi.clone(), BigInt::from(1) << self.bits)
    }

    /// Smallest enclosure of a rational at this scale.
    pub fn enclose_rational(q: &Rational, bits: u32) -> Self {
        let scaled = q * Rational::from_integer(BigInt::from(1) << bits);
        Self::new(floor_to_int(&scaled), ceil_to_int(&scaled), bits)
    }

    /// Enclosure of `√q` for `q ≥ 0`, from the Newton integer square root of `⌊q·4^bits⌋`.
    pub fn sqrt(q: &Rational, bits: u32) -> Self {
        assert!(!q.is_negative(), "square root of negative rational");
        let scaled = q * Rational::from_integer(BigInt::from(1) << (2 * bits));
        let floor = floor_to_int(&scaled);
        let floor_mag: BigUint = floor.magnitude().clone();
        let root = isqrt(&floor_mag);
        let exact = scaled.is_integer() && &root * &root == floor_mag;
        let lo = BigInt::from(root);
        let hi = if exact { lo.clone() } else { &lo + 1 };
        Self::new(lo, hi, bits)
    }

    /// Outward-rounded product with a rational scalar of either sign.
    pub fn scale(&self, c: &Rational) -> Self {
        let a = c * Rational::from_integer(self.lo.clone());
        let b = c * Rational::from_integer(self.hi.clone());
        let (small, large) = if c.is_negative() { (b, a) } else { (a, b) };
        Self::new(floor_to_int(&small), ceil_to_int(&large), self.bits)
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.hi.is_negative()
    }

    pub fn contains(&self, q: &Rational) -> bool {
        &self.lo() <= q && q <= &self.hi()
    }

    pub fn width(&self) -> Rational {
        self.hi() - self.lo()
    }
}

impl Add for &DyadicInterval {
    type Output = DyadicInterval;
    fn add(self, rhs: &DyadicInterval) -> DyadicInterval {
        assert_eq!(self.bits, rhs.bits, "adding dyadic intervals at different scales");
        DyadicInterval::new(&self.lo + &rhs.lo, &self.hi + &rhs.hi, self.bits)
    }
}
