use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use super::rational::{parse_rational, Rational};
use super::ScalarParseError;

/// An element `re + im·i` of ℚ(i).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussianRational { re, im: Rational::zero() }
    }

    pub fn from_int(re: i64) -> Self {
        Self::real(Rational::from_integer(re.into()))
    }

    pub fn i() -> Self {
        GaussianRational { re: Rational::zero(), im: Rational::one() }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::real(Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational { re: self.re.clone(), im: -&self.im }
    }

    /// `re² + im²`, i.e. `|z|²`.
    pub fn modulus_squared(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn scale(&self, r: &Rational) -> Self {
        GaussianRational { re: &self.re * r, im: &self.im * r }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let m = self.modulus_squared();
        Some(GaussianRational { re: &self.re / &m, im: -&self.im / &m })
    }

    pub fn div(&self, other: &Self) -> Option<Self> {
        other.recip().map(|r| self * &r)
    }
}

pub fn modulus_squared(z: &GaussianRational) -> Rational {
    z.modulus_squared()
}

impl From<Rational> for GaussianRational {
    fn from(re: Rational) -> Self {
        Self::real(re)
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Add for GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: GaussianRational) -> GaussianRational {
        &self + &rhs
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Sub for GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: GaussianRational) -> GaussianRational {
        &self - &rhs
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Mul for GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: GaussianRational) -> GaussianRational {
        &self * &rhs
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -&self.re, im: -&self.im }
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

fn fmt_imag(f: &mut fmt::Formatter<'_>, im: &Rational, leading: bool) -> fmt::Result {
    let sign = if im.is_negative() {
        "-"
    } else if leading {
        ""
    } else {
        "+"
    };
    let mag = im.abs();
    if mag.is_one() {
        write!(f, "{sign}i")
    } else {
        write!(f, "{sign}{mag}i")
    }
}

impl fmt::Display for GaussianRational {
    /// `3`, `-3/2`, `1/2i`, `3+4i`, `3/2-1/3i`, `-i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => fmt_imag(f, &self.im, true),
            (false, false) => {
                write!(f, "{}", self.re)?;
                fmt_imag(f, &self.im, false)
            }
        }
    }
}

fn parse_part(term: &str, whole: &str) -> Result<(Rational, bool), ScalarParseError> {
    if let Some(coef) = term.strip_suffix('i') {
        let value = match coef {
            "" | "+" => Rational::one(),
            "-" => -Rational::one(),
            _ => parse_rational(coef).map_err(|e| e.within(whole))?,
        };
        Ok((value, true))
    } else {
        Ok((parse_rational(term).map_err(|e| e.within(whole))?, false))
    }
}

impl FromStr for GaussianRational {
    type Err = ScalarParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let compact = compact.replace('\u{2212}', "-");
        let body = compact
            .strip_prefix('(')
            .and_then(|b| b.strip_suffix(')'))
            .unwrap_or(&compact);
        if body.is_empty() {
            return Err(ScalarParseError::new(s, "a Gaussian rational such as 3/2-1/3i"));
        }
        // Split at a sign that is not the leading one.
        let split = body
            .char_indices()
            .skip(1)
            .find(|&(_, c)| c == '+' || c == '-')
            .map(|(k, _)| k);
        let parts: Vec<&str> = match split {
            Some(k) => vec![&body[..k], &body[k..]],
            None => vec![body],
        };
        let mut out = GaussianRational::zero();
        let mut seen_re = false;
        let mut seen_im = false;
        for part in parts {
            let (value, imaginary) = parse_part(part, s)?;
            let seen = if imaginary { &mut seen_im } else { &mut seen_re };
            if *seen {
                return Err(ScalarParseError::new(s, "at most one real and one imaginary part"));
            }
            *seen = true;
            if imaginary {
                out.im = value;
            } else {
                out.re = value;
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rational::{int, rational};

    fn g(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    #[test]
    fn modulus_squared_examples() {
        assert_eq!(g("3+4i").modulus_squared(), int(25));
        assert_eq!(GaussianRational::zero().modulus_squared(), int(0));
        assert_eq!(g("1/2+1/2i").modulus_squared(), rational(1, 2));
    }

    #[test]
    fn parses_text_syntax() {
        assert_eq!(g("3"), GaussianRational::from_int(3));
        assert_eq!(g("-3/2"), GaussianRational::real(rational(-3, 2)));
        assert_eq!(g("1/2i"), GaussianRational::new(int(0), rational(1, 2)));
        assert_eq!(g("3+4i"), GaussianRational::new(int(3), int(4)));
        assert_eq!(g(" 3/2 - 1/3 i "), GaussianRational::new(rational(3, 2), rational(-1, 3)));
        assert_eq!(g("i"), GaussianRational::i());
        assert_eq!(g("-i"), -GaussianRational::i());
        assert_eq!(g("(1-i)"), GaussianRational::new(int(1), int(-1)));
        assert_eq!(g("2i+1"), GaussianRational::new(int(1), int(2)));
    }

    #[test]
    fn rejects_bad_text() {
        for bad in ["", "3+4", "i+i", "x", "1/0", "1.5", "3+4j", "++1"] {
            assert!(bad.parse::<GaussianRational>().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn display_round_trips() {
        for s in ["3", "-3/2", "1/2i", "3+4i", "3/2-1/3i", "i", "-i", "1-i", "0"] {
            assert_eq!(g(s).to_string(), s);
        }
    }

    #[test]
    fn field_operations() {
        let a = g("1+2i");
        let b = g("3-i");
        assert_eq!(&a * &b, g("5+5i"));
        assert_eq!(&(&a * &b) * &b.recip().unwrap(), a);
        assert_eq!(a.conj(), g("1-2i"));
        assert_eq!((&a * &a.conj()), GaussianRational::real(a.modulus_squared()));
        assert!(GaussianRational::zero().recip().is_none());
    }
}
