//! Exact scalars: rationals, Gaussian rationals, and sums of square roots with a
//! certified sign test.

mod gaussian;
mod interval;
mod radical;
mod rational;

use thiserror::Error;

pub use gaussian::{modulus_squared, GaussianRational};
pub use interval::DyadicInterval;
pub use radical::{
    radical_sum_add, radical_sum_compare, radical_sum_sign, RadicalSum, Sign,
    DEFAULT_PRECISION_CAP,
};
pub use rational::{
    ceil_to_int, floor_to_int, int, is_rational_square, isqrt, isqrt_exact, parse_rational,
    rational, rational_sqrt, Rational,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid scalar {input:?}: expected {expected}")]
pub struct ScalarParseError {
    pub input: String,
    pub expected: &'static str,
}

impl ScalarParseError {
    pub(crate) fn new(input: &str, expected: &'static str) -> Self {
        ScalarParseError { input: input.to_string(), expected }
    }

    pub(crate) fn within(mut self, whole: &str) -> Self {
        self.input = whole.to_string();
        self
    }
}
