//! Exact arithmetic in complex group algebras of free, free abelian and finite groups,
//! together with a sufficient regularity test for elements over torsion-free groups:
//! `α` is not a zero divisor whenever `2‖α‖₂² ≥ ‖α‖₁²`.
//!
//! Coefficients live in ℚ(i), so every verdict is exact. When the test passes, the
//! [`regularity`] module can produce a certificate: `α*α` written as a nonnegative constant
//! plus a positive combination of `β*β` with two-term `β`, which anyone can re-check by
//! multiplying out. The [`oracle`] module supplies ground truth on finite groups by exact
//! linear algebra.

pub mod algebra;
pub mod groups;
pub mod oracle;
pub mod regularity;
pub mod scalars;

#[cfg(feature = "sample")]
pub mod sample;

pub use algebra::{parse_element, AlgebraElement, AlgebraError};
pub use groups::{GroupElement, GroupSpec};
pub use scalars::{GaussianRational, RadicalSum, Rational, Sign};
