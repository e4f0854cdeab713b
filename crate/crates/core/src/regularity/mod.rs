//! Regularity decisions.
//!
//! For a nonzero `α` over a torsion-free group, `2‖α‖₂² ≥ ‖α‖₁²` implies that `α` is not a
//! zero divisor. The argument runs through `σ = α*α`: its Υ value is at least the norm gap,
//! so `σ` lies in the golden cone, and golden elements split as a nonnegative constant plus
//! a positive combination of `β*β` with two-term `β`. [`certify_regular`] materializes that
//! split so it can be checked by multiplying out.

mod certificate;
mod decomposition;
mod report;
mod support;

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraElement, AlgebraError, Upsilon};
use crate::scalars::{radical_sum_sign, RadicalSum, Rational, Sign};

pub use certificate::{
    certify_regular, verify_certificate, CertificateDoc, CertifyError, DocumentError, FactorDoc, GapDoc,
    RegularityCertificate, VerifyFailure, CHAIN, SCHEMA_VERSION,
};
pub use decomposition::{golden_decomposition, reconstruct, DecompositionError, Factor, GoldenDecomposition};
pub use report::{RadicalSumDoc, VerdictReport};
pub use support::{coordinates, hermite_normal_form, hermite_normal_form_with_transform, restrict_to_lattice, support_subgroup, SubgroupReport, SupportError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    /// Torsion-free group and nonnegative gap: not a zero divisor.
    Regular,
    /// Negative gap. The test is only sufficient, so nothing follows.
    Inconclusive,
    /// Precision cap reached before the gap sign was separated from zero.
    Undecided,
    /// The group has torsion; the gap is still reported.
    HypothesisNotMet,
    DegenerateZero,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Regular => "regular",
            Outcome::Inconclusive => "inconclusive",
            Outcome::Undecided => "undecided",
            Outcome::HypothesisNotMet => "hypothesis-not-met",
            Outcome::DegenerateZero => "degenerate-zero",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [
            Outcome::Regular,
            Outcome::Inconclusive,
            Outcome::Undecided,
            Outcome::HypothesisNotMet,
            Outcome::DegenerateZero,
        ]
        .into_iter()
        .find(|o| o.as_str() == s)
    }
}

impl std::fmt::Display for Outcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub outcome: Outcome,
    /// Sign of `2‖α‖₂² − ‖α‖₁²`.
    pub gap_sign: Sign,
    pub norm2_squared: Rational,
    pub norm1: RadicalSum,
    pub norm1_squared: RadicalSum,
    pub torsion_free: bool,
}

impl Verdict {
    pub fn two_norm2_squared(&self) -> Rational {
        &self.norm2_squared * Rational::from_integer(2.into())
    }
}

/// Evaluates the norm-gap test on `α`.
pub fn criterion_check(alpha: &AlgebraElement, precision_cap_bits: u32) -> Verdict {
    let norm2_squared = alpha.norm2_squared();
    let norm1 = alpha.norm1();
    let norm1_squared = alpha.norm1_squared();
    let torsion_free = alpha.spec().is_torsion_free();
    let gap_target = &norm2_squared * Rational::from_integer(2.into());
    let gap_sign = radical_sum_sign(&gap_target, &norm1_squared, precision_cap_bits);
    let outcome = if alpha.is_zero() {
        Outcome::DegenerateZero
    } else if !torsion_free {
        Outcome::HypothesisNotMet
    } else {
        match gap_sign {
            Sign::Positive | Sign::Zero => Outcome::Regular,
            Sign::Negative => Outcome::Inconclusive,
            Sign::Undecided => Outcome::Undecided,
        }
    };
    Verdict { outcome, gap_sign, norm2_squared, norm1, norm1_squared, torsion_free }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenStatus {
    /// `None` when the sign of Υ could not be decided within the cap.
    pub golden: Option<bool>,
    /// The zero element is golden but carries no information.
    pub degenerate: bool,
    pub upsilon: Upsilon,
}

/// Golden-cone membership, i.e. Υ(α) ≥ 0. Only defined for self-adjoint `α`.
pub fn golden_check(alpha: &AlgebraElement, precision_cap_bits: u32) -> Result<GoldenStatus, AlgebraError> {
    let upsilon = alpha.upsilon(precision_cap_bits)?;
    Ok(GoldenStatus { golden: upsilon.is_golden(), degenerate: alpha.is_zero(), upsilon })
}
