//! Regularity certificates and their independent checker.

use std::sync::Arc;

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::decomposition::{golden_decomposition, reconstruct, DecompositionError, Factor};
use super::report::RadicalSumDoc;
use super::{criterion_check, Outcome, Verdict};
use crate::algebra::{parse_element, parse_group_element, AlgebraElement};
use crate::groups::GroupSpec;
use crate::scalars::{parse_rational, radical_sum_compare, GaussianRational, Rational, Sign};

pub const SCHEMA_VERSION: u32 = 1;

/// Steps a certificate vouches for, in order.
pub const CHAIN: [&str; 4] = [
    "norm gap: 2*|a|_2^2 - |a|_1^2 >= 0",
    "upsilon(a* a) >= 0",
    "golden split: a* a = c + sum w_g (b_g* b_g), c >= 0, w_g > 0",
    "a* a regular implies a regular",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularityCertificate {
    pub element: AlgebraElement,
    pub verdict: Verdict,
    /// `α*α`.
    pub sigma: AlgebraElement,
    /// Υ(σ), exactly.
    pub upsilon_constant: Rational,
    pub factors: Vec<Factor>,
    pub torsion_free: bool,
    pub chain: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertifyError {
    #[error("criterion verdict is {}, not regular", .0.outcome)]
    NotRegular(Box<Verdict>),
    #[error("certificate unavailable: {reason}")]
    Unavailable { verdict: Box<Verdict>, reason: String },
}

/// Builds a certificate for an element that passes the norm-gap test.
///
/// Panics if the test passes but `α*α` turns out not to be golden: that would contradict
/// `Υ(α*α) ≥ 2‖α‖₂² − ‖α‖₁²`.
pub fn certify_regular(alpha: &AlgebraElement, precision_cap_bits: u32) -> Result<RegularityCertificate, CertifyError> {
    let verdict = criterion_check(alpha, precision_cap_bits);
    if verdict.outcome != Outcome::Regular {
        return Err(CertifyError::NotRegular(Box::new(verdict)));
    }
    let sigma = alpha.adjoint().mul(alpha).expect("same group");
    let upsilon = sigma.upsilon(precision_cap_bits).expect("a* a is self-adjoint");
    match upsilon.sign {
        Sign::Positive | Sign::Zero => {}
        Sign::Negative => panic!(
            "norm gap is nonnegative for {alpha} but upsilon(a* a) is negative: {} - ({})",
            upsilon.target, upsilon.radical
        ),
        Sign::Undecided => {
            return Err(CertifyError::Unavailable {
                verdict: Box::new(verdict),
                reason: "sign of upsilon(a* a) undecided at the precision cap".to_string(),
            })
        }
    }
    let decomposition = match golden_decomposition(&sigma) {
        Ok(d) => d,
        Err(DecompositionError::IrrationalModulus(at)) => {
            return Err(CertifyError::Unavailable {
                verdict: Box::new(verdict),
                reason: format!("coefficient of a* a at {at} has irrational modulus"),
            })
        }
        Err(e) => panic!("golden decomposition of a* a failed after a nonnegative upsilon: {e}"),
    };
    debug_assert_eq!(reconstruct(alpha.spec(), &decomposition.upsilon_constant, &decomposition.factors), sigma);
    Ok(RegularityCertificate {
        element: alpha.clone(),
        torsion_free: verdict.torsion_free,
        verdict,
        sigma,
        upsilon_constant: decomposition.upsilon_constant,
        factors: decomposition.factors,
        chain: CHAIN.iter().map(|s| s.to_string()).collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyFailure {
    #[error("group {0} is not torsion-free")]
    HypothesisNotMet(String),
    #[error("element is zero")]
    ZeroElement,
    #[error("negative constant: upsilon_constant = {0}")]
    NegativeConstant(Rational),
    #[error("nonpositive weight {weight} on factor {index}")]
    NonPositiveWeight { index: usize, weight: Rational },
    #[error("factor {index} has invalid support or a non-unit identity coefficient")]
    BadFactor { index: usize },
    #[error("sigma mismatch: recorded sigma is not a* a")]
    SigmaMismatch,
    #[error("reconstruction mismatch: constant plus weighted factor squares differ from sigma")]
    ReconstructionMismatch,
    #[error("gap mismatch: {0}")]
    GapMismatch(String),
}

/// Re-checks a certificate from scratch.
pub fn verify_certificate(cert: &RegularityCertificate, precision_cap_bits: u32) -> Result<(), VerifyFailure> {
    let spec = cert.element.spec();
    if !spec.is_torsion_free() || !cert.torsion_free {
        return Err(VerifyFailure::HypothesisNotMet(spec.descriptor()));
    }
    if cert.element.is_zero() {
        return Err(VerifyFailure::ZeroElement);
    }
    if cert.upsilon_constant.is_negative() {
        return Err(VerifyFailure::NegativeConstant(cert.upsilon_constant.clone()));
    }
    for (index, f) in cert.factors.iter().enumerate() {
        if !f.weight.is_positive() {
            return Err(VerifyFailure::NonPositiveWeight { index, weight: f.weight.clone() });
        }
        let unit = f.unit_coeff.modulus_squared().is_one();
        if !spec.contains(&f.g) || spec.is_identity(&f.g) || !unit {
            return Err(VerifyFailure::BadFactor { index });
        }
    }
    let sigma = cert.element.adjoint().mul(&cert.element).map_err(|_| VerifyFailure::SigmaMismatch)?;
    if sigma != cert.sigma {
        return Err(VerifyFailure::SigmaMismatch);
    }
    if reconstruct(spec, &cert.upsilon_constant, &cert.factors) != sigma {
        return Err(VerifyFailure::ReconstructionMismatch);
    }
    let recorded = &cert.verdict;
    let fresh = criterion_check(&cert.element, precision_cap_bits);
    if recorded.outcome != Outcome::Regular {
        return Err(VerifyFailure::GapMismatch(format!("recorded verdict is {}", recorded.outcome)));
    }
    if recorded.two_norm2_squared() != fresh.two_norm2_squared() {
        return Err(VerifyFailure::GapMismatch("two_norm2_sq".to_string()));
    }
    if radical_sum_compare(&recorded.norm1, &fresh.norm1, precision_cap_bits) != Sign::Zero {
        return Err(VerifyFailure::GapMismatch("one_norm".to_string()));
    }
    if recorded.gap_sign != fresh.gap_sign || !fresh.gap_sign.is_nonnegative() {
        return Err(VerifyFailure::GapMismatch(format!("sign {}", fresh.gap_sign)));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GapDoc {
    pub two_norm2_sq: String,
    pub one_norm: RadicalSumDoc,
    pub sign: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorDoc {
    pub weight: String,
    pub g: String,
    pub unit_coeff: String,
}

/// Certificate JSON. All numbers are exact rational strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateDoc {
    pub element: String,
    pub group: String,
    pub verdict: String,
    pub gap: GapDoc,
    pub sigma: String,
    pub upsilon_constant: String,
    pub factors: Vec<FactorDoc>,
    pub chain: Vec<String>,
    pub schema_version: u32,
}

/// A document field that could not be interpreted; `pointer` is a JSON pointer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{pointer}: {message}")]
pub struct DocumentError {
    pub pointer: String,
    pub message: String,
}

fn field_error(pointer: impl Into<String>, message: impl ToString) -> DocumentError {
    DocumentError { pointer: pointer.into(), message: message.to_string() }
}

impl From<&RegularityCertificate> for CertificateDoc {
    fn from(cert: &RegularityCertificate) -> Self {
        let spec = cert.element.spec();
        CertificateDoc {
            element: cert.element.to_string(),
            group: spec.descriptor(),
            verdict: cert.verdict.outcome.as_str().to_string(),
            gap: GapDoc {
                two_norm2_sq: cert.verdict.two_norm2_squared().to_string(),
                one_norm: (&cert.verdict.norm1).into(),
                sign: cert.verdict.gap_sign.as_str().to_string(),
            },
            sigma: cert.sigma.to_string(),
            upsilon_constant: cert.upsilon_constant.to_string(),
            factors: cert
                .factors
                .iter()
                .map(|f| FactorDoc {
                    weight: f.weight.to_string(),
                    g: spec.format_element(&f.g),
                    unit_coeff: f.unit_coeff.to_string(),
                })
                .collect(),
            chain: cert.chain.clone(),
            schema_version: SCHEMA_VERSION,
        }
    }
}

fn parse_sign(s: &str) -> Option<Sign> {
    [Sign::Negative, Sign::Zero, Sign::Positive, Sign::Undecided].into_iter().find(|x| x.as_str() == s)
}

impl CertificateDoc {
    /// Parses JSON text; schema errors carry the JSON pointer of the offending field.
    pub fn from_json(text: &str) -> Result<Self, DocumentError> {
        let de = &mut serde_json::Deserializer::from_str(text);
        serde_path_to_error::deserialize(de).map_err(|e| {
            use serde_path_to_error::Segment;
            let pointer = e
                .path()
                .iter()
                .filter_map(|seg| match seg {
                    Segment::Seq { index } => Some(format!("/{index}")),
                    Segment::Map { key } => Some(format!("/{}", key.replace('~', "~0").replace('/', "~1"))),
                    Segment::Enum { variant } => Some(format!("/{variant}")),
                    Segment::Unknown => None,
                })
                .collect::<String>();
            field_error(pointer, e.into_inner())
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    /// Interprets every field. `cayley:PATH` groups are loaded from disk.
    pub fn to_certificate(&self) -> Result<RegularityCertificate, DocumentError> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(field_error("/schema_version", format!("unsupported version {}", self.schema_version)));
        }
        let spec = Arc::new(GroupSpec::parse(&self.group).map_err(|e| field_error("/group", e))?);
        let element = parse_element(&spec, &self.element).map_err(|e| field_error("/element", e))?;
        let sigma = parse_element(&spec, &self.sigma).map_err(|e| field_error("/sigma", e))?;
        let outcome = Outcome::parse(&self.verdict).ok_or_else(|| field_error("/verdict", "unknown verdict"))?;
        let two_norm2_sq =
            parse_rational(self.gap.two_norm2_sq.trim()).map_err(|e| field_error("/gap/two_norm2_sq", e))?;
        let norm1 = self.gap.one_norm.to_radical_sum().map_err(|e| field_error("/gap/one_norm", e))?;
        let gap_sign = parse_sign(&self.gap.sign).ok_or_else(|| field_error("/gap/sign", "unknown sign"))?;
        let upsilon_constant =
            parse_rational(self.upsilon_constant.trim()).map_err(|e| field_error("/upsilon_constant", e))?;
        let mut factors = Vec::with_capacity(self.factors.len());
        for (k, f) in self.factors.iter().enumerate() {
            let weight = parse_rational(f.weight.trim()).map_err(|e| field_error(format!("/factors/{k}/weight"), e))?;
            let g = parse_group_element(&spec, &f.g).map_err(|e| field_error(format!("/factors/{k}/g"), e))?;
            let unit_coeff: GaussianRational =
                f.unit_coeff.parse().map_err(|e| field_error(format!("/factors/{k}/unit_coeff"), e))?;
            factors.push(Factor { weight, g, unit_coeff });
        }
        let torsion_free = spec.is_torsion_free();
        let norm1_squared = element.norm1_squared();
        let verdict = Verdict {
            outcome,
            gap_sign,
            norm2_squared: two_norm2_sq / Rational::from_integer(2.into()),
            norm1,
            norm1_squared,
            torsion_free,
        };
        Ok(RegularityCertificate { element, verdict, sigma, upsilon_constant, factors, torsion_free, chain: self.chain.clone() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{int, DEFAULT_PRECISION_CAP};

    fn el(group: &str, text: &str) -> AlgebraElement {
        let spec = Arc::new(GroupSpec::parse(group).unwrap());
        parse_element(&spec, text).unwrap()
    }

    #[test]
    fn boundary_certificate() {
        let cert = certify_regular(&el("free:2", "4 + x + y"), DEFAULT_PRECISION_CAP).unwrap();
        assert_eq!(cert.upsilon_constant, int(0));
        assert_eq!(cert.factors.len(), 3);
        assert_eq!(cert.sigma, el("free:2", "18 + 4x + 4x^-1 + 4y + 4y^-1 + x^-1*y + y^-1*x"));
        assert_eq!(verify_certificate(&cert, DEFAULT_PRECISION_CAP), Ok(()));
    }

    #[test]
    fn binomial_certificate() {
        for group in ["free:1", "abelian:1"] {
            let cert = certify_regular(&el(group, "1 + x"), DEFAULT_PRECISION_CAP).unwrap();
            assert_eq!(cert.verdict.gap_sign, Sign::Zero);
            assert_eq!(verify_certificate(&cert, DEFAULT_PRECISION_CAP), Ok(()));
        }
    }

    #[test]
    fn inconclusive_has_no_certificate() {
        let err = certify_regular(&el("free:2", "1 + x + y"), DEFAULT_PRECISION_CAP).unwrap_err();
        assert!(matches!(err, CertifyError::NotRegular(v) if v.outcome == Outcome::Inconclusive));
    }

    #[test]
    fn irrational_sigma_is_unavailable() {
        // σ for (1+i) + x has coefficient (1-i) at x, of modulus √2.
        let err = certify_regular(&el("free:1", "(1+i) + x"), DEFAULT_PRECISION_CAP).unwrap_err();
        assert!(matches!(err, CertifyError::Unavailable { .. }));
    }

    #[test]
    fn tampering_is_detected() {
        let cert = certify_regular(&el("free:2", "4 + x + y"), DEFAULT_PRECISION_CAP).unwrap();

        let mut bad = cert.clone();
        bad.upsilon_constant = int(-1);
        assert_eq!(verify_certificate(&bad, 64), Err(VerifyFailure::NegativeConstant(int(-1))));

        let mut bad = cert.clone();
        bad.factors.pop();
        assert_eq!(verify_certificate(&bad, 64), Err(VerifyFailure::ReconstructionMismatch));

        let mut bad = cert.clone();
        bad.factors[0].weight = int(0);
        assert!(matches!(verify_certificate(&bad, 64), Err(VerifyFailure::NonPositiveWeight { index: 0, .. })));

        let mut bad = cert.clone();
        bad.factors[1].unit_coeff = GaussianRational::from_int(2);
        assert_eq!(verify_certificate(&bad, 64), Err(VerifyFailure::BadFactor { index: 1 }));

        let mut bad = cert.clone();
        bad.sigma = el("free:2", "18");
        assert_eq!(verify_certificate(&bad, 64), Err(VerifyFailure::SigmaMismatch));

        let mut bad = cert;
        bad.upsilon_constant = int(1);
        assert_eq!(verify_certificate(&bad, 64), Err(VerifyFailure::ReconstructionMismatch));
    }

    #[test]
    fn torsion_groups_never_verify() {
        // Hand-build a certificate over ℤ/2 for 1 - g, which is a zero divisor.
        let alpha = el("cyclic:2", "1 - g1");
        let sigma = alpha.adjoint().mul(&alpha).unwrap();
        let d = golden_decomposition(&sigma).unwrap();
        let mut verdict = criterion_check(&alpha, 64);
        verdict.outcome = Outcome::Regular;
        let cert = RegularityCertificate {
            element: alpha,
            verdict,
            sigma,
            upsilon_constant: d.upsilon_constant,
            factors: d.factors,
            torsion_free: true,
            chain: vec![],
        };
        assert!(matches!(verify_certificate(&cert, 64), Err(VerifyFailure::HypothesisNotMet(_))));
    }

    #[test]
    fn document_round_trip() {
        let cert = certify_regular(&el("free:2", "4 + x + y"), DEFAULT_PRECISION_CAP).unwrap();
        let doc = CertificateDoc::from(&cert);
        assert_eq!(doc.upsilon_constant, "0");
        let text = doc.to_json();
        let back = CertificateDoc::from_json(&text).unwrap();
        assert_eq!(back, doc);
        let parsed = back.to_certificate().unwrap();
        assert_eq!(verify_certificate(&parsed, DEFAULT_PRECISION_CAP), Ok(()));
        assert_eq!(parsed.factors, cert.factors);
    }

    #[test]
    fn document_errors_point_at_fields() {
        let cert = certify_regular(&el("free:2", "4 + x + y"), DEFAULT_PRECISION_CAP).unwrap();
        let text = CertificateDoc::from(&cert).to_json();

        let truncated = &text[..text.len() / 2];
        assert!(CertificateDoc::from_json(truncated).is_err());

        let wrong_type = text.replace("\"schema_version\": 1", "\"schema_version\": \"one\"");
        assert_eq!(CertificateDoc::from_json(&wrong_type).unwrap_err().pointer, "/schema_version");

        let mut doc = CertificateDoc::from(&cert);
        doc.factors[2].weight = "1/0".into();
        assert_eq!(doc.to_certificate().unwrap_err().pointer, "/factors/2/weight");

        let mut value: serde_json::Value = serde_json::from_str(&text).unwrap();
        value["factors"][1]["weight"] = serde_json::json!(4);
        let err = CertificateDoc::from_json(&value.to_string()).unwrap_err();
        assert_eq!(err.pointer, "/factors/1/weight");
    }
}
