use std::sync::Arc;

use num_traits::Signed;
use thiserror::Error;

use crate::algebra::AlgebraElement;
use crate::groups::{GroupElement, GroupSpec};
use crate::scalars::{rational_sqrt, GaussianRational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompositionError {
    #[error("element is not self-adjoint")]
    NotSelfAdjoint,
    #[error("element is not golden (Υ = {0})")]
    NotGolden(Rational),
    #[error("coefficient at {0} has irrational modulus")]
    IrrationalModulus(String),
}

/// One rank-one summand `weight · β*β` with `β = unit_coeff·1 + g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub weight: Rational,
    pub g: GroupElement,
    /// Identity coefficient of `β`, of modulus one.
    pub unit_coeff: GaussianRational,
}

impl Factor {
    /// `β = unit_coeff·1 + g`.
    pub fn beta(&self, spec: &Arc<GroupSpec>) -> AlgebraElement {
        AlgebraElement::from_terms(spec, [(spec.identity(), self.unit_coeff.clone()), (self.g.clone(), GaussianRational::one())])
            .expect("factor support lies in the group")
    }
}

/// `α = upsilon_constant·1 + Σ weight·β*β`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenDecomposition {
    pub upsilon_constant: Rational,
    pub factors: Vec<Factor>,
}

/// Re-expands a decomposition into a group-algebra element.
pub fn reconstruct(spec: &Arc<GroupSpec>, upsilon_constant: &Rational, factors: &[Factor]) -> AlgebraElement {
    let mut acc = AlgebraElement::scalar(spec, GaussianRational::real(upsilon_constant.clone()));
    for f in factors {
        let beta = f.beta(spec);
        let square = beta.adjoint().mul(&beta).expect("same group");
        acc = acc.add(&square.scale(&GaussianRational::real(f.weight.clone()))).expect("same group");
    }
    acc
}

/// Splits a golden element with rational-modulus coefficients.
///
/// Each pair `{g, g⁻¹}` in the support contributes `2|a_g| + a_g·g + conj(a_g)·g⁻¹`, which is
/// `|a_g|·β*β` for `β = conj(a_g)/|a_g| + g`. The pair is listed once, under the smaller of
/// `g` and `g⁻¹`. An involution `g = g⁻¹` has real `a_g` and gets weight `|a_g|/2`.
pub fn golden_decomposition(alpha: &AlgebraElement) -> Result<GoldenDecomposition, DecompositionError> {
    if !alpha.is_self_adjoint() {
        return Err(DecompositionError::NotSelfAdjoint);
    }
    let spec = alpha.spec();
    let identity = spec.identity();
    let mut moduli = Vec::new();
    for (g, c) in alpha.terms().filter(|(g, _)| **g != identity) {
        let m = rational_sqrt(&c.modulus_squared())
            .ok_or_else(|| DecompositionError::IrrationalModulus(spec.format_element(g)))?;
        moduli.push((g, c, m));
    }
    let upsilon_constant = moduli.iter().fold(alpha.identity_coeff().re, |acc, (_, _, m)| acc - m);
    if upsilon_constant.is_negative() {
        return Err(DecompositionError::NotGolden(upsilon_constant));
    }
    let two = Rational::from_integer(2.into());
    let factors = moduli
        .into_iter()
        .filter_map(|(g, c, m)| {
            let inverse = spec.inv_unchecked(g);
            if inverse < *g {
                return None;
            }
            let weight = if inverse == *g { &m / &two } else { m.clone() };
            let unit_coeff = c.conj().scale(&m.recip());
            Some(Factor { weight, g: g.clone(), unit_coeff })
        })
        .collect();
    Ok(GoldenDecomposition { upsilon_constant, factors })
}
