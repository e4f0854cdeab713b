use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;

use super::AlgebraError;
use crate::groups::{GroupElement, GroupSpec};
use crate::scalars::{radical_sum_sign, GaussianRational, RadicalSum, Rational, Sign};

/// Finitely supported map from group elements to Gaussian rationals, i.e. an element of
/// the group algebra ℚ(i)G ⊂ ℂG. Zero coefficients are never stored.
#[derive(Clone, Debug)]
pub struct AlgebraElement {
    spec: Arc<GroupSpec>,
    coeffs: BTreeMap<GroupElement, GaussianRational>,
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        same_spec(&self.spec, &other.spec) && self.coeffs == other.coeffs
    }
}

impl Eq for AlgebraElement {}

fn same_spec(a: &Arc<GroupSpec>, b: &Arc<GroupSpec>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// Υ split into its rational part and the radical sum being subtracted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Upsilon {
    /// Real part of the identity coefficient.
    pub target: Rational,
    /// `Σ_{g≠1} |a_g|`.
    pub radical: RadicalSum,
    /// Sign of `target − radical`.
    pub sign: Sign,
}

impl Upsilon {
    /// Golden means Υ ≥ 0.
    pub fn is_golden(&self) -> Option<bool> {
        match self.sign {
            Sign::Undecided => None,
            s => Some(s.is_nonnegative()),
        }
    }

    /// Υ as an exact rational, when every modulus is rational.
    pub fn exact_value(&self) -> Option<Rational> {
        self.radical.as_rational().map(|r| &self.target - r)
    }
}

impl AlgebraElement {
    pub fn zero(spec: &Arc<GroupSpec>) -> Self {
        AlgebraElement { spec: spec.clone(), coeffs: BTreeMap::new() }
    }

    pub fn scalar(spec: &Arc<GroupSpec>, c: GaussianRational) -> Self {
        Self::monomial(spec, c, spec.identity()).expect("identity belongs to every group")
    }

    pub fn one(spec: &Arc<GroupSpec>) -> Self {
        Self::scalar(spec, GaussianRational::one())
    }

    pub fn monomial(spec: &Arc<GroupSpec>, c: GaussianRational, g: GroupElement) -> Result<Self, AlgebraError> {
        Self::from_terms(spec, [(g, c)])
    }

    /// Sums the given terms; repeated group elements accumulate.
    pub fn from_terms(
        spec: &Arc<GroupSpec>,
        terms: impl IntoIterator<Item = (GroupElement, GaussianRational)>,
    ) -> Result<Self, AlgebraError> {
        let mut out = Self::zero(spec);
        for (g, c) in terms {
            if !spec.contains(&g) {
                return Err(AlgebraError::NotInGroup(spec.descriptor()));
            }
            out.accumulate(g, &c);
        }
        Ok(out)
    }

    fn accumulate(&mut self, g: GroupElement, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(g) {
            Entry::Vacant(slot) => {
                slot.insert(c.clone());
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn spec(&self) -> &Arc<GroupSpec> {
        &self.spec
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Size of the support.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, g: &GroupElement) -> GaussianRational {
        self.coeffs.get(g).cloned().unwrap_or_default()
    }

    pub fn identity_coeff(&self) -> GaussianRational {
        self.coeff(&self.spec.identity())
    }

    /// Nonzero terms in normal-form order.
    pub fn terms(&self) -> impl Iterator<Item = (&GroupElement, &GaussianRational)> {
        self.coeffs.iter()
    }

    pub fn support(&self) -> Vec<GroupElement> {
        self.coeffs.keys().cloned().collect()
    }

    fn ensure_same(&self, other: &Self) -> Result<(), AlgebraError> {
        if same_spec(&self.spec, &other.spec) {
            Ok(())
        } else {
            Err(AlgebraError::SpecMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.ensure_same(other)?;
        let mut out = self.clone();
        for (g, c) in &other.coeffs {
            out.accumulate(g.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| -c)
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        self.map_coeffs(|a| c * a)
    }

    fn map_coeffs(&self, f: impl Fn(&GaussianRational) -> GaussianRational) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(g, a)| (g.clone(), f(a)))
            .filter(|(_, a)| !a.is_zero())
            .collect();
        AlgebraElement { spec: self.spec.clone(), coeffs }
    }

    /// Convolution product: `a_g·b_h` accumulates at `gh` for every pair of support elements.
    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.ensure_same(other)?;
        let mut out = Self::zero(&self.spec);
        for (g, a) in &self.coeffs {
            for (h, b) in &other.coeffs {
                out.accumulate(self.spec.mul_unchecked(g, h), &(a * b));
            }
        }
        Ok(out)
    }

    /// `α* = Σ conj(a_g)·g⁻¹`.
    pub fn adjoint(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(g, a)| (self.spec.inv_unchecked(g), a.conj()))
            .collect();
        AlgebraElement { spec: self.spec.clone(), coeffs }
    }

    pub fn is_self_adjoint(&self) -> bool {
        self.coeffs
            .iter()
            .all(|(g, a)| self.coeffs.get(&self.spec.inv_unchecked(g)) == Some(&a.conj()))
    }

    /// `‖α‖₂² = Σ |a_g|²`.
    pub fn norm2_squared(&self) -> Rational {
        self.coeffs.values().map(GaussianRational::modulus_squared).sum()
    }

    /// `‖α‖₁ = Σ |a_g|`.
    pub fn norm1(&self) -> RadicalSum {
        let mut out = RadicalSum::zero();
        for c in self.coeffs.values() {
            out.push_term(Rational::from_integer(1.into()), &c.modulus_squared());
        }
        out
    }

    /// `‖α‖₁²` expanded as `Σ|a_g|² + 2·Σ_{g<h} √(|a_g|²·|a_h|²)`.
    pub fn norm1_squared(&self) -> RadicalSum {
        let moduli: Vec<Rational> = self.coeffs.values().map(GaussianRational::modulus_squared).collect();
        let mut out = RadicalSum::from_rational(moduli.iter().sum());
        let two = Rational::from_integer(2.into());
        for (k, a) in moduli.iter().enumerate() {
            for b in &moduli[k + 1..] {
                out.push_term(two.clone(), &(a * b));
            }
        }
        out
    }

    /// `⟨α, β⟩ = Σ a_g·conj(b_g)`.
    pub fn inner_product(&self, other: &Self) -> Result<GaussianRational, AlgebraError> {
        self.ensure_same(other)?;
        let mut acc = GaussianRational::zero();
        for (g, a) in &self.coeffs {
            if let Some(b) = other.coeffs.get(g) {
                acc += &(a * &b.conj());
            }
        }
        Ok(acc)
    }

    /// `Υ(α) = a_1 − Σ_{g≠1} |a_g|`, defined on self-adjoint elements only.
    pub fn upsilon(&self, precision_cap_bits: u32) -> Result<Upsilon, AlgebraError> {
        if !self.is_self_adjoint() {
            return Err(AlgebraError::NotSelfAdjoint);
        }
        let identity = self.spec.identity();
        let target = self.identity_coeff().re;
        let mut radical = RadicalSum::zero();
        for (g, c) in &self.coeffs {
            if *g != identity {
                radical.push_term(Rational::from_integer(1.into()), &c.modulus_squared());
            }
        }
        let sign = if self.is_zero() {
            Sign::Zero
        } else {
            radical_sum_sign(&target, &radical, precision_cap_bits)
        };
        debug_assert!(self.identity_coeff().im.is_zero());
        Ok(Upsilon { target, radical, sign })
    }

    /// Coefficient vector indexed by table position (finite backends only).
    pub fn to_dense(&self) -> Option<Vec<GaussianRational>> {
        let GroupSpec::Finite(t) = &*self.spec else {
            return None;
        };
        let mut v = vec![GaussianRational::zero(); t.order()];
        for (g, c) in &self.coeffs {
            if let GroupElement::Index(k) = g {
                v[*k] = c.clone();
            }
        }
        Some(v)
    }

    /// Inverse of [`to_dense`](Self::to_dense).
    pub fn from_dense(spec: &Arc<GroupSpec>, values: &[GaussianRational]) -> Result<Self, AlgebraError> {
        Self::from_terms(
            spec,
            values
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (GroupElement::Index(k), c.clone())),
        )
    }

    pub fn is_real_rational_scalar(&self) -> bool {
        self.coeffs.len() <= 1
            && self.coeffs.iter().all(|(g, c)| self.spec.is_identity(g) && c.im.is_zero())
    }
}
