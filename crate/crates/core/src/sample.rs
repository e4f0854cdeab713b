//! Random elements for tests and experiments.

use std::sync::Arc;

use num_traits::Signed;
use rand::Rng;

use crate::algebra::AlgebraElement;
use crate::groups::{GroupElement, GroupSpec, Letter};
use crate::scalars::{rational, GaussianRational, Rational};

/// Bounds for random coefficients and group elements.
#[derive(Clone, Debug)]
pub struct SampleConfig {
    /// Maximum number of support terms (before cancellation).
    pub max_terms: usize,
    /// Numerators are drawn from `-max_numerator..=max_numerator`.
    pub max_numerator: i64,
    /// Denominators are drawn from `1..=max_denominator`.
    pub max_denominator: i64,
    /// Whether coefficients may have an imaginary part.
    pub complex: bool,
    /// Maximum free-group word length or absolute exponent.
    pub max_length: usize,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig { max_terms: 5, max_numerator: 6, max_denominator: 4, complex: true, max_length: 3 }
    }
}

pub fn random_rational<R: Rng + ?Sized>(rng: &mut R, cfg: &SampleConfig) -> Rational {
    rational(rng.gen_range(-cfg.max_numerator..=cfg.max_numerator), rng.gen_range(1..=cfg.max_denominator))
}

pub fn random_nonzero_rational<R: Rng + ?Sized>(rng: &mut R, cfg: &SampleConfig) -> Rational {
    loop {
        let q = random_rational(rng, cfg);
        if q != rational(0, 1) {
            return q;
        }
    }
}

pub fn random_coefficient<R: Rng + ?Sized>(rng: &mut R, cfg: &SampleConfig) -> GaussianRational {
    let re = random_rational(rng, cfg);
    let im = if cfg.complex && rng.gen_bool(0.5) { random_rational(rng, cfg) } else { rational(0, 1) };
    GaussianRational::new(re, im)
}

pub fn random_nonzero_coefficient<R: Rng + ?Sized>(rng: &mut R, cfg: &SampleConfig) -> GaussianRational {
    loop {
        let c = random_coefficient(rng, cfg);
        if !c.is_zero() {
            return c;
        }
    }
}

/// A uniformly drawn group element of bounded size.
pub fn random_group_element<R: Rng + ?Sized>(rng: &mut R, spec: &GroupSpec, cfg: &SampleConfig) -> GroupElement {
    match spec {
        GroupSpec::Free { rank } => {
            let len = rng.gen_range(0..=cfg.max_length);
            let letters = (0..len).map(|_| {
                let generator = rng.gen_range(0..*rank as u32);
                Letter::new(generator, if rng.gen_bool(0.5) { 1 } else { -1 })
            });
            letters.fold(spec.identity(), |acc, l| {
                let g = if l.exponent() > 0 {
                    spec.generator(l.generator as usize).expect("generator in range")
                } else {
                    spec.inv(&spec.generator(l.generator as usize).expect("generator in range")).expect("in group")
                };
                spec.mul(&acc, &g).expect("in group")
            })
        }
        GroupSpec::FreeAbelian { rank } => {
            let bound = cfg.max_length as i64;
            GroupElement::Exponents((0..*rank).map(|_| rng.gen_range(-bound..=bound)).collect())
        }
        GroupSpec::Finite(table) => GroupElement::Index(rng.gen_range(0..table.order())),
    }
}

pub fn random_non_identity<R: Rng + ?Sized>(rng: &mut R, spec: &GroupSpec, cfg: &SampleConfig) -> GroupElement {
    loop {
        let g = random_group_element(rng, spec, cfg);
        if !spec.is_identity(&g) {
            return g;
        }
    }
}

/// A random element with up to `cfg.max_terms` terms; may be zero.
pub fn random_element<R: Rng + ?Sized>(rng: &mut R, spec: &Arc<GroupSpec>, cfg: &SampleConfig) -> AlgebraElement {
    let terms = rng.gen_range(1..=cfg.max_terms.max(1));
    let pairs: Vec<_> =
        (0..terms).map(|_| (random_group_element(rng, spec, cfg), random_coefficient(rng, cfg))).collect();
    AlgebraElement::from_terms(spec, pairs).expect("sampled elements lie in the group")
}

pub fn random_nonzero_element<R: Rng + ?Sized>(rng: &mut R, spec: &Arc<GroupSpec>, cfg: &SampleConfig) -> AlgebraElement {
    loop {
        let a = random_element(rng, spec, cfg);
        if !a.is_zero() {
            return a;
        }
    }
}

/// `a + b·g` with `a, b` nonzero and `g ≠ 1`.
pub fn random_binomial<R: Rng + ?Sized>(rng: &mut R, spec: &Arc<GroupSpec>, cfg: &SampleConfig) -> AlgebraElement {
    let a = random_nonzero_coefficient(rng, cfg);
    let b = random_nonzero_coefficient(rng, cfg);
    let g = random_non_identity(rng, spec, cfg);
    AlgebraElement::from_terms(spec, [(spec.identity(), a), (g, b)]).expect("in group")
}

/// Unit-modulus Gaussian rationals from Pythagorean triples.
const UNITS: [(i64, i64, i64); 8] =
    [(1, 0, 1), (0, 1, 1), (-1, 0, 1), (0, -1, 1), (3, 4, 5), (4, -3, 5), (-5, 12, 13), (8, 15, 17)];

/// A self-adjoint element with `Υ ≥ 0` and rational-modulus coefficients.
pub fn random_golden_element<R: Rng + ?Sized>(rng: &mut R, spec: &Arc<GroupSpec>, cfg: &SampleConfig) -> AlgebraElement {
    let pairs = rng.gen_range(0..=cfg.max_terms.max(1));
    let mut acc = AlgebraElement::zero(spec);
    for _ in 0..pairs {
        let g = random_non_identity(rng, spec, cfg);
        let g_inv = spec.inv(&g).expect("in group");
        // Merging with an existing pair could leave a coefficient of irrational modulus.
        if !acc.coeff(&g).is_zero() || !acc.coeff(&g_inv).is_zero() {
            continue;
        }
        let modulus = random_nonzero_rational(rng, cfg).abs();
        let (x, y, z) = UNITS[rng.gen_range(0..UNITS.len())];
        let unit = GaussianRational::new(rational(x, z), rational(y, z));
        let coeff = unit.scale(&modulus);
        let term = AlgebraElement::monomial(spec, coeff, g).expect("in group");
        acc = acc.add(&term).expect("same group").add(&term.adjoint()).expect("same group");
    }
    let upsilon = acc.upsilon(64).expect("self-adjoint").exact_value().expect("rational moduli");
    let slack = random_rational(rng, cfg).abs();
    let shift = GaussianRational::real(-upsilon + slack);
    acc.add(&AlgebraElement::scalar(spec, shift)).expect("same group")
}
