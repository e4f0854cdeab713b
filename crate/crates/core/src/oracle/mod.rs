//! Independent ground truth on small instances.
//!
//! On a finite group, left multiplication by `α` is a linear map on the full group algebra,
//! so `α` is a zero divisor exactly when that matrix is singular. Kernel vectors come from
//! exact elimination and are re-checked by convolution before being returned. For free
//! abelian groups the group algebra is a Laurent polynomial ring, which has no zero
//! divisors.

mod elimination;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::AlgebraElement;
use crate::groups::{GroupElement, GroupSpec};
use crate::scalars::GaussianRational;

pub use elimination::{nullspace, rank};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("the kernel oracle needs a finite group given by a Cayley table")]
    NotFinite,
    #[error("the Laurent oracle needs a free abelian group")]
    NotFreeAbelian,
    #[error("the oracle needs a nonzero element")]
    ZeroElement,
}

/// Matrix of `β ↦ αβ` in the basis of group elements: `M[h][x] = a_{h·x⁻¹}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftMulMatrix {
    pub n: usize,
    pub entries: Vec<Vec<GaussianRational>>,
}

impl LeftMulMatrix {
    pub fn apply(&self, v: &[GaussianRational]) -> Vec<GaussianRational> {
        assert_eq!(v.len(), self.n, "vector length must match the group order");
        self.entries
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(GaussianRational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }
}

/// A nonzero `β` with `αβ = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelWitness {
    pub beta: AlgebraElement,
    /// Set once `αβ = 0` has been confirmed by convolution.
    pub product_checked: bool,
}

pub fn left_mul_matrix(alpha: &AlgebraElement) -> Result<LeftMulMatrix, OracleError> {
    let GroupSpec::Finite(table) = &**alpha.spec() else {
        return Err(OracleError::NotFinite);
    };
    let n = table.order();
    let entries: Vec<Vec<GaussianRational>> = (0..n)
        .map(|h| {
            (0..n)
                .map(|x| alpha.coeff(&GroupElement::Index(table.product(h, table.inverse(x)))))
                .collect()
        })
        .collect();
    let matrix = LeftMulMatrix { n, entries };
    debug_assert!(spot_check(alpha, &matrix));
    Ok(matrix)
}

/// Compares the matrix against convolution on up to ten unit vectors spread over the group.
fn spot_check(alpha: &AlgebraElement, matrix: &LeftMulMatrix) -> bool {
    let n = matrix.n;
    let step = n.div_ceil(10).max(1);
    (0..n).step_by(step).all(|k| {
        let mut unit = vec![GaussianRational::zero(); n];
        unit[k] = GaussianRational::one();
        let beta = AlgebraElement::from_dense(alpha.spec(), &unit).expect("index in range");
        let product = alpha.mul(&beta).expect("same group");
        product.to_dense().expect("finite group") == matrix.apply(&unit)
    })
}

/// Nullspace basis of the matrix; empty iff it is nonsingular.
pub fn kernel_basis(matrix: &LeftMulMatrix) -> Vec<Vec<GaussianRational>> {
    nullspace(&matrix.entries, matrix.n)
}

pub fn kernel_dimension(alpha: &AlgebraElement) -> Result<usize, OracleError> {
    let m = left_mul_matrix(alpha)?;
    Ok(m.n - rank(&m.entries, m.n))
}

/// First kernel basis vector as an element `β` with `αβ = 0`, or `None` when `α` is regular.
pub fn find_zero_divisor_partner(alpha: &AlgebraElement) -> Result<Option<KernelWitness>, OracleError> {
    if alpha.is_zero() {
        return Err(OracleError::ZeroElement);
    }
    let matrix = left_mul_matrix(alpha)?;
    let Some(first) = kernel_basis(&matrix).into_iter().next() else {
        return Ok(None);
    };
    let beta = AlgebraElement::from_dense(alpha.spec(), &first).expect("index in range");
    let product = alpha.mul(&beta).expect("same group");
    assert!(product.is_zero(), "kernel vector failed the convolution re-check");
    Ok(Some(KernelWitness { beta, product_checked: true }))
}

/// Whether `α` and `α*α` are singular together.
pub fn check_star_reduction(alpha: &AlgebraElement) -> Result<bool, OracleError> {
    if alpha.is_zero() {
        return Err(OracleError::ZeroElement);
    }
    let sigma = alpha.adjoint().mul(alpha).expect("same group");
    let singular_alpha = kernel_dimension(alpha)? > 0;
    let singular_sigma = kernel_dimension(&sigma)? > 0;
    Ok(singular_alpha == singular_sigma)
}

/// Regularity in a Laurent polynomial ring: every nonzero element is regular.
pub fn laurent_regular(alpha: &AlgebraElement) -> Result<bool, OracleError> {
    match &**alpha.spec() {
        GroupSpec::FreeAbelian { .. } => Ok(!alpha.is_zero()),
        _ => Err(OracleError::NotFreeAbelian),
    }
}

/// Oracle outcome in the form embedded into CLI output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum OracleReport {
    FiniteKernel {
        kernel_dimension: usize,
        witness: Option<String>,
        product_checked: bool,
    },
    LaurentDomain {
        regular: bool,
    },
    Unavailable {
        reason: String,
    },
}

pub fn run_oracle(alpha: &AlgebraElement) -> OracleReport {
    match &**alpha.spec() {
        GroupSpec::Finite(_) if alpha.is_zero() => OracleReport::FiniteKernel {
            kernel_dimension: alpha.spec().rank(),
            witness: None,
            product_checked: false,
        },
        GroupSpec::Finite(_) => {
            let dim = kernel_dimension(alpha).expect("finite group");
            let witness = find_zero_divisor_partner(alpha).expect("finite group, nonzero");
            OracleReport::FiniteKernel {
                kernel_dimension: dim,
                product_checked: witness.as_ref().is_some_and(|w| w.product_checked),
                witness: witness.map(|w| w.beta.to_string()),
            }
        }
        GroupSpec::FreeAbelian { .. } => OracleReport::LaurentDomain {
            regular: laurent_regular(alpha).expect("free abelian group"),
        },
        GroupSpec::Free { .. } => OracleReport::Unavailable {
            reason: "no finite oracle for free groups".to_string(),
        },
    }
}
