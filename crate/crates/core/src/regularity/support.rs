//! The subgroup generated by a support, and restriction to it.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::algebra::AlgebraElement;
use crate::groups::{GroupElement, GroupSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SupportError {
    #[error("the zero element has empty support")]
    ZeroElement,
    #[error("lattice restriction needs a free abelian group")]
    NotFreeAbelian,
    #[error("vector is not in the lattice spanned by the basis")]
    NotInLattice,
    #[error("lattice entry does not fit in 64 bits")]
    Overflow,
}

/// Support generators and, over `ℤⁿ`, a canonical basis of the lattice they span.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubgroupReport {
    pub generators: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lattice_basis: Option<Vec<Vec<i64>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
}

fn to_big(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
}

fn sub_multiple(rows: &mut [Vec<BigInt>], target: usize, source: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    for k in 0..rows[target].len() {
        let delta = &rows[source][k] * q;
        rows[target][k] -= delta;
    }
}

/// Row-style Hermite normal form `H` together with a unimodular `U` such that `U·A = H`.
///
/// `H` has as many rows as `A`; zero rows come last. Pivots are positive and entries above a
/// pivot lie in `[0, pivot)`.
pub fn hermite_normal_form_with_transform(rows: &[Vec<i64>]) -> (Vec<Vec<BigInt>>, Vec<Vec<BigInt>>) {
    let m = rows.len();
    let n = rows.first().map_or(0, Vec::len);
    assert!(rows.iter().all(|r| r.len() == n), "rows must have equal length");
    let mut h = to_big(rows);
    let mut u: Vec<Vec<BigInt>> =
        (0..m).map(|i| (0..m).map(|j| BigInt::from(u8::from(i == j))).collect()).collect();
    let mut pivot_row = 0;
    for col in 0..n {
        if pivot_row == m {
            break;
        }
        // Euclid on column `col` below the pivot row until one nonzero entry remains.
        loop {
            let smallest = (pivot_row..m)
                .filter(|&r| !h[r][col].is_zero())
                .min_by(|&a, &b| h[a][col].abs().cmp(&h[b][col].abs()));
            let Some(s) = smallest else { break };
            h.swap(pivot_row, s);
            u.swap(pivot_row, s);
            let mut done = true;
            for r in pivot_row + 1..m {
                if h[r][col].is_zero() {
                    continue;
                }
                let q = h[r][col].div_floor(&h[pivot_row][col]);
                sub_multiple(&mut h, r, pivot_row, &q);
                sub_multiple(&mut u, r, pivot_row, &q);
                done &= h[r][col].is_zero();
            }
            if done {
                break;
            }
        }
        if h[pivot_row][col].is_zero() {
            continue;
        }
        if h[pivot_row][col].is_negative() {
            h[pivot_row].iter_mut().for_each(|v| *v = -&*v);
            u[pivot_row].iter_mut().for_each(|v| *v = -&*v);
        }
        for r in 0..pivot_row {
            let q = h[r][col].div_floor(&h[pivot_row][col]);
            sub_multiple(&mut h, r, pivot_row, &q);
            sub_multiple(&mut u, r, pivot_row, &q);
        }
        pivot_row += 1;
    }
    (h, u)
}

/// Nonzero rows of the Hermite normal form of `rows`.
pub fn hermite_normal_form(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    let (h, _) = hermite_normal_form_with_transform(rows);
    h.into_iter().filter(|r| r.iter().any(|v| !v.is_zero())).collect()
}

/// Integer coordinates of `v` over an echelon `basis` (as returned by [`hermite_normal_form`]).
pub fn coordinates(basis: &[Vec<BigInt>], v: &[i64]) -> Result<Vec<i64>, SupportError> {
    let mut rest: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
    let mut out = Vec::with_capacity(basis.len());
    for row in basis {
        let col = row.iter().position(|x| !x.is_zero()).expect("basis rows are nonzero");
        let (q, r) = rest[col].div_rem(&row[col]);
        if !r.is_zero() {
            return Err(SupportError::NotInLattice);
        }
        for (k, x) in row.iter().enumerate() {
            rest[k] -= x * &q;
        }
        out.push(q.to_i64().ok_or(SupportError::Overflow)?);
    }
    if rest.iter().any(|x| !x.is_zero()) {
        return Err(SupportError::NotInLattice);
    }
    Ok(out)
}

pub fn support_subgroup(alpha: &AlgebraElement) -> Result<SubgroupReport, SupportError> {
    if alpha.is_zero() {
        return Err(SupportError::ZeroElement);
    }
    let spec = alpha.spec();
    let generators = alpha.support().iter().map(|g| spec.format_element(g)).collect();
    let (lattice_basis, rank) = match &**spec {
        GroupSpec::FreeAbelian { .. } => {
            let basis = hermite_normal_form(&exponent_rows(alpha));
            let small = basis
                .iter()
                .map(|r| r.iter().map(|v| v.to_i64().ok_or(SupportError::Overflow)).collect())
                .collect::<Result<Vec<Vec<i64>>, _>>()?;
            let rank = small.len();
            (Some(small), Some(rank))
        }
        _ => (None, None),
    };
    Ok(SubgroupReport { generators, lattice_basis, rank })
}

fn exponent_rows(alpha: &AlgebraElement) -> Vec<Vec<i64>> {
    alpha
        .terms()
        .map(|(g, _)| match g {
            GroupElement::Exponents(v) => v.clone(),
            _ => unreachable!("free abelian support"),
        })
        .collect()
}

/// Rewrites `α ∈ ℂℤⁿ` in coordinates of the Hermite basis of its support lattice.
///
/// The result lives over `ℤʳ` with `r` the lattice rank (at least 1, so that scalars still
/// have a home).
pub fn restrict_to_lattice(alpha: &AlgebraElement) -> Result<AlgebraElement, SupportError> {
    if !matches!(&**alpha.spec(), GroupSpec::FreeAbelian { .. }) {
        return Err(SupportError::NotFreeAbelian);
    }
    if alpha.is_zero() {
        return Err(SupportError::ZeroElement);
    }
    let basis = hermite_normal_form(&exponent_rows(alpha));
    let rank = basis.len();
    let target = Arc::new(GroupSpec::free_abelian(rank.max(1)).expect("positive rank"));
    let mut terms = Vec::with_capacity(alpha.len());
    for (g, c) in alpha.terms() {
        let GroupElement::Exponents(v) = g else { unreachable!("free abelian support") };
        let mut coords = coordinates(&basis, v)?;
        coords.resize(rank.max(1), 0);
        terms.push((GroupElement::Exponents(coords), c.clone()));
    }
    Ok(AlgebraElement::from_terms(&target, terms).expect("coordinates have the target rank"))
}
