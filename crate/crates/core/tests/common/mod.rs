#![allow(dead_code)]

use std::sync::Arc;

use groupring::groups::{validate_cayley, GroupElement, GroupSpec};
use groupring::scalars::{rational, GaussianRational, Rational};
use groupring::AlgebraElement;
use proptest::prelude::*;

/// Symmetric group on three points, elements indexed in lexicographic permutation order.
pub fn s3() -> GroupSpec {
    let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
    let table: Vec<Vec<usize>> = perms
        .iter()
        .map(|a| perms.iter().map(|b| index([a[b[0]], a[b[1]], a[b[2]]])).collect())
        .collect();
    GroupSpec::Finite(validate_cayley(&table, 0).unwrap().with_label("s3"))
}

pub fn backends() -> Vec<Arc<GroupSpec>> {
    vec![
        Arc::new(GroupSpec::free(2).unwrap()),
        Arc::new(GroupSpec::free_abelian(2).unwrap()),
        Arc::new(GroupSpec::cyclic(6).unwrap()),
        Arc::new(s3()),
    ]
}

pub fn torsion_free_backends() -> Vec<Arc<GroupSpec>> {
    vec![
        Arc::new(GroupSpec::free(1).unwrap()),
        Arc::new(GroupSpec::free(2).unwrap()),
        Arc::new(GroupSpec::free(3).unwrap()),
        Arc::new(GroupSpec::free_abelian(1).unwrap()),
        Arc::new(GroupSpec::free_abelian(3).unwrap()),
    ]
}

pub fn backend() -> impl Strategy<Value = Arc<GroupSpec>> {
    prop::sample::select(backends())
}

pub fn rat() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| rational(n, d))
}

pub fn nonzero_rat() -> impl Strategy<Value = Rational> {
    rat().prop_filter("nonzero", |q| *q != rational(0, 1))
}

pub fn gaussian() -> impl Strategy<Value = GaussianRational> {
    prop_oneof![
        rat().prop_map(GaussianRational::real),
        (rat(), rat()).prop_map(|(a, b)| GaussianRational::new(a, b)),
    ]
}

pub fn nonzero_gaussian() -> impl Strategy<Value = GaussianRational> {
    gaussian().prop_filter("nonzero", |z| !z.is_zero())
}

pub fn group_element(spec: Arc<GroupSpec>) -> BoxedStrategy<GroupElement> {
    match &*spec {
        GroupSpec::Free { rank } => {
            let rank = *rank;
            prop::collection::vec((0..rank, any::<bool>()), 0..5)
                .prop_map(move |letters| {
                    letters.into_iter().fold(spec.identity(), |acc, (k, inv)| {
                        let g = spec.generator(k).unwrap();
                        let g = if inv { spec.inv(&g).unwrap() } else { g };
                        spec.mul(&acc, &g).unwrap()
                    })
                })
                .boxed()
        }
        GroupSpec::FreeAbelian { rank } => {
            prop::collection::vec(-3i64..=3, *rank).prop_map(GroupElement::Exponents).boxed()
        }
        GroupSpec::Finite(table) => (0..table.order()).prop_map(GroupElement::Index).boxed(),
    }
}

pub fn non_identity(spec: Arc<GroupSpec>) -> BoxedStrategy<GroupElement> {
    let s = spec.clone();
    group_element(spec).prop_filter("non-identity", move |g| !s.is_identity(g)).boxed()
}

pub fn element(spec: Arc<GroupSpec>, max_terms: usize) -> BoxedStrategy<AlgebraElement> {
    prop::collection::vec((group_element(spec.clone()), gaussian()), 0..=max_terms)
        .prop_map(move |terms| AlgebraElement::from_terms(&spec, terms).unwrap())
        .boxed()
}

pub fn nonzero_element(spec: Arc<GroupSpec>, max_terms: usize) -> BoxedStrategy<AlgebraElement> {
    element(spec, max_terms).prop_filter("nonzero", |a| !a.is_zero()).boxed()
}

pub fn with_element(max_terms: usize) -> impl Strategy<Value = AlgebraElement> {
    backend().prop_flat_map(move |spec| element(spec, max_terms))
}

pub fn with_elements(count: usize, max_terms: usize) -> impl Strategy<Value = Vec<AlgebraElement>> {
    backend().prop_flat_map(move |spec| prop::collection::vec(element(spec, max_terms), count))
}

const UNITS: [(i64, i64, i64); 6] = [(1, 0, 1), (0, 1, 1), (-1, 0, 1), (3, 4, 5), (4, -3, 5), (-5, 12, 13)];

/// Self-adjoint, `Υ ≥ 0`, every coefficient of rational modulus.
pub fn golden_element(spec: Arc<GroupSpec>) -> BoxedStrategy<AlgebraElement> {
    let pair = (non_identity(spec.clone()), 0..UNITS.len(), (1i64..=12, 1i64..=4));
    (prop::collection::vec(pair, 0..5), (0i64..=6, 1i64..=4))
        .prop_map(move |(pairs, (sn, sd))| {
            let mut acc = AlgebraElement::zero(&spec);
            for (g, u, (n, d)) in pairs {
                let g_inv = spec.inv(&g).unwrap();
                if !acc.coeff(&g).is_zero() || !acc.coeff(&g_inv).is_zero() {
                    continue;
                }
                let (x, y, z) = UNITS[u];
                let c = GaussianRational::new(rational(x * n, z * d), rational(y * n, z * d));
                let term = AlgebraElement::monomial(&spec, c, g).unwrap();
                acc = acc.add(&term).unwrap().add(&term.adjoint()).unwrap();
            }
            let upsilon = acc.upsilon(64).unwrap().exact_value().unwrap();
            let shift = GaussianRational::real(rational(sn, sd) - upsilon);
            acc.add(&AlgebraElement::scalar(&spec, shift)).unwrap()
        })
        .boxed()
}
