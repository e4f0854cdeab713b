//! Group backends with canonical normal forms.
//!
//! Three backends are supported: finitely generated free groups (freely reduced words),
//! free abelian groups (exponent vectors) and finite groups given by a validated Cayley
//! table. Torsion-freeness is derived from the backend and cannot be asserted by callers.

mod cayley;

use std::cmp::Ordering;
use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use thiserror::Error;

pub use cayley::{cyclic_table, validate_cayley, CayleyFile, CayleyTable, CayleyViolation, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("element does not belong to group {0}")]
    NotInGroup(String),
    #[error("rank must be positive")]
    ZeroRank,
    #[error("group order {0} is out of range 1..={MAX_ORDER}")]
    OrderOutOfRange(usize),
    #[error("invalid Cayley table: {0}")]
    Cayley(CayleyViolation),
    #[error("invalid Cayley file: {0}")]
    CayleyFile(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("invalid group spec {0:?}: expected free:N, abelian:N, cyclic:N or cayley:PATH")]
    BadDescriptor(String),
}

/// One letter `x_k^{±1}` of a free-group word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: u32,
    pub inverted: bool,
}

impl Letter {
    pub fn new(generator: u32, exponent: i8) -> Self {
        assert!(exponent == 1 || exponent == -1, "letter exponent must be ±1");
        Letter { generator, inverted: exponent < 0 }
    }

    pub fn exponent(self) -> i8 {
        if self.inverted {
            -1
        } else {
            1
        }
    }

    pub fn inverse(self) -> Self {
        Letter { generator: self.generator, inverted: !self.inverted }
    }
}

/// Normal-form group element. The representation depends on the backend.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupElement {
    /// Freely reduced word.
    Word(Vec<Letter>),
    /// Exponent vector in ℤ^rank.
    Exponents(Vec<i64>),
    /// Index into a Cayley table.
    Index(usize),
}

impl Ord for GroupElement {
    /// Shortlex on words (x < x⁻¹ < y < …), lexicographic on exponent vectors, index order on
    /// table elements.
    fn cmp(&self, other: &Self) -> Ordering {
        use GroupElement::*;
        match (self, other) {
            (Word(a), Word(b)) => a.len().cmp(&b.len()).then_with(|| a.cmp(b)),
            (Exponents(a), Exponents(b)) => a.cmp(b),
            (Index(a), Index(b)) => a.cmp(b),
            _ => self.discriminant().cmp(&other.discriminant()),
        }
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl GroupElement {
    fn discriminant(&self) -> u8 {
        match self {
            GroupElement::Word(_) => 0,
            GroupElement::Exponents(_) => 1,
            GroupElement::Index(_) => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Free { rank: usize },
    FreeAbelian { rank: usize },
    Finite(CayleyTable),
}

impl GroupSpec {
    pub fn free(rank: usize) -> Result<Self, GroupError> {
        if rank == 0 {
            return Err(GroupError::ZeroRank);
        }
        Ok(GroupSpec::Free { rank })
    }

    pub fn free_abelian(rank: usize) -> Result<Self, GroupError> {
        if rank == 0 {
            return Err(GroupError::ZeroRank);
        }
        Ok(GroupSpec::FreeAbelian { rank })
    }

    pub fn cyclic(n: usize) -> Result<Self, GroupError> {
        cyclic_table(n).map(GroupSpec::Finite)
    }

    /// Free and free abelian groups are torsion-free; a finite group only when trivial.
    pub fn is_torsion_free(&self) -> bool {
        match self {
            GroupSpec::Free { .. } | GroupSpec::FreeAbelian { .. } => true,
            GroupSpec::Finite(t) => t.order() == 1,
        }
    }

    /// Number of generators (free backends) or elements (finite backend).
    pub fn rank(&self) -> usize {
        match self {
            GroupSpec::Free { rank } | GroupSpec::FreeAbelian { rank } => *rank,
            GroupSpec::Finite(t) => t.order(),
        }
    }

    pub fn descriptor(&self) -> String {
        match self {
            GroupSpec::Free { rank } => format!("free:{rank}"),
            GroupSpec::FreeAbelian { rank } => format!("abelian:{rank}"),
            GroupSpec::Finite(t) => t.label().to_string(),
        }
    }

    pub fn identity(&self) -> GroupElement {
        match self {
            GroupSpec::Free { .. } => GroupElement::Word(Vec::new()),
            GroupSpec::FreeAbelian { rank } => GroupElement::Exponents(vec![0; *rank]),
            GroupSpec::Finite(t) => GroupElement::Index(t.identity()),
        }
    }

    pub fn is_identity(&self, g: &GroupElement) -> bool {
        *g == self.identity()
    }

    /// Whether `g` is a normal-form element of this group.
    pub fn contains(&self, g: &GroupElement) -> bool {
        match (self, g) {
            (GroupSpec::Free { rank }, GroupElement::Word(w)) => {
                w.iter().all(|l| (l.generator as usize) < *rank)
                    && w.windows(2).all(|p| p[0] != p[1].inverse())
            }
            (GroupSpec::FreeAbelian { rank }, GroupElement::Exponents(v)) => v.len() == *rank,
            (GroupSpec::Finite(t), GroupElement::Index(k)) => *k < t.order(),
            _ => false,
        }
    }

    fn check(&self, g: &GroupElement) -> Result<(), GroupError> {
        if self.contains(g) {
            Ok(())
        } else {
            Err(GroupError::NotInGroup(self.descriptor()))
        }
    }

    /// The `k`-th generator: `x_{k+1}` for free backends, element `k` for a finite table.
    pub fn generator(&self, k: usize) -> Option<GroupElement> {
        if k >= self.rank() {
            return None;
        }
        Some(match self {
            GroupSpec::Free { .. } => GroupElement::Word(vec![Letter::new(k as u32, 1)]),
            GroupSpec::FreeAbelian { rank } => {
                let mut v = vec![0; *rank];
                v[k] = 1;
                GroupElement::Exponents(v)
            }
            GroupSpec::Finite(_) => GroupElement::Index(k),
        })
    }

    /// Resolves a generator name: `x1`, `x2`, … (and `x`, `y`, `z` when rank ≤ 3) for free
    /// backends; table names or `g<k>` for finite ones.
    pub fn lookup_symbol(&self, name: &str) -> Option<GroupElement> {
        match self {
            GroupSpec::Free { rank } | GroupSpec::FreeAbelian { rank } => {
                let k = match name {
                    "x" | "y" | "z" if *rank <= 3 => (name.as_bytes()[0] - b'x') as usize,
                    _ => {
                        let digits = name.strip_prefix('x')?;
                        if digits.is_empty() || digits.starts_with('0') || !digits.bytes().all(|b| b.is_ascii_digit()) {
                            return None;
                        }
                        digits.parse::<usize>().ok()?.checked_sub(1)?
                    }
                };
                self.generator(k)
            }
            GroupSpec::Finite(t) => t.index_of_name(name).map(GroupElement::Index),
        }
    }

    pub fn generator_name(&self, k: usize) -> String {
        match self {
            GroupSpec::Free { rank } | GroupSpec::FreeAbelian { rank } => {
                if *rank <= 3 {
                    ["x", "y", "z"][k].to_string()
                } else {
                    format!("x{}", k + 1)
                }
            }
            GroupSpec::Finite(t) => t.name_of(k),
        }
    }

    pub fn mul(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement, GroupError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul_unchecked(a, b))
    }

    /// Product of two elements already known to belong to this group.
    pub(crate) fn mul_unchecked(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        match (self, a, b) {
            (GroupSpec::Free { .. }, GroupElement::Word(a), GroupElement::Word(b)) => {
                let mut out = a.clone();
                for &letter in b {
                    if out.last() == Some(&letter.inverse()) {
                        out.pop();
                    } else {
                        out.push(letter);
                    }
                }
                GroupElement::Word(out)
            }
            (GroupSpec::FreeAbelian { .. }, GroupElement::Exponents(a), GroupElement::Exponents(b)) => {
                GroupElement::Exponents(a.iter().zip(b).map(|(x, y)| x + y).collect())
            }
            (GroupSpec::Finite(t), GroupElement::Index(a), GroupElement::Index(b)) => {
                GroupElement::Index(t.product(*a, *b))
            }
            _ => unreachable!("backend mismatch in mul_unchecked"),
        }
    }

    pub fn inv(&self, a: &GroupElement) -> Result<GroupElement, GroupError> {
        self.check(a)?;
        Ok(self.inv_unchecked(a))
    }

    pub(crate) fn inv_unchecked(&self, a: &GroupElement) -> GroupElement {
        match (self, a) {
            (GroupSpec::Free { .. }, GroupElement::Word(w)) => {
                GroupElement::Word(w.iter().rev().map(|l| l.inverse()).collect())
            }
            (GroupSpec::FreeAbelian { .. }, GroupElement::Exponents(v)) => {
                GroupElement::Exponents(v.iter().map(|x| -x).collect())
            }
            (GroupSpec::Finite(t), GroupElement::Index(k)) => GroupElement::Index(t.inverse(*k)),
            _ => unreachable!("backend mismatch in inv_unchecked"),
        }
    }

    pub fn pow(&self, g: &GroupElement, exponent: i64) -> Result<GroupElement, GroupError> {
        self.check(g)?;
        let base = if exponent < 0 { self.inv_unchecked(g) } else { g.clone() };
        let mut out = self.identity();
        for _ in 0..exponent.unsigned_abs() {
            out = self.mul_unchecked(&out, &base);
        }
        Ok(out)
    }

    /// Text form: `1`, `x^-1*y^2`, `x1*x4^-1`, `g3`.
    pub fn format_element(&self, g: &GroupElement) -> String {
        if self.is_identity(g) {
            return "1".to_string();
        }
        let mut out = String::new();
        let mut put = |name: String, exp: i64| {
            if !out.is_empty() {
                out.push('*');
            }
            out.push_str(&name);
            if exp != 1 {
                let _ = write!(out, "^{exp}");
            }
        };
        match g {
            GroupElement::Word(w) => {
                let mut k = 0;
                while k < w.len() {
                    let letter = w[k];
                    let run = w[k..].iter().take_while(|&&l| l == letter).count();
                    put(self.generator_name(letter.generator as usize), run as i64 * letter.exponent() as i64);
                    k += run;
                }
            }
            GroupElement::Exponents(v) => {
                for (k, &e) in v.iter().enumerate().filter(|(_, e)| **e != 0) {
                    put(self.generator_name(k), e);
                }
            }
            GroupElement::Index(k) => put(self.generator_name(*k), 1),
        }
        out
    }

    /// Parses `free:N`, `abelian:N`, `cyclic:N` or `cayley:PATH` (reads the file).
    pub fn parse(descriptor: &str) -> Result<Self, GroupError> {
        let bad = || GroupError::BadDescriptor(descriptor.to_string());
        let (kind, arg) = descriptor.trim().split_once(':').ok_or_else(bad)?;
        let number = || arg.trim().parse::<usize>().map_err(|_| bad());
        match kind.trim() {
            "free" => Self::free(number()?),
            "abelian" => Self::free_abelian(number()?),
            "cyclic" => Self::cyclic(number()?),
            "cayley" => CayleyFile::load(Path::new(arg)).map(GroupSpec::Finite),
            _ => Err(bad()),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = GroupError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

pub fn elem_mul(spec: &GroupSpec, a: &GroupElement, b: &GroupElement) -> Result<GroupElement, GroupError> {
    spec.mul(a, b)
}

pub fn elem_inv(spec: &GroupSpec, a: &GroupElement) -> Result<GroupElement, GroupError> {
    spec.inv(a)
}

pub fn cyclic_group(n: usize) -> Result<GroupSpec, GroupError> {
    GroupSpec::cyclic(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(letters: &[(u32, i8)]) -> GroupElement {
        GroupElement::Word(letters.iter().map(|&(g, e)| Letter::new(g, e)).collect())
    }

    #[test]
    fn free_products_reduce_at_seam() {
        let f2 = GroupSpec::free(2).unwrap();
        let x = word(&[(0, 1)]);
        let x_inv = word(&[(0, -1)]);
        assert_eq!(elem_mul(&f2, &x, &x_inv).unwrap(), f2.identity());
        let xy = word(&[(0, 1), (1, 1)]);
        let yinv_x = word(&[(1, -1), (0, 1)]);
        assert_eq!(elem_mul(&f2, &xy, &yinv_x).unwrap(), word(&[(0, 1), (0, 1)]));
    }

    #[test]
    fn abelian_adds_vectors() {
        let a2 = GroupSpec::free_abelian(2).unwrap();
        let a = GroupElement::Exponents(vec![1, 3]);
        let b = GroupElement::Exponents(vec![2, -1]);
        assert_eq!(elem_mul(&a2, &a, &b).unwrap(), GroupElement::Exponents(vec![3, 2]));
    }

    #[test]
    fn inverses() {
        let f2 = GroupSpec::free(2).unwrap();
        assert_eq!(elem_inv(&f2, &word(&[(0, 1), (1, -1)])).unwrap(), word(&[(1, 1), (0, -1)]));
        let a3 = GroupSpec::free_abelian(3).unwrap();
        assert_eq!(
            elem_inv(&a3, &GroupElement::Exponents(vec![1, -2, 0])).unwrap(),
            GroupElement::Exponents(vec![-1, 2, 0])
        );
        let z3 = cyclic_group(3).unwrap();
        assert_eq!(elem_inv(&z3, &GroupElement::Index(1)).unwrap(), GroupElement::Index(2));
    }

    #[test]
    fn backend_mismatch_is_rejected() {
        let f2 = GroupSpec::free(2).unwrap();
        assert!(f2.mul(&GroupElement::Index(0), &f2.identity()).is_err());
        assert!(f2.inv(&word(&[(2, 1)])).is_err());
        assert!(f2.inv(&word(&[(0, 1), (0, -1)])).is_err(), "unreduced word is not a normal form");
        let a2 = GroupSpec::free_abelian(2).unwrap();
        assert!(a2.inv(&GroupElement::Exponents(vec![1])).is_err());
    }

    #[test]
    fn torsion_flags() {
        assert!(GroupSpec::free(1).unwrap().is_torsion_free());
        assert!(GroupSpec::free_abelian(4).unwrap().is_torsion_free());
        assert!(cyclic_group(1).unwrap().is_torsion_free());
        assert!(!cyclic_group(4).unwrap().is_torsion_free());
    }

    #[test]
    fn names_and_formatting() {
        let f2 = GroupSpec::free(2).unwrap();
        assert_eq!(f2.lookup_symbol("y"), f2.generator(1));
        assert_eq!(f2.lookup_symbol("x2"), f2.generator(1));
        assert_eq!(f2.lookup_symbol("x3"), None);
        assert_eq!(f2.lookup_symbol("x0"), None);
        assert_eq!(f2.lookup_symbol("z"), None);
        let f4 = GroupSpec::free(4).unwrap();
        assert_eq!(f4.lookup_symbol("x"), None);
        assert_eq!(f4.format_element(&word(&[(3, -1), (3, -1), (0, 1)])), "x4^-2*x1");
        assert_eq!(f2.format_element(&word(&[(0, -1), (1, 1)])), "x^-1*y");
        assert_eq!(f2.format_element(&f2.identity()), "1");
        let a3 = GroupSpec::free_abelian(3).unwrap();
        assert_eq!(a3.format_element(&GroupElement::Exponents(vec![2, 0, -1])), "x^2*z^-1");
        let z3 = cyclic_group(3).unwrap();
        assert_eq!(z3.format_element(&GroupElement::Index(2)), "g2");
        assert_eq!(z3.lookup_symbol("g2"), Some(GroupElement::Index(2)));
    }

    #[test]
    fn shortlex_order() {
        let x = word(&[(0, 1)]);
        let xi = word(&[(0, -1)]);
        let y = word(&[(1, 1)]);
        let xx = word(&[(0, 1), (0, 1)]);
        let mut v = vec![xx.clone(), y.clone(), xi.clone(), x.clone(), word(&[])];
        v.sort();
        assert_eq!(v, vec![word(&[]), x, xi, y, xx]);
    }

    #[test]
    fn powers() {
        let z5 = cyclic_group(5).unwrap();
        assert_eq!(z5.pow(&GroupElement::Index(2), 3).unwrap(), GroupElement::Index(1));
        assert_eq!(z5.pow(&GroupElement::Index(2), -1).unwrap(), GroupElement::Index(3));
        let f1 = GroupSpec::free(1).unwrap();
        assert_eq!(f1.pow(&word(&[(0, 1)]), -2).unwrap(), word(&[(0, -1), (0, -1)]));
    }

    #[test]
    fn parses_descriptors() {
        assert_eq!(GroupSpec::parse("free:2").unwrap(), GroupSpec::Free { rank: 2 });
        assert_eq!(GroupSpec::parse("abelian:3").unwrap(), GroupSpec::FreeAbelian { rank: 3 });
        assert_eq!(GroupSpec::parse("cyclic:4").unwrap().descriptor(), "cyclic:4");
        assert!(GroupSpec::parse("free:0").is_err());
        assert!(GroupSpec::parse("cyclic:300").is_err());
        assert!(GroupSpec::parse("torus:2").is_err());
        assert!(GroupSpec::parse("free").is_err());
        assert!(matches!(GroupSpec::parse("cayley:/nonexistent.json"), Err(GroupError::Io { .. })));
    }
}
