//! Exact nullspace over ℚ(i) by fraction-free (Bareiss) elimination over ℤ[i].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::scalars::{GaussianRational, Rational};

/// Gaussian integer `re + im·i`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct GaussInt {
    re: BigInt,
    im: BigInt,
}

impl GaussInt {
    fn zero() -> Self {
        GaussInt { re: BigInt::zero(), im: BigInt::zero() }
    }

    fn one() -> Self {
        GaussInt { re: BigInt::one(), im: BigInt::zero() }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn mul(&self, o: &Self) -> Self {
        GaussInt { re: &self.re * &o.re - &self.im * &o.im, im: &self.re * &o.im + &self.im * &o.re }
    }

    fn sub(&self, o: &Self) -> Self {
        GaussInt { re: &self.re - &o.re, im: &self.im - &o.im }
    }

    /// Division known to be exact; panics otherwise.
    fn exact_div(&self, d: &Self) -> Self {
        let norm = &d.re * &d.re + &d.im * &d.im;
        // self · conj(d) / |d|²
        let re = &self.re * &d.re + &self.im * &d.im;
        let im = &self.im * &d.re - &self.re * &d.im;
        let (qr, rr) = re.div_rem(&norm);
        let (qi, ri) = im.div_rem(&norm);
        assert!(rr.is_zero() && ri.is_zero(), "inexact division in fraction-free elimination");
        GaussInt { re: qr, im: qi }
    }

    fn to_rational(&self) -> GaussianRational {
        GaussianRational::new(Rational::from_integer(self.re.clone()), Rational::from_integer(self.im.clone()))
    }
}

/// Scales a row of Gaussian rationals by the lcm of its denominators.
fn clear_denominators(row: &[GaussianRational]) -> Vec<GaussInt> {
    let lcm = row
        .iter()
        .flat_map(|c| [c.re.denom(), c.im.denom()])
        .fold(BigInt::one(), |acc, d| acc.lcm(d));
    row.iter()
        .map(|c| GaussInt {
            re: (&c.re * Rational::from_integer(lcm.clone())).to_integer(),
            im: (&c.im * Rational::from_integer(lcm.clone())).to_integer(),
        })
        .collect()
}

/// Row echelon form: the nonzero rows and their pivot columns.
struct Echelon {
    rows: Vec<Vec<GaussInt>>,
    pivots: Vec<usize>,
}

fn echelon(matrix: &[Vec<GaussianRational>], ncols: usize) -> Echelon {
    let mut a: Vec<Vec<GaussInt>> = matrix.iter().map(|r| clear_denominators(r)).collect();
    let nrows = a.len();
    let mut prev = GaussInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        // First nonzero entry at or below row r.
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, bottom) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in bottom.iter_mut() {
            let lead = std::mem::replace(&mut row[c], GaussInt::zero());
            for j in c + 1..ncols {
                let t = pivot_row[c].mul(&row[j]).sub(&lead.mul(&pivot_row[j]));
                row[j] = t.exact_div(&prev);
            }
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    Echelon { rows: a, pivots }
}

pub fn rank(matrix: &[Vec<GaussianRational>], ncols: usize) -> usize {
    echelon(matrix, ncols).pivots.len()
}

/// Basis of `{ v : M v = 0 }`, one vector per free column in increasing order; each vector
/// has its free coordinate set to 1 and the other free coordinates 0, then is scaled so its
/// first nonzero entry is 1.
pub fn nullspace(matrix: &[Vec<GaussianRational>], ncols: usize) -> Vec<Vec<GaussianRational>> {
    let Echelon { rows, pivots } = echelon(matrix, ncols);
    let rows: Vec<Vec<GaussianRational>> =
        rows.iter().map(|r| r.iter().map(GaussInt::to_rational).collect()).collect();
    let free = (0..ncols).filter(|c| !pivots.contains(c));
    free.map(|f| {
        let mut x = vec![GaussianRational::zero(); ncols];
        x[f] = GaussianRational::one();
        for (k, &p) in pivots.iter().enumerate().rev() {
            let mut s = GaussianRational::zero();
            for j in p + 1..ncols {
                if !x[j].is_zero() && !rows[k][j].is_zero() {
                    s += &(&rows[k][j] * &x[j]);
                }
            }
            x[p] = (-s).div(&rows[k][p]).expect("pivot is nonzero");
        }
        let lead = x.iter().find(|c| !c.is_zero()).cloned().expect("x[f] = 1");
        let inv = lead.recip().expect("nonzero");
        x.iter().map(|c| c * &inv).collect()
    })
    .collect()
}
