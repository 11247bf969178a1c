//! Small exact linear algebra over `Z` and `Q`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::Rational;

pub(crate) fn to_rational(m: &[Vec<BigInt>]) -> Vec<Vec<Rational>> {
    m.iter()
        .map(|r| r.iter().map(|x| Rational::from_integer(x.clone())).collect())
        .collect()
}

/// Determinant by fraction-free-enough Gaussian elimination over `Q`.
pub(crate) fn det(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut d = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            a.swap(p, col);
            d = -d;
        }
        let pivot = a[col][col].clone();
        d *= &pivot;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &pivot;
            for c in col..n {
                let sub = &f * &a[col][c];
                a[r][c] -= sub;
            }
        }
    }
    d
}

pub(crate) fn det_int(m: &[Vec<BigInt>]) -> BigInt {
    det(&to_rational(m)).to_integer()
}

/// Inverse over `Q`, or `None` if singular.
pub(crate) fn inverse(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(p, col);
        let inv = a[col][col].recip();
        for c in 0..2 * n {
            a[col][c] = &a[col][c] * &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..2 * n {
                    let sub = &f * &a[col][c];
                    a[r][c] -= sub;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Inverse of an integer matrix with determinant `±1`.
pub(crate) fn inverse_unimodular(m: &[Vec<BigInt>]) -> Option<Vec<Vec<BigInt>>> {
    if !det_int(m).abs().is_one() {
        return None;
    }
    let inv = inverse(&to_rational(m))?;
    Some(
        inv.into_iter()
            .map(|r| r.into_iter().map(|x| x.to_integer()).collect())
            .collect(),
    )
}

pub(crate) fn transpose<T: Clone>(m: &[Vec<T>]) -> Vec<Vec<T>> {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len())
        .map(|j| m.iter().map(|r| r[j].clone()).collect())
        .collect()
}

pub(crate) fn mul_int(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).map(|k| &row[k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// The columns `cols` (zero-based) of `m`, in the given order.
pub(crate) fn columns<T: Clone>(m: &[Vec<T>], cols: &[usize]) -> Vec<Vec<T>> {
    m.iter()
        .map(|r| cols.iter().map(|&j| r[j].clone()).collect())
        .collect()
}
