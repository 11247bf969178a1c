use std::collections::BTreeMap;

use num_traits::Zero;

use super::genus::GenusSpec;
use super::FglError;
use crate::algebra::{integer, LinearForm, MultiSeries, Poly, Rational};

/// The conjugate orientation `a(x) = x^2/b(x)`, i.e. `a+(x) = 1/b+(x)`.
pub fn conjugate_orientation(spec: &GenusSpec) -> Result<MultiSeries, FglError> {
    let x = LinearForm::new(vec![1])?;
    let b_plus = spec.exponential().divide_by_linear_form(&x)?;
    Ok(b_plus.invert_unit()?.mul_linear_form(&x)?)
}

/// Partitions of `n` as nonincreasing part lists, in reverse lexicographic
/// order (`[n]` first, `[1, …, 1]` last).
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// `sum_omega b^omega * chern(omega)` over the partitions of `n`, with
/// `b^omega = b_{omega_1} … b_{omega_r}` read from the exponential and
/// `chern(omega)` the monomial-symmetric normal Chern number.
pub fn genus_from_chern_numbers(
    spec: &GenusSpec,
    n: u32,
    chern: &BTreeMap<Vec<u32>, i64>,
) -> Result<Poly, FglError> {
    let spec = spec.at_order(n + 1)?;
    let mut total = Poly::zero(spec.ring());
    for omega in partitions(n) {
        let value = chern
            .get(&omega)
            .ok_or_else(|| FglError::MissingPartition(omega.clone()))?;
        let mut term = Poly::integer(spec.ring(), *value);
        for &part in &omega {
            term = &term * &spec.b(part);
        }
        total = &total + &term;
    }
    Ok(total)
}

/// Converts Chern numbers given on products of Chern classes
/// `c_{l1} … c_{lr}` (keyed by the partition `l`) into the monomial symmetric
/// basis used by [`genus_from_chern_numbers`].
///
/// `e_l = sum_mu M(l, mu) m_mu` where `M(l, mu)` counts 0-1 matrices with row
/// sums `l` and column sums `mu`; the system is solved exactly.
pub fn elementary_to_monomial(
    n: u32,
    elementary: &BTreeMap<Vec<u32>, i64>,
) -> Result<BTreeMap<Vec<u32>, i64>, FglError> {
    let parts = partitions(n);
    let size = parts.len();
    let mut rhs = Vec::with_capacity(size);
    for p in &parts {
        let v = elementary
            .get(p)
            .ok_or_else(|| FglError::MissingPartition(p.clone()))?;
        rhs.push(integer(*v));
    }
    let mut m: Vec<Vec<Rational>> = parts
        .iter()
        .map(|l| parts.iter().map(|mu| integer(zero_one_matrices(l, mu) as i64)).collect())
        .collect();
    // Gauss-Jordan elimination; M is invertible over Q.
    for col in 0..size {
        let pivot = (col..size)
            .find(|&r| !m[r][col].is_zero())
            .expect("transition matrix is invertible");
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        let inv = m[col][col].recip();
        for j in 0..size {
            m[col][j] = &m[col][j] * &inv;
        }
        rhs[col] = &rhs[col] * &inv;
        for r in 0..size {
            if r != col && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for j in 0..size {
                    let sub = &factor * &m[col][j];
                    m[r][j] -= sub;
                }
                let sub = &factor * &rhs[col];
                rhs[r] -= sub;
            }
        }
    }
    let mut out = BTreeMap::new();
    for (p, v) in parts.into_iter().zip(rhs) {
        if !v.is_integer() {
            return Err(FglError::InvalidChernData(format!(
                "monomial Chern number for {p:?} is not an integer"
            )));
        }
        let v: i64 = v
            .to_integer()
            .try_into()
            .map_err(|_| FglError::InvalidChernData("value out of range".into()))?;
        out.insert(p, v);
    }
    Ok(out)
}

/// Number of 0-1 matrices with the given row and column sums.
fn zero_one_matrices(rows: &[u32], cols: &[u32]) -> u64 {
    fn rec(rows: &[u32], cols: &mut Vec<u32>) -> u64 {
        let Some((&first, rest)) = rows.split_first() else {
            return u64::from(cols.iter().all(|&c| c == 0));
        };
        let mut count = 0;
        let k = cols.len();
        // Choose `first` distinct columns with remaining capacity.
        let mut chosen = Vec::new();
        fn choose(
            start: usize,
            need: u32,
            k: usize,
            cols: &mut Vec<u32>,
            chosen: &mut Vec<usize>,
            rest: &[u32],
            count: &mut u64,
        ) {
            if need == 0 {
                *count += rec(rest, cols);
                return;
            }
            for j in start..k {
                if cols[j] > 0 {
                    cols[j] -= 1;
                    chosen.push(j);
                    choose(j + 1, need - 1, k, cols, chosen, rest, count);
                    chosen.pop();
                    cols[j] += 1;
                }
            }
        }
        choose(0, first, k, cols, &mut chosen, rest, &mut count);
        count
    }
    rec(rows, &mut cols.to_vec())
}

/// `a_j`, the coefficient of `x^{j+1}` in a conjugate orientation.
pub fn conjugate_coefficient(a: &MultiSeries, j: u32) -> Poly {
    a.coefficient(&[j + 1])
}
