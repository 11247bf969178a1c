use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::matrix::{columns, det, det_int, inverse_unimodular, mul_int, transpose};
use super::types::{CharMatrix, FixedPoint, FixedPointData, Polytope, QuasitoricPair};
use super::QuasitoricError;
use crate::algebra::LinearForm;

/// All violations found in a pair; empty means valid.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

fn label(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(|i| format!("F{i}")).collect();
    format!("{{{}}}", parts.join(","))
}

fn check_polytope(p: &Polytope, out: &mut Vec<String>) {
    if p.vertices.is_empty() {
        out.push("polytope has no vertices".into());
    }
    for (i, v) in p.vertices.iter().enumerate() {
        let mut s = v.clone();
        s.dedup();
        if s.len() != v.len() {
            out.push(format!("vertex {} repeats a facet", i + 1));
        }
        if v.len() != p.n {
            out.push(format!(
                "vertex {} lies on {} facets, expected {}",
                i + 1,
                v.len(),
                p.n
            ));
        }
        if v.iter().any(|&f| f == 0 || f > p.m) {
            out.push(format!("vertex {} names a facet outside 1..{}", i + 1, p.m));
        }
        if p.vertices[..i].contains(v) {
            out.push(format!("vertex {} duplicates an earlier vertex", i + 1));
        }
    }
    if let Some(normals) = &p.normals {
        if normals.len() != p.n || normals.iter().any(|r| r.len() != p.m) {
            out.push(format!("normals must form an {}x{} matrix", p.n, p.m));
        } else {
            for (i, v) in p.vertices.iter().enumerate() {
                if v.len() == p.n && v.iter().all(|&f| f >= 1 && f <= p.m) {
                    let cols: Vec<usize> = v.iter().map(|f| f - 1).collect();
                    if det(&columns(normals, &cols)).is_zero() {
                        out.push(format!("normals at vertex {} are dependent", i + 1));
                    }
                }
            }
        }
    }
    if let Some(orders) = &p.positive_orderings {
        if orders.len() != p.vertices.len() {
            out.push("one positive ordering is needed per vertex".into());
        } else {
            for (i, (o, v)) in orders.iter().zip(&p.vertices).enumerate() {
                let mut sorted = o.clone();
                sorted.sort_unstable();
                if sorted != *v {
                    out.push(format!(
                        "positive ordering of vertex {} is not a permutation of its facets",
                        i + 1
                    ));
                }
            }
        }
    }
}

/// Checks the polytope data, refined form, the initial vertex and
/// `|det Λ_x| = 1` at every vertex, collecting every violation.
pub fn validate_pair(pair: &QuasitoricPair) -> ValidationReport {
    let mut out = Vec::new();
    let p = &pair.polytope;
    check_polytope(p, &mut out);
    let l = &pair.lambda;
    if l.rows() != p.n || l.cols() != p.m {
        out.push(format!(
            "characteristic matrix is {}x{}, expected {}x{}",
            l.rows(),
            l.cols(),
            p.n,
            p.m
        ));
        return ValidationReport { violations: out };
    }
    if !l.is_refined() {
        out.push("characteristic matrix is not refined (first columns are not the identity)".into());
    }
    if p.initial_vertex().is_none() {
        out.push("F1 ∩ … ∩ Fn is not a vertex".into());
    }
    for v in &p.vertices {
        if v.len() != p.n || v.iter().any(|&f| f == 0 || f > p.m) {
            continue;
        }
        let cols: Vec<usize> = v.iter().map(|f| f - 1).collect();
        let d = det_int(&columns(l.entries(), &cols));
        if !d.abs().is_one() {
            out.push(format!("det Λ at vertex {} is {d}", label(v)));
        }
    }
    ValidationReport { violations: out }
}

/// `L Λ'` with `L` the inverse of the minor on facets `1..n`.
pub fn refine(polytope: &Polytope, raw: &CharMatrix) -> Result<CharMatrix, QuasitoricError> {
    let n = polytope.n;
    if raw.rows() != n || raw.cols() != polytope.m {
        return Err(QuasitoricError::Shape(format!(
            "characteristic matrix is {}x{}, expected {}x{}",
            raw.rows(),
            raw.cols(),
            n,
            polytope.m
        )));
    }
    let lead: Vec<usize> = (0..n).collect();
    let minor = columns(raw.entries(), &lead);
    let inv = inverse_unimodular(&minor)
        .ok_or_else(|| QuasitoricError::NotUnimodular(det_int(&minor).to_string()))?;
    CharMatrix::new(mul_int(&inv, raw.entries()))
}

fn permutation_sign(seq: &[usize]) -> i8 {
    let mut inversions = 0;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

fn to_i64(x: &BigInt) -> Result<i64, QuasitoricError> {
    x.to_i64()
        .ok_or_else(|| QuasitoricError::Shape(format!("weight entry {x} exceeds 64 bits")))
}

/// Signs `sign(det(Λ_x N_x))` and weights, the columns of `(Λ_x^t)^{-1}`, at
/// every vertex (facets in increasing order). Points are labelled `x1, x2, …`
/// in vertex order.
pub fn signs_and_weights(pair: &QuasitoricPair) -> Result<FixedPointData, QuasitoricError> {
    let report = validate_pair(pair);
    if !report.is_valid() {
        return Err(QuasitoricError::InvalidPair(report.violations));
    }
    let p = &pair.polytope;
    let mut points = Vec::with_capacity(p.vertices.len());
    for (i, v) in p.vertices.iter().enumerate() {
        let cols: Vec<usize> = v.iter().map(|f| f - 1).collect();
        let lx = columns(pair.lambda.entries(), &cols);
        let normal_sign: i8 = if let Some(normals) = &p.normals {
            if det(&columns(normals, &cols)).is_positive() {
                1
            } else {
                -1
            }
        } else if let Some(orders) = &p.positive_orderings {
            permutation_sign(&orders[i])
        } else {
            return Err(QuasitoricError::MissingNormals);
        };
        let lambda_sign: i8 = if det_int(&lx).is_positive() { 1 } else { -1 };
        let w = inverse_unimodular(&transpose(&lx)).expect("validated unimodular");
        let weights = transpose(&w)
            .iter()
            .map(|col| {
                let ints = col.iter().map(to_i64).collect::<Result<Vec<_>, _>>()?;
                Ok(LinearForm::new(ints).expect("columns of an invertible matrix"))
            })
            .collect::<Result<Vec<_>, QuasitoricError>>()?;
        points.push(FixedPoint {
            label: format!("x{}", i + 1),
            sign: normal_sign * lambda_sign,
            weights,
        });
    }
    FixedPointData::new(p.n, p.n, points)
}

/// Every column of `Λ` sums to 1.
pub fn special_check(lambda: &CharMatrix) -> bool {
    (0..lambda.cols()).all(|j| {
        let s: BigInt = lambda.entries().iter().map(|r| &r[j]).sum();
        s.is_one()
    })
}

/// Restricts to the circle generated by `nu`: weights become `w · nu`.
pub fn restrict_to_subcircle(
    fpd: &FixedPointData,
    nu: &[i64],
) -> Result<FixedPointData, QuasitoricError> {
    if nu.len() != fpd.k() {
        return Err(QuasitoricError::Shape(format!(
            "circle vector has length {}, expected {}",
            nu.len(),
            fpd.k()
        )));
    }
    let g = nu.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    if g != 1 {
        return Err(QuasitoricError::NotPrimitive(nu.to_vec()));
    }
    let mut points = Vec::new();
    for p in fpd.points() {
        let mut ws = Vec::new();
        for w in &p.weights {
            let d = w.dot(nu);
            if d == 0 {
                return Err(QuasitoricError::NonGeneric {
                    point: p.label.clone(),
                    weight: w.to_string(),
                });
            }
            ws.push(LinearForm::new(vec![d]).expect("nonzero"));
        }
        points.push(FixedPoint {
            label: p.label.clone(),
            sign: p.sign,
            weights: ws,
        });
    }
    FixedPointData::new(fpd.n(), 1, points)
}
