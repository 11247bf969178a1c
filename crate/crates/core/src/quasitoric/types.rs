use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::QuasitoricError;
use crate::algebra::{LinearForm, Rational};

/// A simple polytope given combinatorially: each vertex is the set of the `n`
/// facets (1-based) meeting there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polytope {
    pub n: usize,
    pub m: usize,
    /// Facet indices per vertex, sorted increasingly.
    pub vertices: Vec<Vec<usize>>,
    /// Inward normals as an `n × m` matrix; column `i` is normal to facet `i`.
    pub normals: Option<Vec<Vec<Rational>>>,
    /// Alternative to `normals`: per vertex, an ordering of its facets whose
    /// normals form a positively oriented basis.
    pub positive_orderings: Option<Vec<Vec<usize>>>,
}

impl Polytope {
    /// Builds a polytope, sorting the facet list of every vertex.
    pub fn new(n: usize, m: usize, vertices: Vec<Vec<usize>>) -> Self {
        let vertices = vertices
            .into_iter()
            .map(|mut v| {
                v.sort_unstable();
                v
            })
            .collect();
        Polytope {
            n,
            m,
            vertices,
            normals: None,
            positive_orderings: None,
        }
    }

    pub fn with_normals(mut self, normals: Vec<Vec<Rational>>) -> Self {
        self.normals = Some(normals);
        self
    }

    pub fn with_integer_normals(self, normals: &[Vec<i64>]) -> Self {
        let normals = normals
            .iter()
            .map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect())
            .collect();
        self.with_normals(normals)
    }

    pub fn with_positive_orderings(mut self, orderings: Vec<Vec<usize>>) -> Self {
        self.positive_orderings = Some(orderings);
        self
    }

    /// Index of the vertex `F1 ∩ … ∩ Fn`, if present.
    pub fn initial_vertex(&self) -> Option<usize> {
        let first: Vec<usize> = (1..=self.n).collect();
        self.vertices.iter().position(|v| *v == first)
    }
}

/// An integer `n × m` characteristic matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharMatrix {
    entries: Vec<Vec<BigInt>>,
}

impl CharMatrix {
    pub fn new(entries: Vec<Vec<BigInt>>) -> Result<Self, QuasitoricError> {
        let m = entries.first().map_or(0, |r| r.len());
        if entries.iter().any(|r| r.len() != m) {
            return Err(QuasitoricError::Shape("ragged characteristic matrix".into()));
        }
        Ok(CharMatrix { entries })
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self, QuasitoricError> {
        CharMatrix::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.entries.first().map_or(0, |r| r.len())
    }

    pub fn entries(&self) -> &[Vec<BigInt>] {
        &self.entries
    }

    /// First `n` columns are the identity.
    pub fn is_refined(&self) -> bool {
        let n = self.rows();
        self.cols() >= n
            && (0..n).all(|i| {
                (0..n).all(|j| {
                    let e = &self.entries[i][j];
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    /// The same matrix with column `i` (1-based) negated.
    pub fn negate_column(&self, i: usize) -> CharMatrix {
        let mut entries = self.entries.clone();
        for row in &mut entries {
            row[i - 1] = -row[i - 1].clone();
        }
        CharMatrix { entries }
    }
}

/// A combinatorial quasitoric pair `(P, Λ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasitoricPair {
    pub name: String,
    pub polytope: Polytope,
    pub lambda: CharMatrix,
}

/// One isolated fixed point: a sign and `n` weight vectors in `Z^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPoint {
    pub label: String,
    pub sign: i8,
    pub weights: Vec<LinearForm>,
}

/// Signs and weights at all fixed points of a `2n`-dimensional manifold with
/// a `T^k` action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPointData {
    n: usize,
    k: usize,
    points: Vec<FixedPoint>,
}

impl FixedPointData {
    pub fn new(n: usize, k: usize, points: Vec<FixedPoint>) -> Result<Self, QuasitoricError> {
        for p in &points {
            if p.sign != 1 && p.sign != -1 {
                return Err(QuasitoricError::Shape(format!(
                    "point {}: sign must be +1 or -1",
                    p.label
                )));
            }
            if p.weights.len() != n {
                return Err(QuasitoricError::Shape(format!(
                    "point {}: {} weights, expected {n}",
                    p.label,
                    p.weights.len()
                )));
            }
            if let Some(w) = p.weights.iter().find(|w| w.nvars() != k) {
                return Err(QuasitoricError::Shape(format!(
                    "point {}: weight {w} has length {}, expected {k}",
                    p.label,
                    w.nvars()
                )));
            }
        }
        Ok(FixedPointData { n, k, points })
    }

    /// Convenience constructor from `(sign, weights)` pairs, labelled `x1, x2, …`.
    pub fn from_raw(n: usize, k: usize, points: &[(i8, Vec<Vec<i64>>)]) -> Result<Self, QuasitoricError> {
        let pts = points
            .iter()
            .enumerate()
            .map(|(i, (s, ws))| {
                Ok(FixedPoint {
                    label: format!("x{}", i + 1),
                    sign: *s,
                    weights: ws
                        .iter()
                        .map(|w| LinearForm::new(w.clone()))
                        .collect::<Result<_, _>>()
                        .map_err(|_| {
                            QuasitoricError::Shape(format!("point x{}: zero weight", i + 1))
                        })?,
                })
            })
            .collect::<Result<Vec<_>, QuasitoricError>>()?;
        FixedPointData::new(n, k, pts)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn points(&self) -> &[FixedPoint] {
        &self.points
    }

    /// Reverses the global orientation: every sign flips.
    pub fn flip_orientation(&self) -> FixedPointData {
        let mut out = self.clone();
        for p in &mut out.points {
            p.sign = -p.sign;
        }
        out
    }

    /// The data with the sign of point `i` (zero-based) flipped.
    pub fn with_sign_flipped(&self, i: usize) -> FixedPointData {
        let mut out = self.clone();
        out.points[i].sign = -out.points[i].sign;
        out
    }

    /// Keeps only the listed points (zero-based), in order.
    pub fn subset(&self, indices: &[usize]) -> FixedPointData {
        FixedPointData {
            n: self.n,
            k: self.k,
            points: indices.iter().map(|&i| self.points[i].clone()).collect(),
        }
    }
}
