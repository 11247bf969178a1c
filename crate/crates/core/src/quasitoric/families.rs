use super::types::{CharMatrix, Polytope, QuasitoricPair};
use super::QuasitoricError;
use crate::algebra::Rational;

/// The simplex `Δ^n` with normals `e1, …, en, (-1, …, -1)` and `Λ = (I : ε)`.
/// Vertex 1 is `F1 ∩ … ∩ Fn`; vertex `k + 1` omits facet `k`.
pub fn simplex_pair(n: usize, eps: &[i64]) -> Result<QuasitoricPair, QuasitoricError> {
    if eps.len() != n {
        return Err(QuasitoricError::Shape(format!(
            "{} signs for dimension {n}",
            eps.len()
        )));
    }
    if eps.iter().any(|&e| e != 1 && e != -1) {
        return Err(QuasitoricError::InvalidParameters(
            "simplex signs must be ±1".into(),
        ));
    }
    let m = n + 1;
    let mut vertices = vec![(1..=n).collect::<Vec<_>>()];
    for k in 1..=n {
        vertices.push((1..=m).filter(|&f| f != k).collect());
    }
    let mut normals = vec![vec![0i64; m]; n];
    let mut lambda = vec![vec![0i64; m]; n];
    for i in 0..n {
        normals[i][i] = 1;
        normals[i][n] = -1;
        lambda[i][i] = 1;
        lambda[i][n] = eps[i];
    }
    let signs: String = eps.iter().map(|&e| if e > 0 { '+' } else { '-' }).collect();
    Ok(QuasitoricPair {
        name: format!("cp{n}:eps={signs}"),
        polytope: Polytope::new(n, m, vertices).with_integer_normals(&normals),
        lambda: CharMatrix::from_i64(&lambda)?,
    })
}

/// The square with normals `e1, e2, -e1, -e2`, vertices `F1F2, F2F3, F3F4,
/// F4F1` and `Λ = [[1, 0, ε1, δ2], [0, 1, δ1, ε2]]`.
pub fn square_pair(e1: i64, e2: i64, d1: i64, d2: i64) -> Result<QuasitoricPair, QuasitoricError> {
    if e1.abs() != 1 || e2.abs() != 1 || (e1 * e2 - d1 * d2).abs() != 1 {
        return Err(QuasitoricError::InvalidParameters(format!(
            "square needs ε = ±1 and ε1ε2 - δ1δ2 = ±1 (got ε = ({e1}, {e2}), δ = ({d1}, {d2}))"
        )));
    }
    let polytope = Polytope::new(2, 4, vec![vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 1]])
        .with_integer_normals(&[vec![1, 0, -1, 0], vec![0, 1, 0, -1]]);
    Ok(QuasitoricPair {
        name: format!("square:eps={e1},{e2}:delta={d1},{d2}"),
        polytope,
        lambda: CharMatrix::from_i64(&[vec![1, 0, e1, d2], vec![0, 1, d1, e2]])?,
    })
}

/// The product pair, with columns reordered to `[p leading, q leading, p rest,
/// q rest]` so that the result is again refined.
pub fn product_pair(p: &QuasitoricPair, q: &QuasitoricPair) -> QuasitoricPair {
    let (np, mp) = (p.polytope.n, p.polytope.m);
    let (nq, mq) = (q.polytope.n, q.polytope.m);
    let (n, m) = (np + nq, mp + mq);
    let map_p = |i: usize| if i <= np { i } else { nq + i };
    let map_q = |j: usize| if j <= nq { np + j } else { mp + j };
    let mut vertices = Vec::new();
    for vp in &p.polytope.vertices {
        for vq in &q.polytope.vertices {
            let mut v: Vec<usize> = vp.iter().map(|&i| map_p(i)).collect();
            v.extend(vq.iter().map(|&j| map_q(j)));
            vertices.push(v);
        }
    }
    let zero = num_bigint::BigInt::from(0);
    let mut lambda = vec![vec![zero; m]; n];
    for (r, row) in p.lambda.entries().iter().enumerate() {
        for (c, x) in row.iter().enumerate() {
            lambda[r][map_p(c + 1) - 1] = x.clone();
        }
    }
    for (r, row) in q.lambda.entries().iter().enumerate() {
        for (c, x) in row.iter().enumerate() {
            lambda[np + r][map_q(c + 1) - 1] = x.clone();
        }
    }
    let mut polytope = Polytope::new(n, m, vertices);
    if let (Some(a), Some(b)) = (&p.polytope.normals, &q.polytope.normals) {
        let mut normals = vec![vec![Rational::from_integer(0.into()); m]; n];
        for (r, row) in a.iter().enumerate() {
            for (c, x) in row.iter().enumerate() {
                normals[r][map_p(c + 1) - 1] = x.clone();
            }
        }
        for (r, row) in b.iter().enumerate() {
            for (c, x) in row.iter().enumerate() {
                normals[np + r][map_q(c + 1) - 1] = x.clone();
            }
        }
        polytope = polytope.with_normals(normals);
    } else if let (Some(a), Some(b)) = (&p.polytope.positive_orderings, &q.polytope.positive_orderings) {
        let mut orders = Vec::new();
        for oa in a {
            for ob in b {
                let mut o: Vec<usize> = oa.iter().map(|&i| map_p(i)).collect();
                o.extend(ob.iter().map(|&j| map_q(j)));
                orders.push(o);
            }
        }
        polytope = polytope.with_positive_orderings(orders);
    }
    QuasitoricPair {
        name: format!("{}*{}", p.name, q.name),
        polytope,
        lambda: CharMatrix::new(lambda).expect("rectangular"),
    }
}
