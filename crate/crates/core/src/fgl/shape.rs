//! Recognizing the two-coefficient shape
//! `F = u1 c(u2) + u2 c(u1) - a u1 u2 - (d(u1) - d(u2))/(u1 c(u2) - u2 c(u1)) u1^2 u2^2`.

use super::genus::{catalog, GenusSpec};
use super::law::fgl_from_exponential;
use super::FglError;
use crate::algebra::{integer, AlgebraError, LinearForm, MultiSeries, Poly, Ring};

/// The data `(a, c, d)` recovered from a formal group law, and the order to
/// which the shape identity was verified.
#[derive(Clone, Debug)]
pub struct BsfglShape {
    pub a: Poly,
    pub c: MultiSeries,
    pub d: MultiSeries,
    pub checked_order: u32,
}

fn e(k: usize, i: usize) -> LinearForm {
    let mut v = vec![0; k];
    v[i] = 1;
    LinearForm::new(v).expect("nonzero")
}

fn u1_minus_u2() -> LinearForm {
    LinearForm::new(vec![1, -1]).expect("nonzero")
}

fn mismatch(degree: i64, detail: &str) -> FglError {
    FglError::ShapeMismatch {
        degree,
        detail: detail.to_string(),
    }
}

fn lowest_difference(a: &MultiSeries, b: &MultiSeries) -> Option<u32> {
    let diff = a.sub(b).ok()?;
    diff.lowest_degree()
}

/// Recovers `a = -[u1 u2]F`, `c(u) = dF/du2(u, 0) + a u` and
/// `d(u) = c2 - [u2^2]F(u, u2)/u`, then checks the shape identity. The law is
/// computed four degrees past `order` when the genus allows it, so the
/// quotient term is verified through `order`.
pub fn verify_bsfgl_shape(spec: &GenusSpec, order: u32) -> Result<BsfglShape, FglError> {
    let work = spec.at_order(order + 4).or_else(|_| Ok::<_, FglError>(spec.clone()))?;
    let f = fgl_from_exponential(&work);
    let f = f.series();
    let ring = f.ring().clone();
    let n = f.order();
    if n < 4 {
        return Err(FglError::OrderUnavailable {
            requested: 4,
            available: n,
        });
    }
    let a = -f.coefficient(&[1, 1]);
    let pick = |s: &MultiSeries, e2: u32, order: u32| -> Result<MultiSeries, AlgebraError> {
        let terms: Vec<_> = s
            .terms()
            .filter(|(e, _)| e[1] == e2)
            .map(|(e, c)| (vec![e[0]], c))
            .collect();
        MultiSeries::from_terms(&ring, 1, order, terms)
    };
    let x = e(1, 0);
    let c = pick(&f.derivative(1), 0, n - 1)?
        .add(&MultiSeries::variable(&ring, 1, n - 1, 0).scale_poly(&a))?;
    let c2 = c.coefficient(&[2]);
    let d = MultiSeries::constant(&ring, 1, n - 3, &c2)
        .sub(&pick(f, 2, n - 2)?.divide_by_linear_form(&x)?)?;
    if !d.constant_term().is_zero() {
        return Err(mismatch(3, "d(u) has a constant term"));
    }

    let (c1, c2s) = (c.substitute_linear_form(&e(2, 0)), c.substitute_linear_form(&e(2, 1)));
    let (d1, d2) = (d.substitute_linear_form(&e(2, 0)), d.substitute_linear_form(&e(2, 1)));
    let u1c2 = c2s.mul_linear_form(&e(2, 0))?;
    let u2c1 = c1.mul_linear_form(&e(2, 1))?;
    let u1u2 = MultiSeries::from_terms(&ring, 2, n, [(vec![1, 1], a.clone())])?;
    let base = u1c2.add(&u2c1)?.sub(&u1u2)?;
    let mut rest = base.sub(f)?;
    for i in [0, 0, 1, 1] {
        rest = rest
            .divide_by_linear_form(&e(2, i))
            .map_err(|err| match err {
                AlgebraError::NotDivisible { degree } => {
                    mismatch(degree, "remainder is not a multiple of u1^2 u2^2")
                }
                other => other.into(),
            })?;
    }
    let num = d1.sub(&d2)?.divide_by_linear_form(&u1_minus_u2())?;
    let den = u1c2.sub(&u2c1)?.divide_by_linear_form(&u1_minus_u2())?;
    let quotient = num.mul(&den.invert_unit()?)?;
    if let Some(deg) = lowest_difference(&rest, &quotient) {
        return Err(mismatch(deg as i64 + 4, "quotient term differs"));
    }
    Ok(BsfglShape {
        a,
        c,
        d,
        checked_order: rest.order().min(quotient.order()) + 4,
    })
}

/// `R(u) = 1 - 2 delta u^2 + epsilon u^4` over the elliptic coefficient ring.
pub fn elliptic_quartic(ring: &Ring, order: u32) -> Result<MultiSeries, FglError> {
    let delta = Poly::generator(ring, "delta")?;
    let eps = Poly::generator(ring, "epsilon")?;
    let coeffs = [
        Poly::one(ring),
        Poly::zero(ring),
        delta.scale(&integer(-2)),
        Poly::zero(ring),
        eps,
    ];
    Ok(MultiSeries::univariate(ring, order, &coeffs))
}

/// Whether the elliptic law equals `(u1 c(u2) + u2 c(u1))/(1 - epsilon u1^2 u2^2)`
/// with `c = sqrt(R)` through `order`.
pub fn elliptic_fgl_check(order: u32) -> Result<bool, FglError> {
    let spec = catalog("elliptic", order)?;
    let f = fgl_from_exponential(&spec);
    let ring = spec.ring().clone();
    let c = elliptic_quartic(&ring, order)?.sqrt_unit()?;
    let u1c2 = c.substitute_linear_form(&e(2, 1)).mul_linear_form(&e(2, 0))?;
    let u2c1 = c.substitute_linear_form(&e(2, 0)).mul_linear_form(&e(2, 1))?;
    let eps = Poly::generator(&ring, "epsilon")?;
    let den = MultiSeries::from_terms(
        &ring,
        2,
        order,
        [(vec![0, 0], Poly::one(&ring)), (vec![2, 2], -eps)],
    )?;
    let rhs = u1c2.add(&u2c1)?.mul(&den.invert_unit()?)?;
    Ok(rhs.truncate(order) == *f.series())
}
