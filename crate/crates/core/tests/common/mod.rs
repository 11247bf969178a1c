//! Strategies and property bodies shared by the property suite and the
//! acceptance runner.

#![allow(dead_code)]

use num_traits::{One, Zero};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;
use equigenus::algebra::{
    integer, rational, LinearForm, LocalizedSum, MultiSeries, Poly, Rational, Ring,
};

pub const CASES: u32 = 200;

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-5i64..=5, 1i64..=4).prop_map(|(n, d)| rational(n, d))
}

pub fn linear_form(k: usize) -> impl Strategy<Value = LinearForm> {
    prop::collection::vec(-3i64..=3, k)
        .prop_filter("nonzero form", |v| v.iter().any(|&x| x != 0))
        .prop_map(|v| LinearForm::new(v).unwrap())
}

/// A polynomial in `u1, u2` of total degree at most `max_degree`, stored in a
/// series of the given order.
pub fn polynomial(max_degree: u32, order: u32) -> impl Strategy<Value = MultiSeries> {
    prop::collection::vec(((0..=max_degree), (0..=max_degree), small_rational()), 0..6).prop_map(
        move |terms| {
            let q = Ring::rationals();
            let terms: Vec<(Vec<u32>, Poly)> = terms
                .into_iter()
                .filter(|(a, b, _)| a + b <= max_degree)
                .map(|(a, b, c)| (vec![a, b], Poly::constant(&q, c)))
                .collect();
            let mut s = MultiSeries::zero(&q, 2, order);
            for (e, c) in terms {
                let t = MultiSeries::from_terms(&q, 2, order, vec![(e, c)]).unwrap();
                s = s.add(&t).unwrap();
            }
            s
        },
    )
}

pub fn rational_point() -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(small_rational(), 2)
}

/// Evaluates a series with constant coefficients at a rational point.
pub fn evaluate(s: &MultiSeries, point: &[Rational]) -> Rational {
    let mut total = Rational::zero();
    for (e, c) in s.terms() {
        let mut v = c.as_constant().expect("constant coefficients");
        for (x, &k) in point.iter().zip(e) {
            for _ in 0..k {
                v *= x.clone();
            }
        }
        total += v;
    }
    total
}

pub fn evaluate_form(l: &LinearForm, point: &[Rational]) -> Rational {
    l.coefficients()
        .iter()
        .zip(point)
        .fold(Rational::zero(), |acc, (&c, x)| acc + integer(c) * x.clone())
}

/// `x + c0 x^2 + c1 x^3 + …` reverts to a series `r` with `s(r(x)) = r(s(x)) = x`.
pub fn prop_reversion(coeffs: Vec<Rational>) -> Result<(), TestCaseError> {
    let q = Ring::rationals();
    let order = coeffs.len() as u32 + 1;
    let mut cs = vec![Poly::zero(&q), Poly::one(&q)];
    cs.extend(coeffs.iter().map(|c| Poly::constant(&q, c.clone())));
    let s = MultiSeries::univariate(&q, order, &cs);
    let r = s.revert().unwrap();
    let x = MultiSeries::variable(&q, 1, order, 0);
    prop_assert_eq!(s.substitute(std::slice::from_ref(&r)).unwrap(), x.clone());
    prop_assert_eq!(r.substitute(&[s]).unwrap(), x);
    Ok(())
}

/// A series with nonzero constant term times its inverse is 1.
pub fn prop_invert_unit(p: MultiSeries, c: Rational) -> Result<(), TestCaseError> {
    prop_assume!(!c.is_zero());
    let q = p.ring().clone();
    let unit = p
        .add(&MultiSeries::constant(&q, 2, p.order(), &Poly::constant(&q, c)))
        .unwrap();
    let unit = if unit.constant_term().is_zero() {
        unit.add(&MultiSeries::one(&q, 2, p.order())).unwrap()
    } else {
        unit
    };
    let inv = unit.invert_unit().unwrap();
    prop_assert_eq!(unit.mul(&inv).unwrap(), MultiSeries::one(&q, 2, p.order()));
    Ok(())
}

/// `(P L)/L = P`, and adding a nonzero constant breaks divisibility.
pub fn prop_divide_linear(p: MultiSeries, l: LinearForm, c: Rational) -> Result<(), TestCaseError> {
    let pl = p.mul_linear_form(&l).unwrap();
    prop_assert_eq!(pl.divide_by_linear_form(&l).unwrap(), p.clone());
    if !c.is_zero() {
        let q = p.ring().clone();
        let shifted = pl
            .add(&MultiSeries::constant(&q, 2, pl.order(), &Poly::constant(&q, c)))
            .unwrap();
        prop_assert!(shifted.divide_by_linear_form(&l).is_err());
    }
    Ok(())
}

/// A localized sum designed to equal `target`: two free terms over `L1` and
/// `L2 L3`, and a balancing term over `L1 L2 L3`.
#[derive(Clone, Debug)]
pub struct Designed {
    pub forms: [LinearForm; 3],
    pub target: MultiSeries,
    pub n1: MultiSeries,
    pub n2: MultiSeries,
}

pub const ORDER: u32 = 8;

pub fn designed() -> impl Strategy<Value = Designed> {
    (
        linear_form(2),
        linear_form(2),
        linear_form(2),
        polynomial(2, ORDER),
        polynomial(2, ORDER),
        polynomial(3, ORDER),
    )
        .prop_map(|(a, b, c, target, n1, n2)| Designed {
            forms: [a, b, c],
            target,
            n1,
            n2,
        })
}

impl Designed {
    fn balancing(&self) -> MultiSeries {
        let [l1, l2, l3] = &self.forms;
        let full = self
            .target
            .mul_linear_form(l1)
            .unwrap()
            .mul_linear_form(l2)
            .unwrap()
            .mul_linear_form(l3)
            .unwrap();
        let a = self.n1.mul_linear_form(l2).unwrap().mul_linear_form(l3).unwrap();
        let b = self.n2.mul_linear_form(l1).unwrap();
        full.sub(&a).unwrap().sub(&b).unwrap().truncate(ORDER)
    }

    /// The three terms; with `split`, `n1` is spread over two terms and the
    /// order of terms is reversed.
    pub fn sum(&self, split: bool) -> LocalizedSum {
        let q = Ring::rationals();
        let [l1, l2, l3] = &self.forms;
        let mut terms = vec![
            (self.n1.clone(), vec![l1.clone()]),
            (self.n2.clone(), vec![l2.clone(), l3.clone()]),
            (self.balancing(), vec![l1.clone(), l2.clone(), l3.clone()]),
        ];
        if split {
            let half = self.n1.scale(&rational(1, 3));
            let rest = self.n1.sub(&half).unwrap();
            terms[0] = (half, vec![l1.clone()]);
            terms.push((rest, vec![l1.clone()]));
            terms.reverse();
        }
        let mut s = LocalizedSum::new(&q, 2, ORDER);
        for (n, d) in terms {
            s.push(n, d).unwrap();
        }
        s
    }
}

/// Normalization recovers the designed polynomial, independently of how the
/// sum is split into terms.
pub fn prop_normalize_split(d: Designed) -> Result<(), TestCaseError> {
    let a = d.sum(false).normalize().unwrap();
    let b = d.sum(true).normalize().unwrap();
    prop_assert_eq!(&a, &d.target.truncate(a.order()));
    prop_assert_eq!(a, b);
    Ok(())
}

/// Evaluating every term at a rational point off the hyperplanes agrees with
/// evaluating the normalized series.
pub fn prop_numeric_oracle(d: Designed, point: Vec<Rational>) -> Result<(), TestCaseError> {
    prop_assume!(d.forms.iter().all(|l| !evaluate_form(l, &point).is_zero()));
    let sum = d.sum(false);
    let mut direct = Rational::zero();
    for (n, forms) in sum.terms() {
        let den = forms
            .iter()
            .fold(Rational::one(), |acc, l| acc * evaluate_form(l, &point));
        direct += evaluate(n, &point) / den;
    }
    let normalized = sum.normalize().unwrap();
    prop_assert_eq!(direct, evaluate(&normalized, &point));
    Ok(())
}
