use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::monomial::Monomial;
use super::ring::Ring;
use super::AlgebraError;

/// Exact rational numbers with arbitrary-precision numerator and denominator.
pub type Rational = BigRational;

pub(crate) type Terms = BTreeMap<Monomial, Rational>;

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn integer(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub(crate) fn add_term(terms: &mut Terms, m: Monomial, c: Rational) {
    if c.is_zero() {
        return;
    }
    match terms.entry(m) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// `dst += scale * src`
pub(crate) fn add_scaled(dst: &mut Terms, src: &Terms, scale: &Rational) {
    if scale.is_zero() {
        return;
    }
    for (m, c) in src {
        add_term(dst, m.clone(), c * scale);
    }
}

pub(crate) fn add_assign(dst: &mut Terms, src: &Terms) {
    for (m, c) in src {
        add_term(dst, m.clone(), c.clone());
    }
}

pub(crate) fn sub_assign(dst: &mut Terms, src: &Terms) {
    for (m, c) in src {
        add_term(dst, m.clone(), -c.clone());
    }
}

pub(crate) fn mul_terms(a: &Terms, b: &Terms) -> Terms {
    let mut out = Terms::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            add_term(&mut out, ma.mul(mb), ca * cb);
        }
    }
    out
}

/// `dst += a * b`
pub(crate) fn add_product(dst: &mut Terms, a: &Terms, b: &Terms) {
    for (ma, ca) in a {
        for (mb, cb) in b {
            add_term(dst, ma.mul(mb), ca * cb);
        }
    }
}

pub(crate) fn scale_terms(a: &Terms, s: &Rational) -> Terms {
    if s.is_zero() {
        return Terms::new();
    }
    a.iter().map(|(m, c)| (m.clone(), c * s)).collect()
}

pub(crate) fn constant_terms(nvars: usize, c: Rational) -> Terms {
    let mut t = Terms::new();
    add_term(&mut t, Monomial::one(nvars), c);
    t
}

/// The rational value of a constant coefficient, if it is one.
pub(crate) fn as_constant(t: &Terms) -> Option<Rational> {
    match t.len() {
        0 => Some(Rational::zero()),
        1 => {
            let (m, c) = t.iter().next().unwrap();
            m.is_one().then(|| c.clone())
        }
        _ => None,
    }
}

/// A sparse polynomial with rational coefficients in the generators of a
/// [`Ring`].
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    ring: Ring,
    terms: Terms,
}

impl Poly {
    pub fn zero(ring: &Ring) -> Self {
        Poly {
            ring: ring.clone(),
            terms: Terms::new(),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        Poly::constant(ring, Rational::one())
    }

    pub fn constant(ring: &Ring, c: Rational) -> Self {
        Poly {
            ring: ring.clone(),
            terms: constant_terms(ring.len(), c),
        }
    }

    pub fn integer(ring: &Ring, n: i64) -> Self {
        Poly::constant(ring, integer(n))
    }

    pub fn generator(ring: &Ring, name: &str) -> Result<Self, AlgebraError> {
        let i = ring
            .index_of(name)
            .ok_or_else(|| AlgebraError::UnknownGenerator(name.to_string()))?;
        let mut terms = Terms::new();
        terms.insert(Monomial::var(ring.len(), i), Rational::one());
        Ok(Poly {
            ring: ring.clone(),
            terms,
        })
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, merging
    /// repeated exponents and dropping zeros.
    pub fn from_terms(
        ring: &Ring,
        terms: impl IntoIterator<Item = (Vec<u32>, Rational)>,
    ) -> Result<Self, AlgebraError> {
        let mut out = Terms::new();
        for (e, c) in terms {
            if e.len() != ring.len() {
                return Err(AlgebraError::Shape(format!(
                    "exponent vector of length {} in a ring with {} generators",
                    e.len(),
                    ring.len()
                )));
            }
            add_term(&mut out, Monomial::new(e), c);
        }
        Ok(Poly {
            ring: ring.clone(),
            terms: out,
        })
    }

    pub(crate) fn from_raw(ring: &Ring, terms: Terms) -> Self {
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    pub(crate) fn raw(&self) -> &Terms {
        &self.terms
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The rational value if the polynomial is a constant.
    pub fn as_constant(&self) -> Option<Rational> {
        as_constant(&self.terms)
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(m, c)| (m.exponents(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> Rational {
        self.terms
            .get(&Monomial::new(exponents.to_vec()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, s: &Rational) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: scale_terms(&self.terms, s),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(&self.ring);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Partial derivative with respect to the generator at `index`.
    pub fn derivative(&self, index: usize) -> Poly {
        let mut out = Terms::new();
        for (m, c) in &self.terms {
            let e = m.get(index);
            if e > 0 {
                add_term(&mut out, m.with_exponent(index, e - 1), c * integer(e as i64));
            }
        }
        Poly::from_raw(&self.ring, out)
    }

    /// Replaces every generator by a polynomial in `target`.
    ///
    /// `images[i]` is the image of the `i`-th generator of this ring.
    pub fn substitute(&self, target: &Ring, images: &[Poly]) -> Result<Poly, AlgebraError> {
        if images.len() != self.ring.len() {
            return Err(AlgebraError::Shape(format!(
                "{} images for {} generators",
                images.len(),
                self.ring.len()
            )));
        }
        if images.iter().any(|p| &p.ring != target) {
            return Err(AlgebraError::RingMismatch);
        }
        Ok(Poly::from_raw(
            target,
            substitute_terms(&self.terms, target.len(), images),
        ))
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        assert_eq!(self.ring, divisor.ring, "ring mismatch");
        let (lead_m, lead_c) = divisor.terms.iter().next_back()?;
        let mut rem = self.terms.clone();
        let mut quot = Terms::new();
        while let Some((m, c)) = rem.iter().next_back() {
            if !lead_m.divides(m) {
                return None;
            }
            let qm = lead_m.quotient_of(m);
            let qc = c / lead_c;
            for (dm, dc) in &divisor.terms {
                add_term(&mut rem, dm.mul(&qm), -(dc * &qc));
            }
            add_term(&mut quot, qm, qc);
        }
        Some(Poly::from_raw(&self.ring, quot))
    }
}

pub(crate) fn substitute_terms(terms: &Terms, target_len: usize, images: &[Poly]) -> Terms {
    let mut out = Terms::new();
    let mut powers: Vec<Vec<Terms>> = images
        .iter()
        .map(|_| vec![constant_terms(target_len, Rational::one())])
        .collect();
    for (m, c) in terms {
        let mut acc = constant_terms(target_len, c.clone());
        for (i, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            while powers[i].len() <= e as usize {
                let next = mul_terms(powers[i].last().unwrap(), &images[i].terms);
                powers[i].push(next);
            }
            acc = mul_terms(&acc, &powers[i][e as usize]);
        }
        add_assign(&mut out, &acc);
    }
    out
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.ring, rhs.ring, "ring mismatch");
        let mut t = self.terms.clone();
        add_assign(&mut t, &rhs.terms);
        Poly::from_raw(&self.ring, t)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        assert_eq!(self.ring, rhs.ring, "ring mismatch");
        let mut t = self.terms.clone();
        sub_assign(&mut t, &rhs.terms);
        Poly::from_raw(&self.ring, t)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.ring, rhs.ring, "ring mismatch");
        Poly::from_raw(&self.ring, mul_terms(&self.terms, &rhs.terms))
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Rational::one())
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn yz() -> Ring {
        Ring::from_names(&[("y", 2), ("z", 2)]).unwrap()
    }

    #[test]
    fn arithmetic_drops_zeros() {
        let r = yz();
        let y = Poly::generator(&r, "y").unwrap();
        let z = Poly::generator(&r, "z").unwrap();
        let s = &y + &z;
        let d = &s - &y;
        assert_eq!(d, z);
        assert!((&d - &z).is_zero());
        assert_eq!((&y * &z).num_terms(), 1);
    }

    #[test]
    fn exact_division_by_y_minus_z() {
        let r = yz();
        let y = Poly::generator(&r, "y").unwrap();
        let z = Poly::generator(&r, "z").unwrap();
        let num = &y.pow(3) - &z.pow(3);
        let den = &y - &z;
        let q = num.div_exact(&den).unwrap();
        let expected = &(&y.pow(2) + &(&y * &z)) + &z.pow(2);
        assert_eq!(q, expected);
        assert!((&y.pow(2) + &z).div_exact(&den).is_none());
    }

    #[test]
    fn substitution_specializes() {
        let r = yz();
        let target = Ring::from_names(&[("v", 2)]).unwrap();
        let v = Poly::generator(&target, "v").unwrap();
        let y = Poly::generator(&r, "y").unwrap();
        let z = Poly::generator(&r, "z").unwrap();
        let p = &y * &z;
        let s = p.substitute(&target, &[-&v, -&v]).unwrap();
        assert_eq!(s, v.pow(2));
    }

    #[test]
    fn derivative() {
        let r = yz();
        let y = Poly::generator(&r, "y").unwrap();
        let p = y.pow(3).scale(&rational(1, 3));
        assert_eq!(p.derivative(0), y.pow(2));
        assert!(p.derivative(1).is_zero());
    }
}
