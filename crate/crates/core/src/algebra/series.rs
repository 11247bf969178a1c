use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::linear::LinearForm;
use super::monomial::Monomial;
use super::poly::{
    add_assign, add_product, add_scaled, constant_terms, integer, mul_terms,
    scale_terms, substitute_terms, sub_assign, Poly, Rational, Terms,
};
use super::ring::Ring;
use super::AlgebraError;

/// One homogeneous slice of a series: u-monomial to coefficient.
pub(crate) type Slice = BTreeMap<Monomial, Terms>;

/// A power series in `u1, …, uk` with [`Poly`] coefficients, known exactly up
/// to total u-degree `order` (everything above is truncated away).
///
/// With `k = 0` the series is just a coefficient-ring element.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiSeries {
    ring: Ring,
    nvars: usize,
    order: u32,
    terms: BTreeMap<Monomial, Terms>,
}

impl MultiSeries {
    pub fn zero(ring: &Ring, nvars: usize, order: u32) -> Self {
        MultiSeries {
            ring: ring.clone(),
            nvars,
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Ring, nvars: usize, order: u32) -> Self {
        Self::constant(ring, nvars, order, &Poly::one(ring))
    }

    pub fn constant(ring: &Ring, nvars: usize, order: u32, c: &Poly) -> Self {
        assert_eq!(c.ring(), ring, "ring mismatch");
        let mut s = Self::zero(ring, nvars, order);
        if !c.is_zero() {
            s.terms.insert(Monomial::one(nvars), c.raw().clone());
        }
        s
    }

    /// The variable `u_{i+1}` (zero-based `i`).
    pub fn variable(ring: &Ring, nvars: usize, order: u32, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut s = Self::zero(ring, nvars, order);
        if order >= 1 {
            s.terms.insert(
                Monomial::var(nvars, i),
                constant_terms(ring.len(), Rational::one()),
            );
        }
        s
    }

    /// Builds a series from `(u-exponents, coefficient)` pairs; terms above
    /// `order` are discarded.
    pub fn from_terms(
        ring: &Ring,
        nvars: usize,
        order: u32,
        terms: impl IntoIterator<Item = (Vec<u32>, Poly)>,
    ) -> Result<Self, AlgebraError> {
        let mut s = Self::zero(ring, nvars, order);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(AlgebraError::Shape(format!(
                    "u-exponent vector of length {} for {} variables",
                    e.len(),
                    nvars
                )));
            }
            if c.ring() != ring {
                return Err(AlgebraError::RingMismatch);
            }
            let m = Monomial::new(e);
            if m.degree() <= order {
                s.add_coefficient(m, c.raw());
            }
        }
        Ok(s)
    }

    /// `sum_j coeffs[j] * x^j` in one variable.
    pub fn univariate(ring: &Ring, order: u32, coeffs: &[Poly]) -> Self {
        let mut s = Self::zero(ring, 1, order);
        for (j, c) in coeffs.iter().enumerate().take(order as usize + 1) {
            assert_eq!(c.ring(), ring, "ring mismatch");
            s.add_coefficient(Monomial::new(vec![j as u32]), c.raw());
        }
        s
    }

    pub(crate) fn from_raw(
        ring: &Ring,
        nvars: usize,
        order: u32,
        terms: BTreeMap<Monomial, Terms>,
    ) -> Self {
        let mut s = Self::zero(ring, nvars, order);
        for (m, c) in terms {
            if m.degree() <= order && !c.is_empty() {
                s.terms.insert(m, c);
            }
        }
        s
    }

    pub(crate) fn add_coefficient(&mut self, m: Monomial, c: &Terms) {
        if c.is_empty() || m.degree() > self.order {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_default();
        add_assign(entry, c);
        if entry.is_empty() {
            self.terms.remove(&m);
        }
    }

    pub(crate) fn raw_terms(&self) -> &BTreeMap<Monomial, Terms> {
        &self.terms
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Nonzero terms in ascending graded-lex order of the u-monomials.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], Poly)> + '_ {
        self.terms
            .iter()
            .map(|(m, c)| (m.exponents(), Poly::from_raw(&self.ring, c.clone())))
    }

    pub fn coefficient(&self, exponents: &[u32]) -> Poly {
        assert_eq!(exponents.len(), self.nvars, "wrong number of exponents");
        self.terms
            .get(&Monomial::new(exponents.to_vec()))
            .map(|c| Poly::from_raw(&self.ring, c.clone()))
            .unwrap_or_else(|| Poly::zero(&self.ring))
    }

    pub fn constant_term(&self) -> Poly {
        self.coefficient(&vec![0; self.nvars])
    }

    /// Coefficients `[c_0, …, c_order]` of a univariate series.
    pub fn univariate_coefficients(&self) -> Vec<Poly> {
        assert_eq!(self.nvars, 1, "not a univariate series");
        (0..=self.order).map(|j| self.coefficient(&[j])).collect()
    }

    /// The lowest total degree carrying a nonzero term.
    pub fn lowest_degree(&self) -> Option<u32> {
        self.terms.keys().next().map(|m| m.degree())
    }

    /// The degree-`d` homogeneous part, as a series of the same order.
    pub fn homogeneous_part(&self, d: u32) -> MultiSeries {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.degree() == d)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        MultiSeries {
            ring: self.ring.clone(),
            nvars: self.nvars,
            order: self.order,
            terms,
        }
    }

    pub fn is_homogeneous_of_degree(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    pub(crate) fn slices(&self) -> Vec<Slice> {
        let mut out = vec![Slice::new(); self.order as usize + 1];
        for (m, c) in &self.terms {
            out[m.degree() as usize].insert(m.clone(), c.clone());
        }
        out
    }

    pub(crate) fn from_slices(ring: &Ring, nvars: usize, order: u32, slices: Vec<Slice>) -> Self {
        let mut terms = BTreeMap::new();
        for s in slices {
            for (m, c) in s {
                if m.degree() <= order && !c.is_empty() {
                    terms.insert(m, c);
                }
            }
        }
        MultiSeries {
            ring: ring.clone(),
            nvars,
            order,
            terms,
        }
    }

    /// Drops everything above `order` (never raises the order).
    pub fn truncate(&self, order: u32) -> MultiSeries {
        let order = order.min(self.order);
        MultiSeries {
            ring: self.ring.clone(),
            nvars: self.nvars,
            order,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= order)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Reinterprets the stored terms as exact to `order`. Only valid when the
    /// caller knows the series is a polynomial of degree at most `self.order`.
    pub(crate) fn assume_exact(mut self, order: u32) -> MultiSeries {
        self.order = order;
        self.terms.retain(|m, _| m.degree() <= order);
        self
    }

    fn check_compatible(&self, other: &MultiSeries) -> Result<(), AlgebraError> {
        if self.ring != other.ring {
            return Err(AlgebraError::RingMismatch);
        }
        if self.nvars != other.nvars {
            return Err(AlgebraError::VariableCountMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &MultiSeries) -> Result<MultiSeries, AlgebraError> {
        self.check_compatible(other)?;
        let mut out = self.truncate(other.order);
        for (m, c) in &other.terms {
            out.add_coefficient(m.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &MultiSeries) -> Result<MultiSeries, AlgebraError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MultiSeries {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, s: &Rational) -> MultiSeries {
        let terms = if s.is_zero() {
            BTreeMap::new()
        } else {
            self.terms
                .iter()
                .map(|(m, c)| (m.clone(), scale_terms(c, s)))
                .collect()
        };
        MultiSeries {
            terms,
            ..self.clone_shape()
        }
    }

    pub fn scale_poly(&self, p: &Poly) -> MultiSeries {
        assert_eq!(p.ring(), &self.ring, "ring mismatch");
        let mut out = self.clone_shape();
        for (m, c) in &self.terms {
            let prod = mul_terms(c, p.raw());
            if !prod.is_empty() {
                out.terms.insert(m.clone(), prod);
            }
        }
        out
    }

    fn clone_shape(&self) -> MultiSeries {
        MultiSeries::zero(&self.ring, self.nvars, self.order)
    }

    /// Cauchy product truncated to the smaller of the two orders.
    pub fn mul(&self, other: &MultiSeries) -> Result<MultiSeries, AlgebraError> {
        self.check_compatible(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &MultiSeries) -> MultiSeries {
        let order = self.order.min(other.order);
        let mut acc: BTreeMap<Monomial, Terms> = BTreeMap::new();
        let b: Vec<(&Monomial, &Terms, u32)> =
            other.terms.iter().map(|(m, c)| (m, c, m.degree())).collect();
        for (ma, ca) in &self.terms {
            let da = ma.degree();
            if da > order {
                break;
            }
            for &(mb, cb, db) in &b {
                if da + db > order {
                    break;
                }
                let entry = acc.entry(ma.mul(mb)).or_default();
                add_product(entry, ca, cb);
            }
        }
        MultiSeries::from_raw(&self.ring, self.nvars, order, acc)
    }

    pub fn pow(&self, e: u32) -> MultiSeries {
        let mut acc = MultiSeries::one(&self.ring, self.nvars, self.order);
        for _ in 0..e {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// Multiplicative inverse of a series whose constant term is a nonzero
    /// rational number.
    pub fn invert_unit(&self) -> Result<MultiSeries, AlgebraError> {
        let c0 = self.constant_term();
        let c0 = match c0.as_constant() {
            Some(c) if !c.is_zero() => c,
            _ => return Err(AlgebraError::NotAUnit),
        };
        let inv0 = c0.recip();
        let s = self.slices();
        let mut t: Vec<Slice> = Vec::with_capacity(s.len());
        let mut first = Slice::new();
        first.insert(
            Monomial::one(self.nvars),
            constant_terms(self.ring.len(), inv0.clone()),
        );
        t.push(first);
        for d in 1..=self.order as usize {
            let mut acc = Slice::new();
            for e in 1..=d {
                mul_slices_into(&mut acc, &s[e], &t[d - e]);
            }
            let minus_inv = -inv0.clone();
            let slice: Slice = acc
                .into_iter()
                .filter(|(_, c)| !c.is_empty())
                .map(|(m, c)| (m, scale_terms(&c, &minus_inv)))
                .collect();
            t.push(slice);
        }
        Ok(MultiSeries::from_slices(
            &self.ring,
            self.nvars,
            self.order,
            t,
        ))
    }

    /// Substitutes `images[i]` for `u_{i+1}`. Every image must have zero
    /// constant term; the images may live in a different number of variables.
    pub fn substitute(&self, images: &[MultiSeries]) -> Result<MultiSeries, AlgebraError> {
        if images.len() != self.nvars {
            return Err(AlgebraError::Shape(format!(
                "{} images for {} variables",
                images.len(),
                self.nvars
            )));
        }
        let Some(first) = images.first() else {
            return Ok(self.clone());
        };
        let target_vars = first.nvars;
        let mut order = self.order;
        for img in images {
            if img.ring != self.ring {
                return Err(AlgebraError::RingMismatch);
            }
            if img.nvars != target_vars {
                return Err(AlgebraError::VariableCountMismatch {
                    left: target_vars,
                    right: img.nvars,
                });
            }
            if !img.constant_term().is_zero() {
                return Err(AlgebraError::NonzeroConstantTerm);
            }
            order = order.min(img.order);
        }
        if self.nvars == 1 {
            return Ok(self.compose_univariate(&images[0].truncate(order)));
        }
        let mut powers: Vec<Vec<MultiSeries>> = images
            .iter()
            .map(|img| vec![MultiSeries::one(&self.ring, target_vars, order), img.truncate(order)])
            .collect();
        let mut out = MultiSeries::zero(&self.ring, target_vars, order);
        for (m, c) in &self.terms {
            if m.degree() > order {
                break;
            }
            let mut acc = MultiSeries::constant(
                &self.ring,
                target_vars,
                order,
                &Poly::from_raw(&self.ring, c.clone()),
            );
            for (i, &e) in m.exponents().iter().enumerate() {
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul_unchecked(&powers[i][1]);
                    powers[i].push(next);
                }
                if e > 0 {
                    acc = acc.mul_unchecked(&powers[i][e as usize]);
                }
            }
            for (m2, c2) in acc.terms {
                out.add_coefficient(m2, &c2);
            }
        }
        Ok(out)
    }

    /// `self(g)` for univariate `self` by Horner's rule; `g` must have zero
    /// constant term (checked by callers).
    pub(crate) fn compose_univariate(&self, g: &MultiSeries) -> MultiSeries {
        debug_assert_eq!(self.nvars, 1);
        let order = self.order.min(g.order);
        let coeffs = self.univariate_coefficients();
        let mut acc = MultiSeries::zero(&self.ring, g.nvars, order);
        for c in coeffs.iter().take(order as usize + 1).rev() {
            acc = acc.mul_unchecked(g);
            if !c.is_zero() {
                acc.add_coefficient(Monomial::one(g.nvars), c.raw());
            }
        }
        acc
    }

    /// Compositional inverse of a univariate `f = x + O(x^2)`.
    pub fn revert(&self) -> Result<MultiSeries, AlgebraError> {
        if self.nvars != 1 {
            return Err(AlgebraError::Shape("reversion needs a univariate series".into()));
        }
        if !self.constant_term().is_zero() {
            return Err(AlgebraError::NotRevertible("nonzero constant term".into()));
        }
        if self.order == 0 {
            return Ok(self.clone());
        }
        if self.coefficient(&[1]).as_constant() != Some(Rational::one()) {
            return Err(AlgebraError::NotRevertible(
                "coefficient of x is not 1".into(),
            ));
        }
        let mut g = MultiSeries::variable(&self.ring, 1, self.order, 0);
        for d in 2..=self.order {
            let h = self.truncate(d).compose_univariate(&g.truncate(d));
            let c = h.coefficient(&[d]);
            if !c.is_zero() {
                g.add_coefficient(Monomial::new(vec![d]), (-c).raw());
            }
        }
        Ok(g)
    }

    /// Partial derivative in `u_{i+1}`; the order drops by one.
    pub fn derivative(&self, i: usize) -> MultiSeries {
        let order = self.order.saturating_sub(1);
        let mut out = MultiSeries::zero(&self.ring, self.nvars, order);
        for (m, c) in &self.terms {
            let e = m.get(i);
            if e > 0 {
                out.add_coefficient(m.with_exponent(i, e - 1), &scale_terms(c, &integer(e as i64)));
            }
        }
        out
    }

    /// Termwise antiderivative in one variable with zero constant; the order
    /// rises by one.
    pub fn integrate(&self) -> MultiSeries {
        assert_eq!(self.nvars, 1, "integration is univariate");
        let mut out = MultiSeries::zero(&self.ring, 1, self.order + 1);
        for (m, c) in &self.terms {
            let e = m.get(0) + 1;
            out.add_coefficient(
                Monomial::new(vec![e]),
                &scale_terms(c, &Rational::from_integer(e.into()).recip()),
            );
        }
        out
    }

    /// `exp(self)` for a series with zero constant term.
    pub fn exp(&self) -> Result<MultiSeries, AlgebraError> {
        if !self.constant_term().is_zero() {
            return Err(AlgebraError::NonzeroConstantTerm);
        }
        let mut out = MultiSeries::one(&self.ring, self.nvars, self.order);
        let mut power = out.clone();
        let mut factorial = Rational::one();
        for k in 1..=self.order {
            power = power.mul_unchecked(self);
            if power.is_zero() {
                break;
            }
            factorial *= integer(k as i64);
            out = out.add(&power.scale(&factorial.recip()))?;
        }
        Ok(out)
    }

    /// Square root of a series with constant term 1, by Newton iteration on
    /// `s^2 = self`.
    pub fn sqrt_unit(&self) -> Result<MultiSeries, AlgebraError> {
        if self.constant_term().as_constant() != Some(Rational::one()) {
            return Err(AlgebraError::NotAUnit);
        }
        let half = Rational::new(1.into(), 2.into());
        let mut s = MultiSeries::one(&self.ring, self.nvars, self.order);
        let mut precision = 0u32;
        while precision < self.order {
            precision = (2 * precision + 1).min(self.order);
            let inv = s.truncate(precision).assume_exact(precision).invert_unit()?;
            let q = self.truncate(precision).mul_unchecked(&inv);
            s = s
                .truncate(precision)
                .assume_exact(precision)
                .add(&q)?
                .scale(&half);
        }
        Ok(s)
    }

    /// Multiplies by the linear form `L·u`; the order rises by one.
    pub fn mul_linear_form(&self, form: &LinearForm) -> Result<MultiSeries, AlgebraError> {
        if form.nvars() != self.nvars {
            return Err(AlgebraError::VariableCountMismatch {
                left: self.nvars,
                right: form.nvars(),
            });
        }
        let mut out = MultiSeries::zero(&self.ring, self.nvars, self.order + 1);
        for (m, c) in &self.terms {
            for (i, &w) in form.coefficients().iter().enumerate() {
                if w != 0 {
                    out.add_coefficient(
                        m.mul(&Monomial::var(self.nvars, i)),
                        &scale_terms(c, &integer(w)),
                    );
                }
            }
        }
        Ok(out)
    }

    /// Exact quotient by `L·u`; the order drops by one. Fails with the lowest
    /// homogeneous degree of `self` that is not a multiple of `L·u`.
    pub fn divide_by_linear_form(&self, form: &LinearForm) -> Result<MultiSeries, AlgebraError> {
        if form.nvars() != self.nvars {
            return Err(AlgebraError::VariableCountMismatch {
                left: self.nvars,
                right: form.nvars(),
            });
        }
        if self.order == 0 {
            return if self.is_zero() {
                Ok(MultiSeries::zero(&self.ring, self.nvars, 0))
            } else {
                Err(AlgebraError::NotDivisible { degree: 0 })
            };
        }
        let mut out = Vec::new();
        for (d, slice) in self.slices().into_iter().enumerate() {
            match divide_slice(&slice, d as u32, form) {
                Some(q) => out.push(q),
                None => return Err(AlgebraError::NotDivisible { degree: d as i64 }),
            }
        }
        out.remove(0);
        Ok(MultiSeries::from_slices(
            &self.ring,
            self.nvars,
            self.order - 1,
            out,
        ))
    }

    /// Exact quotient by a series whose lowest homogeneous part is the product
    /// of `lowest` (degree `r`); the order becomes `min(orders) - r`. Fails with
    /// the u-degree of the quotient at which no power series quotient exists,
    /// negative when low-degree terms of `self` survive.
    pub fn divide_by_series(
        &self,
        den: &MultiSeries,
        lowest: &[LinearForm],
    ) -> Result<MultiSeries, AlgebraError> {
        if self.ring != den.ring {
            return Err(AlgebraError::RingMismatch);
        }
        if self.nvars != den.nvars {
            return Err(AlgebraError::VariableCountMismatch {
                left: self.nvars,
                right: den.nvars,
            });
        }
        let r = lowest.len() as u32;
        let order = self.order.min(den.order);
        if order < r {
            return Err(AlgebraError::Shape(format!(
                "series known to order {order} cannot be divided by a degree-{r} divisor"
            )));
        }
        let mut lead = MultiSeries::one(&self.ring, self.nvars, order);
        for l in lowest {
            lead = lead.mul_linear_form(l)?.truncate(order);
        }
        if den.truncate(r) != lead.truncate(r) {
            return Err(AlgebraError::Shape(
                "divisor does not start with the given product of linear forms".into(),
            ));
        }
        let mut rest = self.truncate(order);
        let slices = rest.slices();
        if let Some(d) = (0..r as usize).find(|&d| !slices[d].is_empty()) {
            return Err(AlgebraError::NotDivisible {
                degree: d as i64 - r as i64,
            });
        }
        let mut quotient = MultiSeries::zero(&self.ring, self.nvars, order - r);
        for e in 0..=order - r {
            let mut q = rest.homogeneous_part(e + r).raw_terms().clone();
            let mut deg = e + r;
            for l in lowest {
                q = divide_slice(&q, deg, l)
                    .ok_or(AlgebraError::NotDivisible { degree: e as i64 })?;
                deg -= 1;
            }
            if q.is_empty() {
                continue;
            }
            let q = MultiSeries::from_slices(&self.ring, self.nvars, order, vec![q]);
            rest = rest.sub(&q.mul(den)?)?;
            quotient = quotient.add(&q.truncate(order - r))?;
        }
        Ok(quotient)
    }

    /// Divides by `u_{i+1}` exactly (e.g. `b(x)/x`); the order drops by one.
    pub fn divide_by_variable(&self, i: usize) -> Result<MultiSeries, AlgebraError> {
        let mut form = vec![0; self.nvars];
        form[i] = 1;
        self.divide_by_linear_form(&LinearForm::new(form)?)
    }

    /// `self(L·u)` for univariate `self`: the result lives in `form.nvars()`
    /// variables.
    pub fn substitute_linear_form(&self, form: &LinearForm) -> MultiSeries {
        assert_eq!(self.nvars, 1, "substitute_linear_form needs a univariate series");
        let k = form.nvars();
        let mut out = MultiSeries::zero(&self.ring, k, self.order);
        let mut power: BTreeMap<Monomial, Rational> = BTreeMap::new();
        power.insert(Monomial::one(k), Rational::one());
        for j in 0..=self.order {
            if j > 0 {
                let mut next: BTreeMap<Monomial, Rational> = BTreeMap::new();
                for (m, r) in &power {
                    for (i, &w) in form.coefficients().iter().enumerate() {
                        if w != 0 {
                            let e = next.entry(m.mul(&Monomial::var(k, i))).or_insert_with(Rational::zero);
                            *e += r * integer(w);
                        }
                    }
                }
                next.retain(|_, r| !r.is_zero());
                power = next;
            }
            if let Some(c) = self.terms.get(&Monomial::new(vec![j])) {
                for (m, r) in &power {
                    let mut t = Terms::new();
                    add_scaled(&mut t, c, r);
                    out.add_coefficient(m.clone(), &t);
                }
            }
        }
        out
    }

    /// Applies a generator substitution to every coefficient.
    pub fn map_coefficients(&self, target: &Ring, images: &[Poly]) -> Result<MultiSeries, AlgebraError> {
        if images.len() != self.ring.len() {
            return Err(AlgebraError::Shape(format!(
                "{} images for {} generators",
                images.len(),
                self.ring.len()
            )));
        }
        if images.iter().any(|p| p.ring() != target) {
            return Err(AlgebraError::RingMismatch);
        }
        let mut out = MultiSeries::zero(target, self.nvars, self.order);
        for (m, c) in &self.terms {
            out.add_coefficient(m.clone(), &substitute_terms(c, target.len(), images));
        }
        Ok(out)
    }

    /// True when both series agree up to the smaller of their orders.
    pub fn agrees_with(&self, other: &MultiSeries) -> bool {
        if self.ring != other.ring || self.nvars != other.nvars {
            return false;
        }
        let order = self.order.min(other.order);
        self.truncate(order).terms == other.truncate(order).terms
    }
}

pub(crate) fn mul_slices_into(acc: &mut Slice, a: &Slice, b: &Slice) {
    for (ma, ca) in a {
        for (mb, cb) in b {
            let entry = acc.entry(ma.mul(mb)).or_default();
            add_product(entry, ca, cb);
        }
    }
    acc.retain(|_, c| !c.is_empty());
}

/// Divides the homogeneous slice `p` of degree `d` by `L·u`, or returns `None`
/// if it is not a multiple.
///
/// With pivot variable `x = u_i` (first nonzero entry of `L`), write
/// `p = sum_j P_j x^j` and `L = l x + L'`. Then `q = sum_j Q_j x^j` satisfies
/// `P_j = l Q_{j-1} + L' Q_j`, solved from the top power down; the
/// bottom equation `P_0 = L' Q_0` is the divisibility test.
pub(crate) fn divide_slice(p: &Slice, d: u32, form: &LinearForm) -> Option<Slice> {
    if p.is_empty() {
        return Some(Slice::new());
    }
    if d == 0 {
        return None;
    }
    let w = form.coefficients();
    let nvars = w.len();
    let pivot = w.iter().position(|&x| x != 0)?;
    let lead_inv = integer(w[pivot]).recip();
    let mut by_power: Vec<Slice> = vec![Slice::new(); d as usize + 1];
    for (m, c) in p {
        let e = m.get(pivot) as usize;
        by_power[e].insert(m.with_exponent(pivot, 0), c.clone());
    }
    let rest_times = |q: &Slice| -> Slice {
        let mut out = Slice::new();
        for (m, c) in q {
            for (i, &wi) in w.iter().enumerate() {
                if i != pivot && wi != 0 {
                    let entry = out.entry(m.mul(&Monomial::var(nvars, i))).or_default();
                    add_scaled(entry, c, &integer(wi));
                }
            }
        }
        out.retain(|_, c| !c.is_empty());
        out
    };
    // q_parts[j] holds Q_j (pivot exponent stripped).
    let mut q_parts: Vec<Slice> = vec![Slice::new(); d as usize];
    for j in (1..=d as usize).rev() {
        let mut rhs = by_power[j].clone();
        if j < d as usize {
            let lq = rest_times(&q_parts[j]);
            for (m, c) in lq {
                let entry = rhs.entry(m).or_default();
                sub_assign(entry, &c);
            }
            rhs.retain(|_, c| !c.is_empty());
        }
        q_parts[j - 1] = rhs
            .into_iter()
            .map(|(m, c)| (m, scale_terms(&c, &lead_inv)))
            .collect();
    }
    let mut check = by_power[0].clone();
    for (m, c) in rest_times(&q_parts[0]) {
        let entry = check.entry(m).or_default();
        sub_assign(entry, &c);
    }
    if check.values().any(|c| !c.is_empty()) {
        return None;
    }
    let mut out = Slice::new();
    for (j, part) in q_parts.into_iter().enumerate() {
        for (m, c) in part {
            out.insert(m.with_exponent(pivot, j as u32), c);
        }
    }
    Some(out)
}
