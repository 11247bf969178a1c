use super::genus::GenusSpec;
use super::FglError;
use crate::algebra::{integer, LinearForm, MultiSeries, Ring};

/// The formal group law `F(u1, u2) = b(m(u1) + m(u2))` of a genus.
#[derive(Clone, Debug)]
pub struct Fgl {
    spec: GenusSpec,
    series: MultiSeries,
}

impl Fgl {
    pub fn spec(&self) -> &GenusSpec {
        &self.spec
    }

    pub fn series(&self) -> &MultiSeries {
        &self.series
    }

    pub fn ring(&self) -> &Ring {
        self.spec.ring()
    }

    pub fn order(&self) -> u32 {
        self.series.order()
    }

    /// `F(u, 0) = u` and `F(0, u) = u`.
    pub fn is_unital(&self) -> bool {
        is_unital(&self.series)
    }

    pub fn is_commutative(&self) -> bool {
        let swapped = self
            .series
            .substitute(&[var(self.ring(), 2, self.order(), 1), var(self.ring(), 2, self.order(), 0)])
            .expect("variables have zero constant term");
        swapped == self.series
    }

    /// `F(F(u1, u2), u3) = F(u1, F(u2, u3))` to the working order.
    pub fn is_associative(&self) -> bool {
        let (r, n) = (self.ring(), self.order());
        let u = |i| var(r, 3, n, i);
        let f12 = self.series.substitute(&[u(0), u(1)]).expect("valid images");
        let f23 = self.series.substitute(&[u(1), u(2)]).expect("valid images");
        let left = self.series.substitute(&[f12, u(2)]).expect("valid images");
        let right = self.series.substitute(&[u(0), f23]).expect("valid images");
        left == right
    }

    /// The power system `[m](u) = b(m * log(u))`.
    pub fn m_series(&self, m: i64) -> MultiSeries {
        m_series(&self.spec, m)
    }

    pub fn weight_series(&self, w: &LinearForm) -> MultiSeries {
        weight_series(&self.spec, w)
    }
}

fn var(ring: &Ring, nvars: usize, order: u32, i: usize) -> MultiSeries {
    MultiSeries::variable(ring, nvars, order, i)
}

fn is_unital(f: &MultiSeries) -> bool {
    let (r, n) = (f.ring(), f.order());
    let u = var(r, 1, n, 0);
    let zero = MultiSeries::zero(r, 1, n);
    let left = f.substitute(&[u.clone(), zero.clone()]);
    let right = f.substitute(&[zero, u.clone()]);
    matches!((left, right), (Ok(l), Ok(rr)) if l == u && rr == u)
}

pub fn fgl_from_exponential(spec: &GenusSpec) -> Fgl {
    let w = LinearForm::new(vec![1, 1]).expect("nonzero form");
    Fgl {
        spec: spec.clone(),
        series: weight_series(spec, &w),
    }
}

/// The logarithm `m` with `m' = 1/(dF/du2)(u, 0)`, `m(0) = 0`.
pub fn logarithm_from_fgl(f: &MultiSeries) -> Result<MultiSeries, FglError> {
    if f.nvars() != 2 || !is_unital(f) {
        return Err(FglError::NotUnital);
    }
    let d2 = f.derivative(1);
    let at_zero: Vec<_> = d2
        .terms()
        .filter(|(e, _)| e[1] == 0)
        .map(|(e, c)| (vec![e[0]], c))
        .collect();
    let d2 = MultiSeries::from_terms(f.ring(), 1, d2.order(), at_zero)?;
    Ok(d2.invert_unit()?.integrate())
}

/// `[m](u)`; zero when `m = 0`.
pub fn m_series(spec: &GenusSpec, m: i64) -> MultiSeries {
    match LinearForm::new(vec![m]) {
        Ok(w) => weight_series(spec, &w),
        Err(_) => MultiSeries::zero(spec.ring(), 1, spec.order()),
    }
}

/// `[w](u) = b(sum_i w_i m(u_i))`.
pub fn weight_series(spec: &GenusSpec, w: &LinearForm) -> MultiSeries {
    let k = w.nvars();
    let log = spec.logarithm();
    let mut arg = MultiSeries::zero(spec.ring(), k, spec.order());
    for (i, &wi) in w.coefficients().iter().enumerate() {
        if wi == 0 {
            continue;
        }
        let mut e = vec![0; k];
        e[i] = 1;
        let mi = log.substitute_linear_form(&LinearForm::new(e).expect("nonzero"));
        arg = arg.add(&mi.scale(&integer(wi))).expect("same shape");
    }
    spec.exponential()
        .substitute(&[arg])
        .expect("logarithm has zero constant term")
}

/// Checks unitality, commutativity and associativity, returning the first
/// failing property.
pub fn check_axioms(f: &Fgl) -> Result<(), &'static str> {
    if !f.is_unital() {
        return Err("unitality");
    }
    if !f.is_commutative() {
        return Err("commutativity");
    }
    if !f.is_associative() {
        return Err("associativity");
    }
    Ok(())
}
