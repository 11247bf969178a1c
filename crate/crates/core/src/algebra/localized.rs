use std::collections::BTreeMap;

use num_traits::One;

use super::linear::LinearForm;
use super::poly::{integer, Rational};
use super::ring::Ring;
use super::series::{divide_slice, MultiSeries, Slice};
use super::AlgebraError;

/// A formal sum `sum_x N_x / prod(L·u for L in D_x)` of truncated series over
/// products of linear forms.
#[derive(Clone, Debug)]
pub struct LocalizedSum {
    ring: Ring,
    nvars: usize,
    order: u32,
    terms: Vec<(MultiSeries, Vec<LinearForm>)>,
}

/// The sum brought over one denominator: `numerator / prod(forms)`, with
/// `forms` primitive and sign-normalized.
#[derive(Clone, Debug)]
pub struct NormalizedFraction {
    pub numerator: MultiSeries,
    pub forms: Vec<LinearForm>,
}

impl LocalizedSum {
    /// An empty sum whose numerators are known to u-degree `order`.
    pub fn new(ring: &Ring, nvars: usize, order: u32) -> Self {
        LocalizedSum {
            ring: ring.clone(),
            nvars,
            order,
            terms: Vec::new(),
        }
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

    pub fn terms(&self) -> &[(MultiSeries, Vec<LinearForm>)] {
        &self.terms
    }

    /// Adds `numerator / prod(denominator)`. Numerators above the sum's order
    /// are truncated; lower ones are rejected.
    pub fn push(
        &mut self,
        numerator: MultiSeries,
        denominator: Vec<LinearForm>,
    ) -> Result<(), AlgebraError> {
        if numerator.ring() != &self.ring {
            return Err(AlgebraError::RingMismatch);
        }
        if numerator.nvars() != self.nvars {
            return Err(AlgebraError::VariableCountMismatch {
                left: self.nvars,
                right: numerator.nvars(),
            });
        }
        if numerator.order() < self.order {
            return Err(AlgebraError::Shape(format!(
                "numerator known to order {} in a sum of order {}",
                numerator.order(),
                self.order
            )));
        }
        if let Some(l) = denominator.iter().find(|l| l.nvars() != self.nvars) {
            return Err(AlgebraError::VariableCountMismatch {
                left: self.nvars,
                right: l.nvars(),
            });
        }
        self.terms.push((numerator.truncate(self.order), denominator));
        Ok(())
    }

    /// Brings every term over the least common multiple `D` of the
    /// denominators (multiset union of primitive forms) and adds numerators.
    /// The combined numerator is known to order
    /// `order + deg D - max_x deg D_x`.
    pub fn common_fraction(&self) -> NormalizedFraction {
        let mut canonical: Vec<(MultiSeries, BTreeMap<LinearForm, u32>)> = Vec::new();
        let mut lcm: BTreeMap<LinearForm, u32> = BTreeMap::new();
        let mut max_forms = 0usize;
        for (num, forms) in &self.terms {
            let mut scale = Rational::one();
            let mut counts: BTreeMap<LinearForm, u32> = BTreeMap::new();
            for l in forms {
                let (c, s) = l.canonical();
                scale /= integer(s);
                *counts.entry(c).or_default() += 1;
            }
            for (l, &k) in &counts {
                let e = lcm.entry(l.clone()).or_default();
                *e = (*e).max(k);
            }
            max_forms = max_forms.max(forms.len());
            canonical.push((num.scale(&scale), counts));
        }
        let total: u32 = lcm.values().sum();
        let order = self.order + total - max_forms as u32;
        let mut sum = MultiSeries::zero(&self.ring, self.nvars, order);
        for (num, counts) in canonical {
            let mut n = num;
            for (l, &k) in &lcm {
                let have = counts.get(l).copied().unwrap_or(0);
                for _ in have..k {
                    n = n.mul_linear_form(l).expect("shape checked on push");
                }
            }
            sum = sum.add(&n).expect("shape checked on push");
        }
        let forms = lcm
            .into_iter()
            .flat_map(|(l, k)| std::iter::repeat_n(l, k as usize))
            .collect();
        NormalizedFraction {
            numerator: sum,
            forms,
        }
    }

    /// The honest power series represented by the sum. Fails with
    /// [`AlgebraError::NotDivisible`] carrying the lowest (possibly negative)
    /// u-degree at which the terms do not cancel to a polynomial.
    pub fn normalize(&self) -> Result<MultiSeries, AlgebraError> {
        self.common_fraction().into_series()
    }
}

impl NormalizedFraction {
    /// Number of linear factors in the denominator.
    pub fn denominator_degree(&self) -> u32 {
        self.forms.len() as u32
    }

    /// Divides the homogeneous numerator slice of degree `d` by every form, or
    /// returns `None` if it is not a multiple of their product.
    pub(crate) fn divide_slice(&self, d: u32, slice: &Slice) -> Option<Slice> {
        let mut cur = slice.clone();
        let mut deg = d;
        for l in &self.forms {
            cur = divide_slice(&cur, deg, l)?;
            if deg == 0 {
                return cur.is_empty().then(Slice::new);
            }
            deg -= 1;
        }
        Some(cur)
    }

    pub fn into_series(self) -> Result<MultiSeries, AlgebraError> {
        let r = self.denominator_degree();
        let s = &self.numerator;
        let slices = s.slices();
        let ring = s.ring().clone();
        let nvars = s.nvars();
        let Some(order) = s.order().checked_sub(r) else {
            // Numerator not even known through the denominator degree.
            return match slices.iter().position(|sl| !sl.is_empty()) {
                Some(d) => Err(AlgebraError::NotDivisible {
                    degree: d as i64 - r as i64,
                }),
                None => Err(AlgebraError::Shape(
                    "sum is not known to any nonnegative degree".into(),
                )),
            };
        };
        let mut out = vec![Slice::new(); order as usize + 1];
        for (d, slice) in slices.iter().enumerate() {
            let q = self.divide_slice(d as u32, slice).ok_or(AlgebraError::NotDivisible {
                degree: d as i64 - r as i64,
            })?;
            if d as u32 >= r {
                out[d - r as usize] = q;
            }
        }
        Ok(MultiSeries::from_slices(&ring, nvars, order, out))
    }
}
