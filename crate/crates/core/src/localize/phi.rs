use std::collections::{BTreeMap, HashMap};

use super::{LocalizeError, Mode};
use crate::algebra::{LinearForm, LocalizedSum, MultiSeries};
use crate::fgl::{weight_series, GenusSpec};
use crate::quasitoric::FixedPointData;

/// `[w](u)` is `(w·u)` times a unit exactly when its zero set is the
/// hyperplane, e.g. for `w = ±e_i` or `±(e_i - e_j)`; other weights need the
/// series division in [`phi`].
fn splits_linearly(spec: &GenusSpec, w: &LinearForm) -> bool {
    weight_series(spec, w).divide_by_linear_form(w).is_ok()
}

/// The unnormalized sum `sum_x ς(x) prod_j 1/b(w_j(x)·u)` (linear mode) or
/// `sum_x ς(x) prod_j 1/[w_j(x)](u)` (universal mode). Each reciprocal is
/// stored as an inverted unit over the linear form `w_j(x)`; numerators are
/// known to u-degree `order + n`, so the normalized sum is known to `order`.
/// Universal mode fails with [`LocalizeError::NonlinearWeight`] when some
/// `[w](u)` is not a multiple of `w·u`.
pub fn localized_sum(
    fpd: &FixedPointData,
    genus: &GenusSpec,
    mode: Mode,
    order: u32,
) -> Result<LocalizedSum, LocalizeError> {
    let n = fpd.n() as u32;
    let k = fpd.k();
    let spec = genus.at_order(order + n + 1)?;
    let x = LinearForm::new(vec![1])?;
    let inverse_unit = spec.exponential().divide_by_linear_form(&x)?.invert_unit()?;
    let mut cache: HashMap<LinearForm, MultiSeries> = HashMap::new();
    let mut factor = |w: &LinearForm| -> Result<MultiSeries, LocalizeError> {
        if let Some(f) = cache.get(w) {
            return Ok(f.clone());
        }
        let f = match mode {
            Mode::Linear => inverse_unit.substitute_linear_form(w),
            Mode::Universal => weight_series(&spec, w)
                .divide_by_linear_form(w)
                .map_err(|_| LocalizeError::NonlinearWeight(w.to_string()))?
                .invert_unit()?,
        };
        cache.insert(w.clone(), f.clone());
        Ok(f)
    };
    let mut sum = LocalizedSum::new(spec.ring(), k, order + n);
    for p in fpd.points() {
        let mut num = MultiSeries::one(spec.ring(), k, order + n);
        if p.sign < 0 {
            num = num.neg();
        }
        for w in &p.weights {
            num = num.mul(&factor(w)?)?;
        }
        sum.push(num, p.weights.clone())?;
    }
    Ok(sum)
}

/// Universal mode over the common denominator `D = prod_w [w](u)^{m_w}`
/// (`m_w` the largest multiplicity of `w` at a point), dividing by the series
/// `D` whose lowest part is `prod_w (w·u)^{m_w}`.
fn universal_by_series(
    fpd: &FixedPointData,
    genus: &GenusSpec,
    order: u32,
) -> Result<MultiSeries, LocalizeError> {
    let mut mult: BTreeMap<LinearForm, u32> = BTreeMap::new();
    for p in fpd.points() {
        let mut here: BTreeMap<&LinearForm, u32> = BTreeMap::new();
        for w in &p.weights {
            *here.entry(w).or_default() += 1;
        }
        for (w, c) in here {
            let e = mult.entry(w.clone()).or_default();
            *e = (*e).max(c);
        }
    }
    let r: u32 = mult.values().sum();
    let top = order + r;
    let spec = genus.at_order(top)?;
    let k = fpd.k();
    let brackets: BTreeMap<&LinearForm, MultiSeries> =
        mult.keys().map(|w| (w, weight_series(&spec, w))).collect();
    let one = MultiSeries::one(spec.ring(), k, top);
    let mut den = one.clone();
    let mut forms = Vec::new();
    for (w, &m) in &mult {
        den = den.mul(&brackets[w].pow(m))?;
        forms.extend(std::iter::repeat_n(w.clone(), m as usize));
    }
    let mut num = MultiSeries::zero(spec.ring(), k, top);
    for p in fpd.points() {
        let mut term = if p.sign < 0 { one.neg() } else { one.clone() };
        for (w, &m) in &mult {
            let have = p.weights.iter().filter(|v| *v == w).count() as u32;
            term = term.mul(&brackets[w].pow(m - have))?;
        }
        num = num.add(&term)?;
    }
    Ok(num.divide_by_series(&den, &forms)?)
}

/// The localized genus series `Φ(u)` truncated at `order`.
pub fn phi(
    fpd: &FixedPointData,
    genus: &GenusSpec,
    mode: Mode,
    order: u32,
) -> Result<MultiSeries, LocalizeError> {
    if mode == Mode::Universal {
        let spec = genus.at_order(order + fpd.n() as u32 + 1)?;
        let all_split = fpd
            .points()
            .iter()
            .flat_map(|p| &p.weights)
            .all(|w| splits_linearly(&spec, w));
        if !all_split {
            return universal_by_series(fpd, genus, order);
        }
    }
    Ok(localized_sum(fpd, genus, mode, order)?.normalize()?)
}
