use std::collections::BTreeMap;
use std::str::FromStr;

use super::phi::phi;
use super::{dataset, LocalizeError, Mode};
use crate::algebra::{LinearForm, MultiSeries, Poly};
use crate::fgl::GenusSpec;
use crate::quasitoric::FixedPointData;

/// The localization identities whose left-hand sides must be constant for a
/// genus rigid on the corresponding manifold.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FunctionalEquation {
    /// `1/f(u) + 1/f(-u)`.
    Cp1,
    /// `1/(f(u1)f(u2)) - 1/(f(u1)f(u1+u2)) + 1/(f(-u2)f(u1+u2))`.
    Cp2,
    /// `1/(f(u1)f(u2)f(-u1-u2)) + 1/(f(-u1)f(-u2)f(u1+u2))`.
    S6,
}

impl FromStr for FunctionalEquation {
    type Err = LocalizeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "cp1" => Ok(FunctionalEquation::Cp1),
            "cp2" => Ok(FunctionalEquation::Cp2),
            "s6" => Ok(FunctionalEquation::S6),
            _ => Err(LocalizeError::UnknownDataset(s.to_string())),
        }
    }
}

/// The signed weights whose linear-mode sum is the left-hand side.
pub fn functional_equation_data(which: FunctionalEquation) -> FixedPointData {
    match which {
        FunctionalEquation::Cp1 => dataset("cp1").expect("bundled"),
        FunctionalEquation::Cp2 => FixedPointData::from_raw(
            2,
            2,
            &[
                (1, vec![vec![1, 0], vec![0, 1]]),
                (-1, vec![vec![1, 0], vec![1, 1]]),
                (1, vec![vec![0, -1], vec![1, 1]]),
            ],
        )
        .expect("well formed"),
        FunctionalEquation::S6 => dataset("s6").expect("bundled"),
    }
}

/// The constant value of the left-hand side, or the lowest positive u-degree
/// in which it is not constant.
pub fn functional_equation_check(
    which: FunctionalEquation,
    genus: &GenusSpec,
    order: u32,
) -> Result<Poly, LocalizeError> {
    let s = phi(&functional_equation_data(which), genus, Mode::Linear, order)?;
    if let Some(degree) = (1..=order).find(|&d| !s.homogeneous_part(d).is_zero()) {
        return Err(LocalizeError::NotConstant { degree });
    }
    Ok(s.constant_term())
}

/// Coefficients `P_ω` of `prod_{i<j} a+(u_i - u_j)` to total degree `order`,
/// where `a+(x) = x/b(x)` is the conjugate orientation divided by `x`. Keys are
/// exponent vectors; the empty exponent carries the constant 1.
pub fn p_omega(
    nvars: usize,
    genus: &GenusSpec,
    order: u32,
) -> Result<BTreeMap<Vec<u32>, Poly>, LocalizeError> {
    let spec = genus.at_order(order + 1)?;
    let x = LinearForm::new(vec![1])?;
    let a_plus = spec.exponential().divide_by_linear_form(&x)?.invert_unit()?;
    let mut prod = MultiSeries::one(spec.ring(), nvars, order);
    for i in 0..nvars {
        for j in i + 1..nvars {
            let mut w = vec![0; nvars];
            w[i] = 1;
            w[j] = -1;
            let f = a_plus.substitute_linear_form(&LinearForm::new(w)?);
            prod = prod.mul(&f)?;
        }
    }
    Ok(prod.terms().map(|(e, c)| (e.to_vec(), c)).collect())
}
