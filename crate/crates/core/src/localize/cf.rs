use std::fmt;

use serde::Serialize;

use super::phi::localized_sum;
use super::{LocalizeError, Mode};
use crate::algebra::{LinearForm, MultiSeries, Poly};
use crate::fgl::{catalog, hurewicz, GenusSpec};
use crate::quasitoric::{signs_and_weights, special_check, FixedPointData, QuasitoricPair};

/// One coefficient `cf_l`, the homogeneous part of u-degree `l - n` of the
/// localization sum. Parts that are not polynomials stay as fractions.
#[derive(Clone, Debug, PartialEq)]
pub enum CfCoefficient {
    Polynomial(MultiSeries),
    Fraction {
        numerator: MultiSeries,
        forms: Vec<LinearForm>,
    },
}

impl CfCoefficient {
    pub fn is_zero(&self) -> bool {
        matches!(self, CfCoefficient::Polynomial(p) if p.is_zero())
    }

    pub fn as_polynomial(&self) -> Option<&MultiSeries> {
        match self {
            CfCoefficient::Polynomial(p) => Some(p),
            CfCoefficient::Fraction { .. } => None,
        }
    }
}

impl fmt::Display for CfCoefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CfCoefficient::Polynomial(p) => write!(f, "{p}"),
            CfCoefficient::Fraction { numerator, forms } => {
                write!(f, "({numerator})/(")?;
                for (i, l) in forms.iter().enumerate() {
                    if i > 0 {
                        f.write_str("*")?;
                    }
                    write!(f, "({l})")?;
                }
                f.write_str(")")
            }
        }
    }
}

/// The coefficients `cf_0, …, cf_{n+order}` of `t^n Φ(t u)`.
#[derive(Clone, Debug)]
pub struct CfSeries {
    n: usize,
    coeffs: Vec<CfCoefficient>,
}

impl CfSeries {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[CfCoefficient] {
        &self.coeffs
    }

    pub fn cf(&self, l: usize) -> &CfCoefficient {
        &self.coeffs[l]
    }

    /// Smallest `l < n` with `cf_l ≠ 0`.
    pub fn first_violation(&self) -> Option<usize> {
        (0..self.n).find(|&l| !self.coeffs[l].is_zero())
    }

    /// `cf_n`, when it is a polynomial.
    pub fn genus_value(&self) -> Option<Poly> {
        self.coeffs[self.n].as_polynomial().map(MultiSeries::constant_term)
    }
}

/// Expands the linear-mode sum over a common denominator `D` of degree `r`;
/// `cf_l` is then `N_{l-n+r} / D` with `N_d` the degree-`d` numerator slice.
pub fn cf_series(
    fpd: &FixedPointData,
    genus: &GenusSpec,
    order: u32,
) -> Result<CfSeries, LocalizeError> {
    let n = fpd.n();
    let frac = localized_sum(fpd, genus, Mode::Linear, order)?.common_fraction();
    let r = frac.forms.len();
    let num = &frac.numerator;
    let slices = num.slices();
    let (ring, k) = (num.ring(), num.nvars());
    let mut coeffs = Vec::with_capacity(n + order as usize + 1);
    for l in 0..=n + order as usize {
        let zero = CfCoefficient::Polynomial(MultiSeries::zero(ring, k, order));
        let Some(d) = (l + r).checked_sub(n) else {
            coeffs.push(zero);
            continue;
        };
        let slice = slices.get(d).cloned().unwrap_or_default();
        if slice.is_empty() {
            coeffs.push(zero);
            continue;
        }
        coeffs.push(match frac.divide_slice(d as u32, &slice) {
            Some(q) => CfCoefficient::Polynomial(MultiSeries::from_slices(ring, k, order, vec![q])),
            None => CfCoefficient::Fraction {
                numerator: MultiSeries::from_slices(ring, k, d as u32, vec![slice]),
                forms: frac.forms.clone(),
            },
        });
    }
    Ok(CfSeries { n, coeffs })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CfEntry {
    pub l: usize,
    pub value: String,
}

/// Outcome of a relation check, serialized as the report schema.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CfReport {
    pub cf: Vec<CfEntry>,
    pub genus_value: Option<String>,
    pub pass: bool,
    pub first_violation: Option<usize>,
}

impl CfReport {
    fn new(series: &CfSeries, first_violation: Option<usize>) -> Self {
        CfReport {
            cf: series
                .coeffs
                .iter()
                .enumerate()
                .map(|(l, c)| CfEntry {
                    l,
                    value: c.to_string(),
                })
                .collect(),
            genus_value: series.genus_value().map(|p| p.to_string()),
            pass: first_violation.is_none(),
            first_violation,
        }
    }

    /// One `cf_l:` line per coefficient, then the genus value and verdict.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.cf {
            out.push_str(&format!("cf_{}: {}\n", e.l, e.value));
        }
        if let Some(g) = &self.genus_value {
            out.push_str(&format!("genus_value: {g}\n"));
        }
        out.push_str(&format!("pass: {}\n", self.pass));
        if let Some(l) = self.first_violation {
            out.push_str(&format!("first_violation: cf_{l}\n"));
        }
        out
    }
}

/// Passes iff `cf_l = 0` for every `l < n`.
pub fn check_conner_floyd(
    fpd: &FixedPointData,
    genus: &GenusSpec,
    order: u32,
) -> Result<CfReport, LocalizeError> {
    let s = cf_series(fpd, genus, order)?;
    Ok(CfReport::new(&s, s.first_violation()))
}

/// The non-equivariant genus `cf_n`.
pub fn genus_value(fpd: &FixedPointData, genus: &GenusSpec) -> Result<Poly, LocalizeError> {
    let s = cf_series(fpd, genus, 0)?;
    if let Some(l) = s.first_violation() {
        return Err(LocalizeError::ConnerFloyd { l });
    }
    s.genus_value()
        .ok_or(LocalizeError::ConnerFloyd { l: fpd.n() })
}

/// Passes iff `cf_l = 0` for `n < l ≤ n + order`, i.e. `Φ` is constant.
pub fn rigidity_check(
    fpd: &FixedPointData,
    genus: &GenusSpec,
    order: u32,
) -> Result<CfReport, LocalizeError> {
    let s = cf_series(fpd, genus, order)?;
    let n = s.n;
    let bad = (n + 1..s.coeffs.len()).find(|&l| !s.coeffs[l].is_zero());
    Ok(CfReport::new(&s, bad))
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpecialReport {
    pub krichever_value: Poly,
    pub krichever_rigid: bool,
    /// Only computed for `n < 5`.
    pub hurewicz_value: Option<Poly>,
    pub pass: bool,
}

/// For a special pair: the Krichever genus vanishes and is rigid, and for
/// `n < 5` the class itself (the Hurewicz genus) vanishes.
pub fn special_vanishing_check(
    pair: &QuasitoricPair,
    order: u32,
) -> Result<SpecialReport, LocalizeError> {
    if !special_check(&pair.lambda) {
        return Err(LocalizeError::NotSpecial);
    }
    let fpd = signs_and_weights(pair)?;
    let n = fpd.n() as u32;
    let kv = catalog("krichever", order + n + 1)?;
    let krichever_value = genus_value(&fpd, &kv)?;
    let krichever_rigid = rigidity_check(&fpd, &kv, order)?.pass;
    let hurewicz_value = if n < 5 {
        Some(genus_value(&fpd, &hurewicz(n, n + 1)?)?)
    } else {
        None
    };
    let pass = krichever_value.is_zero()
        && krichever_rigid
        && hurewicz_value.as_ref().is_none_or(Poly::is_zero);
    Ok(SpecialReport {
        krichever_value,
        krichever_rigid,
        hurewicz_value,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::localize::dataset;
    use crate::quasitoric::simplex_pair;

    #[test]
    fn cp1_todd() {
        let s = cf_series(&dataset("cp1").unwrap(), &catalog("todd", 3).unwrap(), 2).unwrap();
        assert!(s.cf(0).is_zero());
        assert_eq!(s.cf(1).to_string(), "-z");
        assert_eq!(s.coeffs().len(), 4);
    }

    #[test]
    fn corrupted_s6_fails_at_zero() {
        let data = dataset("s6").unwrap().with_sign_flipped(0);
        let r = check_conner_floyd(&data, &catalog("augmentation", 2).unwrap(), 1).unwrap();
        assert!(!r.pass);
        assert_eq!(r.first_violation, Some(0));
        assert!(matches!(
            genus_value(&data, &catalog("todd", 1).unwrap()),
            Err(LocalizeError::ConnerFloyd { l: 0 })
        ));
    }

    #[test]
    fn report_json_shape() {
        let fpd = signs_and_weights(&simplex_pair(2, &[-1, -1]).unwrap()).unwrap();
        let r = check_conner_floyd(&fpd, &catalog("signature", 2).unwrap(), 0).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(
            v,
            serde_json::json!({
                "cf": [{"l":0,"value":"0"},{"l":1,"value":"0"},{"l":2,"value":"z^2"}],
                "genus_value": "z^2",
                "pass": true,
                "first_violation": null
            })
        );
    }

    #[test]
    fn bounding_cp1_vanishes() {
        let fpd = signs_and_weights(&simplex_pair(1, &[1]).unwrap()).unwrap();
        for g in ["todd", "cn", "abel", "krichever"] {
            assert!(genus_value(&fpd, &catalog(g, 2).unwrap()).unwrap().is_zero(), "{g}");
        }
    }

    #[test]
    fn special_requires_special() {
        let p = simplex_pair(2, &[-1, -1]).unwrap();
        assert_eq!(special_vanishing_check(&p, 1), Err(LocalizeError::NotSpecial));
    }
}
