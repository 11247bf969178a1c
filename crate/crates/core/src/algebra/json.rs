//! JSON form of polynomials and series.
//!
//! Rationals are strings (`"3"`, `"-1/2"`) so that big values survive
//! round trips through any JSON reader.

use serde::{Deserialize, Serialize};

use super::monomial::Monomial;
use super::poly::{Poly, Terms};
use super::ring::{Generator, Ring};
use super::series::MultiSeries;
use super::text::parse_rational;
use super::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientTermJson {
    pub gen: Vec<u32>,
    pub val: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub generators: Vec<(String, u32)>,
    pub terms: Vec<CoefficientTermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesTermJson {
    pub u: Vec<u32>,
    pub coeff: Vec<CoefficientTermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub generators: Vec<(String, u32)>,
    pub nvars: usize,
    pub order: u32,
    pub terms: Vec<SeriesTermJson>,
}

fn ring_json(ring: &Ring) -> Vec<(String, u32)> {
    ring.generators()
        .iter()
        .map(|g| (g.name().to_string(), g.degree()))
        .collect()
}

fn ring_from_json(gens: &[(String, u32)]) -> Result<Ring, AlgebraError> {
    Ring::new(
        gens.iter()
            .map(|(n, d)| Generator::new(n.clone(), *d))
            .collect::<Result<_, _>>()?,
    )
}

fn terms_json(t: &Terms) -> Vec<CoefficientTermJson> {
    t.iter()
        .map(|(m, c)| CoefficientTermJson {
            gen: m.exponents().to_vec(),
            val: c.to_string(),
        })
        .collect()
}

fn terms_from_json(ring: &Ring, t: &[CoefficientTermJson]) -> Result<Poly, AlgebraError> {
    Poly::from_terms(
        ring,
        t.iter()
            .map(|c| Ok((c.gen.clone(), parse_rational(&c.val)?)))
            .collect::<Result<Vec<_>, AlgebraError>>()?,
    )
}

impl Poly {
    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            generators: ring_json(self.ring()),
            terms: terms_json(self.raw()),
        }
    }

    pub fn from_json(json: &PolyJson) -> Result<Poly, AlgebraError> {
        let ring = ring_from_json(&json.generators)?;
        terms_from_json(&ring, &json.terms)
    }
}

impl MultiSeries {
    pub fn to_json(&self) -> SeriesJson {
        SeriesJson {
            generators: ring_json(self.ring()),
            nvars: self.nvars(),
            order: self.order(),
            terms: self
                .raw_terms()
                .iter()
                .map(|(m, c)| SeriesTermJson {
                    u: m.exponents().to_vec(),
                    coeff: terms_json(c),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &SeriesJson) -> Result<MultiSeries, AlgebraError> {
        let ring = ring_from_json(&json.generators)?;
        let mut s = MultiSeries::zero(&ring, json.nvars, json.order);
        for t in &json.terms {
            if t.u.len() != json.nvars {
                return Err(AlgebraError::Shape(format!(
                    "u-exponent vector of length {} for {} variables",
                    t.u.len(),
                    json.nvars
                )));
            }
            let c = terms_from_json(&ring, &t.coeff)?;
            s.add_coefficient(Monomial::new(t.u.clone()), c.raw());
        }
        Ok(s)
    }
}
