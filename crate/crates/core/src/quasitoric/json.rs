use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::types::{CharMatrix, FixedPoint, FixedPointData, Polytope, QuasitoricPair};
use super::QuasitoricError;
use crate::algebra::{parse_rational, LinearForm, Rational};

/// Contents of a manifold file: a quasitoric pair or raw fixed-point data.
#[derive(Clone, Debug, PartialEq)]
pub enum Manifold {
    Quasitoric(QuasitoricPair),
    FixedPoints(FixedPointData),
}

/// Integers and rationals may be written as JSON numbers or strings.
#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(untagged)]
enum Num {
    Int(i64),
    Text(String),
}

impl Num {
    fn integer(&self) -> Result<BigInt, QuasitoricError> {
        match self {
            Num::Int(x) => Ok((*x).into()),
            Num::Text(s) => s
                .trim()
                .parse()
                .map_err(|_| QuasitoricError::Parse(format!("not an integer: {s:?}"))),
        }
    }

    fn rational(&self) -> Result<Rational, QuasitoricError> {
        match self {
            Num::Int(x) => Ok(Rational::from_integer((*x).into())),
            Num::Text(s) => parse_rational(s)
                .map_err(|_| QuasitoricError::Parse(format!("not a rational: {s:?}"))),
        }
    }

    fn from_rational(r: &Rational) -> Num {
        match (r.is_integer(), i64::try_from(r.to_integer())) {
            (true, Ok(x)) => Num::Int(x),
            _ => Num::Text(r.to_string()),
        }
    }

    fn from_integer(x: &BigInt) -> Num {
        i64::try_from(x).map_or_else(|_| Num::Text(x.to_string()), Num::Int)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolytopeJson {
    n: usize,
    m: usize,
    vertices: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    normals: Option<Vec<Vec<Num>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    positive_orderings: Option<Vec<Vec<usize>>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PointJson {
    #[serde(default)]
    label: Option<String>,
    sign: i8,
    weights: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
enum ManifoldJson {
    Quasitoric {
        #[serde(default)]
        name: Option<String>,
        polytope: PolytopeJson,
        lambda: Vec<Vec<Num>>,
    },
    FixedPoints {
        n: usize,
        k: usize,
        points: Vec<PointJson>,
    },
}

/// Parses a manifold file. Syntax errors report line and column.
pub fn parse_manifold(text: &str) -> Result<Manifold, QuasitoricError> {
    let raw: ManifoldJson =
        serde_json::from_str(text).map_err(|e| QuasitoricError::Parse(e.to_string()))?;
    match raw {
        ManifoldJson::Quasitoric {
            name,
            polytope,
            lambda,
        } => {
            let mut p = Polytope::new(polytope.n, polytope.m, polytope.vertices);
            if let Some(normals) = polytope.normals {
                p = p.with_normals(
                    normals
                        .iter()
                        .map(|r| r.iter().map(Num::rational).collect())
                        .collect::<Result<_, _>>()?,
                );
            }
            if let Some(o) = polytope.positive_orderings {
                p = p.with_positive_orderings(o);
            }
            let lambda = CharMatrix::new(
                lambda
                    .iter()
                    .map(|r| r.iter().map(Num::integer).collect())
                    .collect::<Result<_, _>>()?,
            )?;
            Ok(Manifold::Quasitoric(QuasitoricPair {
                name: name.unwrap_or_else(|| "unnamed".into()),
                polytope: p,
                lambda,
            }))
        }
        ManifoldJson::FixedPoints { n, k, points } => {
            let pts = points
                .into_iter()
                .enumerate()
                .map(|(i, p)| {
                    let label = p.label.unwrap_or_else(|| format!("x{}", i + 1));
                    let weights = p
                        .weights
                        .into_iter()
                        .map(|w| {
                            LinearForm::new(w).map_err(|_| {
                                QuasitoricError::Shape(format!("point {label}: zero weight"))
                            })
                        })
                        .collect::<Result<_, _>>()?;
                    Ok(FixedPoint {
                        label,
                        sign: p.sign,
                        weights,
                    })
                })
                .collect::<Result<Vec<_>, QuasitoricError>>()?;
            Ok(Manifold::FixedPoints(FixedPointData::new(n, k, pts)?))
        }
    }
}

impl Manifold {
    pub fn to_json(&self) -> serde_json::Value {
        let raw = match self {
            Manifold::Quasitoric(pair) => ManifoldJson::Quasitoric {
                name: Some(pair.name.clone()),
                polytope: PolytopeJson {
                    n: pair.polytope.n,
                    m: pair.polytope.m,
                    vertices: pair.polytope.vertices.clone(),
                    normals: pair.polytope.normals.as_ref().map(|ns| {
                        ns.iter()
                            .map(|r| r.iter().map(Num::from_rational).collect())
                            .collect()
                    }),
                    positive_orderings: pair.polytope.positive_orderings.clone(),
                },
                lambda: pair
                    .lambda
                    .entries()
                    .iter()
                    .map(|r| r.iter().map(Num::from_integer).collect())
                    .collect(),
            },
            Manifold::FixedPoints(fpd) => ManifoldJson::FixedPoints {
                n: fpd.n(),
                k: fpd.k(),
                points: fpd
                    .points()
                    .iter()
                    .map(|p| PointJson {
                        label: Some(p.label.clone()),
                        sign: p.sign,
                        weights: p.weights.iter().map(|w| w.coefficients().to_vec()).collect(),
                    })
                    .collect(),
            },
        };
        serde_json::to_value(raw).expect("serializable")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quasitoric::{signs_and_weights, square_pair};

    #[test]
    fn round_trip_pair() {
        let m = Manifold::Quasitoric(square_pair(-1, 1, 2, 0).unwrap());
        let text = m.to_json().to_string();
        assert_eq!(parse_manifold(&text).unwrap(), m);
    }

    #[test]
    fn round_trip_points() {
        let fpd = signs_and_weights(&square_pair(-1, -1, 1, 0).unwrap()).unwrap();
        let m = Manifold::FixedPoints(fpd);
        assert_eq!(parse_manifold(&m.to_json().to_string()).unwrap(), m);
    }

    #[test]
    fn string_entries() {
        let text = r#"{"type":"quasitoric","name":"i","polytope":{"n":1,"m":2,
            "vertices":[[1],[2]],"normals":[["1","-1"]]},"lambda":[[1,"-1"]]}"#;
        let Manifold::Quasitoric(p) = parse_manifold(text).unwrap() else {
            panic!("expected pair")
        };
        assert_eq!(p.lambda, CharMatrix::from_i64(&[vec![1, -1]]).unwrap());
    }

    #[test]
    fn errors_carry_location() {
        let err = parse_manifold("{\"type\": \"fixed_points\",\n \"n\": }").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
    }
}
