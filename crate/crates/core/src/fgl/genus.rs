use std::fmt;

use num_traits::One;

use super::krichever::krichever_series;
use super::FglError;
use crate::algebra::{integer, rational, MultiSeries, Poly, Rational, Ring};

/// How a genus exponential is built; lets a spec be recomputed at any order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GenusKind {
    Augmentation,
    /// Universal exponential `x + b1 x^2 + …` over `Q[b1, …, b_g]`.
    Hurewicz { generators: u32 },
    Todd,
    Cn,
    Abel,
    T2,
    Signature,
    Elliptic,
    Krichever,
    /// A user-supplied exponential; cannot be extended past its order.
    Custom,
}

impl GenusKind {
    pub const CATALOG: [&'static str; 9] = [
        "augmentation",
        "hurewicz",
        "todd",
        "cn",
        "abel",
        "t2",
        "signature",
        "elliptic",
        "krichever",
    ];
}

/// A genus given by its exponential `b(x) = x + b1 x^2 + …` together with the
/// logarithm `m = b^{-1}`, both truncated at `order`.
#[derive(Clone)]
pub struct GenusSpec {
    name: String,
    kind: GenusKind,
    exponential: MultiSeries,
    logarithm: MultiSeries,
}

impl fmt::Debug for GenusSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GenusSpec")
            .field("name", &self.name)
            .field("ring", self.ring())
            .field("exponential", &self.exponential)
            .finish()
    }
}

impl GenusSpec {
    /// Wraps an exponential series, checking it is `x + O(x^2)`.
    pub fn from_exponential(name: &str, exponential: MultiSeries) -> Result<Self, FglError> {
        Self::build(name, GenusKind::Custom, exponential)
    }

    fn build(name: &str, kind: GenusKind, exponential: MultiSeries) -> Result<Self, FglError> {
        if exponential.nvars() != 1 {
            return Err(FglError::InvalidExponential(
                "exponential must be univariate".into(),
            ));
        }
        let logarithm = exponential
            .revert()
            .map_err(|e| FglError::InvalidExponential(e.to_string()))?;
        Ok(GenusSpec {
            name: name.to_string(),
            kind,
            exponential,
            logarithm,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> &GenusKind {
        &self.kind
    }

    pub fn ring(&self) -> &Ring {
        self.exponential.ring()
    }

    pub fn order(&self) -> u32 {
        self.exponential.order()
    }

    pub fn exponential(&self) -> &MultiSeries {
        &self.exponential
    }

    pub fn logarithm(&self) -> &MultiSeries {
        &self.logarithm
    }

    /// `b_j`, the coefficient of `x^{j+1}` in the exponential.
    pub fn b(&self, j: u32) -> Poly {
        self.exponential.coefficient(&[j + 1])
    }

    /// The same genus truncated at `order`, recomputed if `order` exceeds the
    /// stored one.
    pub fn at_order(&self, order: u32) -> Result<GenusSpec, FglError> {
        if order <= self.order() {
            return Ok(GenusSpec {
                name: self.name.clone(),
                kind: self.kind.clone(),
                exponential: self.exponential.truncate(order),
                logarithm: self.logarithm.truncate(order),
            });
        }
        let mut spec = match &self.kind {
            GenusKind::Custom => {
                return Err(FglError::OrderUnavailable {
                    requested: order,
                    available: self.order(),
                })
            }
            GenusKind::Hurewicz { generators } => hurewicz(*generators, order)?,
            _ => catalog(&self.name_for_kind(), order)?,
        };
        spec.name = self.name.clone();
        Ok(spec)
    }

    fn name_for_kind(&self) -> String {
        match self.kind {
            GenusKind::Augmentation => "augmentation",
            GenusKind::Todd => "todd",
            GenusKind::Cn => "cn",
            GenusKind::Abel => "abel",
            GenusKind::T2 => "t2",
            GenusKind::Signature => "signature",
            GenusKind::Elliptic => "elliptic",
            GenusKind::Krichever => "krichever",
            GenusKind::Hurewicz { .. } | GenusKind::Custom => unreachable!(),
        }
        .to_string()
    }

    /// Applies a generator substitution to the exponential, e.g. `y = 0`.
    pub fn specialize(&self, target: &Ring, images: &[Poly]) -> Result<GenusSpec, FglError> {
        let exp = self.exponential.map_coefficients(target, images)?;
        GenusSpec::build(&self.name, GenusKind::Custom, exp)
    }
}

/// The named genus truncated at `order`. `hurewicz` gets `order` generators.
pub fn catalog(name: &str, order: u32) -> Result<GenusSpec, FglError> {
    let (kind, exp) = match name {
        "augmentation" => (
            GenusKind::Augmentation,
            MultiSeries::variable(&Ring::rationals(), 1, order, 0),
        ),
        "hurewicz" => return hurewicz(order, order),
        "todd" => (GenusKind::Todd, todd(order)),
        "cn" => (GenusKind::Cn, cn(order)),
        "abel" => (GenusKind::Abel, abel(order)),
        "t2" => (GenusKind::T2, t2(order)?),
        "signature" => (GenusKind::Signature, signature(order)?),
        "elliptic" => (GenusKind::Elliptic, elliptic(order)?),
        "krichever" => (GenusKind::Krichever, krichever_series(order)?),
        _ => return Err(FglError::UnknownGenus(name.to_string())),
    };
    GenusSpec::build(name, kind, exp)
}

/// The universal exponential over `Q[b1, …, b_generators]`.
pub fn hurewicz(generators: u32, order: u32) -> Result<GenusSpec, FglError> {
    let names: Vec<(String, u32)> = (1..=generators).map(|j| (format!("b{j}"), 2 * j)).collect();
    let refs: Vec<(&str, u32)> = names.iter().map(|(n, d)| (n.as_str(), *d)).collect();
    let ring = Ring::from_names(&refs)?;
    let mut coeffs = vec![Poly::zero(&ring), Poly::one(&ring)];
    for (name, _) in &names {
        coeffs.push(Poly::generator(&ring, name)?);
    }
    let exp = MultiSeries::univariate(&ring, order, &coeffs);
    GenusSpec::build("hurewicz", GenusKind::Hurewicz { generators }, exp)
}

fn factorial(n: u32) -> Rational {
    (1..=n as i64).fold(Rational::one(), |acc, k| acc * integer(k))
}

fn gen(ring: &Ring, name: &str) -> Poly {
    Poly::generator(ring, name).expect("generator exists")
}

/// `(e^{zx} - 1)/z`.
fn todd(order: u32) -> MultiSeries {
    let ring = Ring::from_names(&[("z", 2)]).expect("valid ring");
    let z = gen(&ring, "z");
    let mut coeffs = vec![Poly::zero(&ring)];
    for j in 0..order {
        coeffs.push(z.pow(j).scale(&factorial(j + 1).recip()));
    }
    MultiSeries::univariate(&ring, order, &coeffs)
}

/// `x/(1 + vx)`.
fn cn(order: u32) -> MultiSeries {
    let ring = Ring::from_names(&[("v", 2)]).expect("valid ring");
    let minus_v = -gen(&ring, "v");
    let mut coeffs = vec![Poly::zero(&ring)];
    for j in 0..order {
        coeffs.push(minus_v.pow(j));
    }
    MultiSeries::univariate(&ring, order, &coeffs)
}

fn yz_ring() -> Ring {
    Ring::from_names(&[("y", 2), ("z", 2)]).expect("valid ring")
}

/// `(e^{yx} - e^{zx})/(y - z)`, each coefficient divided exactly by `y - z`.
fn abel(order: u32) -> MultiSeries {
    let ring = yz_ring();
    let y = gen(&ring, "y");
    let z = gen(&ring, "z");
    let diff = &y - &z;
    let mut coeffs = vec![Poly::zero(&ring)];
    for n in 1..=order {
        let num = &y.pow(n) - &z.pow(n);
        let q = num.div_exact(&diff).expect("y - z divides y^n - z^n");
        coeffs.push(q.scale(&factorial(n).recip()));
    }
    MultiSeries::univariate(&ring, order, &coeffs)
}

/// `(e^{yx} - e^{zx})/(y e^{zx} - z e^{yx})`: the abel series over the
/// denominator divided by `y - z`, which has constant term 1.
fn t2(order: u32) -> Result<MultiSeries, FglError> {
    let ring = yz_ring();
    let y = gen(&ring, "y");
    let z = gen(&ring, "z");
    let diff = &y - &z;
    let mut den = Vec::new();
    for n in 0..=order {
        let num = &(&y * &z.pow(n)) - &(&z * &y.pow(n));
        let q = num.div_exact(&diff).expect("y - z divides y z^n - z y^n");
        den.push(q.scale(&factorial(n).recip()));
    }
    let den = MultiSeries::univariate(&ring, order, &den);
    Ok(abel(order).mul(&den.invert_unit()?)?)
}

/// `tanh(zx)/z`.
fn signature(order: u32) -> Result<MultiSeries, FglError> {
    let ring = Ring::from_names(&[("z", 2)]).expect("valid ring");
    let z = gen(&ring, "z");
    let mut sinh = Vec::new();
    let mut cosh = Vec::new();
    for n in 0..=order {
        let c = factorial(n).recip();
        if n % 2 == 1 {
            sinh.push(z.pow(n - 1).scale(&c));
            cosh.push(Poly::zero(&ring));
        } else {
            sinh.push(Poly::zero(&ring));
            cosh.push(z.pow(n).scale(&c));
        }
    }
    let sinh = MultiSeries::univariate(&ring, order, &sinh);
    let cosh = MultiSeries::univariate(&ring, order, &cosh);
    Ok(sinh.mul(&cosh.invert_unit()?)?)
}

/// The inverse of `int_0^x (1 - 2 delta t^2 + epsilon t^4)^{-1/2} dt`.
fn elliptic(order: u32) -> Result<MultiSeries, FglError> {
    let ring = Ring::from_names(&[("delta", 4), ("epsilon", 8)]).expect("valid ring");
    let delta = gen(&ring, "delta");
    let eps = gen(&ring, "epsilon");
    let inner = order.saturating_sub(1);
    let mut w = vec![Poly::zero(&ring); 5];
    w[2] = delta.scale(&integer(-2));
    w[4] = eps;
    let w = MultiSeries::univariate(&ring, inner, &w);
    // (1 + w)^{-1/2} = sum_k binom(-1/2, k) w^k
    let mut acc = MultiSeries::one(&ring, 1, inner);
    let mut power = acc.clone();
    let mut binom = Rational::one();
    for k in 1..=inner / 2 {
        power = power.mul(&w)?;
        binom = binom * (rational(-1, 2) - integer(k as i64 - 1)) / integer(k as i64);
        acc = acc.add(&power.scale(&binom))?;
    }
    let log = acc.integrate();
    Ok(log.revert()?)
}
