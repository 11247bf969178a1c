//! Exact coefficient rings, truncated power series and sums of fractions
//! over products of integer linear forms.

mod json;
mod linear;
mod localized;
mod monomial;
mod poly;
mod ring;
mod series;
mod text;

pub use json::{PolyJson, SeriesJson, SeriesTermJson, CoefficientTermJson};
pub use linear::LinearForm;
pub use localized::{LocalizedSum, NormalizedFraction};
pub use monomial::{monomials_of_degree, Monomial};
pub use poly::{integer, rational, Poly, Rational};
pub use ring::{Generator, Ring};
pub use series::MultiSeries;
pub use text::{parse_poly, parse_rational, parse_series};


use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("invalid generator: {0}")]
    InvalidGenerator(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("coefficient rings differ")]
    RingMismatch,
    #[error("series in {left} and {right} variables cannot be combined")]
    VariableCountMismatch { left: usize, right: usize },
    #[error("constant term is not a nonzero rational")]
    NotAUnit,
    #[error("substituted series must have zero constant term")]
    NonzeroConstantTerm,
    #[error("series is not revertible: {0}")]
    NotRevertible(String),
    #[error("not divisible by the linear form in degree {degree}")]
    NotDivisible { degree: i64 },
    #[error("linear form is zero")]
    ZeroLinearForm,
    #[error("parse error: {0}")]
    Parse(String),
}
