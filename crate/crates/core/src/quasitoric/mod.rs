//! Quasitoric pairs `(P, Λ)`: validation, refinement, the standard families,
//! and extraction of fixed-point signs and weights.

mod families;
mod json;
mod matrix;
mod ops;
mod types;

pub use families::{product_pair, simplex_pair, square_pair};
pub use json::{parse_manifold, Manifold};
pub use ops::{
    refine, restrict_to_subcircle, signs_and_weights, special_check, validate_pair,
    ValidationReport,
};
pub use types::{CharMatrix, FixedPoint, FixedPointData, Polytope, QuasitoricPair};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum QuasitoricError {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("invalid pair: {}", .0.join("; "))]
    InvalidPair(Vec<String>),
    #[error("leading minor has determinant {0}, not ±1")]
    NotUnimodular(String),
    #[error("pair has neither normals nor positive facet orderings")]
    MissingNormals,
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("circle {0:?} is not primitive")]
    NotPrimitive(Vec<i64>),
    #[error("circle is not generic: weight {weight} at {point} pairs to zero")]
    NonGeneric { point: String, weight: String },
    #[error("malformed manifold file: {0}")]
    Parse(String),
}
