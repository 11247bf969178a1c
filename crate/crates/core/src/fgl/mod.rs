//! Formal group laws of genera: the named catalog, power systems, weight
//! series and characteristic-number evaluation.

mod chern;
mod genus;
mod krichever;
mod law;
mod shape;

pub use chern::{
    conjugate_coefficient, conjugate_orientation, elementary_to_monomial,
    genus_from_chern_numbers, partitions,
};
pub use genus::{catalog, hurewicz, GenusKind, GenusSpec};
pub use law::{
    check_axioms, fgl_from_exponential, logarithm_from_fgl, m_series, weight_series, Fgl,
};
pub use shape::{elliptic_fgl_check, elliptic_quartic, verify_bsfgl_shape, BsfglShape};

/// Builds the Krichever exponential truncated at `order`.
pub fn krichever_exponential(order: u32) -> Result<GenusSpec, FglError> {
    catalog("krichever", order)
}

use thiserror::Error;

use crate::algebra::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FglError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("unknown genus `{0}`")]
    UnknownGenus(String),
    #[error("invalid exponential: {0}")]
    InvalidExponential(String),
    #[error("series is not a unital formal group law")]
    NotUnital,
    #[error("no Chern number given for partition {0:?}")]
    MissingPartition(Vec<u32>),
    #[error("invalid Chern data: {0}")]
    InvalidChernData(String),
    #[error("shape check fails in degree {degree}: {detail}")]
    ShapeMismatch { degree: i64, detail: String },
    #[error("genus known to order {available}, order {requested} requested")]
    OrderUnavailable { requested: u32, available: u32 },
}
