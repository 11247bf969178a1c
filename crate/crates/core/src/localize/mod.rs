//! Localization of genera at isolated fixed points: the series `Φ`, the
//! coefficients `cf_l`, and the Conner–Floyd, rigidity, pairing and
//! functional-equation checks built on them.

mod cf;
mod datasets;
mod functional;
mod pairing;
mod phi;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::fgl::FglError;
use crate::quasitoric::QuasitoricError;

pub use cf::{
    cf_series, check_conner_floyd, genus_value, rigidity_check, special_vanishing_check,
    CfCoefficient, CfEntry, CfReport, CfSeries, SpecialReport,
};
pub use datasets::{dataset, DATASETS};
pub use functional::{functional_equation_check, functional_equation_data, p_omega, FunctionalEquation};
pub use pairing::{pairing_obstruction, search_pairings, BlockResult, PairingReport};
pub use phi::{localized_sum, phi};

/// How the reciprocal weights are formed: through the formal group law
/// (`1/[w](u)`) or through the exponential of linearized weights
/// (`1/b(w·u)`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Mode {
    Universal,
    #[default]
    Linear,
}

impl FromStr for Mode {
    type Err = LocalizeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "universal" => Ok(Mode::Universal),
            "linear" => Ok(Mode::Linear),
            _ => Err(LocalizeError::UnknownMode(s.to_string())),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Universal => "universal",
            Mode::Linear => "linear",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LocalizeError {
    #[error(transparent)]
    Algebra(AlgebraError),
    #[error(transparent)]
    Fgl(#[from] FglError),
    #[error(transparent)]
    Quasitoric(#[from] QuasitoricError),
    /// Terms of this u-degree (negative below the constant term) fail to
    /// cancel, so the fixed-point data violates the Conner–Floyd relations.
    #[error("localization terms of u-degree {degree} do not cancel")]
    NotDivisible { degree: i64 },
    #[error("[w](u) is not a multiple of w·u for w = {0}; use the series division")]
    NonlinearWeight(String),
    #[error("Conner–Floyd relation fails: cf_{l} is nonzero")]
    ConnerFloyd { l: usize },
    #[error("sum is not constant: nonzero part in u-degree {degree}")]
    NotConstant { degree: u32 },
    #[error("characteristic matrix is not special (some column sum differs from 1)")]
    NotSpecial,
    #[error("unknown dataset `{0}`")]
    UnknownDataset(String),
    #[error("unknown mode `{0}` (expected universal or linear)")]
    UnknownMode(String),
    #[error("invalid blocks: {0}")]
    InvalidBlocks(String),
}

impl From<AlgebraError> for LocalizeError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::NotDivisible { degree } => LocalizeError::NotDivisible { degree },
            e => LocalizeError::Algebra(e),
        }
    }
}
