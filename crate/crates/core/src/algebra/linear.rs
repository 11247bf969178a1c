use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::AlgebraError;

/// A nonzero integer linear form `w·u = w1*u1 + … + wk*uk`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct LinearForm(Vec<i64>);

impl LinearForm {
    pub fn new(coefficients: Vec<i64>) -> Result<Self, AlgebraError> {
        if coefficients.iter().all(|&c| c == 0) {
            return Err(AlgebraError::ZeroLinearForm);
        }
        Ok(LinearForm(coefficients))
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    /// Splits `self = scale * primitive` where `primitive` has coprime entries
    /// and a positive first nonzero entry.
    pub fn canonical(&self) -> (LinearForm, i64) {
        let mut g = self.0.iter().fold(0i64, |acc, &c| acc.gcd(&c));
        let first = *self.0.iter().find(|&&c| c != 0).expect("nonzero form");
        if first < 0 {
            g = -g;
        }
        (LinearForm(self.0.iter().map(|c| c / g).collect()), g)
    }

    pub fn neg(&self) -> LinearForm {
        LinearForm(self.0.iter().map(|c| -c).collect())
    }

    /// Evaluates at an integer point.
    pub fn dot(&self, point: &[i64]) -> i64 {
        self.0.iter().zip(point).map(|(a, b)| a * b).sum()
    }
}

impl TryFrom<Vec<i64>> for LinearForm {
    type Error = AlgebraError;

    fn try_from(v: Vec<i64>) -> Result<Self, Self::Error> {
        LinearForm::new(v)
    }
}

impl From<LinearForm> for Vec<i64> {
    fn from(l: LinearForm) -> Self {
        l.0
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c < 0 { '-' } else { '+' })?;
            }
            if mag != 1 {
                write!(f, "{mag}*")?;
            }
            write!(f, "u{}", i + 1)?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
