use std::fmt;
use std::sync::Arc;

use super::AlgebraError;

/// A named polynomial generator of the coefficient ring.
///
/// The degree is the topological grading (always even) and is informational
/// only; arithmetic never looks at it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    name: String,
    degree: u32,
}

impl Generator {
    pub fn new(name: impl Into<String>, degree: u32) -> Result<Self, AlgebraError> {
        let name = name.into();
        if !is_identifier(&name) {
            return Err(AlgebraError::InvalidGenerator(format!(
                "`{name}` is not an identifier"
            )));
        }
        if is_torus_variable(&name) {
            return Err(AlgebraError::InvalidGenerator(format!(
                "`{name}` clashes with the torus variables u1, u2, …"
            )));
        }
        if !degree.is_multiple_of(2) {
            return Err(AlgebraError::InvalidGenerator(format!(
                "`{name}` has odd degree {degree}"
            )));
        }
        Ok(Generator { name, degree })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub(crate) fn is_torus_variable(s: &str) -> bool {
    s.len() > 1 && s.starts_with('u') && s[1..].chars().all(|c| c.is_ascii_digit())
}

/// An ordered list of generators: the coefficient ring `Q[g1, …, gr]`.
///
/// Cloning is cheap; the generator list is shared.
#[derive(Clone)]
pub struct Ring(Arc<[Generator]>);

impl Ring {
    pub fn new(generators: Vec<Generator>) -> Result<Self, AlgebraError> {
        for (i, g) in generators.iter().enumerate() {
            if generators[..i].iter().any(|h| h.name == g.name) {
                return Err(AlgebraError::InvalidGenerator(format!(
                    "duplicate generator `{}`",
                    g.name
                )));
            }
        }
        Ok(Ring(generators.into()))
    }

    /// Convenience constructor from `(name, degree)` pairs.
    pub fn from_names(gens: &[(&str, u32)]) -> Result<Self, AlgebraError> {
        Ring::new(
            gens.iter()
                .map(|&(n, d)| Generator::new(n, d))
                .collect::<Result<_, _>>()?,
        )
    }

    /// The ring `Q` with no generators.
    pub fn rationals() -> Self {
        Ring(Arc::from(Vec::new()))
    }

    pub fn generators(&self) -> &[Generator] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|g| g.name == name)
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[")?;
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", g.name)?;
        }
        write!(f, "]")
    }
}
