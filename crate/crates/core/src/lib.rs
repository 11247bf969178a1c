//! Exact computation of equivariant genera of torus manifolds by fixed-point
//! localization over formal group laws.

pub mod algebra;
pub mod fgl;
pub mod localize;
pub mod quasitoric;
