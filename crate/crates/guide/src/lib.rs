//! The book's code listings, compiled and run as doctests.

#[doc = include_str!("../../../book/src/index.md")]
pub mod index {}

#[doc = include_str!("../../../book/src/algebra.md")]
pub mod algebra {}

#[doc = include_str!("../../../book/src/fgl.md")]
pub mod fgl {}

#[doc = include_str!("../../../book/src/quasitoric.md")]
pub mod quasitoric {}

#[doc = include_str!("../../../book/src/localize.md")]
pub mod localize {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
