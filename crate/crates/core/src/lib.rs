//! Iwahori-Hecke algebras of type A, their even (alternating) subalgebras,
//! a normal form for words in the even generators, and seminormal
//! representations with their decomposition on restriction.

pub mod alt_decompose;
pub mod cli;
pub mod error;
pub mod hecke_rep;
pub mod json;
pub mod linalg;
pub mod scalars;
pub mod tableaux;
pub mod word_algebra;

pub use error::{Error, Result};
