//! Exact construction and verification of skew left braces and the
//! set-theoretic Yang–Baxter maps they produce.

pub mod brace;
pub mod error;
pub mod group;
pub mod holomorph;
pub mod lattice_brace;
pub mod report;
pub mod series;
pub mod suite;
pub mod word_brace;
pub mod ybe;
pub mod verdict;

pub use brace::{FiniteBrace, LambdaDescriptor, SkewBrace};
pub use error::{Error, Result};
pub use group::{FiniteGroup, FreeWord, IntMatrix, ZnVector};
pub use verdict::{Strategy, Verdict};
