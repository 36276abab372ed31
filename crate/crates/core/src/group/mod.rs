//! Carriers: finite groups by Cayley table, free groups by reduced words,
//! free abelian groups by integer vectors.

pub mod catalog;
mod finite;
pub mod freeaut;
pub mod lattice;
pub mod morphism;
pub mod stallings;
pub mod word;

pub use finite::{validate_group, FiniteGroup, GroupDocument};
pub use freeaut::FreeAutomorphism;
pub use lattice::{IntMatrix, ZnVector};
pub use morphism::{all_automorphisms, all_homomorphisms_to_aut, AutGroup, Automorphism, LambdaMap};
pub use word::FreeWord;
