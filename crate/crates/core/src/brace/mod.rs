//! The skew brace abstraction shared by every carrier.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::verdict::SampleRng;

pub mod checks;
pub mod construct;
pub mod finite;

pub use checks::{
    check_brace_axiom, check_circ_group, check_lambda_circ_hom, check_meta_trivial, is_lambda_homomorphic,
    check_brace_axiom_on, is_symmetric, is_symmetric_direct, is_symmetric_kernel, Domain,
};
pub use construct::{check_criterion_on_generators, construct_from_lambda, check_injective_lambda_rejected, subgroup_criterion_witness, Construction};
pub use finite::{brace_isomorphic, FiniteBrace, FiniteBraceDocument, FiniteCarrier, KernelSubbrace};

/// Order of the automorphism φ in a λ_a = φ^{l(a)} descriptor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PhiOrder {
    Finite(u64),
    Infinite,
    /// Not determined within the search bound.
    Unknown,
}

impl PhiOrder {
    /// Whether `l` lies in the kernel of `l ↦ φ^l`.
    pub fn kills(&self, l: i64) -> Option<bool> {
        match *self {
            PhiOrder::Finite(k) => Some(l.rem_euclid(k as i64) == 0),
            PhiOrder::Infinite => Some(l == 0),
            PhiOrder::Unknown => None,
        }
    }
}

/// Closed-form description of a ↦ λ_a.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum LambdaDescriptor {
    /// Finite carrier; λ is read off the tables.
    Table,
    /// λ_a = φ^{l(a)} for a logarithm l.
    PowerOfPhi { order: PhiOrder },
    /// λ is constant on the cosets of a subgroup of the given index and its
    /// image is cyclic.
    KernelCoset { index: usize },
    /// λ_z is conjugation by the B-part of z in an exact factorization.
    InnerByBPart { b_abelian: bool, b_cyclic: bool },
    /// λ_a is conjugation by a.
    InnerByElement,
    /// λ has image free abelian of the given rank.
    FreeAbelianImage { rank: usize },
    /// λ is assigned on generators by a homomorphism to Aut.
    GeneratorAssignment,
    /// λ_a(b) = (1 + a)·b in a ring whose adjoint group is (G, ∘).
    LeftMultiplication,
}

/// A set with two group operations `·` and `∘` sharing an identity, meant to
/// satisfy a∘(b·c) = (a∘b)·a⁻¹·(a∘c).
///
/// Implementations only supply the operations; the laws are verified by the
/// functions in [`checks`].
pub trait SkewBrace: Sync {
    type Elem: Clone + Eq + Hash + Debug + Display + Send + Sync;

    fn identity(&self) -> Self::Elem;
    fn dot(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn dot_inv(&self, a: &Self::Elem) -> Self::Elem;
    fn circ(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn circ_inv(&self, a: &Self::Elem) -> Self::Elem;

    /// λ_a(b) = a⁻¹·(a∘b).
    fn lambda(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.dot(&self.dot_inv(a), &self.circ(a, b))
    }

    /// All elements when the carrier is finite.
    fn elements(&self) -> Option<Vec<Self::Elem>> {
        None
    }

    /// A random element; `size` bounds its complexity (word syllables,
    /// coordinate range, ...).
    fn sample(&self, rng: &mut SampleRng, size: usize) -> Self::Elem;

    fn descriptor(&self) -> LambdaDescriptor;

    /// Whether λ_a = id, if decidable. Finite carriers decide by scanning.
    fn in_lambda_kernel(&self, a: &Self::Elem) -> Option<bool> {
        let elems = self.elements()?;
        Some(elems.iter().all(|b| self.lambda(a, b) == *b))
    }
}

/// A brace whose multiplication ∘ coincides with ·.
#[derive(Clone, Debug)]
pub struct Trivial<B>(pub B);

/// `a ∘ b = b · a`, whose λ_a is conjugation by a.
#[derive(Clone, Debug)]
pub struct Opposite<B>(pub B);

impl<B: SkewBrace> SkewBrace for Trivial<B> {
    type Elem = B::Elem;

    fn identity(&self) -> B::Elem {
        self.0.identity()
    }
    fn dot(&self, a: &B::Elem, b: &B::Elem) -> B::Elem {
        self.0.dot(a, b)
    }
    fn dot_inv(&self, a: &B::Elem) -> B::Elem {
        self.0.dot_inv(a)
    }
    fn circ(&self, a: &B::Elem, b: &B::Elem) -> B::Elem {
        self.0.dot(a, b)
    }
    fn circ_inv(&self, a: &B::Elem) -> B::Elem {
        self.0.dot_inv(a)
    }
    fn elements(&self) -> Option<Vec<B::Elem>> {
        self.0.elements()
    }
    fn sample(&self, rng: &mut SampleRng, size: usize) -> B::Elem {
        self.0.sample(rng, size)
    }
    fn descriptor(&self) -> LambdaDescriptor {
        LambdaDescriptor::PowerOfPhi { order: PhiOrder::Finite(1) }
    }
    fn in_lambda_kernel(&self, _: &B::Elem) -> Option<bool> {
        Some(true)
    }
}

impl<B: SkewBrace> SkewBrace for Opposite<B> {
    type Elem = B::Elem;

    fn identity(&self) -> B::Elem {
        self.0.identity()
    }
    fn dot(&self, a: &B::Elem, b: &B::Elem) -> B::Elem {
        self.0.dot(a, b)
    }
    fn dot_inv(&self, a: &B::Elem) -> B::Elem {
        self.0.dot_inv(a)
    }
    fn circ(&self, a: &B::Elem, b: &B::Elem) -> B::Elem {
        self.0.dot(b, a)
    }
    fn circ_inv(&self, a: &B::Elem) -> B::Elem {
        self.0.dot_inv(a)
    }
    fn elements(&self) -> Option<Vec<B::Elem>> {
        self.0.elements()
    }
    fn sample(&self, rng: &mut SampleRng, size: usize) -> B::Elem {
        self.0.sample(rng, size)
    }
    fn descriptor(&self) -> LambdaDescriptor {
        LambdaDescriptor::InnerByElement
    }
}
