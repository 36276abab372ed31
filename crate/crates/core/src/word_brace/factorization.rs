//! Braces from an exact factorization G = AB with A normal:
//! (a₁b₁)∘(a₂b₂) = a₁a₂b₂b₁.

use std::collections::BTreeMap;
use std::fmt::{self, Debug, Display};
use std::hash::Hash;

use rand::Rng;

use crate::brace::checks::{scan, Domain};
use crate::brace::{LambdaDescriptor, SkewBrace};
use crate::error::{Error, Result};
use crate::group::FreeWord;
use crate::verdict::{SampleRng, Strategy, Verdict};

/// A group with a normal subgroup A and a complement B, so every g splits
/// uniquely as a·b.
pub trait ExactFactorization: Sync {
    type Elem: Clone + Eq + Hash + Debug + Display + Send + Sync;

    fn identity(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    /// g = a·b with a ∈ A, b ∈ B.
    fn split(&self, g: &Self::Elem) -> (Self::Elem, Self::Elem);
    fn sample(&self, rng: &mut SampleRng, size: usize) -> Self::Elem;
    /// Whether conjugation by b is the identity of G.
    fn is_central(&self, b: &Self::Elem) -> bool;
    fn b_abelian(&self) -> bool;
    fn b_cyclic(&self) -> bool;
}

/// The skew brace of an exact factorization. λ_z is conjugation by the
/// B-part of z: λ_{ab}(y) = b⁻¹yb.
#[derive(Clone, Debug)]
pub struct FactorizationBrace<F>(pub F);

impl<F: ExactFactorization> SkewBrace for FactorizationBrace<F> {
    type Elem = F::Elem;

    fn identity(&self) -> F::Elem {
        self.0.identity()
    }
    fn dot(&self, a: &F::Elem, b: &F::Elem) -> F::Elem {
        self.0.mul(a, b)
    }
    fn dot_inv(&self, a: &F::Elem) -> F::Elem {
        self.0.inv(a)
    }
    fn circ(&self, x: &F::Elem, y: &F::Elem) -> F::Elem {
        let f = &self.0;
        let (a1, b1) = f.split(x);
        let (a2, b2) = f.split(y);
        f.mul(&f.mul(&a1, &a2), &f.mul(&b2, &b1))
    }
    /// (ab)‾ = a⁻¹b⁻¹.
    fn circ_inv(&self, x: &F::Elem) -> F::Elem {
        let f = &self.0;
        let (a, b) = f.split(x);
        f.mul(&f.inv(&a), &f.inv(&b))
    }
    fn sample(&self, rng: &mut SampleRng, size: usize) -> F::Elem {
        self.0.sample(rng, size)
    }
    fn descriptor(&self) -> LambdaDescriptor {
        LambdaDescriptor::InnerByBPart { b_abelian: self.0.b_abelian(), b_cyclic: self.0.b_cyclic() }
    }
    fn in_lambda_kernel(&self, a: &F::Elem) -> Option<bool> {
        Some(self.0.is_central(&self.0.split(a).1))
    }
}

impl<F: ExactFactorization> FactorizationBrace<F> {
    /// The split recombines (a·b = g), its parts lie in A and B (they split
    /// as (a, 1) and (1, b)), and ∘ agrees with a₁a₂b₂b₁ computed from the
    /// parts of a fresh split.
    pub fn check_product_rule(&self, strategy: &Strategy) -> Verdict {
        let Some(d) = Domain::from_strategy(self, strategy) else {
            return Verdict::fail("exhaustive strategy needs a finite carrier", 0);
        };
        let f = &self.0;
        let e = f.identity();
        scan(self, &d, |[x, y]| {
            let (a1, b1) = f.split(x);
            let (a2, b2) = f.split(y);
            let parts_ok = f.mul(&a1, &b1) == *x && f.split(&a1) == (a1.clone(), e.clone()) && f.split(&b1) == (e.clone(), b1.clone());
            let rule = f.mul(&f.mul(&a1, &a2), &f.mul(&b2, &b1));
            parts_ok && self.circ(x, y) == rule
        })
    }

    /// λ_z(y) = b⁻¹·y·b for the B-part b of z.
    pub fn check_lambda_is_inner(&self, strategy: &Strategy) -> Verdict {
        let Some(d) = Domain::from_strategy(self, strategy) else {
            return Verdict::fail("exhaustive strategy needs a finite carrier", 0);
        };
        let f = &self.0;
        scan(self, &d, |[z, y]| {
            let b = f.split(z).1;
            self.lambda(z, y) == f.mul(&f.mul(&f.inv(&b), y), &b)
        })
    }

    /// x∘y = y∘x.
    pub fn check_circ_commutative(&self, strategy: &Strategy) -> Verdict {
        let Some(d) = Domain::from_strategy(self, strategy) else {
            return Verdict::fail("exhaustive strategy needs a finite carrier", 0);
        };
        scan(self, &d, |[x, y]| self.circ(x, y) == self.circ(y, x))
    }
}

/// F_n = A ⋊ B with B = ⟨x_{n−k+1}, …, x_n⟩ and A the kernel of the
/// retraction deleting the other generators. With k = 1 this is the free
/// product F_{n−1} * ℤ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeFactorization {
    rank: usize,
    b_rank: usize,
}

impl FreeFactorization {
    pub fn new(rank: usize, b_rank: usize) -> Result<Self> {
        if rank < 2 {
            return Err(Error::BadRank { rank, min: 2 });
        }
        if b_rank == 0 || b_rank >= rank {
            return Err(Error::UnsupportedFamily { family: format!("free group of rank {rank} with B of rank {b_rank}") });
        }
        Ok(FreeFactorization { rank, b_rank })
    }

    fn in_b(&self, g: u32) -> bool {
        g as usize >= self.rank - self.b_rank
    }
}

impl ExactFactorization for FreeFactorization {
    type Elem = FreeWord;

    fn identity(&self) -> FreeWord {
        FreeWord::identity()
    }
    fn mul(&self, a: &FreeWord, b: &FreeWord) -> FreeWord {
        a.multiply(b)
    }
    fn inv(&self, a: &FreeWord) -> FreeWord {
        a.inverse()
    }
    fn split(&self, g: &FreeWord) -> (FreeWord, FreeWord) {
        let b = g.retract(|x| self.in_b(x));
        (g.multiply(&b.inverse()), b)
    }
    fn sample(&self, rng: &mut SampleRng, size: usize) -> FreeWord {
        FreeWord::random(rng, self.rank as u32, size)
    }
    fn is_central(&self, b: &FreeWord) -> bool {
        b.is_identity()
    }
    fn b_abelian(&self) -> bool {
        self.b_rank == 1
    }
    fn b_cyclic(&self) -> bool {
        self.b_rank == 1
    }
}

/// An element of ℤ≀ℤ: a finitely supported map ℤ → ℤ (the base, generated
/// by the y_i) followed by x^shift.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct WreathElement {
    base: BTreeMap<i64, i64>,
    shift: i64,
}

impl WreathElement {
    pub fn new(base: impl IntoIterator<Item = (i64, i64)>, shift: i64) -> Self {
        let mut map = BTreeMap::new();
        for (i, c) in base {
            *map.entry(i).or_insert(0) += c;
        }
        map.retain(|_, c| *c != 0);
        WreathElement { base: map, shift }
    }

    /// y_i.
    pub fn y(i: i64) -> Self {
        Self::new([(i, 1)], 0)
    }

    /// x^t.
    pub fn x_pow(t: i64) -> Self {
        Self::new([], t)
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn base(&self) -> &BTreeMap<i64, i64> {
        &self.base
    }
}

impl Display for WreathElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.base.iter().map(|(i, c)| format!("y{i}^{c}")).collect();
        if self.shift != 0 {
            parts.push(format!("x^{}", self.shift));
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// ℤ≀ℤ = ⟨x, y_i | y_i^x = y_{i+1}, [y_i, y_j] = 1⟩ split as G'·⟨x⟩, with
/// (f, t)(g, s) = (f + g(· + t), t + s).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct WreathFactorization;

impl ExactFactorization for WreathFactorization {
    type Elem = WreathElement;

    fn identity(&self) -> WreathElement {
        WreathElement::default()
    }
    fn mul(&self, a: &WreathElement, b: &WreathElement) -> WreathElement {
        let moved = b.base.iter().map(|(&i, &c)| (i - a.shift, c));
        WreathElement::new(a.base.iter().map(|(&i, &c)| (i, c)).chain(moved), a.shift + b.shift)
    }
    fn inv(&self, a: &WreathElement) -> WreathElement {
        WreathElement::new(a.base.iter().map(|(&i, &c)| (i + a.shift, -c)), -a.shift)
    }
    fn split(&self, g: &WreathElement) -> (WreathElement, WreathElement) {
        (WreathElement { base: g.base.clone(), shift: 0 }, WreathElement::x_pow(g.shift))
    }
    fn sample(&self, rng: &mut SampleRng, size: usize) -> WreathElement {
        let r = size.max(1) as i64;
        let terms = rng.gen_range(0..=size);
        let base: Vec<(i64, i64)> = (0..terms).map(|_| (rng.gen_range(-r..=r), rng.gen_range(-3..=3))).collect();
        WreathElement::new(base, rng.gen_range(-r..=r))
    }
    fn is_central(&self, b: &WreathElement) -> bool {
        b.shift == 0 && b.base.is_empty()
    }
    fn b_abelian(&self) -> bool {
        true
    }
    fn b_cyclic(&self) -> bool {
        true
    }
}
