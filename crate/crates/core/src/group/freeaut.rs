//! Automorphisms of the free group F_n given by generator images.

use std::fmt;

use super::lattice::IntMatrix;
use super::word::FreeWord;
use crate::error::{Error, Result};

/// An automorphism of F_rank, stored with the images of its inverse so that
/// negative powers stay exact.
///
/// Invariant: `images` and `inverse_images` are mutually inverse
/// substitutions; checked on construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeAutomorphism {
    rank: usize,
    images: Vec<FreeWord>,
    inverse_images: Vec<FreeWord>,
}

impl FreeAutomorphism {
    pub fn identity(rank: usize) -> Self {
        let ids: Vec<FreeWord> = (0..rank as u32).map(FreeWord::generator).collect();
        FreeAutomorphism { rank, images: ids.clone(), inverse_images: ids }
    }

    /// Checked constructor: both substitutions must compose to the identity
    /// on every generator.
    pub fn new(images: Vec<FreeWord>, inverse_images: Vec<FreeWord>) -> Result<Self> {
        let rank = images.len();
        if inverse_images.len() != rank {
            return Err(Error::DimensionMismatch { expected: rank, found: inverse_images.len() });
        }
        for w in images.iter().chain(&inverse_images) {
            if w.rank_needed() > rank {
                return Err(Error::UnknownGenerator { generator: w.rank_needed(), rank });
            }
        }
        for i in 0..rank {
            let g = FreeWord::generator(i as u32);
            if images[i].substitute(&inverse_images)? != g {
                return Err(Error::NotAutomorphism {
                    reason: format!("inverse∘φ moves x{}", i + 1),
                });
            }
            if inverse_images[i].substitute(&images)? != g {
                return Err(Error::NotAutomorphism {
                    reason: format!("φ∘inverse moves x{}", i + 1),
                });
            }
        }
        Ok(FreeAutomorphism { rank, images, inverse_images })
    }

    /// `x_i -> sign_i · x_{perm[i]}`, where `sign_i = false` inverts the image.
    pub fn signed_permutation(perm: &[usize], positive: &[bool]) -> Result<Self> {
        let rank = perm.len();
        let mut images = vec![FreeWord::identity(); rank];
        let mut inverse = vec![FreeWord::identity(); rank];
        let mut hit = vec![false; rank];
        for (i, (&j, &pos)) in perm.iter().zip(positive).enumerate() {
            if j >= rank || hit[j] {
                return Err(Error::NotAutomorphism { reason: format!("{perm:?} is not a permutation") });
            }
            hit[j] = true;
            let e = if pos { 1 } else { -1 };
            images[i] = FreeWord::power_of(j as u32, e);
            inverse[j] = FreeWord::power_of(i as u32, e);
        }
        Self::new(images, inverse)
    }

    /// Generator swap x_1 <-> x_2 on F_2.
    pub fn swap2() -> Self {
        Self::signed_permutation(&[1, 0], &[true, true]).expect("swap is an automorphism")
    }

    /// x_i -> x_i⁻¹ for every generator.
    pub fn inversion(rank: usize) -> Self {
        let perm: Vec<usize> = (0..rank).collect();
        Self::signed_permutation(&perm, &vec![false; rank]).expect("inversion is an automorphism")
    }

    /// Inner automorphism b -> a⁻¹ b a.
    pub fn inner(rank: usize, a: &FreeWord) -> Result<Self> {
        let gens = (0..rank as u32).map(FreeWord::generator);
        let images = gens.clone().map(|g| a.conjugate(&g)).collect();
        let inverse = gens.map(|g| a.inverse().conjugate(&g)).collect();
        Self::new(images, inverse)
    }

    /// x_i -> x_i·u with every other generator fixed. `u` must not involve x_i.
    pub fn right_multiply(rank: usize, i: usize, u: &FreeWord) -> Result<Self> {
        if u.uses_generator(i as u32) {
            return Err(Error::NotAutomorphism { reason: format!("multiplier {u} involves x{}", i + 1) });
        }
        let mut images: Vec<FreeWord> = (0..rank as u32).map(FreeWord::generator).collect();
        let mut inverse = images.clone();
        images[i] = images[i].multiply(u);
        inverse[i] = inverse[i].multiply(&u.inverse());
        Self::new(images, inverse)
    }

    /// x_i -> x_j⁻¹ x_i x_j with every other generator fixed (i ≠ j).
    pub fn partial_conjugation(rank: usize, i: usize, j: usize) -> Result<Self> {
        if i == j {
            return Err(Error::NotAutomorphism { reason: "partial conjugation by itself".into() });
        }
        let xj = FreeWord::generator(j as u32);
        let mut images: Vec<FreeWord> = (0..rank as u32).map(FreeWord::generator).collect();
        let mut inverse = images.clone();
        images[i] = xj.conjugate(&images[i]);
        inverse[i] = xj.inverse().conjugate(&inverse[i]);
        Self::new(images, inverse)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    pub fn inverse_images(&self) -> &[FreeWord] {
        &self.inverse_images
    }

    pub fn apply(&self, w: &FreeWord) -> FreeWord {
        w.substitute(&self.images).expect("word outside the automorphism's rank")
    }

    pub fn apply_inverse(&self, w: &FreeWord) -> FreeWord {
        w.substitute(&self.inverse_images).expect("word outside the automorphism's rank")
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &FreeAutomorphism) -> FreeAutomorphism {
        FreeAutomorphism {
            rank: self.rank,
            images: other.images.iter().map(|w| self.apply(w)).collect(),
            inverse_images: self.inverse_images.iter().map(|w| other.apply_inverse(w)).collect(),
        }
    }

    pub fn inverse(&self) -> FreeAutomorphism {
        FreeAutomorphism {
            rank: self.rank,
            images: self.inverse_images.clone(),
            inverse_images: self.images.clone(),
        }
    }

    /// `φ^k(w)` without materializing the power.
    pub fn apply_power(&self, k: i64, w: &FreeWord) -> FreeWord {
        let mut out = w.clone();
        for _ in 0..k.unsigned_abs() {
            out = if k > 0 { self.apply(&out) } else { self.apply_inverse(&out) };
        }
        out
    }

    pub fn power(&self, k: i64) -> FreeAutomorphism {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        (0..k.unsigned_abs()).fold(FreeAutomorphism::identity(self.rank), |acc, _| acc.compose(&base))
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, w)| *w == FreeWord::generator(i as u32))
    }

    /// First generator whose image has logarithm other than 1.
    pub fn log_defect(&self) -> Option<(usize, i64)> {
        self.images.iter().enumerate().map(|(i, w)| (i, w.log())).find(|&(_, l)| l != 1)
    }

    /// Action on the abelianization ℤ^rank: row i is the exponent vector
    /// of the image of x_i.
    pub fn abelianization(&self) -> IntMatrix {
        let rows = self
            .images
            .iter()
            .map(|w| (0..self.rank as u32).map(|g| w.exponent_sum(g)).collect())
            .collect();
        IntMatrix::new(rows).expect("square by construction")
    }

    /// Order of φ, or `None` when it is infinite.
    ///
    /// If the abelianized matrix has order k then φ^k acts trivially on the
    /// abelianization. The IA subgroup of Aut(F_n) is torsion-free, so φ has
    /// finite order iff φ^k = id, and then its order is exactly k.
    pub fn order(&self) -> Option<u64> {
        let k = self.abelianization().finite_order()?;
        self.power(k as i64).is_identity().then_some(k)
    }
}

impl fmt::Display for FreeAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "x{} -> {w}", i + 1)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::word::w;
    use crate::verdict::rng_from_seed;

    #[test]
    fn swap_and_inversion() {
        let s = FreeAutomorphism::swap2();
        assert_eq!(s.apply(&w("x*y^-1")), w("y*x^-1"));
        assert_eq!(s.order(), Some(2));
        let inv = FreeAutomorphism::inversion(2);
        assert_eq!(inv.apply(&w("x*y")), w("x^-1*y^-1"));
        assert!(inv.log_defect().is_some());
    }

    #[test]
    fn non_automorphism_is_rejected() {
        // x -> x^2, y -> y with a bogus inverse
        let err = FreeAutomorphism::new(vec![w("x^2"), w("y")], vec![w("x"), w("y")]);
        assert!(matches!(err, Err(Error::NotAutomorphism { .. })));
    }

    #[test]
    fn right_multiplication_has_infinite_order() {
        let t = FreeAutomorphism::right_multiply(2, 0, &w("y")).unwrap();
        assert_eq!(t.apply(&w("x")), w("x*y"));
        assert_eq!(t.order(), None);
        assert_eq!(t.log_defect(), Some((0, 2)));
        assert!(FreeAutomorphism::right_multiply(2, 0, &w("x*y")).is_err());
    }

    #[test]
    fn inner_is_conjugation() {
        let a = w("x*y^2");
        let t = FreeAutomorphism::inner(2, &a).unwrap();
        let b = w("y*x^-3");
        assert_eq!(t.apply(&b), a.inverse().multiply(&b).multiply(&a));
        assert_eq!(t.log_defect(), None);
        assert!(t.abelianization().is_identity());
        assert_eq!(t.order(), None);
    }

    #[test]
    fn finite_orders() {
        assert_eq!(FreeAutomorphism::identity(3).order(), Some(1));
        assert_eq!(FreeAutomorphism::inversion(3).order(), Some(2));
        let cycle = FreeAutomorphism::signed_permutation(&[1, 2, 0], &[true, true, true]).unwrap();
        assert_eq!(cycle.order(), Some(3));
        let neg_cycle = FreeAutomorphism::signed_permutation(&[1, 0], &[false, true]).unwrap();
        assert_eq!(neg_cycle.order(), Some(4));
    }

    #[test]
    fn powers_and_composition() {
        let t = FreeAutomorphism::partial_conjugation(3, 0, 2).unwrap();
        let u = w("x1*x2^-1*x3^2");
        assert_eq!(t.apply_power(-3, &t.apply_power(3, &u)), u);
        assert_eq!(t.power(2).apply(&u), t.apply(&t.apply(&u)));
        assert!(t.compose(&t.inverse()).is_identity());
    }

    #[test]
    fn endomorphism_is_multiplicative() {
        let t = FreeAutomorphism::right_multiply(2, 0, &w("y^2")).unwrap();
        let mut rng = rng_from_seed(11);
        for _ in 0..1000 {
            let a = FreeWord::random(&mut rng, 2, 8);
            let b = FreeWord::random(&mut rng, 2, 8);
            assert_eq!(t.apply(&a.multiply(&b)), t.apply(&a).multiply(&t.apply(&b)));
        }
    }
}
