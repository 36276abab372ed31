//! Non-commutative integer power series truncated above a fixed degree, and
//! the two-sided brace on their augmentation ideal.

use std::collections::BTreeMap;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::brace::checks::{check_brace_axiom_on, scan, Domain};
use crate::brace::{LambdaDescriptor, SkewBrace};
use crate::error::{Error, Result};
use crate::group::FreeWord;
use crate::verdict::{SampleRng, Strategy, Verdict};

/// A monomial X_{i₁}X_{i₂}⋯, as its variable indices.
pub type Monomial = Vec<u8>;

/// Σ c_m·m over monomials of degree ≤ `cap` in `n_vars` non-commuting
/// variables. Zero coefficients are never stored, so equality is
/// structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    n_vars: usize,
    cap: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl TruncatedSeries {
    pub fn zero(n_vars: usize, cap: usize) -> Self {
        assert!(n_vars <= u8::MAX as usize + 1, "too many variables");
        TruncatedSeries { n_vars, cap, terms: BTreeMap::new() }
    }

    pub fn one(n_vars: usize, cap: usize) -> Self {
        Self::monomial(n_vars, cap, Vec::new(), BigInt::one())
    }

    /// X_i, 0-based.
    pub fn var(n_vars: usize, cap: usize, i: usize) -> Self {
        assert!(i < n_vars, "variable X{} out of range", i + 1);
        Self::monomial(n_vars, cap, vec![i as u8], BigInt::one())
    }

    /// c·m, or zero when m is above the cap.
    pub fn monomial(n_vars: usize, cap: usize, m: Monomial, c: BigInt) -> Self {
        let mut s = Self::zero(n_vars, cap);
        s.add_term(m, c);
        s
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if m.len() > self.cap || c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            let key: Vec<Monomial> = self.terms.iter().filter(|(_, v)| v.is_zero()).map(|(k, _)| k.clone()).collect();
            for k in key {
                self.terms.remove(&k);
            }
        }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, BigInt> {
        &self.terms
    }

    pub fn coefficient(&self, m: &[u8]) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coefficient(&[])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn same_shape(&self, o: &TruncatedSeries) -> Result<()> {
        if self.n_vars != o.n_vars || self.cap != o.cap {
            return Err(Error::CapMismatch {
                left: format!("{} vars, degree {}", self.n_vars, self.cap),
                right: format!("{} vars, degree {}", o.n_vars, o.cap),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, o: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.same_shape(o)?;
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, o: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.same_shape(o)?;
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                if m1.len() + m2.len() > self.cap {
                    continue;
                }
                let m: Monomial = m1.iter().chain(m2).copied().collect();
                *acc.entry(m).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(TruncatedSeries { n_vars: self.n_vars, cap: self.cap, terms })
    }

    pub fn scale(&self, k: &BigInt) -> TruncatedSeries {
        let mut out = Self::zero(self.n_vars, self.cap);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * k);
        }
        out
    }

    /// Image under the quotient to a smaller cap.
    pub fn truncate(&self, cap: usize) -> TruncatedSeries {
        assert!(cap <= self.cap, "truncation can only lower the cap");
        let terms = self.terms.iter().filter(|(m, _)| m.len() <= cap).map(|(m, c)| (m.clone(), c.clone())).collect();
        TruncatedSeries { n_vars: self.n_vars, cap, terms }
    }

    /// Random series with up to `size` terms of degree 1..=cap and
    /// coefficients in [−3, 3].
    pub fn random(rng: &mut impl Rng, n_vars: usize, cap: usize, size: usize) -> Self {
        let mut s = Self::zero(n_vars, cap);
        for _ in 0..rng.gen_range(0..=size) {
            let deg = rng.gen_range(1..=cap.max(1));
            let m: Monomial = (0..deg).map(|_| rng.gen_range(0..n_vars) as u8).collect();
            s.add_term(m, BigInt::from(rng.gen_range(-3i64..=3)));
        }
        s
    }
}

macro_rules! series_op {
    ($tr:ident, $f:ident, $body:expr) => {
        impl $tr for &TruncatedSeries {
            type Output = TruncatedSeries;
            /// Panics when the shapes differ; the `checked_` forms report it.
            fn $f(self, o: &TruncatedSeries) -> TruncatedSeries {
                let op: fn(&TruncatedSeries, &TruncatedSeries) -> Result<TruncatedSeries> = $body;
                op(self, o).expect("series shapes differ")
            }
        }
    };
}

series_op!(Add, add, |a, b| a.checked_add(b));
series_op!(Sub, sub, |a, b| a.checked_add(&-b));
series_op!(Mul, mul, |a, b| a.checked_mul(b));

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        self.scale(&BigInt::from(-1))
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let mono: String = m.iter().map(|&i| format!("X{}", i + 1)).collect();
            let sign = if c.is_negative() { "-" } else if k > 0 { "+" } else { "" };
            if k > 0 {
                f.write_str(" ")?;
            }
            let mag = c.abs();
            match (mono.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{sign}{mag}")?,
                (false, true) => write!(f, "{sign}{mono}")?,
                (false, false) => write!(f, "{sign}{mag}{mono}")?,
            }
        }
        Ok(())
    }
}

/// A truncated series with zero constant term.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Augmented(TruncatedSeries);

impl Augmented {
    pub fn new(s: TruncatedSeries) -> Result<Self> {
        let c = s.constant_term();
        if !c.is_zero() {
            return Err(Error::NonZeroConstant { constant: c.to_string() });
        }
        Ok(Augmented(s))
    }

    pub fn series(&self) -> &TruncatedSeries {
        &self.0
    }

    pub fn into_series(self) -> TruncatedSeries {
        self.0
    }

    /// a∘b = a + b + ab.
    pub fn circ(&self, b: &Augmented) -> Result<Augmented> {
        let ab = self.0.checked_mul(&b.0)?;
        Ok(Augmented(self.0.checked_add(&b.0)?.checked_add(&ab)?))
    }

    /// −a + a² − a³ + ⋯, exact because a^k = 0 beyond the cap.
    pub fn adjoint_inverse(&self) -> Augmented {
        let minus = -&self.0;
        let mut power = minus.clone();
        let mut sum = TruncatedSeries::zero(self.0.n_vars, self.0.cap);
        while !power.is_zero() {
            sum = &sum + &power;
            power = &power * &minus;
        }
        Augmented(sum)
    }

    pub fn truncate(&self, cap: usize) -> Augmented {
        Augmented(self.0.truncate(cap))
    }
}

impl fmt::Display for Augmented {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// (B, +, ∘) on the augmentation ideal B of ℤ⟨⟨X₁, …, X_n⟩⟩ / (degree > d).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeriesBrace {
    pub n_vars: usize,
    pub cap: usize,
}

impl SeriesBrace {
    pub fn new(n_vars: usize, cap: usize) -> Result<Self> {
        if n_vars == 0 || n_vars > 256 {
            return Err(Error::BadRank { rank: n_vars, min: 1 });
        }
        Ok(SeriesBrace { n_vars, cap })
    }

    pub fn var(&self, i: usize) -> Augmented {
        Augmented(TruncatedSeries::var(self.n_vars, self.cap, i))
    }

    pub fn zero(&self) -> Augmented {
        Augmented(TruncatedSeries::zero(self.n_vars, self.cap))
    }

    /// μ(w) with x_i ↦ X_i and x_i⁻¹ ↦ the adjoint inverse of X_i, so that
    /// 1 + μ(w) is the Magnus image of w.
    pub fn magnus_image(&self, w: &FreeWord) -> Result<Augmented> {
        let mut acc = self.zero();
        for &(g, e) in w.syllables() {
            if g as usize >= self.n_vars {
                return Err(Error::UnknownGenerator { generator: g as usize + 1, rank: self.n_vars });
            }
            let x = self.var(g as usize);
            let base = if e < 0 { x.adjoint_inverse() } else { x };
            for _ in 0..e.unsigned_abs() {
                acc = acc.circ(&base)?;
            }
        }
        Ok(acc)
    }
}

impl SkewBrace for SeriesBrace {
    type Elem = Augmented;

    fn identity(&self) -> Augmented {
        self.zero()
    }
    fn dot(&self, a: &Augmented, b: &Augmented) -> Augmented {
        Augmented(&a.0 + &b.0)
    }
    fn dot_inv(&self, a: &Augmented) -> Augmented {
        Augmented(-&a.0)
    }
    fn circ(&self, a: &Augmented, b: &Augmented) -> Augmented {
        a.circ(b).expect("series shapes differ")
    }
    fn circ_inv(&self, a: &Augmented) -> Augmented {
        a.adjoint_inverse()
    }
    fn sample(&self, rng: &mut SampleRng, size: usize) -> Augmented {
        Augmented(TruncatedSeries::random(rng, self.n_vars, self.cap, size))
    }
    fn descriptor(&self) -> LambdaDescriptor {
        LambdaDescriptor::LeftMultiplication
    }
    /// a·b = 0 for every b in the ideal iff every term of a has top degree.
    fn in_lambda_kernel(&self, a: &Augmented) -> Option<bool> {
        Some(a.0.terms.keys().all(|m| m.len() >= self.cap))
    }
}

/// Left axiom a∘(b + c) = a∘b − a + a∘c and right axiom
/// (b + c)∘a = b∘a − a + c∘a on the same triples.
pub fn check_two_sided_brace(n_vars: usize, cap: usize, strategy: &Strategy) -> Result<Verdict> {
    let b = SeriesBrace::new(n_vars, cap)?;
    let d = match *strategy {
        Strategy::Sampled { count, size, seed } => Domain::Random { count, size, seed },
        Strategy::Exhaustive => return Ok(Verdict::fail("exhaustive strategy needs a finite carrier", 0)),
    };
    let left = check_brace_axiom_on(&b, &d);
    let right = scan(&b, &d, |[a, x, y]| {
        let lhs = b.circ(&b.dot(x, y), a);
        let rhs = &(&b.circ(x, a).0 - &a.0) + &b.circ(y, a).0;
        lhs.0 == rhs
    });
    let tag = |v: Verdict, side: &str| match v.witness {
        Some(w) => Verdict { witness: Some(format!("{side} axiom: {w}")), ..v },
        None => v,
    };
    Ok(tag(left, "left").and(tag(right, "right")))
}

/// μ is injective on the reduced words of length ≤ `len` in two
/// generators, computed at cap `cap`. The witness names a colliding pair.
pub fn free_subgroup_witness(cap: usize, len: usize) -> Result<Verdict> {
    let b = SeriesBrace::new(2, cap)?;
    let words = FreeWord::enumerate(2, len);
    let mut seen: HashMap<Augmented, FreeWord> = HashMap::with_capacity(words.len());
    for w in &words {
        let img = b.magnus_image(w)?;
        if let Some(prev) = seen.insert(img, w.clone()) {
            return Ok(Verdict::fail(format!("μ({prev}) = μ({w})"), seen.len() as u64 + 1));
        }
    }
    Ok(Verdict::pass(words.len() as u64))
}

#[cfg(test)]
mod tests {
    use proptest::prelude::{any, prop_assert_eq, proptest};

    use super::*;
    use crate::brace::{check_circ_group, is_symmetric};
    use crate::group::word::w;
    use crate::verdict::rng_from_seed;

    fn big(k: i64) -> BigInt {
        BigInt::from(k)
    }

    #[test]
    fn ring_examples() {
        let x1 = TruncatedSeries::var(2, 2, 0);
        let x2 = TruncatedSeries::var(2, 2, 1);
        assert_ne!(&x1 * &x2, &x2 * &x1);
        let s = &x1 + &x2;
        let sq = &s * &s;
        assert_eq!(sq.terms().len(), 4);
        for m in [vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]] {
            assert_eq!(sq.coefficient(&m), big(1));
        }
        assert!((&s * &TruncatedSeries::zero(2, 2)).is_zero());
        assert!(matches!(x1.checked_add(&TruncatedSeries::var(2, 3, 0)), Err(Error::CapMismatch { .. })));
        assert_eq!((&sq - &sq).to_string(), "0");
        assert_eq!((&(&x1 - &x2) + &(&x1 * &x2)).to_string(), "X1 +X1X2 -X2");
    }

    #[test]
    fn adjoint_examples() {
        let b = SeriesBrace::new(3, 3).unwrap();
        let (x1, x2, x3) = (b.var(0), b.var(1), b.var(2));
        let p = x1.circ(&x2).unwrap();
        let expect = &(&x1.0 + &x2.0) + &(&x1.0 * &x2.0);
        assert_eq!(p.0, expect);
        assert_eq!(b.zero().circ(&x1).unwrap(), x1);
        assert_eq!(x1.circ(&b.zero()).unwrap(), x1);
        assert_eq!(p.circ(&x3).unwrap(), x1.circ(&x2.circ(&x3).unwrap()).unwrap());
        let inv = x1.adjoint_inverse();
        assert_eq!(inv.0.coefficient(&[0]), big(-1));
        assert_eq!(inv.0.coefficient(&[0, 0]), big(1));
        assert_eq!(inv.0.coefficient(&[0, 0, 0]), big(-1));
        assert_eq!(inv.0.terms().len(), 3);
        assert_eq!(b.zero().adjoint_inverse(), b.zero());
        assert!(Augmented::new(TruncatedSeries::one(2, 2)).is_err());
    }

    #[test]
    fn adjoint_inverse_is_exact() {
        let b = SeriesBrace::new(2, 4).unwrap();
        let mut rng = rng_from_seed(4);
        for _ in 0..200 {
            let a = b.sample(&mut rng, 6);
            let ai = a.adjoint_inverse();
            assert!(a.circ(&ai).unwrap().0.is_zero());
            assert!(ai.circ(&a).unwrap().0.is_zero());
        }
    }

    #[test]
    fn two_sided_and_group_laws() {
        for n in 2..=3 {
            for d in 2..=4 {
                let s = Strategy::Sampled { count: 500, size: 5, seed: 8 };
                assert!(check_two_sided_brace(n, d, &s).unwrap().pass);
                assert!(check_circ_group(&SeriesBrace::new(n, d).unwrap(), &s).pass);
            }
        }
        let b = SeriesBrace::new(2, 3).unwrap();
        let s = Strategy::Sampled { count: 300, size: 4, seed: 1 };
        // not symmetric, and both criteria say so
        let v = is_symmetric(&b, &s);
        assert!(!v.pass);
        assert!(!v.witness.unwrap().contains("disagree"));
    }

    #[test]
    fn magnus_examples() {
        let b = SeriesBrace::new(2, 2).unwrap();
        assert_eq!(b.magnus_image(&w("x")).unwrap(), b.var(0));
        assert_eq!(b.magnus_image(&FreeWord::from_syllables([(0, 1), (0, -1)])).unwrap(), b.zero());
        let c = b.magnus_image(&FreeWord::commutator(&w("x"), &w("y"))).unwrap();
        assert_eq!(c.0.coefficient(&[0, 1]), big(1));
        assert_eq!(c.0.coefficient(&[1, 0]), big(-1));
        assert_ne!(b.magnus_image(&w("x*y")).unwrap(), b.magnus_image(&w("y*x")).unwrap());
        assert!(matches!(b.magnus_image(&w("x3")), Err(Error::UnknownGenerator { generator: 3, rank: 2 })));
        assert!(free_subgroup_witness(2, 2).unwrap().pass);
        let v = free_subgroup_witness(4, 4).unwrap();
        assert!(v.pass, "{v}");
        assert_eq!(v.checked, 161);
    }

    #[test]
    fn magnus_is_a_homomorphism() {
        let b = SeriesBrace::new(2, 4).unwrap();
        let mut rng = rng_from_seed(12);
        for _ in 0..1000 {
            let u = FreeWord::random(&mut rng, 2, 4);
            let v = FreeWord::random(&mut rng, 2, 4);
            let lhs = b.magnus_image(&u.multiply(&v)).unwrap();
            let rhs = b.magnus_image(&u).unwrap().circ(&b.magnus_image(&v).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    proptest! {
        #[test]
        fn truncation_commutes_with_operations(seed in any::<u64>(), d in 1usize..4) {
            let mut rng = rng_from_seed(seed);
            let a = Augmented(TruncatedSeries::random(&mut rng, 2, 4, 5));
            let c = Augmented(TruncatedSeries::random(&mut rng, 2, 4, 5));
            prop_assert_eq!((&a.0 + &c.0).truncate(d), &a.0.truncate(d) + &c.0.truncate(d));
            prop_assert_eq!((&a.0 * &c.0).truncate(d), &a.0.truncate(d) * &c.0.truncate(d));
            prop_assert_eq!(a.circ(&c).unwrap().truncate(d), a.truncate(d).circ(&c.truncate(d)).unwrap());
            prop_assert_eq!(a.adjoint_inverse().truncate(d), a.truncate(d).adjoint_inverse());
        }

        #[test]
        fn multiplication_is_associative(seed in any::<u64>()) {
            let mut rng = rng_from_seed(seed);
            let [a, b, c] = std::array::from_fn(|_| TruncatedSeries::random(&mut rng, 3, 3, 4));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }
    }
}
