//! Braces on the free abelian group ℤⁿ with λ_a = φ^{l(a)}, l(a) the
//! coordinate sum.
//!
//! Matrices act on row vectors: row i of [φ] is φ(x_i).

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::brace::{check_criterion_on_generators, LambdaDescriptor, PhiOrder, SkewBrace};
use crate::error::{Error, Result};
use crate::group::lattice::{case1_matrix, case2_matrix};
use crate::group::{IntMatrix, ZnVector};
use crate::verdict::{SampleRng, Verdict};

/// Powers φ^k with |k| up to this are precomputed.
const POWER_CACHE: i64 = 16;

/// (ℤⁿ, +, ∘) with a∘b = a + φ^{l(a)}(b).
#[derive(Clone, Debug)]
pub struct LatticeBrace {
    phi: IntMatrix,
    order: PhiOrder,
    /// φ^{k} at index k + POWER_CACHE, or φ^0..φ^{ord-1} when φ has finite order.
    powers: Vec<IntMatrix>,
}

/// Σ of the coordinates.
pub fn log_vector(a: &ZnVector) -> i64 {
    a.log()
}

/// Pass iff every row of M sums to 1, i.e. φ(x_i) ≡ x_i mod the sum-zero
/// sublattice.
pub fn validate_phi(m: &IntMatrix) -> Result<Verdict> {
    let det = m.det();
    if det.abs() != 1 {
        return Err(Error::NotUnimodular { det });
    }
    let sums = m.row_sums();
    Ok(match sums.iter().position(|&s| s != 1) {
        None => Verdict::pass(sums.len() as u64),
        Some(i) => Verdict::fail(format!("row {} sums to {}", i + 1, sums[i]), i as u64 + 1),
    })
}

impl LatticeBrace {
    /// Checked constructor: M unimodular with every row summing to 1.
    pub fn new(phi: IntMatrix) -> Result<Self> {
        let v = validate_phi(&phi)?;
        if !v.pass {
            let sums = phi.row_sums();
            let row = sums.iter().position(|&s| s != 1).unwrap_or(0);
            return Err(Error::NotValidPhi { row: row + 1, sum: sums[row] });
        }
        Ok(Self::build(phi))
    }

    /// Accepts any unimodular φ for which x_i⁻¹φ(x_i) ∈ Ker λ on every
    /// generator. This admits φ that do not preserve l, such as −1 on ℤ.
    pub fn from_lambda(phi: IntMatrix) -> Result<Self> {
        let det = phi.det();
        if det.abs() != 1 {
            return Err(Error::NotUnimodular { det });
        }
        let b = Self::build(phi);
        let gens: Vec<ZnVector> = (0..b.rank()).map(|i| ZnVector::basis(b.rank(), i)).collect();
        let v = check_criterion_on_generators(
            &gens,
            |_, x| b.phi.apply(x),
            |x, y| y - x,
            |e| b.order.kills(e.log()),
        )?;
        match v.witness {
            Some(w) => Err(Error::NotABrace { witness: w }),
            None => Ok(b),
        }
    }

    fn build(phi: IntMatrix) -> Self {
        let order = match phi.finite_order() {
            Some(k) => PhiOrder::Finite(k),
            None => PhiOrder::Infinite,
        };
        let powers = match order {
            PhiOrder::Finite(k) => {
                let mut out = vec![IntMatrix::identity(phi.dim())];
                for _ in 1..k {
                    let next = out.last().expect("nonempty").mul(&phi);
                    out.push(next);
                }
                out
            }
            _ => (-POWER_CACHE..=POWER_CACHE)
                .map(|k| phi.power(k).expect("unimodular"))
                .collect(),
        };
        LatticeBrace { phi, order, powers }
    }

    pub fn rank(&self) -> usize {
        self.phi.dim()
    }

    pub fn phi(&self) -> &IntMatrix {
        &self.phi
    }

    pub fn phi_order(&self) -> PhiOrder {
        self.order
    }

    /// φ^k(v).
    pub fn apply_phi_power(&self, k: i64, v: &ZnVector) -> ZnVector {
        match self.order {
            PhiOrder::Finite(ord) => self.powers[k.rem_euclid(ord as i64) as usize].apply(v),
            _ if k.abs() <= POWER_CACHE => self.powers[(k + POWER_CACHE) as usize].apply(v),
            _ => self.phi.power(k).expect("unimodular").apply(v),
        }
    }

    pub fn circ(&self, a: &ZnVector, b: &ZnVector) -> ZnVector {
        a + &self.apply_phi_power(a.log(), b)
    }

    /// ā = −φ^{−l(a)}(a).
    pub fn circ_inv(&self, a: &ZnVector) -> ZnVector {
        -&self.apply_phi_power(-a.log(), a)
    }

    /// a^{∘k} for any integer k.
    pub fn circ_pow(&self, a: &ZnVector, k: i64) -> ZnVector {
        let base = if k < 0 { self.circ_inv(a) } else { a.clone() };
        (0..k.unsigned_abs()).fold(ZnVector::zero(self.rank()), |acc, _| self.circ(&acc, &base))
    }

    /// [a, b] = ā∘b̄∘a∘b.
    pub fn commutator(&self, a: &ZnVector, b: &ZnVector) -> ZnVector {
        let ab = self.circ(a, b);
        self.circ(&self.circ(&self.circ_inv(a), &self.circ_inv(b)), &ab)
    }
}

impl SkewBrace for LatticeBrace {
    type Elem = ZnVector;

    fn identity(&self) -> ZnVector {
        ZnVector::zero(self.rank())
    }
    fn dot(&self, a: &ZnVector, b: &ZnVector) -> ZnVector {
        a + b
    }
    fn dot_inv(&self, a: &ZnVector) -> ZnVector {
        -a
    }
    fn circ(&self, a: &ZnVector, b: &ZnVector) -> ZnVector {
        LatticeBrace::circ(self, a, b)
    }
    fn circ_inv(&self, a: &ZnVector) -> ZnVector {
        LatticeBrace::circ_inv(self, a)
    }
    fn lambda(&self, a: &ZnVector, b: &ZnVector) -> ZnVector {
        self.apply_phi_power(a.log(), b)
    }
    fn sample(&self, rng: &mut SampleRng, size: usize) -> ZnVector {
        sample_box(rng, self.rank(), size)
    }
    fn descriptor(&self) -> LambdaDescriptor {
        LambdaDescriptor::PowerOfPhi { order: self.order }
    }
    fn in_lambda_kernel(&self, a: &ZnVector) -> Option<bool> {
        self.order.kills(a.log())
    }
}

fn sample_box(rng: &mut SampleRng, n: usize, radius: usize) -> ZnVector {
    let r = radius as i64;
    ZnVector((0..n).map(|_| rng.gen_range(-r..=r)).collect())
}

/// ℤ with m∘n = m + (−1)^m n.
pub fn integer_sign_brace() -> LatticeBrace {
    LatticeBrace::from_lambda(IntMatrix::from_rows([[-1]])).expect("−1 satisfies the generator criterion")
}

fn v2(a: i64, b: i64) -> ZnVector {
    ZnVector(vec![a, b])
}

/// a∘b = a + b + p·l(a)·l(b)·(x₁ − x₂) for [φ] = [[1+p, −p], [p, 1−p]].
pub fn z2_case1_circ(p: i64, a: &ZnVector, b: &ZnVector) -> ZnVector {
    let t = p * a.log() * b.log();
    &(a + b) + &v2(t, -t)
}

/// ā = −a + p·l(a)²·(x₁ − x₂).
pub fn z2_case1_inverse(p: i64, a: &ZnVector) -> ZnVector {
    let t = p * a.log() * a.log();
    &(-a) + &v2(t, -t)
}

/// For [φ] = [[1+p, −p], [p+2, −1−p]]: a + b when l(a) is even, otherwise
/// a + b + (2b₂ + p·l(b))(x₁ − x₂).
pub fn z2_case2_circ(p: i64, a: &ZnVector, b: &ZnVector) -> ZnVector {
    let sum = a + b;
    if a.log().rem_euclid(2) == 0 {
        return sum;
    }
    let t = 2 * b.0[1] + p * b.log();
    &sum + &v2(t, -t)
}

/// −a when l(a) is even, otherwise −a + (2a₂ + p·l(a))(x₂ − x₁).
pub fn z2_case2_inverse(p: i64, a: &ZnVector) -> ZnVector {
    if a.log().rem_euclid(2) == 0 {
        return -a;
    }
    let t = 2 * a.0[1] + p * a.log();
    &(-a) + &v2(-t, t)
}

/// Which of the two ℤ² matrix families φ belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", content = "p", rename_all = "kebab-case")]
pub enum Z2Family {
    Trivial,
    Case1(i64),
    Case2(i64),
}

/// Isomorphism type of (ℤ², ∘).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MultGroupType {
    /// ∘ equals +.
    FreeAbelianIdentical,
    /// ∘ differs from + but (ℤ², ∘) is free abelian of rank 2.
    FreeAbelianIsomorphic,
    /// ⟨x, z | x⁻¹zx = z⁻¹⟩.
    KleinBottle,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Z2Classification {
    pub family: Z2Family,
    pub mult_group: MultGroupType,
    /// The defining relations of the type, evaluated exactly.
    pub relations: Verdict,
}

/// Classify an admissible 2×2 φ. Rows summing to 1 force
/// M = [[1+p, −p], [q, 1−q]] with det = 1 + p − q, so q = p or q = p + 2.
pub fn z2_classify(m: &IntMatrix) -> Result<Z2Classification> {
    if m.dim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: m.dim() });
    }
    let b = LatticeBrace::new(m.clone())?;
    let x1 = v2(1, 0);
    let x2 = v2(0, 1);
    if m.det() == 1 {
        let p = m.get(1, 0);
        debug_assert_eq!(*m, case1_matrix(p));
        if p == 0 {
            return Ok(Z2Classification {
                family: Z2Family::Trivial,
                mult_group: MultGroupType::FreeAbelianIdentical,
                relations: Verdict::pass(0),
            });
        }
        let z = &x1 - &x2;
        let expect = v2(2, -1);
        let (l, r) = (b.circ(&x1, &z), b.circ(&z, &x1));
        let relations = Verdict::from_bool(l == expect && r == expect, 2, || {
            format!("x1∘(x1−x2) = {l}, (x1−x2)∘x1 = {r}, expected {expect}")
        });
        return Ok(Z2Classification { family: Z2Family::Case1(p), mult_group: MultGroupType::FreeAbelianIsomorphic, relations });
    }
    let p = m.get(0, 0) - 1;
    debug_assert_eq!(*m, case2_matrix(p));
    let z1 = &x1 + &x2;
    let z2 = &x1 - &x2;
    let mut checks = Vec::new();
    let klein = b.circ(&b.circ(&b.circ_inv(&x1), &z2), &x1);
    let z2_bar = b.circ_inv(&z2);
    checks.push(Verdict::from_bool(klein == z2_bar, 1, || format!("x̄1∘z2∘x1 = {klein}, z̄2 = {z2_bar}")));
    let sq = b.circ(&x1, &x1);
    let sq_expect = &z1 + &z2.scale(p + 1);
    checks.push(Verdict::from_bool(sq == sq_expect, 1, || format!("x1∘x1 = {sq}, expected {sq_expect}")));
    let c1 = b.circ(&b.circ(&b.circ_inv(&x1), &z1), &x1);
    let c1_expect = &z1 + &z2.scale(2 * (1 + p));
    checks.push(Verdict::from_bool(c1 == c1_expect, 1, || format!("x̄1∘z1∘x1 = {c1}, expected {c1_expect}")));
    let (a, c) = (b.circ(&z1, &z2), b.circ(&z2, &z1));
    checks.push(Verdict::from_bool(a == c, 1, || format!("z1∘z2 = {a}, z2∘z1 = {c}")));
    checks.push(Verdict::from_bool(m.mul(m).is_identity(), 1, || "φ² ≠ 1".into()));
    Ok(Z2Classification { family: Z2Family::Case2(p), mult_group: MultGroupType::KleinBottle, relations: Verdict::all(checks) })
}

/// λ_a = ψ^{l(a)} with ψ the cyclic shift x_i ↦ x_{i+1}, x_n ↦ x_1.
pub fn cyclic_permutation_brace(n: usize) -> Result<LatticeBrace> {
    if n < 2 {
        return Err(Error::BadRank { rank: n, min: 2 });
    }
    let perm: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    LatticeBrace::new(IntMatrix::permutation(&perm))
}

/// Checks in the cyclic-permutation brace of rank n, with x = x₁,
/// z = x₂ − x₁, z₁ = Σx_i, z_k = x_k − x_{k−1}:
/// x^{∘n} = z₁, [x^{∘n}, z] = 1, (z∘x)^{∘n} = x^{∘n}, [[z, x^{∘k}], z] = 1
/// for 1 ≤ k ≤ n−2, x∘z_k∘x̄ = z_{k+1} for 2 ≤ k < n and
/// x∘z_n∘x̄ = z̄₂∘⋯∘z̄_n.
pub fn verify_presentation_relations(n: usize) -> Result<Verdict> {
    let b = cyclic_permutation_brace(n)?;
    let e = |i: usize| ZnVector::basis(n, i);
    let zero = ZnVector::zero(n);
    let x = e(0);
    let z = &e(1) - &e(0);
    let zk = |k: usize| &e(k - 1) - &e(k - 2);
    let xn = b.circ_pow(&x, n as i64);
    let z1 = ZnVector(vec![1; n]);
    let mut checks = Vec::new();
    let mut check = |ok: bool, what: String| checks.push(Verdict::from_bool(ok, 1, || what));

    check(xn == z1, format!("x^∘{n} = {xn}, expected {z1}"));
    let c = b.commutator(&xn, &z);
    check(c == zero, format!("[x^∘{n}, z] = {c}"));
    let zx = b.circ_pow(&b.circ(&z, &x), n as i64);
    check(zx == xn, format!("(z∘x)^∘{n} = {zx}, x^∘{n} = {xn}"));
    for k in 1..n.saturating_sub(1) {
        let xk = b.circ_pow(&x, k as i64);
        let c = b.commutator(&b.commutator(&z, &xk), &z);
        check(c == zero, format!("[z, x^∘{k}, z] = {c}"));
    }
    let x_bar = b.circ_inv(&x);
    let conj = |v: &ZnVector| b.circ(&b.circ(&x, v), &x_bar);
    for k in 2..n {
        let got = conj(&zk(k));
        let want = zk(k + 1);
        check(got == want, format!("x∘z{k}∘x̄ = {got}, expected z{} = {want}", k + 1));
    }
    let got = conj(&zk(n));
    let want = (2..=n).fold(zero.clone(), |acc, k| b.circ(&acc, &b.circ_inv(&zk(k))));
    check(got == want, format!("x∘z{n}∘x̄ = {got}, expected z̄2∘⋯∘z̄{n} = {want}"));
    Ok(Verdict::all(checks))
}

/// ℤⁿ with a∘b = a + b + (Σ_{i<n} α_iβ_i)·x_n, i.e. λ(x_i) = φ_i where
/// φ_i: x_i ↦ x_i + x_n for i < n.
#[derive(Clone, Debug)]
pub struct UpperTriangularBrace {
    n: usize,
}

impl UpperTriangularBrace {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::BadRank { rank: n, min: 2 });
        }
        Ok(UpperTriangularBrace { n })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    fn pairing(&self, a: &ZnVector, b: &ZnVector) -> i64 {
        a.0[..self.n - 1].iter().zip(&b.0).map(|(x, y)| x * y).sum()
    }

    /// a^{∘k}, k ≥ 0.
    pub fn circ_pow(&self, a: &ZnVector, k: u64) -> ZnVector {
        (0..k).fold(ZnVector::zero(self.n), |acc, _| self.circ(&acc, a))
    }
}

impl SkewBrace for UpperTriangularBrace {
    type Elem = ZnVector;

    fn identity(&self) -> ZnVector {
        ZnVector::zero(self.n)
    }
    fn dot(&self, a: &ZnVector, b: &ZnVector) -> ZnVector {
        a + b
    }
    fn dot_inv(&self, a: &ZnVector) -> ZnVector {
        -a
    }
    fn circ(&self, a: &ZnVector, b: &ZnVector) -> ZnVector {
        let mut out = a + b;
        out.0[self.n - 1] += self.pairing(a, b);
        out
    }
    /// ā = −a + (Σ_{i<n} α_i²)·x_n.
    fn circ_inv(&self, a: &ZnVector) -> ZnVector {
        let mut out = -a;
        out.0[self.n - 1] += self.pairing(a, a);
        out
    }
    fn sample(&self, rng: &mut SampleRng, size: usize) -> ZnVector {
        sample_box(rng, self.n, size)
    }
    fn descriptor(&self) -> LambdaDescriptor {
        LambdaDescriptor::FreeAbelianImage { rank: self.n - 1 }
    }
    fn in_lambda_kernel(&self, a: &ZnVector) -> Option<bool> {
        Some(a.0[..self.n - 1].iter().all(|&c| c == 0))
    }
}
