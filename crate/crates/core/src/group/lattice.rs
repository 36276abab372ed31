//! ℤⁿ as integer vectors and its automorphisms as unimodular integer matrices.
//!
//! Row `i` of a matrix is the image of the basis vector `x_i`, so a vector `v`
//! is mapped to the row vector `v·M`. All arithmetic is overflow-checked and
//! panics instead of wrapping.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

fn ck_add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("integer overflow in lattice arithmetic")
}

fn ck_mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("integer overflow in lattice arithmetic")
}

/// An element m₁x₁ + ⋯ + m_nx_n of ℤⁿ.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ZnVector(pub Vec<i64>);

impl ZnVector {
    pub fn zero(n: usize) -> Self {
        ZnVector(vec![0; n])
    }

    /// Basis vector x_{i+1} (0-based index `i`).
    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        ZnVector(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// Coordinate sum, the logarithm l(a).
    pub fn log(&self) -> i64 {
        self.0.iter().fold(0, |acc, &c| ck_add(acc, c))
    }

    pub fn scale(&self, k: i64) -> ZnVector {
        ZnVector(self.0.iter().map(|&c| ck_mul(c, k)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Every vector with coordinates in `[-r, r]`, in lexicographic order.
    pub fn box_points(n: usize, r: i64) -> Vec<ZnVector> {
        let mut out = vec![ZnVector(Vec::with_capacity(n))];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|v| {
                    (-r..=r).map(move |c| {
                        let mut w = v.0.clone();
                        w.push(c);
                        ZnVector(w)
                    })
                })
                .collect();
        }
        out
    }
}

impl From<Vec<i64>> for ZnVector {
    fn from(v: Vec<i64>) -> Self {
        ZnVector(v)
    }
}

impl Add for &ZnVector {
    type Output = ZnVector;
    fn add(self, rhs: &ZnVector) -> ZnVector {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch");
        ZnVector(self.0.iter().zip(&rhs.0).map(|(&a, &b)| ck_add(a, b)).collect())
    }
}

impl Sub for &ZnVector {
    type Output = ZnVector;
    fn sub(self, rhs: &ZnVector) -> ZnVector {
        self + &(-rhs)
    }
}

impl Neg for &ZnVector {
    type Output = ZnVector;
    fn neg(self) -> ZnVector {
        ZnVector(self.0.iter().map(|&a| a.checked_neg().expect("integer overflow in lattice arithmetic")).collect())
    }
}

impl fmt::Display for ZnVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// A square integer matrix, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i64>>", into = "Vec<Vec<i64>>")]
pub struct IntMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl TryFrom<Vec<Vec<i64>>> for IntMatrix {
    type Error = Error;
    fn try_from(rows: Vec<Vec<i64>>) -> Result<Self> {
        IntMatrix::new(rows)
    }
}

impl From<IntMatrix> for Vec<Vec<i64>> {
    fn from(m: IntMatrix) -> Self {
        m.rows()
    }
}

impl IntMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyTable);
        }
        let mut entries = Vec::with_capacity(n * n);
        for r in rows {
            if r.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: r.len() });
            }
            entries.extend(r);
        }
        Ok(IntMatrix { n, entries })
    }

    /// Matrix literal helper; panics if not square.
    pub fn from_rows<const N: usize>(rows: [[i64; N]; N]) -> Self {
        IntMatrix { n: N, entries: rows.iter().flatten().copied().collect() }
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        IntMatrix { n, entries }
    }

    /// The permutation matrix sending x_i to x_{perm[i]}.
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut entries = vec![0; n * n];
        for (i, &j) in perm.iter().enumerate() {
            entries[i * n + j] = 1;
        }
        IntMatrix { n, entries }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.n).map(<[i64]>::to_vec).collect()
    }

    pub fn row_sums(&self) -> Vec<i64> {
        self.entries.chunks(self.n).map(|r| r.iter().fold(0, |a, &c| ck_add(a, c))).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == IntMatrix::identity(self.n)
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        self.checked_mul(other).expect("integer overflow in lattice arithmetic")
    }

    /// Product, or `None` on overflow.
    pub fn checked_mul(&self, other: &IntMatrix) -> Option<IntMatrix> {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        let mut entries = vec![0i64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] = entries[i * n + j].checked_add(a.checked_mul(other.get(k, j))?)?;
                }
            }
        }
        Some(IntMatrix { n, entries })
    }

    /// Image of `v` under the automorphism: the row vector `v·M`.
    pub fn apply(&self, v: &ZnVector) -> ZnVector {
        assert_eq!(v.dim(), self.n, "dimension mismatch");
        let n = self.n;
        let mut out = vec![0i64; n];
        for (i, &c) in v.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o = ck_add(*o, ck_mul(c, self.get(i, j)));
            }
        }
        ZnVector(out)
    }

    /// Determinant by fraction-free elimination.
    pub fn det(&self) -> i64 {
        let n = self.n;
        let mut m: Vec<i128> = self.entries.iter().map(|&e| e as i128).collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n {
            if m[k * n + k] == 0 {
                match (k + 1..n).find(|&r| m[r * n + k] != 0) {
                    Some(r) => {
                        for j in 0..n {
                            m.swap(k * n + j, r * n + j);
                        }
                        sign = -sign;
                    }
                    None => return 0,
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = m[i * n + j]
                        .checked_mul(m[k * n + k])
                        .and_then(|x| x.checked_sub(m[i * n + k].checked_mul(m[k * n + j])?))
                        .expect("integer overflow in determinant");
                    m[i * n + j] = v / prev;
                }
            }
            prev = m[k * n + k];
        }
        i64::try_from(sign * m[n * n - 1]).expect("determinant out of range")
    }

    /// Exact inverse of a unimodular matrix.
    pub fn inverse(&self) -> Result<IntMatrix> {
        let d = self.det();
        if d != 1 && d != -1 {
            return Err(Error::NotUnimodular { det: d });
        }
        let n = self.n;
        if n == 1 {
            return Ok(IntMatrix { n, entries: vec![d] });
        }
        // adj(M)[j][i] = (-1)^(i+j) det(minor(i, j)); inverse = adj / det.
        let mut entries = vec![0i64; n * n];
        for i in 0..n {
            for j in 0..n {
                let minor: Vec<i64> = (0..n)
                    .filter(|&r| r != i)
                    .flat_map(|r| (0..n).filter(move |&c| c != j).map(move |c| (r, c)))
                    .map(|(r, c)| self.get(r, c))
                    .collect();
                let cof = IntMatrix { n: n - 1, entries: minor }.det();
                let signed = if (i + j) % 2 == 0 { cof } else { -cof };
                entries[j * n + i] = ck_mul(signed, d);
            }
        }
        Ok(IntMatrix { n, entries })
    }

    /// `M^k` for any integer `k`; negative powers need a unimodular matrix.
    pub fn power(&self, k: i64) -> Result<IntMatrix> {
        let mut base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = IntMatrix::identity(self.n);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        Ok(acc)
    }

    /// Multiplicative order, or `None` when the order is infinite.
    ///
    /// A finite-order element of GL(n, ℤ) has order dividing `torsion_exponent(n)`,
    /// so M has finite order iff M^L = I for that L. Overflow while computing
    /// M^L by squaring also means infinite order: the powers of a finite-order
    /// matrix form a finite set of matrices that were all representable.
    pub fn finite_order(&self) -> Option<u64> {
        let l = torsion_exponent(self.n);
        let is_id = |k: u64| self.checked_power(k).is_some_and(|m| m.is_identity());
        if !is_id(l) {
            return None;
        }
        let mut order = l;
        for (p, _) in factorize(l) {
            while order.is_multiple_of(p) && is_id(order / p) {
                order /= p;
            }
        }
        Some(order)
    }

    fn checked_power(&self, mut e: u64) -> Option<IntMatrix> {
        let mut base = self.clone();
        let mut acc = IntMatrix::identity(self.n);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Some(acc)
    }
}

/// Least common multiple of the orders of finite-order elements of GL(n, ℤ):
/// the product of p^a over primes with φ(p^a) ≤ n (taking a maximal).
pub fn torsion_exponent(n: usize) -> u64 {
    let n = n.max(1) as u64;
    let mut l = 1u64;
    for p in 2..=n + 1 {
        if (2..p).any(|d| p % d == 0) {
            continue;
        }
        let mut q = p;
        while q * (p - 1) <= n {
            q *= p;
        }
        l *= q;
    }
    l
}

fn factorize(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        let mut e = 0;
        while m.is_multiple_of(p) {
            m /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, r) in self.entries.chunks(self.n).enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r:?}")?;
        }
        f.write_str("]")
    }
}

/// The lattice-brace case-1 matrix [[1+p, −p], [p, 1−p]].
pub fn case1_matrix(p: i64) -> IntMatrix {
    IntMatrix::from_rows([[1 + p, -p], [p, 1 - p]])
}

/// The lattice-brace case-2 matrix [[1+p, −p], [p+2, −1−p]].
pub fn case2_matrix(p: i64) -> IntMatrix {
    IntMatrix::from_rows([[1 + p, -p], [p + 2, -1 - p]])
}
