//! Skew braces on finite carriers, stored as a second Cayley table.

use serde::{Deserialize, Serialize};

use super::checks::{check_brace_axiom, is_lambda_homomorphic};
use super::{LambdaDescriptor, SkewBrace};
use crate::error::{Error, Result};
use crate::group::morphism::{for_each_isomorphism, AutGroup, Automorphism, LambdaMap};
use crate::group::FiniteGroup;
use crate::verdict::{SampleRng, Strategy, Verdict};

/// A skew brace (G, ·, ∘) on the elements `0..n`, identity 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteBrace {
    group: FiniteGroup,
    circ: FiniteGroup,
}

/// JSON form of a finite brace:
/// `{"carrier": {"order": n}, "dot": [[...]], "circ": [[...]], "lambda_kind": {"kind": "table"}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteBraceDocument {
    pub carrier: FiniteCarrier,
    pub dot: Vec<Vec<usize>>,
    pub circ: Vec<Vec<usize>>,
    #[serde(default = "table_kind")]
    pub lambda_kind: LambdaDescriptor,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteCarrier {
    pub order: usize,
}

fn table_kind() -> LambdaDescriptor {
    LambdaDescriptor::Table
}

impl FiniteBrace {
    /// Checked constructor: ∘ must be a group with identity 0 and the brace
    /// axiom must hold for every triple.
    pub fn new(group: FiniteGroup, circ: &[Vec<usize>]) -> Result<Self> {
        if circ.len() != group.order() {
            return Err(Error::DimensionMismatch { expected: group.order(), found: circ.len() });
        }
        let circ = FiniteGroup::from_table(circ, None)?;
        let b = FiniteBrace { group, circ };
        let v = check_brace_axiom(&b, &Strategy::Exhaustive);
        match v.witness {
            Some(w) => Err(Error::NotABrace { witness: w }),
            None => Ok(b),
        }
    }

    /// Builds the ∘ table from `circ` and checks only that it is a group.
    /// The brace axiom is left to the caller.
    pub fn from_parts(group: FiniteGroup, circ: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let circ = FiniteGroup::from_fn(group.order(), circ)?;
        Ok(FiniteBrace { group, circ })
    }

    /// ∘ = ·.
    pub fn trivial(group: FiniteGroup) -> Self {
        FiniteBrace { circ: group.clone(), group }
    }

    /// a∘b = b·a, the almost-trivial brace with λ_a conjugation by a.
    pub fn opposite(group: FiniteGroup) -> Self {
        let circ = FiniteGroup::from_fn(group.order(), |a, b| group.mul(b, a)).expect("opposite group");
        FiniteBrace { group, circ }
    }

    pub fn from_document(doc: &FiniteBraceDocument) -> Result<Self> {
        if doc.dot.len() != doc.carrier.order {
            return Err(Error::DimensionMismatch { expected: doc.carrier.order, found: doc.dot.len() });
        }
        if doc.lambda_kind != LambdaDescriptor::Table {
            return Err(Error::UnsupportedFamily { family: format!("lambda_kind {:?} for a finite brace", doc.lambda_kind) });
        }
        FiniteBrace::new(FiniteGroup::from_table(&doc.dot, None)?, &doc.circ)
    }

    /// Like [`FiniteBrace::from_document`] but only checks that both tables
    /// are groups, so a broken axiom can be reported as a verdict.
    pub fn from_document_unverified(doc: &FiniteBraceDocument) -> Result<Self> {
        if doc.dot.len() != doc.carrier.order || doc.circ.len() != doc.carrier.order {
            return Err(Error::DimensionMismatch { expected: doc.carrier.order, found: doc.dot.len().max(doc.circ.len()) });
        }
        let group = FiniteGroup::from_table(&doc.dot, None)?;
        let circ = FiniteGroup::from_table(&doc.circ, None)?;
        Ok(FiniteBrace { group, circ })
    }

    pub fn to_document(&self) -> FiniteBraceDocument {
        FiniteBraceDocument {
            carrier: FiniteCarrier { order: self.order() },
            dot: self.group.table_rows(),
            circ: self.circ.table_rows(),
            lambda_kind: LambdaDescriptor::Table,
        }
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// The additive group (G, ·).
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    /// The multiplicative group (G, ∘), validated as a group on construction.
    pub fn multiplicative_group(&self) -> &FiniteGroup {
        &self.circ
    }

    #[inline]
    pub fn circ_at(&self, a: usize, b: usize) -> usize {
        self.circ.mul(a, b)
    }

    #[inline]
    pub fn lambda_at(&self, a: usize, b: usize) -> usize {
        self.group.mul(self.group.inv(a), self.circ.mul(a, b))
    }

    /// λ_a as a verified automorphism of (G, ·).
    pub fn lambda_of(&self, a: usize) -> Result<Automorphism> {
        let images = (0..self.order()).map(|b| self.lambda_at(a, b)).collect();
        Automorphism::new(&self.group, images)
    }

    /// The map a ↦ λ_a as indices into `aut`.
    pub fn lambda_map(&self, aut: &AutGroup) -> Result<LambdaMap> {
        (0..self.order())
            .map(|a| {
                let images: Vec<usize> = (0..self.order()).map(|b| self.lambda_at(a, b)).collect();
                aut.index_of(&images).ok_or_else(|| Error::NotAutomorphism {
                    reason: format!("λ_{a} is not an automorphism of (G, ·)"),
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(LambdaMap)
    }

    /// Ker λ = {a : a∘b = a·b for all b}, sorted.
    pub fn lambda_kernel(&self) -> Vec<usize> {
        (0..self.order())
            .filter(|&a| (0..self.order()).all(|b| self.circ_at(a, b) == self.group.mul(a, b)))
            .collect()
    }

    /// Distinct λ_a as image vectors, in order of first appearance.
    pub fn lambda_image(&self) -> Vec<Vec<usize>> {
        let mut seen: Vec<Vec<usize>> = Vec::new();
        for a in 0..self.order() {
            let img: Vec<usize> = (0..self.order()).map(|b| self.lambda_at(a, b)).collect();
            if !seen.contains(&img) {
                seen.push(img);
            }
        }
        seen
    }

    /// Pass iff λ is λ-homomorphic and Im λ is generated by one automorphism.
    pub fn is_lambda_cyclic(&self) -> Verdict {
        let hom = is_lambda_homomorphic(self, &Strategy::Exhaustive);
        if !hom.pass {
            return hom;
        }
        let image = self.lambda_image();
        let m = image.len();
        let cyclic = image.iter().any(|f| {
            let mut k = 1;
            let mut p = f.clone();
            while p.iter().enumerate().any(|(i, &x)| i != x) {
                p = p.iter().map(|&x| f[x]).collect();
                k += 1;
            }
            k == m
        });
        Verdict::from_bool(cyclic, m as u64, || format!("image of λ has order {m} and is not cyclic"))
    }

    /// The kernel sub-brace and triviality of the quotient.
    pub fn kernel_subbrace(&self) -> Result<KernelSubbrace> {
        let hom = is_lambda_homomorphic(self, &Strategy::Exhaustive);
        if let Some(w) = hom.witness {
            return Err(Error::NotLambdaHomomorphic { witness: w });
        }
        let kernel = self.lambda_kernel();
        let g = &self.group;
        let normal_dot = g.is_normal_subgroup(&kernel);
        let normal_circ = self.circ.is_normal_subgroup(&kernel);
        let sub_trivial = Verdict::from_bool(
            kernel.iter().all(|&a| kernel.iter().all(|&b| self.circ_at(a, b) == g.mul(a, b))),
            (kernel.len() * kernel.len()) as u64,
            || "∘ differs from · on Ker λ".into(),
        );
        let mut member = vec![false; self.order()];
        for &k in &kernel {
            member[k] = true;
        }
        let n = self.order();
        let quotient_trivial = match (0..n * n)
            .map(|i| (i / n, i % n))
            .find(|&(a, b)| !member[g.mul(g.inv(g.mul(a, b)), self.circ_at(a, b))])
        {
            None => Verdict::pass((n * n) as u64),
            Some((a, b)) => Verdict::fail(format!("a={a}, b={b}: a∘b and a·b lie in different cosets"), 0),
        };
        Ok(KernelSubbrace { index: n / kernel.len(), kernel, normal_dot, normal_circ, sub_trivial, quotient_trivial })
    }

    /// Whether some ideal I has ∘ = · on I and a trivial quotient brace.
    /// Searches the normal subgroups of (G, ·).
    pub fn is_meta_trivial(&self) -> bool {
        let g = &self.group;
        let n = self.order();
        normal_subgroups(g).into_iter().any(|ideal| {
            let mut member = vec![false; n];
            for &k in &ideal {
                member[k] = true;
            }
            let lambda_stable = (0..n).all(|a| ideal.iter().all(|&k| member[self.lambda_at(a, k)]));
            lambda_stable
                && self.circ.is_normal_subgroup(&ideal)
                && ideal.iter().all(|&a| ideal.iter().all(|&b| self.circ_at(a, b) == g.mul(a, b)))
                && (0..n).all(|a| (0..n).all(|b| member[g.mul(g.inv(g.mul(a, b)), self.circ_at(a, b))]))
        })
    }
}

/// Every normal subgroup, as sorted element lists.
fn normal_subgroups(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let mut found: Vec<Vec<usize>> = vec![vec![0]];
    let mut head = 0;
    while head < found.len() {
        let s = found[head].clone();
        head += 1;
        for x in g.elements() {
            if s.binary_search(&x).is_ok() {
                continue;
            }
            let t = g.closure(&[&s[..], &[x]].concat());
            if !found.contains(&t) {
                found.push(t);
            }
        }
    }
    found.retain(|s| g.is_normal_subgroup(s));
    found
}

/// Result of [`FiniteBrace::kernel_subbrace`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelSubbrace {
    pub kernel: Vec<usize>,
    pub index: usize,
    pub normal_dot: bool,
    pub normal_circ: bool,
    pub sub_trivial: Verdict,
    pub quotient_trivial: Verdict,
}

impl KernelSubbrace {
    pub fn holds(&self) -> bool {
        self.normal_dot && self.normal_circ && self.sub_trivial.pass && self.quotient_trivial.pass
    }
}

impl SkewBrace for FiniteBrace {
    type Elem = usize;

    fn identity(&self) -> usize {
        0
    }
    fn dot(&self, a: &usize, b: &usize) -> usize {
        self.group.mul(*a, *b)
    }
    fn dot_inv(&self, a: &usize) -> usize {
        self.group.inv(*a)
    }
    fn circ(&self, a: &usize, b: &usize) -> usize {
        self.circ.mul(*a, *b)
    }
    fn circ_inv(&self, a: &usize) -> usize {
        self.circ.inv(*a)
    }
    fn elements(&self) -> Option<Vec<usize>> {
        Some((0..self.order()).collect())
    }
    fn sample(&self, rng: &mut SampleRng, _size: usize) -> usize {
        use rand::Rng;
        rng.gen_range(0..self.order())
    }
    fn descriptor(&self) -> LambdaDescriptor {
        LambdaDescriptor::Table
    }
}

/// Whether some bijection preserves both operations. Searches the
/// isomorphisms of the additive groups and tests each on ∘.
pub fn brace_isomorphic(b1: &FiniteBrace, b2: &FiniteBrace) -> bool {
    if b1.order() != b2.order() {
        return false;
    }
    let mut found = false;
    for_each_isomorphism(&b1.group, &b2.group, &mut |f: &[usize]| {
        let n = b1.order();
        let ok = (0..n).all(|a| (0..n).all(|b| f[b1.circ_at(a, b)] == b2.circ_at(f[a], f[b])));
        if ok {
            found = true;
            std::ops::ControlFlow::Break(())
        } else {
            std::ops::ControlFlow::Continue(())
        }
    });
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::checks::{check_circ_group, check_lambda_circ_hom};
    use crate::group::catalog;
    use crate::group::morphism::is_isomorphic;

    #[test]
    fn trivial_brace_has_identity_lambda() {
        let b = FiniteBrace::trivial(catalog::quaternion());
        for a in 0..8 {
            assert!(b.lambda_of(a).unwrap().is_identity());
            assert_eq!(b.circ_inv(&a), b.group().inv(a));
        }
        assert_eq!(b.multiplicative_group(), b.group());
        let k = b.kernel_subbrace().unwrap();
        assert_eq!(k.index, 1);
        assert!(k.holds());
    }

    #[test]
    fn opposite_brace_lambda_is_conjugation() {
        let g = catalog::dihedral(4);
        let b = FiniteBrace::opposite(g.clone());
        for a in g.elements() {
            let f = b.lambda_of(a).unwrap();
            for x in g.elements() {
                assert_eq!(f.apply(x), g.mul(g.mul(g.inv(a), x), a));
            }
        }
        // Inn(D4) is abelian, so λ is also a homomorphism on (G, ·) there;
        // on D3 it is only an anti-homomorphism.
        assert!(b.kernel_subbrace().unwrap().holds());
        assert!(FiniteBrace::opposite(catalog::dihedral(3)).kernel_subbrace().is_err());
        assert!(check_lambda_circ_hom(&b, &Strategy::Exhaustive).pass);
    }

    #[test]
    fn z4_negation_brace() {
        // λ_a = negation^a: a∘b = a + (−1)^a b
        let g = catalog::cyclic(4);
        let circ: Vec<Vec<usize>> =
            (0..4).map(|a| (0..4).map(|b| if a % 2 == 0 { (a + b) % 4 } else { (a + 4 - b) % 4 }).collect()).collect();
        let b = FiniteBrace::new(g, &circ).unwrap();
        assert_eq!(b.lambda_kernel(), vec![0, 2]);
        assert!(b.is_lambda_cyclic().pass);
        assert!(b.kernel_subbrace().unwrap().holds());
        assert!(b.is_meta_trivial());
        assert!(check_circ_group(&b, &Strategy::Exhaustive).pass);
    }

    #[test]
    fn non_brace_is_rejected_with_witness() {
        let g = catalog::dihedral(3);
        let circ: Vec<Vec<usize>> = (0..6).map(|a| (0..6).map(|b| (a + b) % 6).collect()).collect();
        assert!(matches!(FiniteBrace::new(g, &circ), Err(Error::NotABrace { .. })));
    }

    #[test]
    fn isomorphism_examples() {
        let z4 = FiniteBrace::trivial(catalog::cyclic(4));
        let k4 = FiniteBrace::trivial(catalog::elementary_abelian(2));
        assert!(brace_isomorphic(&z4, &z4));
        assert!(!brace_isomorphic(&z4, &k4));
        // trivial vs opposite on an abelian group: same brace
        let g = catalog::cyclic(6);
        assert!(brace_isomorphic(&FiniteBrace::trivial(g.clone()), &FiniteBrace::opposite(g)));
        // trivial vs opposite on D3: λ differs
        let d = catalog::dihedral(3);
        assert!(!brace_isomorphic(&FiniteBrace::trivial(d.clone()), &FiniteBrace::opposite(d.clone())));
        let opp = FiniteBrace::opposite(d.clone());
        assert!(is_isomorphic(opp.multiplicative_group(), &d));
    }

    #[test]
    fn document_round_trip() {
        let b = FiniteBrace::opposite(catalog::dihedral(3));
        let json = serde_json::to_string(&b.to_document()).unwrap();
        let doc: FiniteBraceDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(FiniteBrace::from_document(&doc).unwrap().to_document(), b.to_document());
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["carrier"]["order"], 6);
        assert_eq!(v["lambda_kind"]["kind"], "table");
        let bare = r#"{"carrier": {"order": 2}, "dot": [[0, 1], [1, 0]], "circ": [[0, 1], [1, 0]]}"#;
        let doc: FiniteBraceDocument = serde_json::from_str(bare).unwrap();
        assert_eq!(FiniteBrace::from_document(&doc).unwrap().order(), 2);
    }

    #[test]
    fn normal_subgroups_of_small_groups() {
        assert_eq!(normal_subgroups(&catalog::dihedral(3)).len(), 3);
        assert_eq!(normal_subgroups(&catalog::quaternion()).len(), 6);
        assert_eq!(normal_subgroups(&catalog::dihedral(4)).len(), 6);
    }
}
