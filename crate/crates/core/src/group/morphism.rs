//! Homomorphisms between finite groups by generator-image backtracking.
//!
//! A candidate image is chosen for one generator at a time; the partial map
//! is then extended over the subgroup generated so far and every edge
//! `a -> a*g` of that subgroup's Cayley graph is checked against the images.
//! A conflict prunes the branch immediately, so no n! bijection scan is ever
//! needed.

use std::collections::HashMap;
use std::ops::ControlFlow;

use super::FiniteGroup;
use crate::error::{Error, Result};

/// Default bound on the order of groups handled by exhaustive searches.
pub const DEFAULT_ORDER_BOUND: usize = 12;

/// Which maps to keep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Any,
    Bijective,
}

struct Search<'a, F> {
    src: &'a FiniteGroup,
    dst: &'a FiniteGroup,
    kind: Kind,
    images: Vec<usize>,
    visit: F,
}

impl<F: FnMut(&[usize]) -> ControlFlow<()>> Search<'_, F> {
    fn run(&mut self) -> ControlFlow<()> {
        let mut map = vec![None; self.src.order()];
        map[0] = Some(0);
        self.step(&map)
    }

    fn step(&mut self, map: &[Option<usize>]) -> ControlFlow<()> {
        let k = self.images.len();
        let gens = self.src.generators();
        if k == gens.len() {
            let full: Vec<usize> = map.iter().map(|m| m.expect("generators span the group")).collect();
            if self.kind == Kind::Bijective {
                let mut hit = vec![false; self.dst.order()];
                for &x in &full {
                    if std::mem::replace(&mut hit[x], true) {
                        return ControlFlow::Continue(());
                    }
                }
            }
            return (self.visit)(&full);
        }
        let g = gens[k];
        let g_order = self.src.element_order(g);
        for candidate in self.dst.elements() {
            let c_order = self.dst.element_order(candidate);
            let order_ok = match self.kind {
                Kind::Any => g_order.is_multiple_of(c_order),
                Kind::Bijective => g_order == c_order,
            };
            if !order_ok {
                continue;
            }
            self.images.push(candidate);
            if let Some(extended) = extend(self.src, self.dst, &gens[..=k], &self.images, map) {
                self.step(&extended)?;
            }
            self.images.pop();
        }
        ControlFlow::Continue(())
    }
}

/// Extend a consistent partial map to the subgroup generated by `gens`, or
/// report a conflict.
fn extend(
    src: &FiniteGroup,
    dst: &FiniteGroup,
    gens: &[usize],
    images: &[usize],
    map: &[Option<usize>],
) -> Option<Vec<Option<usize>>> {
    let mut map = map.to_vec();
    let mut queue: Vec<usize> = (0..map.len()).filter(|&a| map[a].is_some()).collect();
    while let Some(a) = queue.pop() {
        let fa = map[a].expect("queued elements are mapped");
        for (&g, &img) in gens.iter().zip(images) {
            let b = src.mul(a, g);
            let want = dst.mul(fa, img);
            match map[b] {
                Some(fb) if fb != want => return None,
                Some(_) => {}
                None => {
                    map[b] = Some(want);
                    queue.push(b);
                }
            }
        }
    }
    Some(map)
}

fn search(
    src: &FiniteGroup,
    dst: &FiniteGroup,
    kind: Kind,
    visit: impl FnMut(&[usize]) -> ControlFlow<()>,
) {
    let mut s = Search { src, dst, kind, images: Vec::new(), visit };
    let _ = s.run();
}

/// Every homomorphism `src -> dst`, as element-wise image arrays, in
/// lexicographic order of generator images.
pub fn homomorphisms(src: &FiniteGroup, dst: &FiniteGroup) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    search(src, dst, Kind::Any, |m| {
        out.push(m.to_vec());
        ControlFlow::Continue(())
    });
    out
}

/// Some isomorphism `a -> b`, if one exists.
pub fn find_isomorphism(a: &FiniteGroup, b: &FiniteGroup) -> Option<Vec<usize>> {
    if a.order() != b.order() || a.order_spectrum() != b.order_spectrum() {
        return None;
    }
    let mut found = None;
    search(a, b, Kind::Bijective, |m| {
        found = Some(m.to_vec());
        ControlFlow::Break(())
    });
    found
}

/// Visit bijective homomorphisms `a -> b` until the visitor breaks.
pub fn for_each_isomorphism(
    a: &FiniteGroup,
    b: &FiniteGroup,
    visit: impl FnMut(&[usize]) -> ControlFlow<()>,
) {
    if a.order() == b.order() {
        search(a, b, Kind::Bijective, visit);
    }
}

pub fn is_isomorphic(a: &FiniteGroup, b: &FiniteGroup) -> bool {
    find_isomorphism(a, b).is_some()
}

/// An automorphism of a finite group as its image array.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Automorphism {
    images: Vec<usize>,
}

impl Automorphism {
    pub fn identity(n: usize) -> Self {
        Automorphism { images: (0..n).collect() }
    }

    /// Wrap an image array after checking it is a bijective homomorphism of `g`.
    pub fn new(g: &FiniteGroup, images: Vec<usize>) -> Result<Self> {
        let n = g.order();
        if images.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: images.len() });
        }
        let mut hit = vec![false; n];
        for &x in &images {
            if x >= n || std::mem::replace(&mut hit[x], true) {
                return Err(Error::NotAutomorphism { reason: "not a bijection".into() });
            }
        }
        for a in 0..n {
            for b in 0..n {
                if images[g.mul(a, b)] != g.mul(images[a], images[b]) {
                    return Err(Error::NotAutomorphism {
                        reason: format!("f({a}*{b}) != f({a})*f({b})"),
                    });
                }
            }
        }
        Ok(Automorphism { images })
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.images[a]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism { images: other.images.iter().map(|&x| self.images[x]).collect() }
    }

    pub fn inverse(&self) -> Automorphism {
        let mut inv = vec![0; self.images.len()];
        for (a, &x) in self.images.iter().enumerate() {
            inv[x] = a;
        }
        Automorphism { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(a, &x)| a == x)
    }
}

/// Aut(G) materialised: a sorted list of automorphisms (identity first) with
/// its composition table.
#[derive(Clone, Debug)]
pub struct AutGroup {
    group: FiniteGroup,
    autos: Vec<Automorphism>,
    index: HashMap<Vec<usize>, usize>,
    as_group: FiniteGroup,
}

/// All automorphisms of `g`, closed under composition and inverse.
pub fn all_automorphisms(g: &FiniteGroup, bound: usize) -> Result<Vec<Automorphism>> {
    Ok(AutGroup::compute(g, bound)?.autos)
}

impl AutGroup {
    pub fn compute(g: &FiniteGroup, bound: usize) -> Result<Self> {
        if g.order() > bound {
            return Err(Error::SizeLimitExceeded { order: g.order(), limit: bound });
        }
        let mut autos = Vec::new();
        search(g, g, Kind::Bijective, |m| {
            autos.push(Automorphism { images: m.to_vec() });
            ControlFlow::Continue(())
        });
        autos.sort();
        let index: HashMap<Vec<usize>, usize> =
            autos.iter().enumerate().map(|(i, f)| (f.images.clone(), i)).collect();
        let m = autos.len();
        let as_group = FiniteGroup::from_fn(m, |i, j| index[&autos[i].compose(&autos[j]).images])
            .expect("automorphisms form a group");
        Ok(AutGroup { group: g.clone(), autos, index, as_group })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.autos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.autos.is_empty()
    }

    pub fn get(&self, i: usize) -> &Automorphism {
        &self.autos[i]
    }

    pub fn automorphisms(&self) -> &[Automorphism] {
        &self.autos
    }

    pub fn index_of(&self, images: &[usize]) -> Option<usize> {
        self.index.get(images).copied()
    }

    /// Index of `f ∘ g`.
    #[inline]
    pub fn compose(&self, f: usize, g: usize) -> usize {
        self.as_group.mul(f, g)
    }

    #[inline]
    pub fn inverse(&self, f: usize) -> usize {
        self.as_group.inv(f)
    }

    /// Aut(G) as a table group whose element i is automorphism i.
    pub fn as_group(&self) -> &FiniteGroup {
        &self.as_group
    }

    #[inline]
    pub fn apply(&self, f: usize, a: usize) -> usize {
        self.autos[f].apply(a)
    }
}

/// A map λ: G -> Aut(G) stored as one automorphism index per element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LambdaMap(pub Vec<usize>);

impl LambdaMap {
    pub fn trivial(n: usize) -> Self {
        LambdaMap(vec![0; n])
    }

    #[inline]
    pub fn at(&self, a: usize) -> usize {
        self.0[a]
    }

    /// Elements sent to the identity automorphism.
    pub fn kernel(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&a| self.0[a] == 0).collect()
    }

    /// First pair violating λ(ab) = λ(a)λ(b).
    pub fn homomorphism_witness(&self, g: &FiniteGroup, aut: &AutGroup) -> Option<(usize, usize)> {
        g.elements()
            .flat_map(|a| g.elements().map(move |b| (a, b)))
            .find(|&(a, b)| self.at(g.mul(a, b)) != aut.compose(self.at(a), self.at(b)))
    }
}

/// Every homomorphism G -> Aut(G).
pub fn all_homomorphisms_to_aut(g: &FiniteGroup, aut: &AutGroup) -> Vec<LambdaMap> {
    homomorphisms(g, aut.as_group()).into_iter().map(LambdaMap).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::catalog::*;

    /// Brute-force oracle: every permutation of 0..n fixing 0 that respects the table.
    fn brute_force_automorphisms(g: &FiniteGroup) -> usize {
        fn perms(rest: &mut Vec<usize>, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if rest.is_empty() {
                out.push(acc.clone());
                return;
            }
            for i in 0..rest.len() {
                let x = rest.remove(i);
                acc.push(x);
                perms(rest, acc, out);
                acc.pop();
                rest.insert(i, x);
            }
        }
        let mut all = Vec::new();
        perms(&mut (1..g.order()).collect(), &mut vec![0], &mut all);
        all.iter()
            .filter(|p| g.elements().all(|a| g.elements().all(|b| p[g.mul(a, b)] == g.mul(p[a], p[b]))))
            .count()
    }

    /// Brute-force oracle for maps into another group.
    fn brute_force_homs(src: &FiniteGroup, dst: &FiniteGroup) -> usize {
        let n = src.order();
        let m = dst.order();
        let mut count = 0;
        let mut map = vec![0; n];
        let total = m.pow(n as u32 - 1);
        for code in 0..total {
            let mut c = code;
            for slot in map.iter_mut().skip(1) {
                *slot = c % m;
                c /= m;
            }
            if src.elements().all(|a| src.elements().all(|b| map[src.mul(a, b)] == dst.mul(map[a], map[b]))) {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn automorphism_counts_match_brute_force() {
        assert_eq!(brute_force_automorphisms(&cyclic(4)), 2);
        assert_eq!(brute_force_automorphisms(&elementary_abelian(2)), 6);
        for (name, g) in corpus(6) {
            let fast = all_automorphisms(&g, DEFAULT_ORDER_BOUND).unwrap().len();
            assert_eq!(fast, brute_force_automorphisms(&g), "{name}");
        }
    }

    #[test]
    fn known_automorphism_group_orders() {
        let count = |g: &FiniteGroup| all_automorphisms(g, 12).unwrap().len();
        assert_eq!(count(&cyclic(1)), 1);
        assert_eq!(count(&cyclic(4)), 2);
        assert_eq!(count(&elementary_abelian(2)), 6);
        assert_eq!(count(&elementary_abelian(3)), 168);
        assert_eq!(count(&dihedral(4)), 8);
        assert_eq!(count(&quaternion()), 24);
        assert_eq!(count(&dihedral(3)), 6);
    }

    #[test]
    fn trivial_group_has_only_identity() {
        let autos = all_automorphisms(&cyclic(1), 12).unwrap();
        assert_eq!(autos, vec![Automorphism::identity(1)]);
    }

    #[test]
    fn negation_is_the_other_automorphism_of_z4() {
        let autos = all_automorphisms(&cyclic(4), 12).unwrap();
        assert_eq!(autos[1].images(), &[0, 3, 2, 1]);
    }

    #[test]
    fn bound_is_enforced() {
        let err = all_automorphisms(&cyclic(13), 12).unwrap_err();
        assert_eq!(err, Error::SizeLimitExceeded { order: 13, limit: 12 });
    }

    #[test]
    fn automorphism_groups_are_closed_and_preserve_tables() {
        for (name, g) in corpus(8) {
            let aut = AutGroup::compute(&g, 12).unwrap();
            for f in aut.automorphisms() {
                assert!(Automorphism::new(&g, f.images().to_vec()).is_ok(), "{name}");
                assert!(aut.index_of(f.inverse().images()).is_some(), "{name}");
                for h in aut.automorphisms() {
                    assert!(aut.index_of(f.compose(h).images()).is_some(), "{name}");
                }
            }
            assert!(aut.get(0).is_identity());
        }
    }

    #[test]
    fn homomorphism_counts_to_aut() {
        let count = |g: &FiniteGroup| {
            let aut = AutGroup::compute(g, 12).unwrap();
            all_homomorphisms_to_aut(g, &aut).len()
        };
        assert_eq!(count(&cyclic(2)), 1);
        assert_eq!(count(&cyclic(4)), 2);
        assert_eq!(count(&cyclic(3)), 1);
    }

    #[test]
    fn homomorphism_search_matches_brute_force() {
        let pairs = [
            (cyclic(4), cyclic(2)),
            (cyclic(6), dihedral(3)),
            (elementary_abelian(2), dihedral(3)),
            (dihedral(3), cyclic(2)),
            (cyclic(3), cyclic(6)),
        ];
        for (src, dst) in &pairs {
            assert_eq!(homomorphisms(src, dst).len(), brute_force_homs(src, dst));
        }
    }

    #[test]
    fn isomorphism_detection() {
        assert!(is_isomorphic(&elementary_abelian(2), &dihedral(2)));
        assert!(!is_isomorphic(&cyclic(4), &elementary_abelian(2)));
        assert!(!is_isomorphic(&dihedral(4), &quaternion()));
        let z6 = direct_product(&cyclic(2), &cyclic(3));
        assert!(is_isomorphic(&z6, &cyclic(6)));
    }

    #[test]
    fn lambda_homomorphism_witness() {
        let g = cyclic(4);
        let aut = AutGroup::compute(&g, 12).unwrap();
        // λ(k) = negation for every k ≠ 0 is not a homomorphism.
        let bad = LambdaMap(vec![0, 1, 1, 1]);
        assert_eq!(bad.homomorphism_witness(&g, &aut), Some((1, 1)));
        let good = LambdaMap(vec![0, 1, 0, 1]);
        assert_eq!(good.homomorphism_witness(&g, &aut), None);
        assert_eq!(good.kernel(), vec![0, 2]);
    }
}
