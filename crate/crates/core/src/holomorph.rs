//! The holomorph Hol G = Aut G ⋉ G of a finite group, its regular subgroups,
//! and the correspondence between regular subgroups and skew braces.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::brace::FiniteBrace;
use crate::error::{Error, Result};
use crate::group::morphism::{AutGroup, LambdaMap};
use crate::group::FiniteGroup;

/// The pair (f, a) with f an index into Aut G.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HolElement {
    pub auto: usize,
    pub elem: usize,
}

/// A subgroup of Hol G, members sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HolSubgroup {
    members: Vec<HolElement>,
}

impl HolSubgroup {
    pub fn members(&self) -> &[HolElement] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Hol G with Aut G materialised.
#[derive(Clone, Debug)]
pub struct Holomorph {
    aut: AutGroup,
}

const UNSET: usize = usize::MAX;

impl Holomorph {
    pub fn new(g: &FiniteGroup, bound: usize) -> Result<Self> {
        Ok(Holomorph { aut: AutGroup::compute(g, bound)? })
    }

    pub fn from_aut(aut: AutGroup) -> Self {
        Holomorph { aut }
    }

    pub fn group(&self) -> &FiniteGroup {
        self.aut.group()
    }

    pub fn aut(&self) -> &AutGroup {
        &self.aut
    }

    pub fn order(&self) -> usize {
        self.aut.len() * self.group().order()
    }

    pub fn identity(&self) -> HolElement {
        HolElement { auto: 0, elem: 0 }
    }

    /// Checked element constructor.
    pub fn element(&self, auto: usize, elem: usize) -> Result<HolElement> {
        if auto >= self.aut.len() || elem >= self.group().order() {
            return Err(Error::CarrierMismatch);
        }
        Ok(HolElement { auto, elem })
    }

    pub fn elements(&self) -> impl Iterator<Item = HolElement> + '_ {
        let n = self.group().order();
        (0..self.aut.len()).flat_map(move |auto| (0..n).map(move |elem| HolElement { auto, elem }))
    }

    /// (f, a)(g, b) = (f∘g, a·f(b)).
    pub fn product(&self, p: HolElement, q: HolElement) -> HolElement {
        HolElement {
            auto: self.aut.compose(p.auto, q.auto),
            elem: self.group().mul(p.elem, self.aut.apply(p.auto, q.elem)),
        }
    }

    /// (f, a)⁻¹ = (f⁻¹, f⁻¹(a⁻¹)).
    pub fn inverse(&self, p: HolElement) -> HolElement {
        let fi = self.aut.inverse(p.auto);
        HolElement { auto: fi, elem: self.aut.apply(fi, self.group().inv(p.elem)) }
    }

    /// (f, a)·b = a·f(b).
    pub fn act(&self, p: HolElement, b: usize) -> usize {
        self.group().mul(p.elem, self.aut.apply(p.auto, b))
    }

    /// Whether `set` contains the identity and is closed under product and inverse.
    pub fn is_subgroup(&self, set: &[HolElement]) -> bool {
        let members: HashSet<HolElement> = set.iter().copied().collect();
        members.contains(&self.identity())
            && set.iter().all(|&p| {
                members.contains(&self.inverse(p)) && set.iter().all(|&q| members.contains(&self.product(p, q)))
            })
    }

    /// Wrap a set after checking that it is a subgroup.
    pub fn subgroup(&self, mut set: Vec<HolElement>) -> Result<HolSubgroup> {
        set.sort_unstable();
        set.dedup();
        if set.iter().any(|p| p.auto >= self.aut.len() || p.elem >= self.group().order()) {
            return Err(Error::CarrierMismatch);
        }
        if !self.is_subgroup(&set) {
            return Err(Error::NotSubgroup { reason: "not closed under product and inverse".into() });
        }
        Ok(HolSubgroup { members: set })
    }

    /// Subgroup generated by `gens`.
    pub fn closure(&self, gens: &[HolElement]) -> HolSubgroup {
        let mut seen: HashSet<HolElement> = HashSet::from([self.identity()]);
        let mut queue = vec![self.identity()];
        while let Some(p) = queue.pop() {
            for &g in gens {
                let q = self.product(p, g);
                if seen.insert(q) {
                    queue.push(q);
                }
            }
        }
        let mut members: Vec<HolElement> = seen.into_iter().collect();
        members.sort_unstable();
        HolSubgroup { members }
    }

    /// For every a ∈ G exactly one (f, x) ∈ H has x·f(a) = 1.
    pub fn is_regular(&self, h: &HolSubgroup) -> bool {
        let g = self.group();
        g.elements().all(|a| h.members.iter().filter(|&&p| self.act(p, a) == 0).count() == 1)
    }

    /// {(λ(a), a) : a ∈ G}.
    pub fn h_lambda(&self, lambda: &LambdaMap) -> Vec<HolElement> {
        self.group().elements().map(|a| HolElement { auto: lambda.at(a), elem: a }).collect()
    }

    /// Every regular subgroup of Hol G, sorted.
    ///
    /// A regular subgroup is the graph {(F(a), a)} of a map F: G → Aut G with
    /// F(1) = id and F(a·F(a)(b)) = F(a)∘F(b). The search fixes F one element
    /// at a time and propagates that rule over all assigned pairs.
    pub fn enumerate_regular_subgroups(&self) -> Vec<HolSubgroup> {
        let n = self.group().order();
        let mut root = vec![UNSET; n];
        root[0] = 0;
        if n == 1 {
            return vec![self.graph_subgroup(&root)];
        }
        let mut out: Vec<HolSubgroup> = (0..self.aut.len())
            .into_par_iter()
            .flat_map_iter(|f| {
                let mut found = Vec::new();
                let mut state = root.clone();
                state[1] = f;
                if self.propagate(&mut state, vec![1]) {
                    self.complete(&mut state, &mut found);
                }
                found
            })
            .collect();
        out.sort();
        out
    }

    fn complete(&self, state: &mut [usize], found: &mut Vec<HolSubgroup>) {
        let Some(a) = state.iter().position(|&f| f == UNSET) else {
            found.push(self.graph_subgroup(state));
            return;
        };
        for f in 0..self.aut.len() {
            let mut next = state.to_vec();
            next[a] = f;
            if self.propagate(&mut next, vec![a]) {
                self.complete(&mut next, found);
            }
        }
    }

    fn propagate(&self, state: &mut [usize], mut queue: Vec<usize>) -> bool {
        let g = self.group();
        while let Some(x) = queue.pop() {
            for y in 0..state.len() {
                if state[y] == UNSET {
                    continue;
                }
                for (a, b) in [(x, y), (y, x)] {
                    let c = g.mul(a, self.aut.apply(state[a], b));
                    let want = self.aut.compose(state[a], state[b]);
                    if state[c] == UNSET {
                        state[c] = want;
                        queue.push(c);
                    } else if state[c] != want {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn graph_subgroup(&self, state: &[usize]) -> HolSubgroup {
        let mut members: Vec<HolElement> =
            state.iter().enumerate().map(|(elem, &auto)| HolElement { auto, elem }).collect();
        members.sort_unstable();
        HolSubgroup { members }
    }

    /// Regular subgroups found by growing subgroups one generator at a time,
    /// keeping those that act freely with order dividing |G|. Independent of
    /// [`Holomorph::enumerate_regular_subgroups`]; meant for small groups.
    pub fn enumerate_regular_subgroups_by_growth(&self) -> Vec<HolSubgroup> {
        let n = self.group().order();
        let all: Vec<HolElement> = self.elements().collect();
        let trivial = HolSubgroup { members: vec![self.identity()] };
        let mut seen: HashSet<HolSubgroup> = HashSet::from([trivial.clone()]);
        let mut queue = vec![trivial];
        let mut regular = Vec::new();
        while let Some(s) = queue.pop() {
            if s.len() == n {
                regular.push(s);
                continue;
            }
            for &h in &all {
                if s.members.binary_search(&h).is_ok() {
                    continue;
                }
                let mut gens = s.members.clone();
                gens.push(h);
                let t = self.closure(&gens);
                if n.is_multiple_of(t.len()) && self.acts_freely(&t) && seen.insert(t.clone()) {
                    queue.push(t);
                }
            }
        }
        regular.sort();
        regular
    }

    fn acts_freely(&self, h: &HolSubgroup) -> bool {
        h.members
            .iter()
            .filter(|&&p| p != self.identity())
            .all(|&p| self.group().elements().all(|b| self.act(p, b) != b))
    }

    /// a∘b = a·f(b) where (f, a) is the member of H over a.
    pub fn brace_from_regular(&self, h: &HolSubgroup) -> Result<FiniteBrace> {
        if !self.is_regular(h) {
            return Err(Error::NotRegular { reason: format!("{} members over a group of order {}", h.len(), self.group().order()) });
        }
        let n = self.group().order();
        let mut f_of = vec![UNSET; n];
        for p in &h.members {
            if std::mem::replace(&mut f_of[p.elem], p.auto) != UNSET {
                return Err(Error::ProjectionNotBijective);
            }
        }
        if f_of.contains(&UNSET) {
            return Err(Error::ProjectionNotBijective);
        }
        let g = self.group();
        FiniteBrace::from_parts(g.clone(), |a, b| g.mul(a, self.aut.apply(f_of[a], b)))
    }

    /// {(λ_a, a) : a ∈ G}.
    pub fn regular_from_brace(&self, b: &FiniteBrace) -> Result<HolSubgroup> {
        if b.group() != self.group() {
            return Err(Error::CarrierMismatch);
        }
        let lambda = b.lambda_map(&self.aut).map_err(|e| Error::NotABrace { witness: e.to_string() })?;
        let h = self
            .subgroup(self.h_lambda(&lambda))
            .map_err(|e| Error::NotABrace { witness: e.to_string() })?;
        if !self.is_regular(&h) {
            return Err(Error::NotABrace { witness: "{(λ_a, a)} is not regular".into() });
        }
        Ok(h)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::{check_brace_axiom, FiniteBrace};
    use crate::group::catalog;
    use crate::group::morphism::DEFAULT_ORDER_BOUND;
    use crate::verdict::Strategy;

    fn hol(g: &FiniteGroup) -> Holomorph {
        Holomorph::new(g, DEFAULT_ORDER_BOUND).unwrap()
    }

    #[test]
    fn z4_products() {
        let h = hol(&catalog::cyclic(4));
        let neg = h.aut().index_of(&[0, 3, 2, 1]).unwrap();
        let id = 0;
        let p = HolElement { auto: neg, elem: 1 };
        assert_eq!(h.product(p, HolElement { auto: id, elem: 2 }), HolElement { auto: neg, elem: 3 });
        assert_eq!(h.product(p, p), h.identity());
        assert_eq!(h.inverse(p), p);
        assert_eq!(h.act(p, 2), 3);
        assert_eq!(h.act(HolElement { auto: neg, elem: 0 }, 1), 3);
        assert_eq!(h.product(HolElement { auto: 0, elem: 1 }, HolElement { auto: 0, elem: 2 }).elem, 3);
        assert_eq!(h.element(5, 0), Err(Error::CarrierMismatch));
    }

    #[test]
    fn holomorph_group_laws() {
        for g in [catalog::cyclic(4), catalog::dihedral(3), catalog::elementary_abelian(2)] {
            let h = hol(&g);
            let all: Vec<HolElement> = h.elements().collect();
            for &p in &all {
                assert_eq!(h.product(p, h.inverse(p)), h.identity());
                assert_eq!(h.product(h.inverse(p), p), h.identity());
                for &q in &all {
                    for b in g.elements() {
                        assert_eq!(h.act(h.product(p, q), b), h.act(p, h.act(q, b)));
                    }
                }
            }
            let sample = &all[..all.len().min(12)];
            for &p in sample {
                for &q in sample {
                    for &r in sample {
                        assert_eq!(h.product(h.product(p, q), r), h.product(p, h.product(q, r)));
                    }
                }
            }
        }
    }

    #[test]
    fn diagonal_is_regular_and_whole_is_not() {
        let g = catalog::cyclic(4);
        let h = hol(&g);
        let diag = h.subgroup(g.elements().map(|a| HolElement { auto: 0, elem: a }).collect()).unwrap();
        assert!(h.is_regular(&diag));
        let b = h.brace_from_regular(&diag).unwrap();
        assert_eq!(b, FiniteBrace::trivial(g.clone()));
        let whole = h.subgroup(h.elements().collect()).unwrap();
        assert!(!h.is_regular(&whole));
        assert!(matches!(h.brace_from_regular(&whole), Err(Error::NotRegular { .. })));
    }

    #[test]
    fn trivial_group_has_one_regular_subgroup() {
        let h = hol(&catalog::cyclic(1));
        assert_eq!(h.enumerate_regular_subgroups().len(), 1);
        assert_eq!(h.enumerate_regular_subgroups_by_growth().len(), 1);
    }

    #[test]
    fn both_enumerations_agree() {
        for (name, g) in catalog::corpus(6) {
            let h = hol(&g);
            let a = h.enumerate_regular_subgroups();
            let b = h.enumerate_regular_subgroups_by_growth();
            assert_eq!(a, b, "{name}");
            for s in &a {
                assert!(h.is_regular(s));
                let br = h.brace_from_regular(s).unwrap();
                assert!(check_brace_axiom(&br, &Strategy::Exhaustive).pass, "{name}");
                assert_eq!(&h.regular_from_brace(&br).unwrap(), s);
            }
        }
    }

    #[test]
    fn known_counts() {
        // Hol(Z4) ≅ D4: of its three subgroups of order 4, the diagonal and
        // {(id,0), (-1,1), (id,2), (-1,3)} are regular; the other Klein group fixes 0.
        let h = hol(&catalog::cyclic(4));
        assert_eq!(h.enumerate_regular_subgroups().len(), 2);
        // Z3 and Z5: Hol(Z_p) has a single regular subgroup of order p.
        assert_eq!(hol(&catalog::cyclic(3)).enumerate_regular_subgroups().len(), 1);
        assert_eq!(hol(&catalog::cyclic(5)).enumerate_regular_subgroups().len(), 1);
    }
}
