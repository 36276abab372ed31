use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite group given by its Cayley table on the elements `0..order`.
///
/// The identity is always element 0. Tables are stored flattened, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
    generators: Vec<usize>,
}

/// JSON form: `{"order": n, "table": [[...]], "generators": [...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDocument {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<usize>>,
}

/// Validate a square table as a group.
///
/// Checks run in the order Latin square, identity, inverses, associativity;
/// the error names the first offending row/column, element or triple.
pub fn validate_group(table: &[Vec<usize>]) -> Result<FiniteGroup> {
    FiniteGroup::from_table(table, None)
}

impl FiniteGroup {
    pub fn from_table(table: &[Vec<usize>], generators: Option<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::EmptyTable);
        }
        let mut flat = Vec::with_capacity(n * n);
        for (row, entries) in table.iter().enumerate() {
            if entries.len() != n {
                return Err(Error::NotSquare { row, len: entries.len(), expected: n });
            }
            for (col, &value) in entries.iter().enumerate() {
                if value >= n {
                    return Err(Error::EntryOutOfRange { row, col, value, order: n });
                }
            }
            flat.extend_from_slice(entries);
        }
        Self::from_flat(n, flat, generators)
    }

    pub(crate) fn from_flat(n: usize, flat: Vec<usize>, generators: Option<Vec<usize>>) -> Result<Self> {
        debug_assert_eq!(flat.len(), n * n);
        let at = |a: usize, b: usize| flat[a * n + b];

        let mut seen = vec![usize::MAX; n];
        for a in 0..n {
            for b in 0..n {
                let v = at(a, b);
                if seen[v] == a {
                    return Err(Error::NotLatinSquare { line: "row", index: a, element: v });
                }
                seen[v] = a;
            }
        }
        let mut seen = vec![usize::MAX; n];
        for b in 0..n {
            for a in 0..n {
                let v = at(a, b);
                if seen[v] == b {
                    return Err(Error::NotLatinSquare { line: "column", index: b, element: v });
                }
                seen[v] = b;
            }
        }

        let identity = (0..n)
            .find(|&e| (0..n).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or(Error::NoIdentity)?;
        if identity != 0 {
            return Err(Error::IdentityNotZero { found: identity });
        }

        let inverse = (0..n)
            .map(|a| {
                let right = (0..n).find(|&b| at(a, b) == 0).ok_or(Error::NoInverse { element: a })?;
                if at(right, a) != 0 {
                    return Err(Error::NoInverse { element: a });
                }
                Ok(right)
            })
            .collect::<Result<Vec<_>>>()?;

        for a in 0..n {
            for b in 0..n {
                let ab = at(a, b);
                for c in 0..n {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(Error::NotAssociative { a, b, c });
                    }
                }
            }
        }

        let mut group = FiniteGroup { order: n, table: flat, inverse, generators: Vec::new() };
        group.generators = match generators {
            Some(gens) => {
                if gens.iter().any(|&g| g >= n) || group.closure(&gens).len() != n {
                    return Err(Error::BadGenerators { generators: gens });
                }
                gens
            }
            None => group.greedy_generators(),
        };
        Ok(group)
    }

    pub fn from_document(doc: &GroupDocument) -> Result<Self> {
        if doc.table.len() != doc.order {
            return Err(Error::DimensionMismatch { expected: doc.order, found: doc.table.len() });
        }
        Self::from_table(&doc.table, doc.generators.clone())
    }

    pub fn to_document(&self) -> GroupDocument {
        GroupDocument {
            order: self.order,
            table: self.table.chunks(self.order).map(<[usize]>::to_vec).collect(),
            generators: Some(self.generators.clone()),
        }
    }

    /// Build a table from a closure; used by the catalog and by derived groups.
    pub(crate) fn from_fn(n: usize, mul: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let flat = (0..n * n).map(|i| mul(i / n, i % n)).collect();
        Self::from_flat(n, flat, None)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.to_document().table
    }

    /// First non-commuting pair, if any.
    pub fn non_commuting_pair(&self) -> Option<(usize, usize)> {
        let n = self.order;
        (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .find(|&(a, b)| self.mul(a, b) != self.mul(b, a))
    }

    pub fn is_abelian(&self) -> bool {
        self.non_commuting_pair().is_none()
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Map from element order to the number of elements of that order.
    pub fn order_spectrum(&self) -> BTreeMap<usize, usize> {
        let mut spectrum = BTreeMap::new();
        for a in self.elements() {
            *spectrum.entry(self.element_order(a)).or_insert(0) += 1;
        }
        spectrum
    }

    /// Sorted elements of the subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.order];
        member[0] = true;
        let mut queue = vec![0];
        while let Some(a) = queue.pop() {
            for &g in gens {
                let b = self.mul(a, g);
                if !member[b] {
                    member[b] = true;
                    queue.push(b);
                }
            }
        }
        (0..self.order).filter(|&a| member[a]).collect()
    }

    /// Whether `set` (any order, no duplicates required) is a subgroup.
    pub fn is_subgroup(&self, set: &[usize]) -> bool {
        let mut member = vec![false; self.order];
        for &a in set {
            if a >= self.order {
                return false;
            }
            member[a] = true;
        }
        member[0]
            && set.iter().all(|&a| member[self.inv(a)] && set.iter().all(|&b| member[self.mul(a, b)]))
    }

    pub fn is_normal_subgroup(&self, set: &[usize]) -> bool {
        let mut member = vec![false; self.order];
        for &a in set {
            member[a] = true;
        }
        self.is_subgroup(set)
            && self
                .elements()
                .all(|g| set.iter().all(|&h| member[self.mul(self.mul(self.inv(g), h), g)]))
    }

    fn greedy_generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = vec![0];
        while span.len() < self.order {
            // Prefer elements of large order so that cyclic groups get one generator.
            let next = (1..self.order)
                .filter(|a| span.binary_search(a).is_err())
                .max_by_key(|&a| (self.closure(&[&gens[..], &[a]].concat()).len(), std::cmp::Reverse(a)))
                .expect("a proper subgroup leaves an element out");
            gens.push(next);
            span = self.closure(&gens);
        }
        gens
    }

    /// Same group with its generating set replaced.
    pub fn with_generators(mut self, gens: Vec<usize>) -> Result<Self> {
        if gens.iter().any(|&g| g >= self.order) || self.closure(&gens).len() != self.order {
            return Err(Error::BadGenerators { generators: gens });
        }
        self.generators = gens;
        Ok(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
        (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
    }

    #[test]
    fn cyclic_four_validates() {
        let g = validate_group(&cyclic_table(4)).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.inv(1), 3);
        assert_eq!(g.generators().len(), 1);
        assert!(g.is_abelian());
    }

    #[test]
    fn klein_four_is_self_inverse() {
        let table: Vec<Vec<usize>> = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
        let g = validate_group(&table).unwrap();
        assert!(g.elements().all(|a| g.inv(a) == a));
        assert_eq!(g.generators().len(), 2);
    }

    #[test]
    fn projection_table_is_rejected() {
        let table: Vec<Vec<usize>> = (0..3).map(|a| vec![a; 3]).collect();
        assert_eq!(
            validate_group(&table),
            Err(Error::NotLatinSquare { line: "row", index: 0, element: 0 })
        );
    }

    #[test]
    fn shapes_and_ranges_are_checked() {
        assert_eq!(validate_group(&[]), Err(Error::EmptyTable));
        assert!(matches!(
            validate_group(&[vec![0, 1], vec![1]]),
            Err(Error::NotSquare { row: 1, .. })
        ));
        assert!(matches!(
            validate_group(&[vec![0, 2], vec![1, 0]]),
            Err(Error::EntryOutOfRange { value: 2, .. })
        ));
    }

    #[test]
    fn identity_must_be_zero() {
        // Z2 with the labels swapped: identity is 1.
        let table = vec![vec![1, 0], vec![0, 1]];
        assert_eq!(validate_group(&table), Err(Error::IdentityNotZero { found: 1 }));
    }

    #[test]
    fn non_associative_latin_square_is_rejected() {
        // A loop of order 5 with identity 0 that is not a group.
        let table = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(validate_group(&table), Err(Error::NotAssociative { .. })));
    }

    #[test]
    fn supplied_generators_must_generate() {
        let err = FiniteGroup::from_table(&cyclic_table(4), Some(vec![2])).unwrap_err();
        assert_eq!(err, Error::BadGenerators { generators: vec![2] });
    }

    #[test]
    fn document_round_trip() {
        let g = validate_group(&cyclic_table(5)).unwrap();
        let json = serde_json::to_string(&g.to_document()).unwrap();
        let doc: GroupDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(FiniteGroup::from_document(&doc).unwrap(), g);
    }
}
