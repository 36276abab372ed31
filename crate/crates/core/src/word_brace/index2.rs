//! The brace on an abelian group A from a subgroup B of index 2.

use crate::brace::FiniteBrace;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// a∘b = a + b for a ∈ B and a − b otherwise. λ is trivial on B and
/// negation off B, so (A, ∘) ≅ B ⋊ ℤ₂ with the generator acting by −1.
pub fn index2_brace(a: &FiniteGroup, b: &[usize]) -> Result<FiniteBrace> {
    if let Some((x, y)) = a.non_commuting_pair() {
        return Err(Error::NotAbelian { a: x, b: y });
    }
    let mut sub = b.to_vec();
    sub.sort_unstable();
    sub.dedup();
    if !a.is_subgroup(&sub) {
        return Err(Error::NotSubgroup { reason: format!("{sub:?} is not a subgroup") });
    }
    if sub.len() * 2 != a.order() {
        return Err(Error::NotIndexTwo { index: a.order() / sub.len() });
    }
    let mut member = vec![false; a.order()];
    for &k in &sub {
        member[k] = true;
    }
    let circ: Vec<Vec<usize>> = a
        .elements()
        .map(|x| a.elements().map(|y| if member[x] { a.mul(x, y) } else { a.mul(x, a.inv(y)) }).collect())
        .collect();
    FiniteBrace::new(a.clone(), &circ)
}
