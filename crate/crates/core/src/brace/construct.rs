//! Braces from a homomorphism λ: G → Aut G, via a∘b = a·λ(a)(b).

use std::fmt::Display;

use super::finite::FiniteBrace;
use crate::error::{Error, Result};
use crate::group::morphism::{AutGroup, LambdaMap};
use crate::group::FiniteGroup;
use crate::verdict::Verdict;

/// Outcome of [`construct_from_lambda`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Construction {
    Brace(FiniteBrace),
    /// b⁻¹·λ_a(b) ∉ Ker λ for this pair, so H_λ is not a subgroup.
    Rejected { a: usize, b: usize },
}

impl Construction {
    pub fn brace(self) -> Option<FiniteBrace> {
        match self {
            Construction::Brace(b) => Some(b),
            Construction::Rejected { .. } => None,
        }
    }
}

/// First pair (a, b) in row-major order with λ(b⁻¹·λ_a(b)) ≠ id.
pub fn subgroup_criterion_witness(g: &FiniteGroup, aut: &AutGroup, lambda: &LambdaMap) -> Option<(usize, usize)> {
    g.elements()
        .flat_map(|a| g.elements().map(move |b| (a, b)))
        .find(|&(a, b)| lambda.at(g.mul(g.inv(b), aut.apply(lambda.at(a), b))) != 0)
}

/// Build the brace a∘b = a·λ(a)(b) when the subgroup criterion
/// b⁻¹·λ_a(b) ∈ Ker λ holds, otherwise report the first failing pair.
pub fn construct_from_lambda(g: &FiniteGroup, aut: &AutGroup, lambda: &LambdaMap) -> Result<Construction> {
    if aut.group() != g || lambda.0.len() != g.order() {
        return Err(Error::CarrierMismatch);
    }
    if let Some((a, b)) = lambda.homomorphism_witness(g, aut) {
        return Err(Error::NotHomomorphism { witness: format!("λ({a}·{b}) ≠ λ({a})λ({b})") });
    }
    if let Some((a, b)) = subgroup_criterion_witness(g, aut, lambda) {
        return Ok(Construction::Rejected { a, b });
    }
    let brace = FiniteBrace::from_parts(g.clone(), |a, b| g.mul(a, aut.apply(lambda.at(a), b)))?;
    Ok(Construction::Brace(brace))
}

/// A nontrivial G with injective λ never yields a brace. Passes vacuously
/// when the kernel is nontrivial or G is trivial.
pub fn check_injective_lambda_rejected(g: &FiniteGroup, aut: &AutGroup, lambda: &LambdaMap) -> Result<Verdict> {
    if g.order() == 1 || lambda.kernel().len() > 1 {
        return Ok(Verdict::pass(0));
    }
    Ok(match construct_from_lambda(g, aut, lambda)? {
        Construction::Rejected { .. } => Verdict::pass(1),
        Construction::Brace(_) => Verdict::fail("injective λ produced a brace", 1),
    })
}

/// Subgroup criterion on generators: x_i⁻¹·φ_j(x_i) ∈ Ker λ for every pair
/// of generators, where φ_j = λ(x_j). Scans i, then j; the witness is the
/// 1-based pair (i, j).
///
/// `phi(j, x)` applies φ_j, `left_div(x, y)` is x⁻¹·y and `in_kernel`
/// decides kernel membership.
pub fn check_criterion_on_generators<E: Display>(
    gens: &[E],
    phi: impl Fn(usize, &E) -> E,
    left_div: impl Fn(&E, &E) -> E,
    in_kernel: impl Fn(&E) -> Option<bool>,
) -> Result<Verdict> {
    let mut checked = 0;
    for (i, x) in gens.iter().enumerate() {
        for j in 0..gens.len() {
            checked += 1;
            let element = left_div(x, &phi(j, x));
            match in_kernel(&element) {
                None => return Err(Error::UndecidableKernel),
                Some(true) => {}
                Some(false) => {
                    return Ok(Verdict::fail(format!("(i,j)=({},{}): x{}⁻¹φ{}(x{}) = {element}", i + 1, j + 1, i + 1, j + 1, i + 1), checked));
                }
            }
        }
    }
    Ok(Verdict::pass(checked))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::{check_brace_axiom, SkewBrace};
    use crate::group::catalog;
    use crate::group::morphism::{all_homomorphisms_to_aut, DEFAULT_ORDER_BOUND};
    use crate::verdict::Strategy;

    #[test]
    fn trivial_lambda_gives_trivial_brace() {
        let g = catalog::dihedral(4);
        let aut = AutGroup::compute(&g, DEFAULT_ORDER_BOUND).unwrap();
        let b = construct_from_lambda(&g, &aut, &LambdaMap::trivial(8)).unwrap().brace().unwrap();
        assert_eq!(b, FiniteBrace::trivial(g));
    }

    #[test]
    fn non_homomorphism_is_an_error() {
        let g = catalog::cyclic(4);
        let aut = AutGroup::compute(&g, DEFAULT_ORDER_BOUND).unwrap();
        let err = construct_from_lambda(&g, &aut, &LambdaMap(vec![0, 1, 1, 1])).unwrap_err();
        assert!(matches!(err, Error::NotHomomorphism { .. }));
    }

    #[test]
    fn accepted_constructions_are_braces() {
        for (name, g) in catalog::corpus(8) {
            let aut = AutGroup::compute(&g, DEFAULT_ORDER_BOUND).unwrap();
            for lambda in all_homomorphisms_to_aut(&g, &aut) {
                if let Construction::Brace(b) = construct_from_lambda(&g, &aut, &lambda).unwrap() {
                    assert!(check_brace_axiom(&b, &Strategy::Exhaustive).pass, "{name} {lambda:?}");
                    for a in g.elements() {
                        assert_eq!(b.lambda_map(&aut).unwrap().at(a), lambda.at(a));
                        assert_eq!(b.circ(&a, &b.circ_inv(&a)), 0);
                    }
                }
                assert!(check_injective_lambda_rejected(&g, &aut, &lambda).unwrap().pass, "{name}");
            }
        }
    }

    #[test]
    fn generator_criterion_on_a_toy_kernel() {
        use crate::group::ZnVector;
        // ℤ² with λ(x1) = id and λ(x2) = coordinate swap, so Ker λ is the set
        // of vectors with even second coordinate.
        let gens = [ZnVector(vec![1, 0]), ZnVector(vec![0, 1])];
        let phi = |j: usize, v: &ZnVector| if j == 1 { ZnVector(vec![v.0[1], v.0[0]]) } else { v.clone() };
        let left_div = |x: &ZnVector, y: &ZnVector| y - x;
        let v = check_criterion_on_generators(&gens, phi, left_div, |e| Some(e.0[1] % 2 == 0)).unwrap();
        // x1⁻¹·swap(x1) = (-1, 1) has odd second coordinate
        assert!(!v.pass);
        assert!(v.witness.unwrap().starts_with("(i,j)=(1,2)"));
        let undecided = check_criterion_on_generators(&gens, phi, left_div, |_| None);
        assert_eq!(undecided, Err(Error::UndecidableKernel));
    }
}
