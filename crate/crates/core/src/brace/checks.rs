//! Law checks over a finite box of elements or over seeded random samples.
//!
//! Every scan runs in a fixed order and reports the first failing tuple in
//! that order, also when the work is split across threads.

use rayon::prelude::*;

use super::SkewBrace;
use crate::error::{Error, Result};
use crate::verdict::{rng_from_seed, Strategy, Verdict};

/// Where the tuples of a check come from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Domain<E> {
    /// Every tuple of the listed elements.
    All(Vec<E>),
    /// `count` tuples of independent samples.
    Random { count: usize, size: usize, seed: u64 },
}

impl<E> Domain<E> {
    /// `None` for an exhaustive strategy on an infinite carrier.
    pub fn from_strategy<B: SkewBrace<Elem = E>>(b: &B, strategy: &Strategy) -> Option<Self> {
        match *strategy {
            Strategy::Exhaustive => b.elements().map(Domain::All),
            Strategy::Sampled { count, size, seed } => Some(Domain::Random { count, size, seed }),
        }
    }

    fn seed(&self) -> Option<u64> {
        match self {
            Domain::All(_) => None,
            Domain::Random { seed, .. } => Some(*seed),
        }
    }
}

fn describe<E: std::fmt::Display>(names: &str, tuple: &[E]) -> String {
    let parts: Vec<String> = names.chars().zip(tuple).map(|(n, e)| format!("{n}={e}")).collect();
    parts.join(", ")
}

/// Run `law` on every K-tuple of the domain.
pub(crate) fn scan<B, const K: usize>(
    b: &B,
    domain: &Domain<B::Elem>,
    law: impl Fn(&[B::Elem; K]) -> bool + Sync,
) -> Verdict
where
    B: SkewBrace,
{
    let names = &"abcdefgh"[..K];
    let verdict = match domain {
        Domain::All(elems) => {
            let n = elems.len();
            let inner = n.pow(K as u32 - 1);
            let failure = (0..n).into_par_iter().find_map_first(|i| {
                (0..inner).find_map(|rest| {
                    let mut idx = [0usize; K];
                    idx[0] = i;
                    let mut r = rest;
                    for slot in idx[1..].iter_mut().rev() {
                        *slot = r % n;
                        r /= n;
                    }
                    let tuple: [B::Elem; K] = std::array::from_fn(|k| elems[idx[k]].clone());
                    (!law(&tuple)).then(|| (i * inner + rest, describe(names, &tuple)))
                })
            });
            match failure {
                None => Verdict::pass((n as u64).pow(K as u32)),
                Some((pos, w)) => Verdict::fail(w, pos as u64 + 1),
            }
        }
        Domain::Random { count, size, seed } => {
            let mut rng = rng_from_seed(*seed);
            let tuples: Vec<[B::Elem; K]> =
                (0..*count).map(|_| std::array::from_fn(|_| b.sample(&mut rng, *size))).collect();
            let failure = tuples
                .par_iter()
                .enumerate()
                .find_map_first(|(pos, t)| (!law(t)).then(|| (pos, describe(names, t))));
            match failure {
                None => Verdict::pass(*count as u64),
                Some((pos, w)) => Verdict::fail(w, pos as u64 + 1),
            }
        }
    };
    verdict.with_seed(domain.seed())
}

fn infinite_exhaustive() -> Verdict {
    Verdict::fail("exhaustive strategy needs a finite carrier", 0)
}

macro_rules! strategy_entry {
    ($(#[$m:meta])* $name:ident, $on:ident) => {
        $(#[$m])*
        pub fn $name<B: SkewBrace>(b: &B, strategy: &Strategy) -> Verdict {
            match Domain::from_strategy(b, strategy) {
                Some(d) => $on(b, &d),
                None => infinite_exhaustive(),
            }
        }
    };
}

strategy_entry!(
    /// a∘(b·c) = (a∘b)·a⁻¹·(a∘c).
    check_brace_axiom,
    check_brace_axiom_on
);
strategy_entry!(
    /// (G, ∘) is a group with the shared identity and the declared inverse.
    check_circ_group,
    check_circ_group_on
);
strategy_entry!(
    /// λ_{a∘b} = λ_a λ_b.
    check_lambda_circ_hom,
    check_lambda_circ_hom_on
);
strategy_entry!(
    /// λ_{a·b} = λ_a λ_b.
    is_lambda_homomorphic,
    is_lambda_homomorphic_on
);
strategy_entry!(
    /// (G, ∘, ·) satisfies the brace axiom: a·(b∘c) = (a·b)∘ā∘(a·c).
    is_symmetric_direct,
    is_symmetric_direct_on
);

pub fn check_brace_axiom_on<B: SkewBrace>(b: &B, d: &Domain<B::Elem>) -> Verdict {
    scan(b, d, |[x, y, z]| {
        let lhs = b.circ(x, &b.dot(y, z));
        let rhs = b.dot(&b.dot(&b.circ(x, y), &b.dot_inv(x)), &b.circ(x, z));
        lhs == rhs
    })
}

pub fn check_circ_group_on<B: SkewBrace>(b: &B, d: &Domain<B::Elem>) -> Verdict {
    let e = b.identity();
    scan(b, d, |[x, y, z]| {
        let xi = b.circ_inv(x);
        b.circ(&b.circ(x, y), z) == b.circ(x, &b.circ(y, z))
            && b.circ(x, &e) == *x
            && b.circ(&e, x) == *x
            && b.circ(x, &xi) == e
            && b.circ(&xi, x) == e
    })
}

pub fn check_lambda_circ_hom_on<B: SkewBrace>(b: &B, d: &Domain<B::Elem>) -> Verdict {
    scan(b, d, |[x, y, z]| b.lambda(&b.circ(x, y), z) == b.lambda(x, &b.lambda(y, z)))
}

pub fn is_lambda_homomorphic_on<B: SkewBrace>(b: &B, d: &Domain<B::Elem>) -> Verdict {
    scan(b, d, |[x, y, z]| b.lambda(&b.dot(x, y), z) == b.lambda(x, &b.lambda(y, z)))
}

pub fn is_symmetric_direct_on<B: SkewBrace>(b: &B, d: &Domain<B::Elem>) -> Verdict {
    scan(b, d, |[x, y, z]| {
        let lhs = b.dot(x, &b.circ(y, z));
        let rhs = b.circ(&b.circ(&b.dot(x, y), &b.circ_inv(x)), &b.dot(x, z));
        lhs == rhs
    })
}

/// Kernel criterion for symmetry: b̄∘(a·b)∘ā ∈ Ker λ for all a, b.
pub fn is_symmetric_kernel<B: SkewBrace>(b: &B, strategy: &Strategy) -> Result<Verdict> {
    match Domain::from_strategy(b, strategy) {
        Some(d) => is_symmetric_kernel_on(b, &d),
        None => Ok(infinite_exhaustive()),
    }
}

pub fn is_symmetric_kernel_on<B: SkewBrace>(b: &B, d: &Domain<B::Elem>) -> Result<Verdict> {
    kernel_scan(b, d, |[x, y]| vec![b.circ(&b.circ(&b.circ_inv(y), &b.dot(x, y)), &b.circ_inv(x))])
}

/// Run a pair scan whose law is "every listed element lies in Ker λ".
fn kernel_scan<B: SkewBrace>(
    b: &B,
    d: &Domain<B::Elem>,
    members: impl Fn(&[B::Elem; 2]) -> Vec<B::Elem> + Sync,
) -> Result<Verdict> {
    let undecided = std::sync::atomic::AtomicBool::new(false);
    let v = scan(b, d, |t| {
        members(t).iter().all(|m| match b.in_lambda_kernel(m) {
            Some(inside) => inside,
            None => {
                undecided.store(true, std::sync::atomic::Ordering::Relaxed);
                true
            }
        })
    });
    if undecided.into_inner() {
        return Err(Error::UndecidableKernel);
    }
    Ok(v)
}

/// Symmetry by both methods. The kernel criterion is skipped when kernel
/// membership is undecidable; if both run and disagree the verdict fails.
pub fn is_symmetric<B: SkewBrace>(b: &B, strategy: &Strategy) -> Verdict {
    let direct = is_symmetric_direct(b, strategy);
    match is_symmetric_kernel(b, strategy) {
        Err(_) => direct,
        Ok(kernel) if kernel.pass == direct.pass => direct.and(kernel),
        Ok(kernel) => Verdict::fail(
            format!(
                "symmetry methods disagree: direct {}, kernel criterion {}",
                if direct.pass { "pass" } else { "fail" },
                if kernel.pass { "pass" } else { "fail" }
            ),
            direct.checked + kernel.checked,
        )
        .with_seed(strategy.seed()),
    }
}

/// Meta-triviality through the kernel G₀ = Ker λ: G₀ is normal in both
/// groups and (a·b)⁻¹(a∘b) ∈ G₀, so the quotient brace is trivial. On G₀
/// itself ∘ = · holds by the definition of the kernel.
pub fn check_meta_trivial<B: SkewBrace>(b: &B, strategy: &Strategy) -> Result<Verdict> {
    match Domain::from_strategy(b, strategy) {
        Some(d) => check_meta_trivial_on(b, &d),
        None => Ok(infinite_exhaustive()),
    }
}

pub fn check_meta_trivial_on<B: SkewBrace>(b: &B, d: &Domain<B::Elem>) -> Result<Verdict> {
    kernel_scan(b, d, |[x, y]| {
        let q = b.dot(&b.dot_inv(&b.dot(x, y)), &b.circ(x, y));
        let mut out = vec![q.clone()];
        // conjugates of a kernel element: y itself when it is in the kernel,
        // otherwise the element q, which lies in the kernel when the quotient
        // is trivial.
        let k = if b.in_lambda_kernel(y) == Some(true) { y.clone() } else { q };
        out.push(b.dot(&b.dot(&b.dot_inv(x), &k), x));
        out.push(b.circ(&b.circ(&b.circ_inv(x), &k), x));
        out
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::{FiniteBrace, Opposite, SkewBrace, Trivial};
    use crate::group::catalog;

    #[test]
    fn trivial_and_opposite_braces_pass() {
        let g = FiniteBrace::trivial(catalog::dihedral(3));
        assert!(check_brace_axiom(&g, &Strategy::Exhaustive).pass);
        let o = FiniteBrace::opposite(catalog::dihedral(3));
        assert!(check_brace_axiom(&o, &Strategy::Exhaustive).pass);
        assert!(check_circ_group(&o, &Strategy::Exhaustive).pass);
        assert!(check_lambda_circ_hom(&o, &Strategy::Exhaustive).pass);
        // conjugation is an anti-homomorphism on (G, ·)
        assert!(!is_lambda_homomorphic(&o, &Strategy::Exhaustive).pass);
        // wrapper types agree with the table versions
        let t = Trivial(FiniteBrace::trivial(catalog::quaternion()));
        assert!(check_brace_axiom(&t, &Strategy::Exhaustive).pass);
        let op = Opposite(FiniteBrace::trivial(catalog::quaternion()));
        assert!(check_brace_axiom(&op, &Strategy::Exhaustive).pass);
    }

    #[test]
    fn witness_is_the_first_failing_triple() {
        // D3 labels with the ℤ6 addition as ∘: a group, but not a brace.
        let g = catalog::dihedral(3);
        let b = FiniteBrace::from_parts(g, |a, b| (a + b) % 6).unwrap();
        let v1 = check_brace_axiom(&b, &Strategy::Exhaustive);
        assert!(!v1.pass);
        let w = v1.witness.clone().unwrap();
        // recompute the first failing triple sequentially
        let first = (0..216)
            .map(|i| (i / 36, i / 6 % 6, i % 6))
            .find(|&(x, y, z)| {
                let lhs = b.circ(&x, &b.dot(&y, &z));
                let rhs = b.dot(&b.dot(&b.circ(&x, &y), &b.dot_inv(&x)), &b.circ(&x, &z));
                lhs != rhs
            })
            .unwrap();
        assert_eq!(w, format!("a={}, b={}, c={}", first.0, first.1, first.2));
        assert_eq!(check_brace_axiom(&b, &Strategy::Exhaustive), v1);
    }

    #[test]
    fn sampled_verdict_records_seed() {
        let b = FiniteBrace::trivial(catalog::cyclic(4));
        let v = check_brace_axiom(&b, &Strategy::Sampled { count: 10, size: 1, seed: 9 });
        assert!(v.pass);
        assert_eq!(v.seed, Some(9));
        assert_eq!(v.checked, 10);
    }

    #[test]
    fn symmetric_methods_agree_on_small_braces() {
        for (_, g) in catalog::corpus(6) {
            for b in [FiniteBrace::trivial(g.clone()), FiniteBrace::opposite(g.clone())] {
                let d = is_symmetric_direct(&b, &Strategy::Exhaustive);
                let k = is_symmetric_kernel(&b, &Strategy::Exhaustive).unwrap();
                assert_eq!(d.pass, k.pass);
            }
        }
    }
}
