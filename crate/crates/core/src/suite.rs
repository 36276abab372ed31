//! The desk-level verification battery: ten numbered criteria, each with a
//! time limit, run against the constructions of this crate.

use std::time::{Duration, Instant};

use crate::brace::checks::Domain;
use crate::brace::{
    check_brace_axiom, check_brace_axiom_on, check_circ_group, is_symmetric, is_symmetric_direct,
    is_symmetric_kernel, subgroup_criterion_witness, FiniteBrace, SkewBrace,
};
use crate::error::Result;
use crate::group::catalog;
use crate::group::lattice::{case1_matrix, case2_matrix};
use crate::group::morphism::{all_homomorphisms_to_aut, is_isomorphic, AutGroup, DEFAULT_ORDER_BOUND};
use crate::group::{FreeWord, IntMatrix, ZnVector};
use crate::holomorph::Holomorph;
use crate::lattice_brace::{
    cyclic_permutation_brace, integer_sign_brace, verify_presentation_relations, z2_case1_circ, z2_case1_inverse,
    z2_classify, LatticeBrace, MultGroupType, Z2Family,
};
use crate::report::Report;
use crate::series::{check_two_sided_brace, free_subgroup_witness, SeriesBrace};
use crate::verdict::{rng_from_seed, Strategy, Verdict, DEFAULT_SEED};
use crate::word_brace::{
    index2_brace, inversion_presentation_relations, FactorizationBrace, FreeFactorization, FreeGroupBrace,
    WreathFactorization,
};
use crate::ybe::{verify_braid, verify_nondegenerate};

/// Settings shared by every criterion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { seed: DEFAULT_SEED }
    }
}

/// One numbered criterion.
#[derive(Clone, Copy)]
pub struct Criterion {
    pub id: u8,
    pub name: &'static str,
    pub limit: Duration,
    pub run: fn(&SuiteConfig) -> Verdict,
}

impl Criterion {
    /// Runs the check. Exceeding the time limit turns a pass into a fail.
    pub fn evaluate(&self, cfg: &SuiteConfig) -> (Verdict, Duration) {
        let start = Instant::now();
        let v = (self.run)(cfg);
        let elapsed = start.elapsed();
        if v.pass && elapsed > self.limit {
            let w = format!("took {} ms, limit {} ms", elapsed.as_millis(), self.limit.as_millis());
            return (Verdict { pass: false, witness: Some(w), ..v }, elapsed);
        }
        (v, elapsed)
    }

    pub fn label(&self) -> String {
        format!("{:02} {}", self.id, self.name)
    }
}

pub fn criteria() -> Vec<Criterion> {
    let c = |id, name, secs, run| Criterion { id, name, limit: Duration::from_secs(secs), run };
    vec![
        c(1, "subgroup criterion equivalence", 60, criterion_subgroup_equivalence),
        c(2, "regular subgroup round trip", 120, criterion_regular_round_trip),
        c(3, "rank-2 lattice braces", 10, criterion_rank2_lattice),
        c(4, "cyclic permutation brace", 10, criterion_cyclic_permutation),
        c(5, "free inversion brace", 10, criterion_inversion_brace),
        c(6, "exact factorization braces", 30, criterion_factorization),
        c(7, "power series brace", 60, criterion_series),
        c(8, "symmetry of lambda-cyclic braces", 60, criterion_symmetry),
        c(9, "Yang-Baxter maps", 60, criterion_ybe),
        c(10, "index-2 construction", 5, criterion_index2),
    ]
}

/// Runs all criteria, or those listed in `only`, into one report.
pub fn run_suite(cfg: &SuiteConfig, only: Option<&[u8]>) -> Report {
    let mut report = Report::new("paper-suite", cfg.seed);
    for c in criteria() {
        if only.is_some_and(|ids| !ids.contains(&c.id)) {
            continue;
        }
        let (v, elapsed) = c.evaluate(cfg);
        report.push(c.label(), v, elapsed);
    }
    report
}

/// Every brace obtained from a regular subgroup of Hol G, for the corpus
/// groups of order ≤ `max_order`. Names are "G#k" in enumeration order.
pub fn brace_corpus(max_order: usize) -> Result<Vec<(String, FiniteBrace)>> {
    let mut out = Vec::new();
    for (name, g) in catalog::corpus(max_order) {
        let hol = Holomorph::new(&g, DEFAULT_ORDER_BOUND)?;
        for (k, h) in hol.enumerate_regular_subgroups().iter().enumerate() {
            out.push((format!("{name}#{k}"), hol.brace_from_regular(h)?));
        }
    }
    Ok(out)
}

fn labeled(label: impl std::fmt::Display, v: Verdict) -> Verdict {
    match v.witness {
        Some(w) => Verdict { witness: Some(format!("{label}: {w}")), ..v },
        None => v,
    }
}

fn errored(label: impl std::fmt::Display, e: crate::Error) -> Verdict {
    Verdict::fail(format!("{label}: {e}"), 0)
}

fn criterion_subgroup_equivalence(_: &SuiteConfig) -> Verdict {
    let mut out = Verdict::pass(0);
    for (name, g) in catalog::corpus(8) {
        let aut = match AutGroup::compute(&g, DEFAULT_ORDER_BOUND) {
            Ok(a) => a,
            Err(e) => return errored(name, e),
        };
        let hol = Holomorph::from_aut(aut.clone());
        let lambdas = all_homomorphisms_to_aut(&g, &aut);
        let mismatch = lambdas.iter().find(|lambda| {
            let subgroup = hol.is_subgroup(&hol.h_lambda(lambda));
            let criterion = subgroup_criterion_witness(&g, &aut, lambda).is_none();
            subgroup != criterion
        });
        out = out.and(match mismatch {
            None => Verdict::pass(lambdas.len() as u64),
            Some(l) => Verdict::fail(format!("{name}: λ = {:?} gives different answers", l.0), lambdas.len() as u64),
        });
    }
    out
}

fn criterion_regular_round_trip(_: &SuiteConfig) -> Verdict {
    let mut out = Verdict::pass(0);
    for (name, g) in catalog::corpus(6) {
        let hol = match Holomorph::new(&g, DEFAULT_ORDER_BOUND) {
            Ok(h) => h,
            Err(e) => return errored(name, e),
        };
        let fast = hol.enumerate_regular_subgroups();
        let slow = hol.enumerate_regular_subgroups_by_growth();
        out = out.and(Verdict::from_bool(fast == slow, 1, || {
            format!("{name}: {} regular subgroups by completion, {} by growth", fast.len(), slow.len())
        }));
        for (k, h) in fast.iter().enumerate() {
            let label = format!("{name}#{k}");
            if !hol.is_regular(h) {
                return Verdict::fail(format!("{label}: not regular"), 0);
            }
            let b = match hol.brace_from_regular(h) {
                Ok(b) => b,
                Err(e) => return errored(label, e),
            };
            out = out.and(labeled(&label, check_brace_axiom(&b, &Strategy::Exhaustive)));
            out = out.and(match hol.regular_from_brace(&b) {
                Ok(back) => Verdict::from_bool(back == *h, 1, || format!("{label}: round trip changed the subgroup")),
                Err(e) => errored(label, e),
            });
        }
    }
    out
}

fn criterion_rank2_lattice(_: &SuiteConfig) -> Verdict {
    let pts = ZnVector::box_points(2, 3);
    let mut out = Verdict::pass(0);
    for p in -3..=3i64 {
        let b = match LatticeBrace::new(case1_matrix(p)) {
            Ok(b) => b,
            Err(e) => return errored(format!("p={p}"), e),
        };
        let mut bad = None;
        let mut checked = 0u64;
        'scan: for a in &pts {
            if b.circ_inv(a) != z2_case1_inverse(p, a) {
                bad = Some(format!("p={p}: inverse of {a}"));
                break;
            }
            for c in &pts {
                checked += 1;
                let ac = b.circ(a, c);
                if ac != z2_case1_circ(p, a, c) {
                    bad = Some(format!("p={p}: closed form at a={a}, b={c}"));
                    break 'scan;
                }
                if ac != b.circ(c, a) {
                    bad = Some(format!("p={p}: a={a}, b={c} do not commute"));
                    break 'scan;
                }
            }
        }
        out = out.and(match bad {
            None => Verdict::pass(checked),
            Some(w) => Verdict::fail(w, checked),
        });
        for k in -3..=3i64 {
            let got = case1_matrix(p).power(k);
            out = out.and(Verdict::from_bool(got.as_ref() == Ok(&case1_matrix(k * p)), 1, || {
                format!("p={p}: φ^{k} is not [[1+kp, −kp], [kp, 1−kp]]")
            }));
        }
        let d = Domain::All(pts.clone());
        out = out.and(labeled(format!("case 1, p={p}"), check_brace_axiom_on(&b, &d)));
        let c2 = match LatticeBrace::new(case2_matrix(p)) {
            Ok(b) => b,
            Err(e) => return errored(format!("case 2, p={p}"), e),
        };
        out = out.and(labeled(format!("case 2, p={p}"), check_brace_axiom_on(&c2, &d)));
        let (x1, x2) = (ZnVector(vec![1, 0]), ZnVector(vec![0, 1]));
        let z2 = &x1 - &x2;
        let klein = c2.circ(&c2.circ(&c2.circ_inv(&x1), &z2), &x1);
        out = out.and(Verdict::from_bool(klein == c2.circ_inv(&z2), 1, || {
            format!("case 2, p={p}: x̄1∘z2∘x1 = {klein}")
        }));
    }
    let types = [
        (IntMatrix::identity(2), Z2Family::Trivial, MultGroupType::FreeAbelianIdentical),
        (case1_matrix(1), Z2Family::Case1(1), MultGroupType::FreeAbelianIsomorphic),
        (case2_matrix(0), Z2Family::Case2(0), MultGroupType::KleinBottle),
    ];
    for (m, family, mult) in types {
        out = out.and(match z2_classify(&m) {
            Ok(c) => Verdict::from_bool(c.family == family && c.mult_group == mult, 1, || {
                format!("{m:?} classified as {:?} / {:?}", c.family, c.mult_group)
            })
            .and(labeled(format!("{family:?}"), c.relations)),
            Err(e) => errored(format!("{family:?}"), e),
        });
    }
    out
}

fn criterion_cyclic_permutation(_: &SuiteConfig) -> Verdict {
    let b = match cyclic_permutation_brace(3) {
        Ok(b) => b,
        Err(e) => return errored("n=3", e),
    };
    let x = |i| ZnVector::basis(3, i);
    let got12 = b.circ(&x(0), &x(1));
    let got21 = b.circ(&x(1), &x(0));
    let mut out = Verdict::from_bool(got12 == &x(0) + &x(2), 1, || format!("x1∘x2 = {got12}"))
        .and(Verdict::from_bool(got21 == x(1).scale(2), 1, || format!("x2∘x1 = {got21}")));
    for n in 2..=5 {
        out = out.and(match verify_presentation_relations(n) {
            Ok(v) => labeled(format!("n={n}"), v),
            Err(e) => errored(format!("n={n}"), e),
        });
    }
    out
}

fn criterion_inversion_brace(cfg: &SuiteConfig) -> Verdict {
    let b = FreeGroupBrace::inversion();
    let mut rng = rng_from_seed(cfg.seed);
    let mut bad = None;
    let count = 1000;
    for k in 0..count {
        let [x, y, z]: [FreeWord; 3] = std::array::from_fn(|_| FreeWord::random_letters(&mut rng, 2, 6));
        let lhs = b.circ(&x, &b.dot(&y, &z));
        let rhs = b.dot(&b.dot(&b.circ(&x, &y), &b.dot_inv(&x)), &b.circ(&x, &z));
        if lhs != rhs {
            bad = Some((k + 1, format!("a={x}, b={y}, c={z}")));
            break;
        }
    }
    let axiom = match bad {
        None => Verdict::pass(count),
        Some((k, w)) => Verdict::fail(w, k),
    }
    .with_seed(Some(cfg.seed));
    inversion_presentation_relations().and(labeled("brace axiom", axiom))
}

fn criterion_factorization(cfg: &SuiteConfig) -> Verdict {
    let s = Strategy::Sampled { count: 1000, size: 6, seed: cfg.seed };
    let f2 = FactorizationBrace(FreeFactorization::new(2, 1).expect("F2 = F1 * Z"));
    let wreath = FactorizationBrace(WreathFactorization);
    let mut out = Verdict::all([
        labeled("F2 product rule", f2.check_product_rule(&s)),
        labeled("wreath product rule", wreath.check_product_rule(&s)),
        labeled("F2 λ inner", f2.check_lambda_is_inner(&s)),
        labeled("wreath λ inner", wreath.check_lambda_is_inner(&s)),
        labeled("wreath ∘ commutative", wreath.check_circ_commutative(&s)),
        labeled("F2 axiom", check_brace_axiom(&f2, &s)),
        labeled("wreath axiom", check_brace_axiom(&wreath, &s)),
        labeled("F2 symmetric", is_symmetric(&f2, &s)),
        labeled("wreath symmetric", is_symmetric(&wreath, &s)),
    ]);
    for (rank, b_rank) in [(3, 1), (3, 2), (4, 2)] {
        let b = FactorizationBrace(FreeFactorization::new(rank, b_rank).expect("valid ranks"));
        let label = format!("F{rank} with B of rank {b_rank}");
        out = out.and(labeled(&label, b.check_product_rule(&s)));
        out = out.and(labeled(&label, is_symmetric(&b, &s)));
    }
    out
}

fn criterion_series(cfg: &SuiteConfig) -> Verdict {
    let s = Strategy::Sampled { count: 500, size: 6, seed: cfg.seed };
    let two_sided = match check_two_sided_brace(2, 4, &s) {
        Ok(v) => v,
        Err(e) => return errored("two-sided", e),
    };
    let b = SeriesBrace { n_vars: 2, cap: 4 };
    let mut rng = rng_from_seed(cfg.seed);
    let mut inverses = Verdict::pass(0);
    for _ in 0..500 {
        let a = b.sample(&mut rng, 6);
        let ai = a.adjoint_inverse();
        let ok = b.circ(&a, &ai) == b.zero() && b.circ(&ai, &a) == b.zero();
        inverses = inverses.and(Verdict::from_bool(ok, 1, || format!("adjoint inverse of {a}")));
        if !ok {
            break;
        }
    }
    let witness = free_subgroup_witness(4, 4).unwrap_or_else(|e| errored("free subgroup", e));
    let xy = b.magnus_image(&FreeWord::from_letters(&[(0, true), (1, true)]));
    let yx = b.magnus_image(&FreeWord::from_letters(&[(1, true), (0, true)]));
    let distinct = Verdict::from_bool(matches!((&xy, &yx), (Ok(u), Ok(v)) if u != v), 1, || "μ(xy) = μ(yx)".into());
    Verdict::all([
        labeled("two-sided axioms", two_sided),
        labeled("adjoint inverse", inverses.with_seed(Some(cfg.seed))),
        labeled("Magnus injectivity", witness),
        distinct,
    ])
}

/// Both symmetry methods on `b`; a disagreement is always a failure.
fn symmetry_methods<B: SkewBrace>(label: &str, b: &B, s: &Strategy) -> (Verdict, Verdict) {
    let direct = is_symmetric_direct(b, s);
    let kernel = match is_symmetric_kernel(b, s) {
        Ok(v) => v,
        Err(e) => errored(label, e),
    };
    (labeled(format!("{label} (direct)"), direct), labeled(format!("{label} (kernel)"), kernel))
}

fn expect_symmetric<B: SkewBrace>(label: &str, b: &B, s: &Strategy) -> Verdict {
    let (d, k) = symmetry_methods(label, b, s);
    d.and(k)
}

fn criterion_symmetry(cfg: &SuiteConfig) -> Verdict {
    let corpus = match brace_corpus(8) {
        Ok(c) => c,
        Err(e) => return errored("corpus", e),
    };
    let mut out = Verdict::pass(0);
    for (name, b) in &corpus {
        let (d, k) = symmetry_methods(name, b, &Strategy::Exhaustive);
        if d.pass != k.pass {
            return Verdict::fail(format!("{name}: symmetry methods disagree"), out.checked);
        }
        if b.is_lambda_cyclic().pass {
            out = out.and(d).and(k);
        } else {
            out = out.and(Verdict::pass(1));
        }
    }
    let s = Strategy::Sampled { count: 1000, size: 4, seed: cfg.seed };
    out = out.and(expect_symmetric("Z sign brace", &integer_sign_brace(), &s));
    for p in -2..=2 {
        for (family, m) in [("case 1", case1_matrix(p)), ("case 2", case2_matrix(p))] {
            match LatticeBrace::new(m) {
                Ok(b) => out = out.and(expect_symmetric(&format!("{family}, p={p}"), &b, &s)),
                Err(e) => return errored(family, e),
            }
        }
    }
    for n in 2..=5 {
        match cyclic_permutation_brace(n) {
            Ok(b) => out = out.and(expect_symmetric(&format!("cyclic permutation n={n}"), &b, &s)),
            Err(e) => return errored(n, e),
        }
    }
    out = out.and(expect_symmetric("F2 swap", &FreeGroupBrace::swap(), &s));
    out = out.and(expect_symmetric("F2 inversion", &FreeGroupBrace::inversion(), &s));
    out = out.and(expect_symmetric("wreath factorization", &FactorizationBrace(WreathFactorization), &s));
    out
}

fn criterion_ybe(_: &SuiteConfig) -> Verdict {
    let mut braces = match brace_corpus(8) {
        Ok(c) => c,
        Err(e) => return errored("corpus", e),
    };
    let a = catalog::direct_product(&catalog::cyclic(2), &catalog::cyclic(4));
    for (name, gens) in [("index-2 over Z4", vec![1]), ("index-2 over Z2xZ2", vec![4, 2])] {
        match index2_brace(&a, &a.closure(&gens)) {
            Ok(b) => braces.push((name.to_string(), b)),
            Err(e) => return errored(name, e),
        }
    }
    let mut out = Verdict::pass(0);
    for (name, b) in &braces {
        out = out.and(labeled(name, verify_braid(b, &Strategy::Exhaustive)));
        out = out.and(match verify_nondegenerate(b, 8) {
            Ok(v) => labeled(name, v),
            Err(e) => errored(name, e),
        });
    }
    out
}

fn criterion_index2(_: &SuiteConfig) -> Verdict {
    let a = catalog::direct_product(&catalog::cyclic(2), &catalog::cyclic(4));
    let b1 = a.closure(&[1]);
    let b2 = a.closure(&[4, 2]);
    let (m1, m2) = match (index2_brace(&a, &b1), index2_brace(&a, &b2)) {
        (Ok(x), Ok(y)) => (x, y),
        (Err(e), _) | (_, Err(e)) => return errored("index-2", e),
    };
    let (g1, g2) = (m1.multiplicative_group(), m2.multiplicative_group());
    let (s1, s2) = (g1.order_spectrum(), g2.order_spectrum());
    Verdict::all([
        Verdict::from_bool(s1 != s2, 1, || format!("both order spectra are {s1:?}")),
        Verdict::from_bool(!is_isomorphic(g1, g2), 1, || "multiplicative groups are isomorphic".into()),
        Verdict::from_bool(is_isomorphic(g1, &catalog::dihedral(4)), 1, || "B = Z4 does not give D4".into()),
        Verdict::from_bool(is_isomorphic(g2, &catalog::elementary_abelian(3)), 1, || {
            "B = Z2xZ2 does not give Z2^3".into()
        }),
        labeled("B = Z4", check_circ_group(&m1, &Strategy::Exhaustive)),
        labeled("B = Z2xZ2", check_circ_group(&m2, &Strategy::Exhaustive)),
    ])
}
