use std::path::Path;

use serde::de::DeserializeOwned;
use serde_json::{json, Value};
use skewbrace::brace::checks::Domain;
use skewbrace::brace::{
    check_brace_axiom, check_brace_axiom_on, check_circ_group, check_lambda_circ_hom, check_meta_trivial,
    construct_from_lambda, check_injective_lambda_rejected, is_lambda_homomorphic, is_symmetric, Construction,
    FiniteBraceDocument,
};
use skewbrace::group::lattice::{case1_matrix, case2_matrix};
use skewbrace::group::morphism::{all_homomorphisms_to_aut, AutGroup};
use skewbrace::group::{FiniteGroup, FreeAutomorphism, GroupDocument};
use skewbrace::holomorph::Holomorph;
use skewbrace::lattice_brace::{
    cyclic_permutation_brace, verify_presentation_relations, z2_case1_circ, z2_case2_circ, z2_classify, LatticeBrace,
    Z2Family,
};
use skewbrace::report::Report;
use skewbrace::series::{check_two_sided_brace, free_subgroup_witness, SeriesBrace};
use skewbrace::suite::{run_suite, SuiteConfig};
use skewbrace::word_brace::{
    inversion_presentation_relations, parity_kernel_generators_agree, FactorizationBrace, FreeFactorization,
    FreeGroupBrace, WreathFactorization,
};
use skewbrace::ybe::{verify_braid, verify_involutive, verify_nondegenerate, verify_second_component, EXHAUSTIVE_LIMIT};
use skewbrace::{FiniteBrace, IntMatrix, SkewBrace, Strategy, Verdict, ZnVector};

use crate::{Command, Common, FactorFamily, Family, FreeConstruction, SeriesCheck, VerifyMode, YbeCheck};

/// Word size used by sampled checks on symbolic carriers.
const SAMPLE_SIZE: usize = 6;

pub fn run(command: &Command, common: &Common) -> Result<Report, String> {
    let sampled = Strategy::Sampled { count: common.samples, size: SAMPLE_SIZE, seed: common.seed };
    match command {
        Command::EnumRegular { group, cross_check } => enum_regular(group, *cross_check, common),
        Command::Construct { group, index } => construct(group, *index, common),
        Command::Verify { brace, mode } => verify(brace, mode, common),
        Command::Z2 { p, family, matrix, verify } => z2(*p, *family, matrix.as_deref(), *verify, sampled, common),
        Command::ZnCyclic { n, verify_presentation } => zn_cyclic(*n, *verify_presentation, sampled, common),
        Command::Free { construction, verify } => free(*construction, *verify, sampled, common),
        Command::Factor { family, verify } => factor(*family, *verify, sampled, common),
        Command::Series { vars, degree, check, len } => series(*vars, *degree, *check, *len, common),
        Command::Ybe { brace, check } => ybe(brace, check, common),
        Command::PaperSuite { level: _, only } => {
            let only = (!only.is_empty()).then_some(only.as_slice());
            Ok(run_suite(&SuiteConfig { seed: common.seed }, only))
        }
    }
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn read_group(path: &Path) -> Result<FiniteGroup, String> {
    let doc: GroupDocument = read_json(path)?;
    FiniteGroup::from_document(&doc).map_err(|e| format!("{}: {e}", path.display()))
}

fn read_brace(path: &Path) -> Result<FiniteBrace, String> {
    let doc: FiniteBraceDocument = read_json(path)?;
    FiniteBrace::from_document_unverified(&doc).map_err(|e| format!("{}: {e}", path.display()))
}

fn lib<T>(r: skewbrace::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn enum_regular(path: &Path, cross_check: bool, common: &Common) -> Result<Report, String> {
    let g = read_group(path)?;
    let hol = lib(Holomorph::new(&g, common.limit))?;
    let mut report = Report::new("enum-regular", common.seed);
    let mut subgroups = Vec::new();
    report.run("regular subgroups enumerated", || {
        subgroups = hol.enumerate_regular_subgroups();
        Verdict::all(subgroups.iter().enumerate().map(|(k, h)| {
            Verdict::from_bool(hol.is_regular(h), 1, || format!("subgroup {k} is not regular"))
        }))
    });
    report.run("each subgroup gives a brace", || {
        Verdict::all(subgroups.iter().enumerate().map(|(k, h)| match hol.brace_from_regular(h) {
            Ok(b) => check_brace_axiom(&b, &Strategy::Exhaustive),
            Err(e) => Verdict::fail(format!("subgroup {k}: {e}"), 1),
        }))
    });
    if cross_check {
        report.run("subset-growth enumeration agrees", || {
            let other = hol.enumerate_regular_subgroups_by_growth();
            Verdict::from_bool(other == subgroups, 1, || {
                format!("{} by completion, {} by growth", subgroups.len(), other.len())
            })
        });
    }
    let list: Vec<Vec<[usize; 2]>> =
        subgroups.iter().map(|h| h.members().iter().map(|p| [p.auto, p.elem]).collect()).collect();
    report.data = Some(json!({
        "group_order": g.order(),
        "aut_order": hol.aut().len(),
        "count": list.len(),
        "subgroups": list,
    }));
    Ok(report)
}

fn construct(path: &Path, index: Option<usize>, common: &Common) -> Result<Report, String> {
    let g = read_group(path)?;
    let aut = lib(AutGroup::compute(&g, common.limit))?;
    let hol = Holomorph::from_aut(aut.clone());
    let mut lambdas = all_homomorphisms_to_aut(&g, &aut);
    if let Some(i) = index {
        if i >= lambdas.len() {
            return Err(format!("--index {i} out of range: {} homomorphisms", lambdas.len()));
        }
        lambdas = vec![lambdas.swap_remove(i)];
    }
    let mut report = Report::new("construct", common.seed);
    let mut entries = Vec::new();
    let mut criterion = Verdict::pass(0);
    let mut axioms = Verdict::pass(0);
    let mut injective = Verdict::pass(0);
    for lambda in &lambdas {
        let built = lib(construct_from_lambda(&g, &aut, lambda))?;
        let subgroup = hol.is_subgroup(&hol.h_lambda(lambda));
        let accepted = matches!(built, Construction::Brace(_));
        criterion = criterion.and(Verdict::from_bool(subgroup == accepted, 1, || {
            format!("λ = {:?}: criterion {accepted}, H_λ subgroup {subgroup}", lambda.0)
        }));
        injective = injective.and(lib(check_injective_lambda_rejected(&g, &aut, lambda))?);
        entries.push(match built {
            Construction::Brace(b) => {
                axioms = axioms.and(check_brace_axiom(&b, &Strategy::Exhaustive));
                json!({ "lambda": lambda.0, "brace": b.to_document() })
            }
            Construction::Rejected { a, b } => json!({ "lambda": lambda.0, "rejected": [a, b] }),
        });
    }
    report.push("criterion matches H_λ closure", criterion, Default::default());
    report.push("constructed braces satisfy the axiom", axioms, Default::default());
    report.push("injective λ is rejected", injective, Default::default());
    report.data = Some(Value::Array(entries));
    Ok(report)
}

fn verify(path: &Path, modes: &[VerifyMode], common: &Common) -> Result<Report, String> {
    let b = read_brace(path)?;
    let mut report = Report::new("verify", common.seed);
    let all = Strategy::Exhaustive;
    for mode in modes {
        match mode {
            VerifyMode::Axiom => {
                report.run("brace axiom", || check_brace_axiom(&b, &all));
                report.run("multiplicative group", || check_circ_group(&b, &all));
                report.run("λ is a ∘-homomorphism", || check_lambda_circ_hom(&b, &all));
            }
            VerifyMode::LambdaHom => {
                report.run("λ-homomorphic", || is_lambda_homomorphic(&b, &all));
            }
            VerifyMode::LambdaCyclic => {
                report.run("λ-cyclic", || b.is_lambda_cyclic());
            }
            VerifyMode::Symmetric => {
                report.run("symmetric", || is_symmetric(&b, &all));
            }
            VerifyMode::MetaTrivial => {
                let v = lib(check_meta_trivial(&b, &all))?;
                report.run("meta-trivial", || v);
            }
        }
    }
    Ok(report)
}

fn z2(
    p: i64,
    family: Family,
    matrix: Option<&str>,
    verify: bool,
    sampled: Strategy,
    common: &Common,
) -> Result<Report, String> {
    let m = match matrix {
        Some(text) => {
            let rows: Vec<Vec<i64>> = serde_json::from_str(text).map_err(|e| format!("--matrix: {e}"))?;
            lib(IntMatrix::new(rows))?
        }
        None => match family {
            Family::Case1 => case1_matrix(p),
            Family::Case2 => case2_matrix(p),
        },
    };
    let class = lib(z2_classify(&m))?;
    let mut report = Report::new("z2", common.seed);
    if verify {
        let b = lib(LatticeBrace::new(m.clone()))?;
        report.run("type relations", || class.relations.clone());
        let closed: Option<fn(i64, &ZnVector, &ZnVector) -> ZnVector> = match class.family {
            Z2Family::Trivial => None,
            Z2Family::Case1(_) => Some(z2_case1_circ),
            Z2Family::Case2(_) => Some(z2_case2_circ),
        };
        let param = match class.family {
            Z2Family::Case1(q) | Z2Family::Case2(q) => q,
            Z2Family::Trivial => 0,
        };
        let pts = ZnVector::box_points(2, 3);
        if let Some(f) = closed {
            report.run("closed-form product on [-3,3]^2", || {
                Verdict::all(pts.iter().flat_map(|a| {
                    let b = &b;
                    pts.iter().map(move |c| {
                        let got = b.circ(a, c);
                        let want = f(param, a, c);
                        Verdict::from_bool(got == want, 1, || format!("a={a}, b={c}: {got} vs {want}"))
                    })
                }))
            });
        }
        report.run("brace axiom on [-3,3]^2", || check_brace_axiom_on(&b, &Domain::All(pts.clone())));
        report.run("symmetric", || is_symmetric(&b, &sampled));
    }
    report.data = Some(json!({ "matrix": m.rows(), "classification": class }));
    Ok(report)
}

fn zn_cyclic(n: usize, presentation: bool, sampled: Strategy, common: &Common) -> Result<Report, String> {
    let b = lib(cyclic_permutation_brace(n))?;
    let mut report = Report::new("zn-cyclic", common.seed);
    if presentation {
        let v = lib(verify_presentation_relations(n))?;
        report.run("presentation relations", || v);
    }
    report.run("brace axiom (sampled)", || check_brace_axiom(&b, &sampled));
    report.run("symmetric (sampled)", || is_symmetric(&b, &sampled));
    report.data = Some(json!({ "rank": n, "matrix": b.phi().rows() }));
    Ok(report)
}

fn word_brace_checks(report: &mut Report, b: &impl SkewBrace, sampled: &Strategy) {
    report.run("brace axiom", || check_brace_axiom(b, sampled));
    report.run("multiplicative group", || check_circ_group(b, sampled));
    report.run("λ is a ∘-homomorphism", || check_lambda_circ_hom(b, sampled));
    report.run("symmetric", || is_symmetric(b, sampled));
}

fn free(construction: FreeConstruction, verify: bool, sampled: Strategy, common: &Common) -> Result<Report, String> {
    let b = match construction {
        FreeConstruction::Swap => FreeGroupBrace::swap(),
        FreeConstruction::Inversion => FreeGroupBrace::inversion(),
        FreeConstruction::Ia => lib(FreeAutomorphism::partial_conjugation(3, 0, 1).and_then(FreeGroupBrace::ia))?,
    };
    let mut report = Report::new("free", common.seed);
    if verify {
        word_brace_checks(&mut report, &b, &sampled);
        match construction {
            FreeConstruction::Inversion => {
                report.run("presentation relations", inversion_presentation_relations);
                report.run("kernel generating sets", parity_kernel_generators_agree);
            }
            FreeConstruction::Swap => {
                report.run("kernel generating sets", parity_kernel_generators_agree);
            }
            FreeConstruction::Ia => {}
        }
    }
    report.data = Some(json!({ "rank": b.rank(), "lambda": b.descriptor() }));
    Ok(report)
}

fn factor(family: FactorFamily, verify: bool, sampled: Strategy, common: &Common) -> Result<Report, String> {
    let mut report = Report::new("factor", common.seed);
    match family {
        FactorFamily::F2 => {
            let b = FactorizationBrace(lib(FreeFactorization::new(2, 1))?);
            if verify {
                report.run("product rule", || b.check_product_rule(&sampled));
                report.run("λ is conjugation by the B-part", || b.check_lambda_is_inner(&sampled));
                word_brace_checks(&mut report, &b, &sampled);
            }
            report.data = Some(json!({ "lambda": b.descriptor() }));
        }
        FactorFamily::Wreath => {
            let b = FactorizationBrace(WreathFactorization);
            if verify {
                report.run("product rule", || b.check_product_rule(&sampled));
                report.run("λ is conjugation by the B-part", || b.check_lambda_is_inner(&sampled));
                report.run("∘ is commutative", || b.check_circ_commutative(&sampled));
                word_brace_checks(&mut report, &b, &sampled);
            }
            report.data = Some(json!({ "lambda": b.descriptor() }));
        }
    }
    Ok(report)
}

fn series(vars: usize, degree: usize, check: SeriesCheck, len: usize, common: &Common) -> Result<Report, String> {
    let mut report = Report::new("series", common.seed);
    match check {
        SeriesCheck::TwoSided => {
            let s = Strategy::Sampled { count: common.samples, size: SAMPLE_SIZE, seed: common.seed };
            let v = lib(check_two_sided_brace(vars, degree, &s))?;
            report.run("two-sided brace axioms", || v);
            let b = lib(SeriesBrace::new(vars, degree))?;
            report.run("multiplicative group", || check_circ_group(&b, &s));
        }
        SeriesCheck::FreeWitness => {
            let cap = degree.max(len);
            let v = lib(free_subgroup_witness(cap, len))?;
            report.run(format!("Magnus images distinct up to length {len} at degree {cap}"), || v);
        }
    }
    Ok(report)
}

fn ybe(path: &Path, checks: &[YbeCheck], common: &Common) -> Result<Report, String> {
    let b = read_brace(path)?;
    if b.order() > EXHAUSTIVE_LIMIT.max(common.limit) {
        return Err(format!("brace of order {} exceeds the limit {}", b.order(), EXHAUSTIVE_LIMIT.max(common.limit)));
    }
    let all = Strategy::Exhaustive;
    let mut report = Report::new("ybe", common.seed);
    report.run("x∘y = u∘v for (u, v) = r(x, y)", || verify_second_component(&b, &all));
    for c in checks {
        match c {
            YbeCheck::Braid => {
                report.run("braid relation", || verify_braid(&b, &all));
            }
            YbeCheck::Nondegen => {
                let v = lib(verify_nondegenerate(&b, b.order()))?;
                report.run("non-degenerate", || v);
            }
            YbeCheck::Involutive => {
                report.run("involutive", || verify_involutive(&b, &all));
            }
        }
    }
    Ok(report)
}
