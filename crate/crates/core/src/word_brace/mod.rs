//! Braces on free groups with λ assigned on the generators.

mod factorization;
mod index2;

pub use factorization::{
    ExactFactorization, FactorizationBrace, FreeFactorization, WreathElement, WreathFactorization,
};
pub use index2::index2_brace;

use crate::brace::{check_criterion_on_generators, LambdaDescriptor, PhiOrder, SkewBrace};
use crate::error::{Error, Result};
use crate::group::stallings::SubgroupGraph;
use crate::group::{FreeAutomorphism, FreeWord};
use crate::verdict::{SampleRng, Verdict};

/// (F_n, ·, ∘) with a∘b = a·λ_a(b), where λ(x_i) = φ_i for pairwise
/// commuting automorphisms φ_i. Then λ_w = Π φ_i^{e_i(w)} with e_i the
/// exponent sum of x_i in w.
#[derive(Clone, Debug)]
pub struct FreeGroupBrace {
    phis: Vec<FreeAutomorphism>,
    /// Set when every φ_i is the same θ, so λ_w = θ^{l(w)}.
    uniform: Option<PhiOrder>,
}

impl FreeGroupBrace {
    /// λ_w = θ^{l(w)} for θ with l(θ(x_i)) = 1 on every generator.
    pub fn homogeneous(theta: FreeAutomorphism) -> Result<Self> {
        if let Some((i, log)) = theta.log_defect() {
            return Err(Error::NotLogPreserving { generator: i + 1, log });
        }
        Ok(Self::uniform_unchecked(theta))
    }

    /// λ(x_i) = θ for every i, accepted when x_i⁻¹θ(x_i) ∈ Ker λ.
    pub fn uniform(theta: FreeAutomorphism) -> Result<Self> {
        let b = Self::uniform_unchecked(theta);
        b.require_criterion()?;
        Ok(b)
    }

    fn uniform_unchecked(theta: FreeAutomorphism) -> Self {
        let order = match theta.order() {
            Some(k) => PhiOrder::Finite(k),
            None => PhiOrder::Infinite,
        };
        FreeGroupBrace { phis: vec![theta.clone(); theta.rank()], uniform: Some(order) }
    }

    /// λ(x_i) = phis[i]. The φ_i must commute pairwise and satisfy
    /// x_i⁻¹φ_j(x_i) ∈ Ker λ.
    pub fn from_generator_images(phis: Vec<FreeAutomorphism>) -> Result<Self> {
        let rank = phis.len();
        if rank == 0 {
            return Err(Error::BadRank { rank, min: 1 });
        }
        if let Some(bad) = phis.iter().find(|p| p.rank() != rank) {
            return Err(Error::DimensionMismatch { expected: rank, found: bad.rank() });
        }
        if phis.iter().all(|p| *p == phis[0]) {
            return Self::uniform(phis[0].clone());
        }
        for i in 0..rank {
            for j in i + 1..rank {
                if phis[i].compose(&phis[j]) != phis[j].compose(&phis[i]) {
                    return Err(Error::NotHomomorphism {
                        witness: format!("φ{}φ{} ≠ φ{}φ{}", i + 1, j + 1, j + 1, i + 1),
                    });
                }
            }
        }
        let b = FreeGroupBrace { phis, uniform: None };
        b.require_criterion()?;
        Ok(b)
    }

    fn require_criterion(&self) -> Result<()> {
        let gens: Vec<FreeWord> = (0..self.rank() as u32).map(FreeWord::generator).collect();
        let v = check_criterion_on_generators(
            &gens,
            |j, x| self.phis[j].apply(x),
            |x, y| x.inverse().multiply(y),
            |e| self.in_lambda_kernel(e),
        )?;
        match v.witness {
            Some(w) => Err(Error::NotABrace { witness: w }),
            None => Ok(()),
        }
    }

    /// Generator swap on F₂; Ker λ is the even-exponent-sum subgroup.
    pub fn swap() -> Self {
        Self::uniform(FreeAutomorphism::swap2()).expect("swap satisfies the criterion")
    }

    /// x ↦ x⁻¹, y ↦ y⁻¹ on F₂.
    pub fn inversion() -> Self {
        Self::uniform(FreeAutomorphism::inversion(2)).expect("inversion satisfies the criterion")
    }

    /// λ_w = θ^{l(w)} for an automorphism θ acting trivially on the
    /// abelianization.
    pub fn ia(theta: FreeAutomorphism) -> Result<Self> {
        if !theta.abelianization().is_identity() {
            return Err(Error::NotAutomorphism { reason: format!("{theta} is not an IA-automorphism") });
        }
        Self::homogeneous(theta)
    }

    /// λ_w = (conjugation by a)^{l(w)}.
    pub fn inner(rank: usize, a: &FreeWord) -> Result<Self> {
        Self::homogeneous(FreeAutomorphism::inner(rank, a)?)
    }

    /// F₄ with φ₁ = φ₂: x₁ ↦ x₁u and φ₃ = φ₄: x₄ ↦ x₄v, for u, v in the
    /// commutator subgroup of ⟨x₂, x₃⟩.
    pub fn f4_example(u: &FreeWord, v: &FreeWord) -> Result<Self> {
        for w in [u, v] {
            let inside = w.syllables().iter().all(|&(g, _)| g == 1 || g == 2)
                && w.exponent_sum(1) == 0
                && w.exponent_sum(2) == 0;
            if !inside {
                return Err(Error::NotInCommutator { word: w.to_string(), subgroup: "<x2, x3>".into() });
            }
        }
        let p1 = FreeAutomorphism::right_multiply(4, 0, u)?;
        let p3 = FreeAutomorphism::right_multiply(4, 3, v)?;
        Self::from_generator_images(vec![p1.clone(), p1, p3.clone(), p3])
    }

    pub fn rank(&self) -> usize {
        self.phis.len()
    }

    /// λ_w^{sign}(b), sign = ±1.
    fn lambda_pow(&self, w: &FreeWord, sign: i64, b: &FreeWord) -> FreeWord {
        if self.uniform.is_some() {
            return self.phis[0].apply_power(sign * w.log(), b);
        }
        (0..self.rank()).fold(b.clone(), |acc, i| self.phis[i].apply_power(sign * w.exponent_sum(i as u32), &acc))
    }

    /// λ_w as an automorphism.
    pub fn lambda_automorphism(&self, w: &FreeWord) -> FreeAutomorphism {
        if self.uniform.is_some() {
            return self.phis[0].power(w.log());
        }
        (0..self.rank()).fold(FreeAutomorphism::identity(self.rank()), |acc, i| {
            acc.compose(&self.phis[i].power(w.exponent_sum(i as u32)))
        })
    }
}

impl SkewBrace for FreeGroupBrace {
    type Elem = FreeWord;

    fn identity(&self) -> FreeWord {
        FreeWord::identity()
    }
    fn dot(&self, a: &FreeWord, b: &FreeWord) -> FreeWord {
        a.multiply(b)
    }
    fn dot_inv(&self, a: &FreeWord) -> FreeWord {
        a.inverse()
    }
    fn circ(&self, a: &FreeWord, b: &FreeWord) -> FreeWord {
        a.multiply(&self.lambda_pow(a, 1, b))
    }
    /// ā = λ_a⁻¹(a⁻¹).
    fn circ_inv(&self, a: &FreeWord) -> FreeWord {
        self.lambda_pow(a, -1, &a.inverse())
    }
    fn lambda(&self, a: &FreeWord, b: &FreeWord) -> FreeWord {
        self.lambda_pow(a, 1, b)
    }
    fn sample(&self, rng: &mut SampleRng, size: usize) -> FreeWord {
        FreeWord::random(rng, self.rank() as u32, size)
    }
    fn descriptor(&self) -> LambdaDescriptor {
        match self.uniform {
            Some(order) => LambdaDescriptor::PowerOfPhi { order },
            None => LambdaDescriptor::GeneratorAssignment,
        }
    }
    fn in_lambda_kernel(&self, a: &FreeWord) -> Option<bool> {
        match self.uniform {
            Some(order) => order.kills(a.log()),
            None => Some(self.lambda_automorphism(a).is_identity()),
        }
    }
}

fn word_check(label: &str, got: &FreeWord, want: &FreeWord) -> Verdict {
    Verdict::from_bool(got == want, 1, || format!("{label}: got {got}, expected {want}"))
}

/// The relations s∘s = 1, s∘p∘s = p̄, s∘q∘s = q̄ and s∘r∘s = p∘r̄∘p̄ in the
/// inversion brace, with s = x, p = xy, q = x², r = y². Since ∘ = · on the
/// parity kernel, the last one is also checked against p·r⁻¹·p⁻¹.
pub fn inversion_presentation_relations() -> Verdict {
    let b = FreeGroupBrace::inversion();
    let w = |s: &str| s.parse::<FreeWord>().expect("literal word");
    let (s, p, q, r) = (w("x"), w("x*y"), w("x^2"), w("y^2"));
    let conj = |t: &FreeWord| b.circ(&b.circ(&s, t), &s);
    let srs_circ = b.circ(&b.circ(&p, &b.circ_inv(&r)), &b.circ_inv(&p));
    Verdict::all([
        word_check("s∘s", &b.circ(&s, &s), &FreeWord::identity()),
        word_check("s̄", &b.circ_inv(&s), &s),
        word_check("s∘p∘s", &conj(&p), &b.circ_inv(&p)),
        word_check("s∘p∘s as a word", &conj(&p), &p.inverse()),
        word_check("s∘q∘s", &conj(&q), &b.circ_inv(&q)),
        word_check("s∘q∘s as a word", &conj(&q), &q.inverse()),
        word_check("s∘r∘s", &conj(&r), &srs_circ),
        word_check("s∘r∘s as a word", &conj(&r), &p.multiply(&r.inverse()).multiply(&p.inverse())),
    ])
}

/// Words of even exponent sum: the kernel of λ for the swap and inversion
/// braces on F₂.
pub fn in_parity_kernel(w: &FreeWord) -> bool {
    w.log().rem_euclid(2) == 0
}

/// Both generating sets ⟨xy, yx, x², y²⟩ and ⟨xy, x², xy⁻¹⟩ give the
/// parity kernel: each generator has even exponent sum and each subgroup
/// has index 2, computed by folding.
pub fn parity_kernel_generators_agree() -> Verdict {
    let w = |s: &str| s.parse::<FreeWord>().expect("literal word");
    let sets = [
        ("<xy, yx, x^2, y^2>", vec![w("x*y"), w("y*x"), w("x^2"), w("y^2")]),
        ("<xy, x^2, xy^-1>", vec![w("x*y"), w("x^2"), w("x*y^-1")]),
    ];
    Verdict::all(sets.into_iter().map(|(name, gens)| {
        let even = gens.iter().all(in_parity_kernel);
        let index = SubgroupGraph::new(2, &gens).index();
        Verdict::from_bool(even && index == Some(2), 1, || format!("{name}: index {index:?}, even generators {even}"))
    }))
}

/// One stated conjugation relation in the F₄ example.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugationRelation {
    pub label: String,
    pub computed: FreeWord,
    pub stated: FreeWord,
}

/// x̄_i∘x_j∘x_i for i ≠ j in the F₄ example, next to the closed forms
/// listed with the example.
pub fn f4_conjugation_relations(u: &FreeWord, v: &FreeWord) -> Result<Vec<ConjugationRelation>> {
    let b = FreeGroupBrace::f4_example(u, v)?;
    let x = |i: u32| FreeWord::generator(i - 1);
    let xi = |i: u32| x(i).inverse();
    let prod = |ws: &[FreeWord]| ws.iter().fold(FreeWord::identity(), |acc, w| acc.multiply(w));
    let (ui, vi) = (u.inverse(), v.inverse());
    let stated: Vec<((u32, u32), FreeWord)> = vec![
        ((1, 2), prod(&[u.clone(), xi(1), x(2), x(1)])),
        ((1, 3), prod(&[u.clone(), xi(1), x(3), x(1), ui.clone()])),
        ((1, 4), prod(&[u.clone(), xi(1), x(4), x(1), ui.clone()])),
        ((2, 1), prod(&[xi(2), x(1), ui.clone(), x(2)])),
        ((2, 3), prod(&[xi(2), x(3), x(2)])),
        ((2, 4), prod(&[xi(2), x(4), x(2)])),
        ((3, 1), prod(&[xi(3), x(1), x(3)])),
        ((3, 2), prod(&[xi(3), x(2), x(3)])),
        ((3, 4), prod(&[xi(3), x(4), vi.clone(), x(3)])),
        ((4, 1), prod(&[v.clone(), xi(4), x(1), x(4), vi.clone()])),
        ((4, 2), prod(&[v.clone(), xi(4), x(2), x(4), vi.clone()])),
        ((4, 3), prod(&[v.clone(), xi(4), x(1), x(4)])),
    ];
    Ok(stated
        .into_iter()
        .map(|((i, j), stated)| ConjugationRelation {
            label: format!("x̄{i}∘x{j}∘x{i}"),
            computed: b.circ(&b.circ(&b.circ_inv(&x(i)), &x(j)), &x(i)),
            stated,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::checks::{check_brace_axiom_on, Domain};
    use crate::brace::{check_brace_axiom, check_circ_group, check_lambda_circ_hom, is_lambda_homomorphic, is_symmetric};
    use crate::group::word::w;
    use crate::verdict::Strategy;

    fn sampled() -> Strategy {
        Strategy::Sampled { count: 1000, size: 6, seed: 17 }
    }

    #[test]
    fn swap_brace_examples() {
        let b = FreeGroupBrace::swap();
        assert_eq!(b.circ(&w("x"), &w("y")), w("x^2"));
        let tail = w("y^-2*x*y");
        assert_eq!(b.circ(&w("x*y"), &tail), w("x*y").multiply(&tail));
        assert_eq!(b.descriptor(), LambdaDescriptor::PowerOfPhi { order: PhiOrder::Finite(2) });
    }

    #[test]
    fn inversion_brace_relations() {
        let b = FreeGroupBrace::inversion();
        assert_eq!(b.circ(&w("x"), &w("x")), FreeWord::identity());
        let r = inversion_presentation_relations();
        assert!(r.pass, "{r}");
    }

    #[test]
    fn word_braces_pass_sampled_laws() {
        let u = FreeWord::commutator(&w("x2"), &w("x3"));
        let braces = [
            FreeGroupBrace::swap(),
            FreeGroupBrace::inversion(),
            FreeGroupBrace::inner(2, &w("x*y^-1")).unwrap(),
            FreeGroupBrace::ia(FreeAutomorphism::partial_conjugation(3, 0, 1).unwrap()).unwrap(),
            FreeGroupBrace::f4_example(&u, &u.inverse()).unwrap(),
        ];
        for b in &braces {
            assert!(check_brace_axiom(b, &sampled()).pass);
            assert!(check_circ_group(b, &sampled()).pass);
            assert!(check_lambda_circ_hom(b, &sampled()).pass);
            assert!(is_lambda_homomorphic(b, &sampled()).pass);
            assert!(is_symmetric(b, &sampled()).pass);
        }
    }

    #[test]
    fn circ_equals_dot_on_the_parity_kernel() {
        let words = FreeWord::enumerate(2, 4);
        let even: Vec<FreeWord> = words.iter().filter(|w| in_parity_kernel(w)).cloned().collect();
        for b in [FreeGroupBrace::swap(), FreeGroupBrace::inversion()] {
            for a in &even {
                assert_eq!(b.in_lambda_kernel(a), Some(true));
                for c in &even {
                    assert_eq!(b.circ(a, c), a.multiply(c));
                }
            }
            for a in words.iter().filter(|w| !in_parity_kernel(w)) {
                assert_eq!(b.in_lambda_kernel(a), Some(false));
            }
        }
        assert!(parity_kernel_generators_agree().pass);
    }

    #[test]
    fn exhaustive_axiom_on_short_words() {
        let d = Domain::All(FreeWord::enumerate(2, 2));
        assert!(check_brace_axiom_on(&FreeGroupBrace::inversion(), &d).pass);
        assert!(check_brace_axiom_on(&FreeGroupBrace::swap(), &d).pass);
    }

    #[test]
    fn rejected_automorphisms() {
        let t = FreeAutomorphism::right_multiply(3, 0, &w("x2")).unwrap();
        assert_eq!(FreeGroupBrace::homogeneous(t.clone()).unwrap_err(), Error::NotLogPreserving { generator: 1, log: 2 });
        assert!(matches!(FreeGroupBrace::uniform(t), Err(Error::NotABrace { .. })));
        assert!(FreeGroupBrace::ia(FreeAutomorphism::swap2()).is_err());
        assert!(matches!(
            FreeGroupBrace::f4_example(&w("x2"), &w("1")),
            Err(Error::NotInCommutator { .. })
        ));
    }

    #[test]
    fn f4_example_products_and_inverses() {
        let u = FreeWord::commutator(&w("x2"), &w("x3"));
        let v = FreeWord::commutator(&w("x3^2"), &w("x2"));
        let b = FreeGroupBrace::f4_example(&u, &v).unwrap();
        let x = |i: u32| FreeWord::generator(i - 1);
        assert_eq!(b.circ(&x(1), &x(1)), x(1).multiply(&x(1)).multiply(&u));
        assert_eq!(b.circ(&x(2), &x(1)), x(2).multiply(&x(1)).multiply(&u));
        assert_eq!(b.circ(&x(3), &x(4)), x(3).multiply(&x(4)).multiply(&v));
        assert_eq!(b.circ(&x(1), &x(3)), x(1).multiply(&x(3)));
        assert_eq!(b.circ_inv(&x(1)), u.multiply(&x(1).inverse()));
        assert_eq!(b.circ_inv(&x(4)), v.multiply(&x(4).inverse()));
        assert_eq!(b.circ_inv(&x(2)), x(2).inverse());
        // ∘ = · on the commutator subgroup
        let c = FreeWord::commutator(&x(1), &x(4));
        assert_eq!(b.circ(&c, &x(1)), c.multiply(&x(1)));
        let rels = f4_conjugation_relations(&u, &v).unwrap();
        let wrong: Vec<&str> = rels.iter().filter(|r| r.computed != r.stated).map(|r| r.label.as_str()).collect();
        assert_eq!(wrong, vec!["x̄4∘x3∘x4"]);
        let last = rels.last().unwrap();
        assert_eq!(last.computed, v.multiply(&x(4).inverse()).multiply(&x(3)).multiply(&x(4)));
    }

    #[test]
    fn sampled_axiom_on_explicit_domain() {
        let d = Domain::Random { count: 300, size: 6, seed: 3 };
        assert!(check_brace_axiom_on(&FreeGroupBrace::inner(3, &w("x1*x3")).unwrap(), &d).pass);
    }
}
