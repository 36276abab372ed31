//! The set-theoretic Yang–Baxter map r(x, y) = (λ_x(y), \overline{λ_x(y)}∘x∘y)
//! of a skew brace.

use serde::{Deserialize, Serialize};

use crate::brace::checks::{scan, Domain};
use crate::brace::SkewBrace;
use crate::error::{Error, Result};
use crate::verdict::{Strategy, Verdict};

/// Finite carriers up to this order are scanned exhaustively by default.
pub const EXHAUSTIVE_LIMIT: usize = 16;

/// r(x, y).
pub fn r_map<B: SkewBrace>(b: &B, x: &B::Elem, y: &B::Elem) -> (B::Elem, B::Elem) {
    let u = b.lambda(x, y);
    let v = b.circ(&b.circ(&b.circ_inv(&u), x), y);
    (u, v)
}

/// Exhaustive on finite carriers of order ≤ [`EXHAUSTIVE_LIMIT`], otherwise
/// `fallback`.
pub fn default_strategy<B: SkewBrace>(b: &B, fallback: Strategy) -> Strategy {
    match b.elements() {
        Some(e) if e.len() <= EXHAUSTIVE_LIMIT => Strategy::Exhaustive,
        _ => fallback,
    }
}

fn domain<B: SkewBrace>(b: &B, strategy: &Strategy) -> Option<Domain<B::Elem>> {
    Domain::from_strategy(b, strategy)
}

fn infinite() -> Verdict {
    Verdict::fail("exhaustive strategy needs a finite carrier", 0)
}

/// (r×id)(id×r)(r×id) = (id×r)(r×id)(id×r) on triples.
pub fn verify_braid<B: SkewBrace>(b: &B, strategy: &Strategy) -> Verdict {
    let Some(d) = domain(b, strategy) else { return infinite() };
    scan(b, &d, |[x, y, z]| {
        let left = {
            let (a, c) = r_map(b, x, y);
            let (c, z2) = r_map(b, &c, z);
            let (a, c) = r_map(b, &a, &c);
            (a, c, z2)
        };
        let right = {
            let (y2, z2) = r_map(b, y, z);
            let (x2, y2) = r_map(b, x, &y2);
            let (y2, z2) = r_map(b, &y2, &z2);
            (x2, y2, z2)
        };
        left == right
    })
}

/// x∘y = u∘v for (u, v) = r(x, y).
pub fn verify_second_component<B: SkewBrace>(b: &B, strategy: &Strategy) -> Verdict {
    let Some(d) = domain(b, strategy) else { return infinite() };
    scan(b, &d, |[x, y]| {
        let (u, v) = r_map(b, x, y);
        b.circ(x, y) == b.circ(&u, &v)
    })
}

/// r∘r = id.
pub fn verify_involutive<B: SkewBrace>(b: &B, strategy: &Strategy) -> Verdict {
    let Some(d) = domain(b, strategy) else { return infinite() };
    scan(b, &d, |[x, y]| {
        let (u, v) = r_map(b, x, y);
        r_map(b, &u, &v) == (x.clone(), y.clone())
    })
}

/// y ↦ r₁(x, y) is bijective for each x and x ↦ r₂(x, y) is bijective for
/// each y. Needs a finite carrier of order ≤ `limit`.
pub fn verify_nondegenerate<B: SkewBrace>(b: &B, limit: usize) -> Result<Verdict> {
    let elems = b.elements().ok_or(Error::InfiniteCarrier)?;
    if elems.len() > limit {
        return Err(Error::SizeLimitExceeded { order: elems.len(), limit });
    }
    let n = elems.len();
    let bijective = |f: &dyn Fn(&B::Elem) -> B::Elem| {
        let image: std::collections::HashSet<B::Elem> = elems.iter().map(f).collect();
        image.len() == n
    };
    for x in &elems {
        if !bijective(&|y| r_map(b, x, y).0) {
            return Ok(Verdict::fail(format!("y ↦ r1({x}, y) is not bijective"), n as u64));
        }
    }
    for y in &elems {
        if !bijective(&|x| r_map(b, x, y).1) {
            return Ok(Verdict::fail(format!("x ↦ r2(x, {y}) is not bijective"), n as u64));
        }
    }
    Ok(Verdict::pass(2 * n as u64))
}

/// Exhaustive classification of the solution of a finite brace.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionClass {
    pub braid: Verdict,
    pub involutive: bool,
    pub nondegenerate: bool,
}

pub fn classify_solution<B: SkewBrace>(b: &B, limit: usize) -> Result<SolutionClass> {
    let nondegenerate = verify_nondegenerate(b, limit)?.pass;
    Ok(SolutionClass {
        braid: verify_braid(b, &Strategy::Exhaustive),
        involutive: verify_involutive(b, &Strategy::Exhaustive).pass,
        nondegenerate,
    })
}
