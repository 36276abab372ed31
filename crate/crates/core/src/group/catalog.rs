//! Standard small groups, labelled with the identity at 0.

use super::FiniteGroup;
use crate::error::{Error, Result};

/// ℤ_n with element k standing for k mod n.
pub fn cyclic(n: usize) -> FiniteGroup {
    assert!(n > 0, "cyclic group of order 0");
    FiniteGroup::from_fn(n, |a, b| (a + b) % n)
        .and_then(|g| g.with_generators(if n == 1 { vec![] } else { vec![1] }))
        .expect("cyclic table is a group")
}

/// G × H with (g, h) labelled g·|H| + h.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
    let m = h.order();
    let gens = g
        .generators()
        .iter()
        .map(|&a| a * m)
        .chain(h.generators().iter().copied())
        .collect();
    FiniteGroup::from_fn(g.order() * m, |x, y| g.mul(x / m, y / m) * m + h.mul(x % m, y % m))
        .and_then(|p| p.with_generators(gens))
        .expect("direct product of groups is a group")
}

/// (ℤ_2)^k as bit vectors under xor.
pub fn elementary_abelian(k: u32) -> FiniteGroup {
    let n = 1usize << k;
    FiniteGroup::from_fn(n, |a, b| a ^ b)
        .and_then(|g| g.with_generators((0..k).map(|i| 1 << i).collect()))
        .expect("xor table is a group")
}

/// Dihedral group of order 2m; r^i s^j is labelled i + m·j, with s r s = r⁻¹.
pub fn dihedral(m: usize) -> FiniteGroup {
    assert!(m >= 1);
    let mul = |x: usize, y: usize| {
        let (i, j) = (x % m, x / m);
        let (k, l) = (y % m, y / m);
        // r^i s^j r^k s^l = r^(i ± k) s^(j+l)
        let rot = if j == 0 { (i + k) % m } else { (i + m - k) % m };
        rot + m * ((j + l) % 2)
    };
    let gens = if m == 1 { vec![1] } else { vec![1, m] };
    FiniteGroup::from_fn(2 * m, mul)
        .and_then(|g| g.with_generators(gens))
        .expect("dihedral table is a group")
}

/// Quaternion group Q8: ±1, ±i, ±j, ±k labelled sign·4 + unit with units 1, i, j, k.
pub fn quaternion() -> FiniteGroup {
    // unit products: (sign flip, unit)
    const UNIT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let mul = |x: usize, y: usize| {
        let (s, u) = UNIT[x % 4][y % 4];
        ((x / 4 + y / 4 + s) % 2) * 4 + u
    };
    FiniteGroup::from_fn(8, mul)
        .and_then(|g| g.with_generators(vec![1, 2]))
        .expect("quaternion table is a group")
}

/// B ⋊ ℤ_2 where the generator of ℤ_2 acts on the abelian group B by inversion.
/// (b, e) is labelled b + |B|·e.
pub fn semidirect_by_inversion(b: &FiniteGroup) -> Result<FiniteGroup> {
    if let Some((x, y)) = b.non_commuting_pair() {
        return Err(Error::NotAbelian { a: x, b: y });
    }
    let m = b.order();
    let mul = |x: usize, y: usize| {
        let (b1, e1) = (x % m, x / m);
        let (b2, e2) = (y % m, y / m);
        let twisted = if e1 == 1 { b.inv(b2) } else { b2 };
        b.mul(b1, twisted) + m * ((e1 + e2) % 2)
    };
    let gens = b.generators().iter().copied().chain([m]).collect();
    FiniteGroup::from_fn(2 * m, mul)?.with_generators(gens)
}

/// The test corpus of small groups: cyclic, elementary abelian, dihedral and
/// quaternion groups of order at most `max_order`, plus ℤ_2 × ℤ_4.
pub fn corpus(max_order: usize) -> Vec<(String, FiniteGroup)> {
    let mut out: Vec<(String, FiniteGroup)> = Vec::new();
    for n in 1..=max_order {
        out.push((format!("Z{n}"), cyclic(n)));
    }
    for k in 2..=3u32 {
        if 1 << k <= max_order {
            out.push((format!("Z2^{k}"), elementary_abelian(k)));
        }
    }
    for m in 3..=max_order / 2 {
        out.push((format!("D{m}"), dihedral(m)));
    }
    if max_order >= 8 {
        out.push(("Q8".into(), quaternion()));
        out.push(("Z2xZ4".into(), direct_product(&cyclic(2), &cyclic(4))));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_commutativity() {
        assert_eq!(dihedral(4).order(), 8);
        assert!(!dihedral(3).is_abelian());
        assert!(!quaternion().is_abelian());
        assert!(direct_product(&cyclic(2), &cyclic(4)).is_abelian());
    }

    #[test]
    fn quaternion_has_one_involution() {
        let q = quaternion();
        let spectrum = q.order_spectrum();
        assert_eq!(spectrum.get(&2), Some(&1));
        assert_eq!(spectrum.get(&4), Some(&6));
    }

    #[test]
    fn dihedral_reflection_inverts_rotation() {
        let d = dihedral(5);
        let (r, s) = (1, 5);
        assert_eq!(d.mul(d.mul(s, r), s), d.inv(r));
    }

    #[test]
    fn inversion_semidirect_of_z4_is_dihedral_spectrum() {
        let g = semidirect_by_inversion(&cyclic(4)).unwrap();
        assert_eq!(g.order_spectrum(), dihedral(4).order_spectrum());
        assert!(semidirect_by_inversion(&dihedral(3)).is_err());
    }

    #[test]
    fn corpus_contents() {
        let names: Vec<String> = corpus(8).into_iter().map(|(n, _)| n).collect();
        for want in ["Z1", "Z8", "Z2^2", "Z2^3", "D3", "D4", "Q8"] {
            assert!(names.iter().any(|n| n == want), "missing {want}");
        }
    }
}
