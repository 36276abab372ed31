//! Freely reduced words over generators `x1, x2, ...`.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A free-group element as syllables `(generator, exponent)`.
///
/// Invariant: exponents are nonzero and adjacent syllables use different
/// generators. Generators are 0-based internally and printed 1-based.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    syllables: Vec<(u32, i64)>,
}

fn add_exp(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("exponent overflow in free word")
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord::default()
    }

    pub fn generator(g: u32) -> Self {
        FreeWord { syllables: vec![(g, 1)] }
    }

    pub fn power_of(g: u32, e: i64) -> Self {
        if e == 0 {
            FreeWord::identity()
        } else {
            FreeWord { syllables: vec![(g, e)] }
        }
    }

    /// Reduce an arbitrary syllable list.
    pub fn from_syllables(syllables: impl IntoIterator<Item = (u32, i64)>) -> Self {
        let mut w = FreeWord::identity();
        for (g, e) in syllables {
            w.push(g, e);
        }
        w
    }

    /// Word of single letters: `(g, true)` is g, `(g, false)` is g⁻¹.
    pub fn from_letters(letters: &[(u32, bool)]) -> Self {
        Self::from_syllables(letters.iter().map(|&(g, pos)| (g, if pos { 1 } else { -1 })))
    }

    fn push(&mut self, g: u32, e: i64) {
        if e == 0 {
            return;
        }
        match self.syllables.last_mut() {
            Some((h, f)) if *h == g => {
                *f = add_exp(*f, e);
                if *f == 0 {
                    self.syllables.pop();
                }
            }
            _ => self.syllables.push((g, e)),
        }
    }

    pub fn syllables(&self) -> &[(u32, i64)] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Number of letters, counting `x^3` as three.
    pub fn length(&self) -> u64 {
        self.syllables.iter().map(|&(_, e)| e.unsigned_abs()).sum()
    }

    /// Largest generator index used plus one.
    pub fn rank_needed(&self) -> usize {
        self.syllables.iter().map(|&(g, _)| g as usize + 1).max().unwrap_or(0)
    }

    pub fn multiply(&self, other: &FreeWord) -> FreeWord {
        let mut out = self.clone();
        for &(g, e) in &other.syllables {
            out.push(g, e);
        }
        out
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord { syllables: self.syllables.iter().rev().map(|&(g, e)| (g, -e)).collect() }
    }

    pub fn pow(&self, k: i64) -> FreeWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = FreeWord::identity();
        for _ in 0..k.unsigned_abs() {
            out = out.multiply(&base);
        }
        out
    }

    /// `self⁻¹ · x · self`.
    pub fn conjugate(&self, x: &FreeWord) -> FreeWord {
        self.inverse().multiply(x).multiply(self)
    }

    /// `[a, b] = a⁻¹ b⁻¹ a b`.
    pub fn commutator(a: &FreeWord, b: &FreeWord) -> FreeWord {
        a.inverse().multiply(&b.inverse()).multiply(a).multiply(b)
    }

    /// Total exponent sum, the logarithm of the word.
    pub fn log(&self) -> i64 {
        self.syllables.iter().fold(0i64, |acc, &(_, e)| add_exp(acc, e))
    }

    /// Exponent sum of one generator.
    pub fn exponent_sum(&self, g: u32) -> i64 {
        self.syllables
            .iter()
            .filter(|&&(h, _)| h == g)
            .fold(0i64, |acc, &(_, e)| add_exp(acc, e))
    }

    pub fn uses_generator(&self, g: u32) -> bool {
        self.syllables.iter().any(|&(h, _)| h == g)
    }

    /// Image under the substitution `x_i -> images[i]`, freely reduced.
    pub fn substitute(&self, images: &[FreeWord]) -> Result<FreeWord> {
        let mut out = FreeWord::identity();
        for &(g, e) in &self.syllables {
            let img = images
                .get(g as usize)
                .ok_or(Error::UnknownGenerator { generator: g as usize + 1, rank: images.len() })?;
            out = out.multiply(&img.pow(e));
        }
        Ok(out)
    }

    /// Drop every generator not kept by `keep`, i.e. apply the retraction that
    /// kills the other generators.
    pub fn retract(&self, keep: impl Fn(u32) -> bool) -> FreeWord {
        FreeWord::from_syllables(self.syllables.iter().copied().filter(|&(g, _)| keep(g)))
    }

    /// Random word: syllable count uniform in [1, max_syllables], generator
    /// uniform in 0..rank, exponent uniform in [-3, 3] \ {0}, then reduced.
    pub fn random(rng: &mut impl Rng, rank: u32, max_syllables: usize) -> FreeWord {
        let count = rng.gen_range(1..=max_syllables.max(1));
        FreeWord::from_syllables((0..count).map(|_| {
            let g = rng.gen_range(0..rank);
            let mut e = rng.gen_range(-3..=2);
            if e >= 0 {
                e += 1;
            }
            (g, e)
        }))
    }

    /// Random word of at most `max_len` letters: the letter count is uniform
    /// in [0, max_len], each letter a uniform generator or inverse, then
    /// reduced.
    pub fn random_letters(rng: &mut impl Rng, rank: u32, max_len: usize) -> FreeWord {
        let count = rng.gen_range(0..=max_len);
        let letters: Vec<(u32, bool)> = (0..count).map(|_| (rng.gen_range(0..rank), rng.gen_bool(0.5))).collect();
        FreeWord::from_letters(&letters)
    }

    /// All reduced words of letter length ≤ `max_len` over `rank` generators,
    /// shortest first.
    pub fn enumerate(rank: u32, max_len: usize) -> Vec<FreeWord> {
        let mut out = vec![FreeWord::identity()];
        let mut frontier: Vec<Vec<(u32, bool)>> = vec![Vec::new()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for letters in &frontier {
                for g in 0..rank {
                    for pos in [true, false] {
                        if letters.last() == Some(&(g, !pos)) {
                            continue;
                        }
                        let mut l = letters.clone();
                        l.push((g, pos));
                        out.push(FreeWord::from_letters(&l));
                        next.push(l);
                    }
                }
            }
            frontier = next;
        }
        out
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return f.write_str("1");
        }
        for (i, &(g, e)) in self.syllables.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "x{}", g + 1)?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for FreeWord {
    type Err = Error;

    /// Parses `x1^2*x2^-1`; `1` or the empty string is the identity. The
    /// letters `x`, `y`, `z`, `w` are accepted as aliases for `x1`..`x4`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(FreeWord::identity());
        }
        let mut syllables = Vec::new();
        for factor in s.split('*') {
            let factor = factor.trim();
            let (base, exp) = match factor.split_once('^') {
                Some((b, e)) => {
                    let e: i64 = e.trim().parse().map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?;
                    (b.trim(), e)
                }
                None => (factor, 1),
            };
            let g = match base {
                "x" => 0,
                "y" => 1,
                "z" => 2,
                "w" => 3,
                _ => {
                    let idx: u32 = base
                        .strip_prefix('x')
                        .and_then(|d| d.parse().ok())
                        .filter(|&i| i >= 1)
                        .ok_or_else(|| Error::Parse(format!("bad generator {base:?}")))?;
                    idx - 1
                }
            };
            syllables.push((g, exp));
        }
        Ok(FreeWord::from_syllables(syllables))
    }
}

impl Serialize for FreeWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FreeWord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parse a word, panicking on malformed input. Handy in tests and examples.
pub fn w(s: &str) -> FreeWord {
    s.parse().unwrap_or_else(|e| panic!("bad word {s:?}: {e}"))
}
