//! Outcomes of law checks and the strategies used to produce them.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Seed used whenever the caller does not pick one.
pub const DEFAULT_SEED: u64 = 0x5eed_b7ace;

/// The random source handed to samplers. ChaCha is stable across platforms,
/// so a seed reproduces the same tuples everywhere.
pub type SampleRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// How the tuples of a law check are chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Strategy {
    /// Every tuple of carrier elements. Only valid on finite carriers.
    Exhaustive,
    /// `count` tuples of elements drawn with size parameter `size`.
    Sampled { count: usize, size: usize, seed: u64 },
}

impl Strategy {
    pub fn sampled(count: usize, size: usize) -> Self {
        Strategy::Sampled { count, size, seed: DEFAULT_SEED }
    }

    pub fn seed(&self) -> Option<u64> {
        match self {
            Strategy::Exhaustive => None,
            Strategy::Sampled { seed, .. } => Some(*seed),
        }
    }
}

/// Pass/Fail with the first failing tuple, plus how much was checked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub pass: bool,
    /// Number of tuples (or items) examined.
    pub checked: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Verdict {
    pub fn pass(checked: u64) -> Self {
        Verdict { pass: true, checked, seed: None, witness: None }
    }

    pub fn fail(witness: impl Into<String>, checked: u64) -> Self {
        Verdict { pass: false, checked, seed: None, witness: Some(witness.into()) }
    }

    pub fn from_bool(ok: bool, checked: u64, witness: impl FnOnce() -> String) -> Self {
        if ok {
            Verdict::pass(checked)
        } else {
            Verdict::fail(witness(), checked)
        }
    }

    pub fn with_seed(mut self, seed: Option<u64>) -> Self {
        self.seed = seed;
        self
    }

    /// Conjunction. The first failure's witness is kept; counts add up.
    pub fn and(self, other: Verdict) -> Verdict {
        let checked = self.checked + other.checked;
        let seed = self.seed.or(other.seed);
        if !self.pass {
            Verdict { checked, seed, ..self }
        } else if !other.pass {
            Verdict { checked, seed, ..other }
        } else {
            Verdict { pass: true, checked, seed, witness: None }
        }
    }

    pub fn all(verdicts: impl IntoIterator<Item = Verdict>) -> Verdict {
        verdicts.into_iter().fold(Verdict::pass(0), Verdict::and)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pass {
            write!(f, "PASS ({} checked)", self.checked)
        } else {
            write!(
                f,
                "FAIL after {} checked: {}",
                self.checked,
                self.witness.as_deref().unwrap_or("no witness")
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjunction_keeps_first_witness() {
        let v = Verdict::pass(3)
            .and(Verdict::fail("first", 2))
            .and(Verdict::fail("second", 1));
        assert!(!v.pass);
        assert_eq!(v.witness.as_deref(), Some("first"));
        assert_eq!(v.checked, 6);
    }

    #[test]
    fn same_seed_same_stream() {
        use rand::Rng;
        let a: Vec<u32> = (0..8).map(|_| 0).scan(rng_from_seed(7), |r, _: u32| Some(r.gen())).collect();
        let b: Vec<u32> = (0..8).map(|_| 0).scan(rng_from_seed(7), |r, _: u32| Some(r.gen())).collect();
        assert_eq!(a, b);
    }
}
