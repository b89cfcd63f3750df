use serde::Serialize;

use super::mode::{BlockParallelMode, ModeFamily, UpdateMode};
use crate::error::{Error, Result};
use crate::network::{mask_of, BooleanNetwork, Configuration};

/// One period of an update mode as a sequence of update sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UpdateSequence {
    n: usize,
    sets: Vec<Vec<usize>>,
    origin: ModeFamily,
    #[serde(skip)]
    masks: Vec<u32>,
}

impl UpdateSequence {
    fn build(n: usize, sets: Vec<Vec<usize>>, origin: ModeFamily) -> Self {
        let masks = sets
            .iter()
            .map(|s| s.iter().fold(0u32, |m, &i| m | mask_of(n, i)))
            .collect();
        UpdateSequence {
            n,
            sets,
            origin,
            masks,
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn period(&self) -> usize {
        self.sets.len()
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn origin(&self) -> ModeFamily {
        self.origin
    }

    /// How many times automaton `i` fires per period.
    pub fn occurrences(&self, i: usize) -> usize {
        self.sets.iter().filter(|s| s.contains(&i)).count()
    }

    /// Applies one period to an encoded configuration. Inside a set every
    /// member reads the same intermediate configuration.
    pub fn apply(&self, net: &BooleanNetwork, value: u32) -> u32 {
        let mut x = value;
        for (set, &mask) in self.sets.iter().zip(&self.masks) {
            let fresh = set
                .iter()
                .filter(|&&i| net.eval_local(i, x))
                .fold(0u32, |acc, &i| acc | mask_of(self.n, i));
            x = (x & !mask) | fresh;
        }
        x
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Period `p = lcm(|S_1|, …, |S_k|)`; substep `t` fires `S_j[t mod |S_j|]` for every o-block.
pub fn expand_block_parallel(mode: &BlockParallelMode) -> UpdateSequence {
    let oblocks = mode.oblocks();
    let period = oblocks.iter().fold(1, |p, s| p / gcd(p, s.len()) * s.len());
    let sets = (0..period)
        .map(|t| {
            let mut set: Vec<usize> = oblocks.iter().map(|s| s[t % s.len()]).collect();
            set.sort_unstable();
            set
        })
        .collect();
    UpdateSequence::build(mode.size(), sets, ModeFamily::BlockParallel)
}

pub fn normalize_mode(mode: &UpdateMode) -> UpdateSequence {
    match mode {
        UpdateMode::BlockSequential(m) => {
            UpdateSequence::build(m.size(), m.blocks().to_vec(), ModeFamily::BlockSequential)
        }
        UpdateMode::BlockParallel(m) => expand_block_parallel(m),
        UpdateMode::Intricate(m) => {
            UpdateSequence::build(m.size(), m.steps().to_vec(), ModeFamily::Intricate)
        }
    }
}

/// `f_µ(x)`: one full period of `seq` applied to `x`.
pub fn apply_schedule(
    net: &BooleanNetwork,
    seq: &UpdateSequence,
    x: &Configuration,
) -> Result<Configuration> {
    if seq.size() != net.size() || x.len() != net.size() {
        return Err(Error::SizeMismatch {
            mode: seq.size(),
            network: net.size(),
        });
    }
    Configuration::decode(seq.apply(net, x.encode()) as u64, net.size())
}
