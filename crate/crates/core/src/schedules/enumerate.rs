use num_bigint::BigUint;

use super::mode::BlockSequentialMode;
use crate::error::{Error, Result};
use crate::network::check_size;

/// Largest network size accepted by [`enumerate_block_sequential`] (545 835 modes).
pub const MAX_ENUMERATED_AUTOMATA: usize = 8;

/// `|BS_n| = Σ_{k<n} C(n,k)·|BS_k|`, `|BS_0| = 1` (ordered Bell numbers).
pub fn count_block_sequential(n: usize) -> BigUint {
    let mut counts: Vec<BigUint> = vec![BigUint::from(1u32)];
    for m in 1..=n {
        let mut binom = BigUint::from(1u32); // C(m, 0)
        let mut total = BigUint::from(0u32);
        for (k, count) in counts.iter().enumerate() {
            total += &binom * count;
            binom = binom * BigUint::from(m - k) / BigUint::from(k + 1);
        }
        counts.push(total);
    }
    counts.swap_remove(n)
}

/// Every ordered partition of `{1…n}` once, grouped by block count and then
/// in lexicographic order of the block-index word `s(1)…s(n)`.
pub fn enumerate_block_sequential(n: usize) -> Result<BlockSequentialModes> {
    check_size(n)?;
    if n > MAX_ENUMERATED_AUTOMATA {
        return Err(Error::Guard {
            what: "block-sequential enumeration",
            actual: n,
            limit: MAX_ENUMERATED_AUTOMATA,
        });
    }
    Ok(BlockSequentialModes {
        n,
        blocks: 1,
        word: None,
    })
}

/// Stream of block-sequential modes; see [`enumerate_block_sequential`].
#[derive(Debug, Clone)]
pub struct BlockSequentialModes {
    n: usize,
    blocks: usize,
    word: Option<Vec<usize>>,
}

impl BlockSequentialModes {
    /// Fills `word[from..]` with the smallest letters that still let every
    /// one of the `k` letters appear.
    fn fill_min(word: &mut [usize], from: usize, k: usize) {
        let mut used = vec![false; k];
        for &c in &word[..from] {
            used[c] = true;
        }
        for pos in from..word.len() {
            let slots_after = word.len() - pos - 1;
            for c in 0..k {
                let missing = used
                    .iter()
                    .enumerate()
                    .filter(|&(l, &u)| !u && l != c)
                    .count();
                if missing <= slots_after {
                    word[pos] = c;
                    used[c] = true;
                    break;
                }
            }
        }
    }

    fn advance(word: &mut [usize], k: usize) -> bool {
        let n = word.len();
        for pos in (0..n).rev() {
            let mut used = vec![false; k];
            for &c in &word[..pos] {
                used[c] = true;
            }
            for c in word[pos] + 1..k {
                let missing = used
                    .iter()
                    .enumerate()
                    .filter(|&(l, &u)| !u && l != c)
                    .count();
                if missing < n - pos {
                    word[pos] = c;
                    Self::fill_min(word, pos + 1, k);
                    return true;
                }
            }
        }
        false
    }
}

impl Iterator for BlockSequentialModes {
    type Item = BlockSequentialMode;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            if self.blocks > self.n {
                return None;
            }
            match &mut self.word {
                None => {
                    let mut w = vec![0; self.n];
                    Self::fill_min(&mut w, 0, self.blocks);
                    self.word = Some(w);
                }
                Some(w) => {
                    if !Self::advance(w, self.blocks) {
                        self.blocks += 1;
                        self.word = None;
                        continue;
                    }
                }
            }
            let w = self.word.as_ref().expect("word set above");
            return Some(BlockSequentialMode::from_block_indices(w).expect("surjective word"));
        }
    }
}
