use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::network::check_size;

/// Ordered partition of the automata. Blocks fire in order; members of one
/// block fire synchronously.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockSequentialMode {
    blocks: Vec<Vec<usize>>,
}

/// Partitioned order: o-blocks iterate in parallel, one member of each
/// o-block per substep.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockParallelMode {
    oblocks: Vec<Vec<usize>>,
}

/// Periodic sequence of update sets; an automaton may fire several times
/// per period but must fire at least once.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntricateMode {
    n: usize,
    steps: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModeFamily {
    BlockSequential,
    BlockParallel,
    Intricate,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum UpdateMode {
    BlockSequential(BlockSequentialMode),
    BlockParallel(BlockParallelMode),
    Intricate(IntricateMode),
}

fn check_indices(groups: &[Vec<usize>], n: usize, what: &str) -> Result<()> {
    check_size(n)?;
    for g in groups {
        if g.is_empty() {
            return Err(Error::InvalidMode(format!("empty {what}")));
        }
        if let Some(&i) = g.iter().find(|&&i| i >= n) {
            return Err(Error::InvalidMode(format!(
                "automaton {} outside 1..={n}",
                i + 1
            )));
        }
    }
    Ok(())
}

/// Every automaton exactly once across `groups`.
fn check_partition(groups: &[Vec<usize>], n: usize, what: &str) -> Result<()> {
    check_indices(groups, n, what)?;
    let mut seen = vec![false; n];
    for &i in groups.iter().flatten() {
        if std::mem::replace(&mut seen[i], true) {
            return Err(Error::InvalidMode(format!(
                "automaton {} appears more than once",
                i + 1
            )));
        }
    }
    if let Some(i) = seen.iter().position(|s| !s) {
        return Err(Error::InvalidMode(format!(
            "automaton {} is missing",
            i + 1
        )));
    }
    Ok(())
}

impl BlockSequentialMode {
    /// `blocks` hold 0-based automaton indices; order inside a block is irrelevant.
    pub fn new(blocks: Vec<Vec<usize>>, n: usize) -> Result<Self> {
        check_partition(&blocks, n, "block")?;
        let blocks = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        Ok(BlockSequentialMode { blocks })
    }

    /// The single-block (parallel) mode.
    pub fn parallel(n: usize) -> Result<Self> {
        Self::new(vec![(0..n).collect()], n)
    }

    /// Builds the mode from its block-index word: `word[i]` is the 0-based
    /// block of automaton `i`. The word must use every block index below its maximum.
    pub fn from_block_indices(word: &[usize]) -> Result<Self> {
        let count = word.iter().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); count];
        for (i, &b) in word.iter().enumerate() {
            blocks[b].push(i);
        }
        Self::new(blocks, word.len())
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn size(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// `s(i)`: 0-based block index of each automaton.
    pub fn block_indices(&self) -> Vec<usize> {
        let mut s = vec![0; self.size()];
        for (b, block) in self.blocks.iter().enumerate() {
            for &i in block {
                s[i] = b;
            }
        }
        s
    }

    /// Compact word notation: 1-based block index per automaton, e.g. `544312`.
    /// Falls back to comma separation past nine blocks.
    pub fn word(&self) -> String {
        let s = self.block_indices();
        let sep = if self.blocks.len() > 9 { "," } else { "" };
        s.iter()
            .map(|b| (b + 1).to_string())
            .collect::<Vec<_>>()
            .join(sep)
    }
}

impl BlockParallelMode {
    /// `oblocks` hold 0-based indices in firing order.
    pub fn new(oblocks: Vec<Vec<usize>>, n: usize) -> Result<Self> {
        check_partition(&oblocks, n, "o-block")?;
        Ok(BlockParallelMode { oblocks })
    }

    pub fn oblocks(&self) -> &[Vec<usize>] {
        &self.oblocks
    }

    pub fn size(&self) -> usize {
        self.oblocks.iter().map(Vec::len).sum()
    }
}

impl IntricateMode {
    pub fn new(steps: Vec<Vec<usize>>, n: usize) -> Result<Self> {
        check_indices(&steps, n, "update set")?;
        if steps.is_empty() {
            return Err(Error::InvalidMode("no update sets".into()));
        }
        let mut seen = vec![false; n];
        let steps: Vec<Vec<usize>> = steps
            .into_iter()
            .map(|mut s| {
                s.sort_unstable();
                s.dedup();
                for &i in &s {
                    seen[i] = true;
                }
                s
            })
            .collect();
        if let Some(i) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidMode(format!(
                "automaton {} is never updated",
                i + 1
            )));
        }
        Ok(IntricateMode { n, steps })
    }

    pub fn steps(&self) -> &[Vec<usize>] {
        &self.steps
    }

    pub fn size(&self) -> usize {
        self.n
    }
}

impl UpdateMode {
    pub fn family(&self) -> ModeFamily {
        match self {
            UpdateMode::BlockSequential(_) => ModeFamily::BlockSequential,
            UpdateMode::BlockParallel(_) => ModeFamily::BlockParallel,
            UpdateMode::Intricate(_) => ModeFamily::Intricate,
        }
    }

    pub fn size(&self) -> usize {
        match self {
            UpdateMode::BlockSequential(m) => m.size(),
            UpdateMode::BlockParallel(m) => m.size(),
            UpdateMode::Intricate(m) => m.size(),
        }
    }

    /// Parses the mode notation (`bs:(1,5)(2,4)(3)`, `bp:{(1)(3,2)}`,
    /// `in:(1,2,3,4)(3,4,5,6)`) and validates it for `n` automata.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let raw = super::notation::parse_mode(text)
            .map_err(|e| Error::InvalidMode(format!("{} (at offset {})", e.message, e.offset)))?;
        raw.validate(n)
    }
}

impl From<BlockSequentialMode> for UpdateMode {
    fn from(m: BlockSequentialMode) -> Self {
        UpdateMode::BlockSequential(m)
    }
}

impl From<BlockParallelMode> for UpdateMode {
    fn from(m: BlockParallelMode) -> Self {
        UpdateMode::BlockParallel(m)
    }
}

impl From<IntricateMode> for UpdateMode {
    fn from(m: IntricateMode) -> Self {
        UpdateMode::Intricate(m)
    }
}

fn write_groups(f: &mut fmt::Formatter<'_>, groups: &[Vec<usize>]) -> fmt::Result {
    for g in groups {
        f.write_str("(")?;
        for (k, i) in g.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        f.write_str(")")?;
    }
    Ok(())
}

impl fmt::Display for BlockSequentialMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("bs:")?;
        write_groups(f, &self.blocks)
    }
}

impl fmt::Display for BlockParallelMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("bp:{")?;
        write_groups(f, &self.oblocks)?;
        f.write_str("}")
    }
}

impl fmt::Display for IntricateMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("in:")?;
        write_groups(f, &self.steps)
    }
}

impl fmt::Display for UpdateMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UpdateMode::BlockSequential(m) => m.fmt(f),
            UpdateMode::BlockParallel(m) => m.fmt(f),
            UpdateMode::Intricate(m) => m.fmt(f),
        }
    }
}

macro_rules! serialize_as_display {
    ($($t:ty),*) => {$(
        impl Serialize for $t {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.collect_str(self)
            }
        }
    )*};
}

serialize_as_display!(
    BlockSequentialMode,
    BlockParallelMode,
    IntricateMode,
    UpdateMode
);
