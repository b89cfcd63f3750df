//! Block-sequential, block-parallel and intricate update modes.

mod enumerate;
mod mode;
mod notation;
mod sequence;

pub use enumerate::{
    count_block_sequential, enumerate_block_sequential, BlockSequentialModes,
    MAX_ENUMERATED_AUTOMATA,
};
pub use mode::{BlockParallelMode, BlockSequentialMode, IntricateMode, ModeFamily, UpdateMode};
pub use notation::{parse_mode, NotationError, RawMode};
pub use sequence::{apply_schedule, expand_block_parallel, normalize_mode, UpdateSequence};
