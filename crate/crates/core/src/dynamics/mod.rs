//! Transition graphs, attractors, block-sequential sweeps, dominant sets and
//! robustness reports.

mod attractor;
mod dominance;
mod dot;
mod report;
mod summary;
mod transition;

pub use attractor::{find_attractors, lc_signature, Attractor, Signature};
pub use dominance::{dominant_set, is_intersector, DominanceAnalysis};
pub use dot::to_dot;
pub use report::{
    classify_color, robustness_report, Appearance, ClassColor, Color, ColorCounts,
    RobustnessReport, SignatureCount,
};
pub use summary::{analyze_mode, sweep_block_sequential, sweep_classes, DynamicsSummary};
pub use transition::{build_transition_graph, TransitionGraph};
