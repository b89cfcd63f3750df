//! Update digraphs: interaction digraphs labeled by block-sequential modes,
//! their validity test, equivalence classes and compact representatives.

mod classes;
mod compact;
mod digraph;
mod label;

pub use classes::{classify_modes, update_digraph_classes, UpdateDigraphClass};
pub use compact::{compact_representative, count_chain_of_cycles};
pub use digraph::{strongly_connected_components, Digraph};
pub use label::{
    enumerate_update_digraphs, is_update_digraph, label_mode, Label, LabeledDigraph,
    MAX_LABELED_ARCS,
};
