//! The model text format and the built-in networks.

mod builtin;
mod fixtures;
mod format;

pub use builtin::{builtin_model, hae6_thresholds, hae6_weights, BUILTIN_NAMES};
pub use fixtures::{angioedema_edges, RegulatoryEdge, ANGIOEDEMA_NODES};
pub use format::{parse_model, render_model, ModelDocument, NamedMode, SourceSpans};
