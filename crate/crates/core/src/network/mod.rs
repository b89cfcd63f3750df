//! Configurations, Boolean automata networks, threshold networks and signed
//! interaction graphs.

mod config;
mod expr;
mod function;
mod interaction;
mod threshold;

pub use config::{bit_of, format_word, mask_of, Configuration};
pub use expr::Expr;
pub use function::{BooleanNetwork, LocalFunction};
pub use interaction::{derive_interaction_graph, Sign, SignedEdge, SignedInteractionGraph};
pub use threshold::{heaviside, ThresholdNetwork};

pub(crate) use config::check_size;
