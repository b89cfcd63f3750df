//! Exhaustive dynamics of Boolean automata networks.
//!
//! Configurations are encoded with automaton 1 as the most significant bit:
//! `x = (x_1, …, x_n)` has value `Σ x_i · 2^(n−i)`, so `010000` is 16.
//! Automaton indices are 0-based in the API and 1-based in every textual form
//! (mode strings, the model format, reports).

pub mod dynamics;
pub mod error;
pub mod models;
pub mod network;
pub mod schedules;
pub mod update_digraphs;

pub use error::{Error, ParseError, ParseErrorKind, Result};

/// Largest supported network; transition graphs hold `2^n` entries.
pub const MAX_AUTOMATA: usize = 24;
