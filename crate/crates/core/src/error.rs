use std::fmt;
use std::ops::Range;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("network size {0} is outside the supported range 1..={max}", max = crate::MAX_AUTOMATA)]
    SizeOutOfBounds(usize),

    #[error("configuration value {value} does not fit in {n} automata")]
    ConfigOutOfRange { value: u64, n: usize },

    #[error("invalid update mode: {0}")]
    InvalidMode(String),

    #[error("update mode covers {mode} automata but the network has {network}")]
    SizeMismatch { mode: usize, network: usize },

    #[error("labeled digraph is not an update digraph")]
    NotUpdateDigraph,

    #[error("refusing {what}: {actual} exceeds the limit of {limit}")]
    Guard {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unknown built-in model `{name}` (available: {available})")]
    UnknownModel { name: String, available: String },

    #[error(transparent)]
    Parse(#[from] ParseError),
}

impl Error {
    /// Resource-guard refusals, as opposed to malformed input.
    pub fn is_guard(&self) -> bool {
        matches!(self, Error::Guard { .. } | Error::SizeOutOfBounds(_))
    }
}

/// A parse failure with its location in the source text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    /// Byte range inside the parsed text.
    pub span: Range<usize>,
    /// 1-based.
    pub line: usize,
    /// 1-based, counted in characters.
    pub column: usize,
}

impl ParseError {
    pub fn at(kind: ParseErrorKind, text: &str, span: Range<usize>) -> Self {
        let start = span.start.min(text.len());
        let before = &text[..start];
        let line = before.matches('\n').count() + 1;
        let line_start = before.rfind('\n').map_or(0, |p| p + 1);
        let column = text[line_start..start].chars().count() + 1;
        ParseError {
            kind,
            span,
            line,
            column,
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.kind)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing `network NAME size N` header")]
    MissingHeader,
    #[error("unknown token `{0}`")]
    UnknownToken(String),
    #[error("expected {0}")]
    Expected(&'static str),
    #[error("variable index out of range: x{0}")]
    VariableOutOfRange(usize),
    #[error("rule index out of range: {0}")]
    RuleOutOfRange(usize),
    #[error("duplicate rule for automaton {0}")]
    DuplicateRule(usize),
    #[error("missing rule for automaton {0}")]
    MissingRule(usize),
    #[error("duplicate alias for automaton {0}")]
    DuplicateAlias(usize),
    #[error("duplicate mode name `{0}`")]
    DuplicateMode(String),
    #[error("malformed mode string: {0}")]
    MalformedMode(String),
    #[error("network size {0} is outside the supported range")]
    BadSize(usize),
}
