use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed tree pair: negative tree has {neg} leaves, positive tree has {pos}")]
    LeafMismatch { neg: usize, pos: usize },

    #[error("tree pair is not reduced: both trees have an exposed caret over leaves {leaf} and {}", leaf + 1)]
    Unreduced { leaf: usize },

    #[error("invalid tree encoding {input:?}: {reason} (grammar: TREE := '0' | '1' TREE TREE, pair := NEG:POS)")]
    TreeSyntax { input: String, reason: String },

    #[error("invalid token {token:?}: expected {expected}")]
    WordSyntax { token: String, expected: &'static str },

    #[error("invalid normal form: {0}")]
    NormalForm(String),

    #[error("seesaw parameters must be positive (got l={l}, m={m})")]
    SeesawParams { l: u32, m: u32 },

    #[error("ball capacity of {capacity} stored elements exceeded while expanding radius {radius}")]
    Capacity { capacity: usize, radius: u32 },

    #[error("requested radius {radius} exceeds the configured maximum {max}")]
    RadiusLimit { radius: u32, max: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
