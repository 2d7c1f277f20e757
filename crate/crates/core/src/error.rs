use thiserror::Error;

/// Errors surfaced by the library. Operations that are total on valid inputs
/// do not return `Result`; shape violations in the low-level matrix layer are
/// programmer errors and panic instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two surface words (or a word and a map) live over different genera.
    #[error("genus mismatch: {left} vs {right}")]
    GenusMismatch { left: usize, right: usize },

    /// Two fiber elements (or an element and a map) have different ranks.
    #[error("fiber rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    /// A parameter is outside its documented range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// det(I - fiber matrix) = 0: Nielsen numbers, class counts and class
    /// indices are undefined for such maps and are refused rather than
    /// reported as zero.
    #[error("nielsen-undefined-degenerate: det(I - fiber matrix) = 0")]
    Degenerate,

    /// The map has more than one nonempty fixed point class; per-class
    /// indices are not aggregated in that situation.
    #[error("multiple-classes-index-not-aggregated: class count is {0}")]
    MultipleClasses(String),

    /// An enumeration was refused because it would exceed the budget.
    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),

    /// Input text (word literal, spec file, family name) failed to parse;
    /// the message names the offending field and line where applicable.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
