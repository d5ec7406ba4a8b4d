use thiserror::Error;

/// Errors raised when an input violates the precondition of an operation.
///
/// Mathematical mismatches found by the verifiers are not errors; they are
/// reported through [`crate::report::Report`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("word entries must be positive, found 0 at position {position}")]
    NonPositiveEntry { position: usize },

    #[error("entry {value} at position {position} exceeds the bound {bound}")]
    EntryOutOfRange { position: usize, value: u32, bound: u32 },

    #[error("not a permutation of 1..{n}: {word}")]
    NotAPermutation { n: usize, word: String },

    #[error("{word} is not a parking function")]
    NotParkingFunction { word: String },

    #[error("{word} is not a unit interval parking function")]
    NotUnitInterval { word: String },

    #[error("{word} is not a Cayley permutation")]
    NotCayley { word: String },

    #[error("index set {set} is not contained in the ascent set {ascents} of the inverse permutation")]
    NotAscentSubset { set: String, ascents: String },

    #[error("pattern of length {k} does not fit in a word of length {n}")]
    PatternTooLong { k: usize, n: usize },

    #[error("arity {k} exceeds word length {n}")]
    ArityTooLarge { k: usize, n: usize },

    #[error("unknown statistic `{0}`")]
    UnknownStatistic(String),

    #[error("invalid forest: {0}")]
    InvalidForest(String),

    #[error("transposition index {i} out of range for n = {n}")]
    BadTransposition { i: usize, n: usize },

    #[error("series has nonzero constant term")]
    NonzeroConstantTerm,

    #[error("series coefficient is not invertible: {0}")]
    NotInvertible(String),

    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    #[error("word set is not closed under {0}")]
    NotInvariant(String),

    #[error("{what} = {value} exceeds the cap {cap}; pass an explicit override to go further")]
    CapExceeded { what: String, value: usize, cap: usize },

    #[error("cannot combine functions of arity {a} and {b}")]
    ArityMismatch { a: usize, b: usize },

    #[error("family {0} has a single word length")]
    FixedLength(String),

    #[error("family is empty")]
    EmptyFamily,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
