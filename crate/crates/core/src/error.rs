use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("invalid character {ch:?} at position {position}")]
    InvalidCharacter { ch: char, position: usize },
    #[error("generator {generator} exceeds rank {rank}")]
    GeneratorOutOfRange { generator: u32, rank: u32 },
    #[error("character {ch:?} at position {position} is outside rank {rank}")]
    CharacterOutOfRank { ch: char, position: usize, rank: u32 },
    #[error("rank must be between 1 and 26, got {0}")]
    InvalidRank(u32),
    #[error("word {0:?} is not cyclically reduced")]
    NotCyclicallyReduced(String),
    #[error("empty word not allowed here")]
    EmptyWord,
    #[error("empty pattern")]
    EmptyPattern,
    #[error("occurrence {start}+{len} lies outside a host of length {host_len}")]
    OccurrenceOutsideHost { start: usize, len: usize, host_len: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(u32, u32),
    #[error("degree bound mismatch: {0} vs {1}")]
    BoundMismatch(u32, u32),
    #[error("generator {generator} exceeds rank {rank}")]
    GeneratorOutOfRange { generator: u32, rank: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("series of {v:?} and {w:?} agree up to degree {cap}")]
    UndecidedAtCap { v: String, w: String, cap: u32 },
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(u32, u32),
    #[error("invalid precedence {0:?}: expected a permutation of 1..=rank")]
    InvalidPrecedence(String),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecomposeError {
    #[error("word {0:?} is periodic")]
    PeriodicInput(String),
    #[error("word {0:?} has length at most one")]
    LengthOne(String),
    #[error("no cyclic permutation of {word:?} or its inverse starts with the maximal ascent {ascent:?}")]
    NoRotationStartsWithA { word: String, ascent: String },
    #[error("remainder {descent:?} after the maximal ascent {ascent:?} is not a descent")]
    RemainderNotDescent { ascent: String, descent: String },
    #[error("{0:?} has no ascent subword")]
    NoAscent(String),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Order(#[from] OrderError),
}

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Decompose(#[from] DecomposeError),
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("invalid campaign range {min_len}..={max_len}")]
    InvalidRange { min_len: usize, max_len: usize },
    #[error("failed to write report to {path}: {source}")]
    Io { path: String, source: std::io::Error },
}
