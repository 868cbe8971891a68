use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {position}: {reason}")]
    Parse { position: usize, reason: String },

    #[error("not in standard form: {0}")]
    Validation(StandardFormViolation),

    #[error("compact form requires every entry <= 9, found {entry}")]
    Format { entry: u32 },

    #[error("n = {n} exceeds the enumeration guard of {max}")]
    Bound { n: u32, max: u32 },

    #[error("ground set must be nonempty (n >= 1)")]
    EmptyGroundSet,

    #[error("partition has no nonsingleton block")]
    NoNonsingletonBlock,

    #[error("{{1}} is a singleton block")]
    OneIsSingleton,

    #[error("sigma_inverse requires X > Y, got X = {x}, Y = {y}")]
    Precondition { x: u32, y: u32 },

    #[error("v(n, k) needs 1 <= k <= n, got n = {n}, k = {k}")]
    Domain { n: u32, k: u32 },

    #[error("not a permutation of [1..{len}]: {reason}")]
    InvalidPermutation { len: usize, reason: String },
}

/// The standard-form invariant a candidate partition breaks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StandardFormViolation {
    #[error("partition has no blocks")]
    NoBlocks,
    #[error("block {index} is empty")]
    EmptyBlock { index: usize },
    #[error("entry 0 is not a positive integer")]
    ZeroEntry,
    #[error("block {index} is not strictly decreasing")]
    BlockNotDecreasing { index: usize },
    #[error("block {index} does not start above the previous block's first entry")]
    BlocksOutOfOrder { index: usize },
    #[error("entry {entry} appears more than once")]
    DuplicateEntry { entry: u32 },
    #[error("entry {entry} of [1..{n}] is missing")]
    MissingEntry { entry: u32, n: u32 },
}

impl From<StandardFormViolation> for Error {
    fn from(v: StandardFormViolation) -> Self {
        Error::Validation(v)
    }
}
