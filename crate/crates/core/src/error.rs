use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("0 is not a letter")]
    ZeroLetter,
    #[error("letter {letter} is outside the alphabet [±{n}]")]
    LetterOutOfRange { letter: i32, n: usize },
    #[error("column entries are not strictly increasing")]
    NotStrictlyIncreasing,
    #[error("column breaks 1CC at {breaks_at}")]
    NotAdmissible { breaks_at: u32 },
    #[error("column is not coadmissible")]
    NotCoadmissible,
    #[error("column cannot be split")]
    SplitImpossible,
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("alphabet mismatch: expected n = {expected}, found n = {found}")]
    AlphabetMismatch { expected: usize, found: usize },
    #[error("weight {0:?} is not in the Weyl group orbit of the shape")]
    WeightNotInOrbit(Vec<i32>),
    #[error("generator s_{index} does not exist for n = {n}")]
    InvalidGenerator { index: usize, n: usize },
    #[error("target lengths are not a permutation of the column lengths")]
    NotAPermutation,
    #[error("reverse slide would need to grow the tableau")]
    NonMinimalInput,
    #[error("malformed biword: {0}")]
    MalformedBiword(String),
    #[error("parse error at row {row}, column {col}: {msg}")]
    Parse { row: usize, col: usize, msg: String },
    #[error("parse error: {0}")]
    Syntax(String),
}

pub type Result<T> = std::result::Result<T, Error>;
