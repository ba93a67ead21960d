use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid composition: {0}")]
    InvalidComposition(String),
    #[error("invalid Hessenberg function: {}", .0.join("; "))]
    InvalidHessenberg(Vec<String>),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("tableau is not row-strict")]
    NotRowStrict,
    #[error("tableau is not h-strict")]
    NotHStrict,
    #[error("entry {0} does not end its row")]
    NotAtRowEnd(usize),
    #[error("entry {0} ends its row")]
    AtRowEnd(usize),
    #[error("invalid column indices ({i}, {j}) for a tableau with {columns} columns")]
    InvalidColumns { i: usize, j: usize, columns: usize },
    #[error("coordinate keys do not match the expected set {expected:?}")]
    WrongCoordinates { expected: Vec<(usize, usize)> },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("elimination needs a pivot that is not a unit")]
    NonUnitPivot,
    #[error("matrix is not supported on the expected unipotent pattern")]
    NotInPattern,
    #[error("matrix is not in B_n(w)")]
    NotInBn,
    #[error("field size {0} is not a supported prime (2, 3, 5, 7, 11, 13)")]
    InvalidField(u32),
    #[error("work budget exceeded: needs {needed_bits:.2} bits, budget is {budget_bits}")]
    BudgetExceeded { needed_bits: f64, budget_bits: u32 },
    #[error("parse error: {0}")]
    Parse(String),
}


pub type Result<T> = std::result::Result<T, Error>;
