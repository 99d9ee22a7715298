use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("variable count mismatch: {0} vs {1}")]
    VariableMismatch(usize, usize),
    #[error("at most {max} variables per block are supported, got {got}")]
    TooManyVariables { max: usize, got: usize },
    #[error("matrix is not square ({rows} rows, row {row} has {cols} entries)")]
    NotSquare { rows: usize, row: usize, cols: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("cell ({0},{1}) is not in the shape")]
    CellOutside(usize, usize),
    #[error("partitions have different weights ({0} vs {1})")]
    UnequalWeights(usize, usize),
    #[error("diagram has {cells} cells but {expected} were required")]
    SizeMismatch { cells: usize, expected: usize },
    #[error("index {index} out of range (limit {limit})")]
    OutOfRange { index: usize, limit: usize },
    #[error("{0} is not an entry of the tableau")]
    NotAnEntry(usize),
    #[error("slide requires column {expected}, got {got}")]
    WrongColumn { expected: usize, got: usize },
    #[error("space is not invariant under the symmetric group: {0}")]
    NotInvariant(String),
    #[error("non-integral or negative multiplicity {value} for {label}")]
    NonIntegral { label: String, value: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
