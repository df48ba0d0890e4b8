use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("weight types differ: {0} vs {1}")]
    HTypeMismatch(String, String),
    #[error("expected {expected} coordinates, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("coordinate sum of {0} is odd; not in the type C lattice")]
    OddCoordinateSum(String),
    #[error("weight {0} is not small")]
    NotSmall(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("partition sizes differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("partition {partition} is not valid for {case}")]
    PartitionNotValidForCase { partition: String, case: String },
    #[error("operation not defined for {0}")]
    UnsupportedCase(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: String, got: String },
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("matrix is singular")]
    Singular,
    #[error("block Toeplitz size {s} exceeds the {available} coefficients supplied")]
    NotEnoughCoefficients { s: usize, available: usize },

    #[error("determinant is not 1")]
    NotInSl,
    #[error("g J g^T != J; not in the orthogonal group")]
    NotInSo,
    #[error("element is not fixed by the twisted involution")]
    NotSigmaFixed,
    #[error("representative is not normalised in G(O^-)_0: {0}")]
    NotNormalized(String),
    #[error("coweight multiset {0} does not match the twisted pattern")]
    PatternMismatch(String),
    #[error("block Toeplitz ranks did not saturate by s = {0}")]
    Unsaturated(usize),

    #[error("matrix is not in p")]
    NotInP,
    #[error("matrix does not square to zero")]
    NotSquareZero,
    #[error("no table entry for {0}")]
    NotInTable(String),
    #[error("no element of the cell realizes this entry: {0}")]
    NoWitness(String),
    #[error("malformed element: {0}")]
    Malformed(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
