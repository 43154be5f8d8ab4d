use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot balance {total} into {parts} positive parts")]
    Unbalanceable { total: i64, parts: usize },

    #[error("invalid partition {0:?}: parts must be positive and non-increasing")]
    InvalidPartition(Vec<u32>),

    #[error("invalid composition {0:?}: parts must be positive")]
    InvalidComposition(Vec<u32>),

    #[error("invalid Dyck sequence {0:?}")]
    InvalidDyckSequence(Vec<u32>),

    #[error("diagrams have different cell counts ({0} vs {1})")]
    CellCountMismatch(usize, usize),

    #[error("bidegree mismatch: {0:?} vs {1:?}")]
    BidegreeMismatch((i64, i64), (i64, i64)),

    #[error("column {0:?} is not strictly decreasing with positive entries")]
    InvalidColumn(Vec<u32>),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("shape has {shape} rows but {sums} row sums were given")]
    LengthMismatch { shape: usize, sums: usize },

    #[error("(mu, s) = ({mu:?}, {s:?}) does not satisfy the framing condition")]
    FramingCondition { mu: Vec<u32>, s: Vec<u32> },

    #[error("framing (mu, s) = ({mu:?}, {s:?}) did not produce a tableau with these row sums")]
    FramingFailed { mu: Vec<u32>, s: Vec<u32> },

    #[error("cannot insert {x}: it must be positive and at most the corner entry {corner}")]
    InsertOutOfRange { x: u32, corner: u32 },

    #[error("cannot remove from an empty tableau")]
    EmptyTableau,

    #[error("shift by {0} makes an entry non-positive")]
    NonPositiveShift(i64),

    #[error("k = {k} is not below n = {n}; no basis is available there")]
    OutsideBasisRange { n: usize, k: u32 },

    #[error("F_T applied to the staircase vanishes for tableau rows {rows:?} and n = {n}")]
    VanishingImage { rows: Vec<Vec<u32>>, n: usize },

    #[error("malformed value: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
