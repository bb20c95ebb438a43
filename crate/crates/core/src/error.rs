use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("strand count mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),

    #[error("generator {letter} is invalid on {strands} strands")]
    InvalidGenerator { letter: i32, strands: usize },

    #[error("surface mismatch: n = {0} vs n = {1}")]
    SurfaceMismatch(usize, usize),

    #[error("curve support {support:?} is not valid on a sphere with {n} boundary components")]
    InvalidCurve { support: Vec<usize>, n: usize },

    #[error("pair ({0}, {1}) is covered {2} times, expected exactly once")]
    PairCoverage(usize, usize, usize),

    #[error("factor {0:?} is boundary parallel")]
    BoundaryParallel(Vec<usize>),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
