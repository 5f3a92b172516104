use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty pattern in factor search")]
    EmptyPattern,
    #[error("overlap computation requires non-empty words")]
    EmptyWord,
    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("divisor {0} is the zero polynomial")]
    ZeroDivisor(usize),
    #[error("generator index {index} out of range (basis has {len} elements)")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("obstruction indices must satisfy i <= j (got {i} > {j})")]
    IndexOrder { i: usize, j: usize },
    #[error("obstruction cofactors are not aligned: {0}")]
    Misaligned(String),
    #[error("criterion expects obstructions o(i, {expected}) but found o({i}, {found})")]
    MixedNewIndex {
        expected: usize,
        i: usize,
        found: usize,
    },
    #[error("obstruction set is empty")]
    EmptyObstructionSet,
    #[error("no generators given")]
    NoGenerators,
    #[error("generator {0} is not homogeneous; truncation requires homogeneous input")]
    NotHomogeneous(usize),
    #[error("{0}")]
    InvalidConfig(String),
    #[error("alphabet: {0}")]
    Alphabet(String),
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
