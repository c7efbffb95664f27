use thiserror::Error;

use crate::fock::ModeKey;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("mode {0} is an annihilation mode and cannot appear in a monomial")]
    AnnihilationMode(ModeKey),

    #[error("coordinate index {index} is out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("malformed monomial text `{0}`")]
    Parse(String),

    #[error("{what} requires an even rank (d = 2l), got d = {rank}")]
    OddRank { what: &'static str, rank: usize },

    #[error("rank must be at least 1")]
    ZeroRank,

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("matrix has shape {rows}x{cols}, expected {expected}x{expected}")]
    Shape {
        rows: usize,
        cols: usize,
        expected: usize,
    },

    #[error("image of domain element {column} leaves the codomain basis (widen the gamma-degree bound)")]
    CodomainTooSmall { column: usize },

    #[error("finite group is not closed under multiplication")]
    GroupNotClosed,

    #[error("degree {0} is below -1")]
    Degree(i32),

    #[error("state is not in W+ (contains a gamma_(-1) factor)")]
    NotInWPlus,

    #[error("invalid configuration: {0}")]
    Config(String),
}
