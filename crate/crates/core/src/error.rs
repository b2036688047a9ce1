use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a Harder-Narasimhan type needs at least one piece")]
    EmptyType,
    #[error("piece {index} has rank {rank}; ranks must be positive")]
    NonPositiveRank { index: usize, rank: i64 },
    #[error("slopes must strictly decrease, but piece {index} has slope {left} <= {right} of piece {}", index + 1)]
    NonDecreasingSlopes {
        index: usize,
        left: String,
        right: String,
    },
    #[error("Frobenius pullback needs a positive-characteristic context")]
    CharZeroContext,
    #[error("{p} is not a prime characteristic")]
    NotPrime { p: u32 },
    #[error("cover degree must be at least 1, got {degree}")]
    NonPositiveCoverDegree { degree: String },
    #[error("quotient rank {r} outside [1, {}]", rank.saturating_sub(1))]
    QuotientRankOutOfRange { r: i64, rank: u32 },
    #[error("invalid flag type: {0}")]
    InvalidFlagType(String),
    #[error("class has {found} coordinates, cone expects {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("index {index} outside [1, {len}]")]
    IndexOutOfRange { index: usize, len: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
