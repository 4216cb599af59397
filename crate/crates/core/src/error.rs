use thiserror::Error;

/// Errors produced by the triangle library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arithmetic overflow")]
    Overflow,
    #[error("side lengths must be positive, got ({0}, {1}, {2})")]
    NonPositiveSide(i64, i64, i64),
    #[error("NOT_ORDERED: parameters must satisfy m > n > 0, got m={m} n={n}")]
    NotOrdered { m: i64, n: i64 },
    #[error("NOT_COPRIME: gcd(m, n) = {gcd} for m={m} n={n}")]
    NotCoprime { m: i64, n: i64, gcd: i64 },
    #[error("MOD3_COLLISION: m={m} and n={n} are congruent mod 3")]
    Mod3Collision { m: i64, n: i64 },
    #[error("DEGENERATE: {0}")]
    Degenerate(String),
    #[error("NONPOSITIVE_RESULT: matrix product has a component < 1: ({0}, {1}, {2})")]
    NonPositiveResult(i64, i64, i64),
    #[error("NOT_IN_FAMILY: {0}")]
    NotInFamily(String),
    #[error("bound must be at least 1, got {0}")]
    InvalidBound(i64),
}

pub type Result<T> = std::result::Result<T, Error>;
