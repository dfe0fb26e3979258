use thiserror::Error;

use crate::groups::Family;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("argument must be a positive integer, got 0")]
    ZeroArgument,

    #[error("{0} has no proper divisor partition")]
    NoProperDivisors(u64),

    #[error("invalid group: {family} with n = {n} ({reason})")]
    InvalidGroup {
        family: Family,
        n: u64,
        reason: &'static str,
    },

    #[error("graph has no identity-labeled vertex")]
    IdentityMissing,

    #[error("proper power graph requires group order >= 2, got {0}")]
    ProperTooSmall(usize),

    #[error("join structure does not reproduce the power graph: {0}")]
    StructureMismatch(String),

    #[error("alpha = 0: U is undefined")]
    AlphaZero,

    #[error("graph has an isolated vertex ({0}); det(D) = 0")]
    IsolatedVertex(usize),

    #[error("eigenvalue iteration did not converge after {sweeps} sweeps (off-diagonal mass {off:e})")]
    NonConvergence { sweeps: usize, off: f64 },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("parameters are not finite rationals")]
    NonRational,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("primes must be distinct, got p = q = {0}")]
    EqualPrimes(u64),

    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    #[error("parse error: {0}")]
    Parse(String),
}
