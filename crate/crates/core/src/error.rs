use thiserror::Error;

use crate::signed_perm::SignedPermutation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("zero entry at position {position}")]
    ZeroEntry { position: usize },

    #[error("repeated absolute value {value} at position {position}")]
    RepeatedValue { value: i32, position: usize },

    #[error("entry {value} at position {position} exceeds rank {n}")]
    OutOfRange { value: i32, position: usize, n: usize },

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("rank must be at least 1")]
    EmptyRank,

    #[error("rank {n} exceeds the guard {guard}: would generate {count} elements")]
    GuardExceeded { n: usize, guard: usize, count: String },

    #[error("degree {degree} exceeds the guard {guard}")]
    DegreeGuardExceeded { degree: u32, guard: u32 },

    #[error("window {0} has a negative entry; a permutation of 1..n is required")]
    NotUnsigned(String),

    #[error("index {k} out of range 1..={n}")]
    IndexOutOfRange { k: usize, n: usize },

    #[error("length {got} does not match rank {n}")]
    LengthMismatch { got: usize, n: usize },

    #[error("monomial {0} has p_k + q_k odd for some k")]
    ParityViolation(String),

    #[error("monomial {0} is not ordered")]
    NotOrdered(String),

    #[error("polynomial is not invariant: generator {0} moves it")]
    NotInvariant(SignedPermutation),

    #[error("polynomial is not bihomogeneous of bidegree ({a},{b})")]
    NotBihomogeneous { a: u32, b: u32 },

    #[error("polynomial is zero")]
    ZeroPolynomial,

    /// A proven identity failed at runtime; indicates a bug upstream.
    #[error("internal invariant broken: {0}")]
    BrokenInvariant(String),

    #[error("straightening did not terminate within {bound} steps")]
    NonTermination { bound: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
