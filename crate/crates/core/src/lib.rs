//! Diagonal invariants of the hyperoctahedral group `B_n`.
//!
//! `B_n` acts on `ℚ[x_1..x_n, y_1..y_n]` by signed permutations of both
//! alphabets at once. The invariant ring is a free module over the ring of
//! polynomials separately invariant in `x` and in `y`, with basis the averages
//! `ρ(c_σ)` of the diagonal signed descent monomials. This crate computes the
//! statistics behind `c_σ`, the averaging operator, the straightening of any
//! invariant into that basis, and the dimension counts that witness freeness.
//!
//! Polynomial code is generic over the coefficient type (see [`Scalar`]); the
//! aliases below fix it to exact rationals, which every identity here needs.

pub mod descent_basis;
pub mod error;
pub mod hilbert;
pub mod json;
pub mod linalg;
pub mod poly;
pub mod scalar;
pub mod signed_perm;
pub mod straighten;

pub use descent_basis::{
    compare, decompose, descent_monomial_a, diagonal_descent_monomial_e, diagonal_signed_descent_monomial_c,
    is_ordered, ordered_representative, sign_twist, signed_descent_monomial_b, signed_index_permutation, Decomposition,
};
pub use error::{Error, Result};
pub use hilbert::{BiSeries, CellReport};
pub use poly::{elementary_sym_squares, monomial_sym_squares, Bidegree, Family, Monomial, Polynomial};
pub use scalar::Scalar;
pub use signed_perm::{parse_window, SignedPermutation, StatisticsProfile, ENUMERATION_GUARD};
pub use straighten::{evaluate, leading_term, reduce_step, straighten, Expansion, ReductionStep};

/// Exact rational coefficients.
pub type Rational = num_rational::BigRational;

/// Polynomial with exact rational coefficients.
pub type QPolynomial = Polynomial<Rational>;

/// Basis expansion with exact rational coefficients.
pub type BasisExpansion = Expansion<Rational>;

/// Polynomial with `f64` coefficients; exact identities are not guaranteed.
pub type F64Polynomial = Polynomial<f64>;
