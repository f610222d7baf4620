//! Exact scalars, dense matrices over them, congruence signatures, and a
//! precision-parametrized binary float for the few irrational steps.

mod bigfloat;
mod field;
mod gaussian;
mod matrix;
mod rational;
mod real;
mod signature;
mod subspace;

pub use bigfloat::{real_cube_root, BigFloat, DEFAULT_PRECISION};
pub use field::{ExactField, Field, One, Zero};
pub use gaussian::GaussianRational;
pub use matrix::{coordinates, dot, same_span, span_contains, span_rank, unit_vec, vec_add, vec_scale, vec_sub, Matrix};
pub use rational::{parse_rational, q, qq, rational_cbrt, rational_sqrt, Rational};
pub use real::Real;
pub use signature::{congruence_diagonalize, sym_signature};
pub use subspace::Subspace;

/// Square matrix of rationals, the workhorse type.
pub type QMatrix = Matrix<Rational>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NumericsError {
    #[error("symmetric form is degenerate (rank {rank})")]
    DegenerateForm { rank: usize },
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
}
