//! Quaternary forms attached to the maximal-order ideal classes for p = 163.

mod checks;
mod gram;
mod invariants;
mod rank;

pub use checks::{
    eisenstein_combination, fricke_numeric_check, fricke_residual, gram_thetas, span_identity_check,
    span_identity_from, span_identity_with, P, SPAN_WEIGHTS,
};
pub use gram::{GramMatrix, GramSet, EMBEDDED_GRAM_P163};
pub use invariants::{arith_invariants, class_number, genus_x0, reduced_forms, type_number, ArithInvariants};
pub use rank::{bareiss_rank, independence_rank, RankResult};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuatError {
    #[error("matrix not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
    #[error("odd diagonal entry at index {index}")]
    OddDiagonal { index: usize },
    #[error("leading minor of size {minor} is not positive")]
    NotPositiveDefinite { minor: usize },
    #[error("determinant {found}, expected {expected}")]
    WrongDeterminant { found: i128, expected: i128 },
    #[error("{0} is not a negative discriminant")]
    BadDiscriminant(i64),
    #[error("{0} is not an odd prime")]
    NotPrime(i64),
    #[error("type number formula gave the non-integer {0}")]
    NonIntegralTypeNumber(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
