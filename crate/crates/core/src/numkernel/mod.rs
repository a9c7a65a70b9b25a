//! Exact and arbitrary-precision arithmetic kernel.

mod algebraic;
mod bigreal;
mod poly;
mod roots;

pub use algebraic::{poly_eval_alg, AlgebraicNumber, NumberField};
pub use bigreal::BigReal;
pub use poly::{poly_mul, IntPoly, QPoly};
pub use roots::{isolate_real_roots, refine_root, refine_root_rational, RootInterval, SturmChain};

use num_bigint::BigInt;
use thiserror::Error;

/// Exact rational with normalized sign and reduced terms.
pub type Rational = num_rational::BigRational;

/// `n/d` as an exact rational.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer as an exact rational.
pub fn rat_int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KernelError {
    #[error("polynomial is not squarefree: gcd(p, p') = {gcd} has a repeated root")]
    NotSquarefree { gcd: String },
    #[error("polynomial has no sign change on the interval")]
    NoSignChange,
    #[error("interval does not isolate exactly one root (found {found})")]
    NotIsolating { found: usize },
    #[error("operands live in different number fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not invertible modulo the field polynomial")]
    NotInvertible,
    #[error("even root (index {index}) of a non-positive value")]
    NegativeRadicand { index: u32 },
    #[error("root index must be positive")]
    InvalidRootIndex,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("field polynomial must have degree at least 1")]
    ConstantModulus,
}
