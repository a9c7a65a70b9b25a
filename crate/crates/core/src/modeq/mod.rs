//! Modular equations between functions on `X₀⁺(163)`.

mod functions;
mod solve;
mod special;
mod table;
mod verify;

pub use functions::{build_from_set, build_modular_functions, ModularFunctionSet};
pub use solve::{solve_modeq, solve_modeq_with_bounds, Relation};
pub use special::{
    f_at_fixed_point, leading_coeff_poly, locate_f_root, pole_values_check, printed_factorization,
    specialization_check, specialize_varphi, F_CUBIC, POLE_SEXTIC, SQUARED_FACTOR, VARPHI_AT_FIXED_POINT,
};
pub use table::{
    embedded_table, embedded_tables, parse_modeq_file, write_modeq_file, ModEqId, ModEqTable, EMBEDDED_MODEQ_P163,
};
pub use verify::{
    assemble, pole_depth, powers, truncation_budget, valuations, verify_modeq, verify_modeq_auto, verify_tables,
    BUDGET_MARGIN,
};

use thiserror::Error;

use crate::qseries::SeriesError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ModEqError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown modular equation `{0}`")]
    UnknownId(String),
    #[error("order {order} below the minimum {min}")]
    OrderTooSmall { order: i64, min: i64 },
    #[error("inconsistent Gram data: {0}")]
    BadGramData(String),
    #[error("nullspace has dimension {dim} ({unknowns} unknowns, {equations} equations)")]
    NullspaceDimension { dim: usize, unknowns: usize, equations: usize },
    #[error("relation does not involve the top power of h")]
    TopCoefficientZero,
    #[error("normalized relation is not integral: {0}")]
    NonIntegralSolution(String),
    #[error("operation needs the f-varphi table, got {0}")]
    WrongTable(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
}
