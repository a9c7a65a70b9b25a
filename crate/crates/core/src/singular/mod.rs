//! Values at singular moduli: exact ℚ(u) identities and numeric checks.

mod context;
mod exact;
mod numeric;

pub use context::{SingularContext, SUPPORTED_N};
pub use exact::{
    constant_recovery, cubic_discriminant, g2_chain, g2_check, g2_exact, theta_values_at_fixed_point, v_c_residual,
    v_c_residual_first_power, v_c_sides_at, verify_f_value, verify_table_consistency, verify_v_c_identity, G2Chain,
    ThetaRatioTable, F_VALUE, THETA_RATIOS, VALUE_MINPOLYS,
};
pub use numeric::{
    hyp3f2, numeric_check, numeric_check_tol, standard_suite, Nome, NumericCheck, NumericOutcome, GUARD_BITS,
};

use thiserror::Error;

use crate::numkernel::KernelError;
use crate::qseries::SeriesError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SingularError {
    #[error("no singular-modulus data for n = {0}")]
    UnsupportedN(i64),
    #[error("exact identity failed: {0}")]
    Identity(String),
    #[error("outside the domain of the identity: {0}")]
    Domain(String),
    #[error("unknown numeric check `{0}`")]
    BadCheckName(String),
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}
