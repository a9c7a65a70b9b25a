//! Truncated q-series and the modular generators built from them.

mod frac;
mod jinv;
mod laurent;
pub mod numeric;
mod theta;

pub use frac::FracPrefixSeries;
pub use jinv::{c_to_j_check, c_to_j_series, inverse_c_series, j_from_eisenstein, j_oracle};
pub use laurent::LaurentSeries;
pub use theta::{
    eisenstein_p, eta, eta4_quotient, euler_product, theta3, theta3_eta_formal_mismatch, theta4, theta_from_gram,
    theta_series, ThetaKind,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SeriesError {
    #[error("series has zero leading coefficient")]
    ZeroLeadingCoefficient,
    #[error("exponent {exponent} is not a multiple of {step}")]
    NotInVariable { exponent: i64, step: i64 },
    #[error("fractional q-shift {shift} where an integral one is required")]
    FractionalShift { shift: String },
    #[error("order {order} below the minimum {min}")]
    OrderTooSmall { order: i64, min: i64 },
    #[error("no theta function θ{0}")]
    UnknownTheta(u8),
    #[error("level {0} is not a prime congruent to 7 mod 12")]
    BadLevel(i64),
    #[error("expected integral coefficients")]
    NotIntegral,
    #[error("nome {0} outside [0, 1)")]
    NomeOutOfRange(f64),
}
