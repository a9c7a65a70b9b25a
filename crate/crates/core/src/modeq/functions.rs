//! The functions `f`, `g₁ .. g₆`, `φ` and `varphi` as q-series.

use super::{ModEqError, ModEqId};
use crate::qseries::{eta4_quotient, LaurentSeries};
use crate::quatforms::{gram_thetas, GramSet, P};

/// Valuation (in q) of `θ_{I₆} - θ_{I₇}`.
const DENOM_VAL: i64 = 14;

/// Modular functions on `X₀⁺(163)` at a shared base order.
#[derive(Clone, Debug)]
pub struct ModularFunctionSet {
    pub f: LaurentSeries,
    /// `g₁ .. g₆`.
    pub g: [LaurentSeries; 6],
    pub varphi: LaurentSeries,
    /// The cusp form `(θ_{I₆} - θ_{I₇}) / 4`.
    pub phi_cusp: LaurentSeries,
    pub base_order: i64,
}

impl ModularFunctionSet {
    /// The function playing `h` in equation `id`.
    pub fn h(&self, id: ModEqId) -> &LaurentSeries {
        match id {
            ModEqId::Varphi => &self.varphi,
            ModEqId::G(i) => &self.g[usize::from(i) - 1],
        }
    }
}

/// Builds every function from the embedded Gram matrices, with theta series
/// through `q^order`.
pub fn build_modular_functions(order: i64) -> Result<ModularFunctionSet, ModEqError> {
    build_from_set(&GramSet::embedded_p163(), order)
}

pub fn build_from_set(set: &GramSet, order: i64) -> Result<ModularFunctionSet, ModEqError> {
    if order <= DENOM_VAL + 2 {
        return Err(ModEqError::OrderTooSmall { order, min: DENOM_VAL + 3 });
    }
    if set.matrices.len() != 8 {
        return Err(ModEqError::BadGramData(format!("expected 8 matrices, found {}", set.matrices.len())));
    }
    let th = gram_thetas(set, order);
    let diff = |a: usize, b: usize| th[a - 1].sub(&th[b - 1]);
    let den = diff(6, 7);
    match den.valuation() {
        Some(DENOM_VAL) => {}
        v => return Err(ModEqError::BadGramData(format!("θ_I6 - θ_I7 has valuation {v:?}, expected {DENOM_VAL}"))),
    }
    let inv = den.inverse()?;
    let f = diff(7, 8).mul(&inv);
    if f.valuation() != Some(-2) {
        return Err(ModEqError::BadGramData(format!("f has valuation {:?}", f.valuation())));
    }
    let g = [
        diff(1, 2).mul(&inv),
        diff(2, 3).mul(&inv),
        diff(3, 4).mul(&inv),
        diff(4, 5).mul(&inv),
        diff(5, 6).mul(&inv),
        th[5].scale_int(4).mul(&inv),
    ];
    let phi_cusp = den.scale(&num_rational::BigRational::new(1.into(), 4.into()));
    // η⁴ quotient with relative precision matching f
    let rel = f.relative_precision();
    let varphi = eta4_quotient(P, (rel - (P - 1) / 3 - 1).max(8))?;
    Ok(ModularFunctionSet { f, g, varphi, phi_cusp, base_order: order })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn leading_terms() {
        let s = build_modular_functions(80).unwrap();
        assert_eq!(s.f.valuation(), Some(-2));
        assert_eq!(s.f.int_coeff(-2), Some(BigInt::from(1)));
        assert_eq!(s.phi_cusp.valuation(), Some(14));
        for (e, c) in [(14, 1), (16, -1), (18, -1)] {
            assert_eq!(s.phi_cusp.int_coeff(e), Some(BigInt::from(c)), "q^{e}");
        }
        assert_eq!(s.g[5].valuation(), Some(-14));
        // denominator is 4φ, so the 4 cancels
        assert_eq!(s.g[5].int_coeff(-14), Some(BigInt::from(1)));
        assert_eq!(s.varphi.valuation(), Some(-54));
        assert_eq!(s.varphi.int_coeff(-54), Some(BigInt::from(1)));
        assert!(s.f.is_integral());
    }
}
