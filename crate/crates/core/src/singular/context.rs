//! Singular moduli `k(e^{-π√n})` for the four class-number-one fields used here.

use std::sync::Arc;

use super::SingularError;
use crate::numkernel::{AlgebraicNumber, BigReal, IntPoly, NumberField};

/// Discriminants covered by the data.
pub const SUPPORTED_N: [i64; 4] = [19, 43, 67, 163];

/// `(n, G₂, minimal polynomial of (2kk′)^{1/3} at e^{-π√n})`.
const SINGULAR_DATA: [(i64, i64, [i64; 4]); 4] =
    [(19, -4, [-1, 4, 4, 2]), (43, -24, [-1, 16, -8, 2]), (67, -76, [-1, 36, 12, 2]), (163, -1448, [-1, 400, 40, 2])];

/// `j((1+√-n)/2) = -J³`.
const J_CUBE_ROOT: [(i64, i64); 4] = [(19, 96), (43, 960), (67, 5280), (163, 640320)];

/// Data attached to `τ = i√n`: the field ℚ(s) with `s = (2kk′)^{1/3}`
/// as generator, and the tabulated `G₂`.
#[derive(Clone, Debug)]
pub struct SingularContext {
    pub n: i64,
    pub minpoly_s: IntPoly,
    pub field: Arc<NumberField>,
    pub generator: AlgebraicNumber,
    pub g2_expected: i64,
}

impl SingularContext {
    pub fn new(n: i64) -> Result<Self, SingularError> {
        let &(_, g2, m) = SINGULAR_DATA.iter().find(|r| r.0 == n).ok_or(SingularError::UnsupportedN(n))?;
        let minpoly_s = IntPoly::from_i64s(&m);
        let field = NumberField::with_unique_real_root(minpoly_s.clone())?;
        let generator = field.generator();
        Ok(SingularContext { n, minpoly_s, field, generator, g2_expected: g2 })
    }

    /// `s` to `bits` bits.
    pub fn s_value(&self, bits: usize) -> Result<BigReal, SingularError> {
        Ok(self.field.root_value(bits)?)
    }

    /// `J` with `j((1+√-n)/2) = -J³`.
    pub fn j_cube_root(&self) -> i64 {
        J_CUBE_ROOT.iter().find(|r| r.0 == self.n).map(|r| r.1).expect("all supported n tabulated")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn contexts_build() {
        for n in SUPPORTED_N {
            let c = SingularContext::new(n).unwrap();
            assert_eq!(c.field.degree(), 3);
        }
        assert_eq!(SingularContext::new(163).unwrap().g2_expected, -1448);
        assert!(SingularContext::new(11).is_err());
    }

    #[test]
    fn u_is_small_and_positive() {
        let u = SingularContext::new(163).unwrap().s_value(64).unwrap().to_f64();
        assert!(u > 0.0024 && u < 0.0026, "{u}");
    }
}
