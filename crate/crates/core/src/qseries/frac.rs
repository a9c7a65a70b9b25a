//! Series carrying a rational power of `q` in front of an integral-exponent body.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{LaurentSeries, SeriesError};

/// `q^shift * body`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FracPrefixSeries {
    pub shift: BigRational,
    pub body: LaurentSeries,
}

impl FracPrefixSeries {
    pub fn new(shift: BigRational, body: LaurentSeries) -> Self {
        FracPrefixSeries { shift, body }
    }

    pub fn integral(body: LaurentSeries) -> Self {
        FracPrefixSeries { shift: BigRational::zero(), body }
    }

    pub fn mul(&self, other: &Self) -> Self {
        FracPrefixSeries { shift: &self.shift + &other.shift, body: self.body.mul(&other.body) }
    }

    pub fn pow(&self, n: i64) -> Result<Self, SeriesError> {
        Ok(FracPrefixSeries { shift: &self.shift * BigRational::from_integer(n.into()), body: self.body.pow(n)? })
    }

    pub fn inverse(&self) -> Result<Self, SeriesError> {
        Ok(FracPrefixSeries { shift: -&self.shift, body: self.body.inverse()? })
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        FracPrefixSeries { shift: self.shift.clone(), body: self.body.scale(k) }
    }

    /// Substitutes `q -> q^m`.
    pub fn substitute_power(&self, m: u32) -> Self {
        FracPrefixSeries {
            shift: &self.shift * BigRational::from_integer(BigInt::from(m)),
            body: self.body.substitute_power(m),
        }
    }

    /// Folds an integral shift into the body; fails when the shift is fractional.
    pub fn into_laurent(self) -> Result<LaurentSeries, SeriesError> {
        if !self.shift.is_integer() {
            return Err(SeriesError::FractionalShift { shift: self.shift.to_string() });
        }
        let k: i64 = self
            .shift
            .to_integer()
            .try_into()
            .map_err(|_| SeriesError::FractionalShift { shift: self.shift.to_string() })?;
        Ok(self.body.shift(k))
    }

    /// Sum of two series whose shifts differ by an integer.
    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        let d = &other.shift - &self.shift;
        if !d.is_integer() {
            return Err(SeriesError::FractionalShift { shift: d.to_string() });
        }
        let k: i64 = d.to_integer().try_into().unwrap();
        Ok(FracPrefixSeries { shift: self.shift.clone(), body: self.body.add(&other.body.shift(k)) })
    }

    pub fn is_integral(&self) -> bool {
        self.shift.is_integer()
    }

    pub fn one(trunc: i64) -> Self {
        Self::integral(LaurentSeries::one(trunc))
    }

    pub fn unit_shift(shift: BigRational, trunc: i64) -> Self {
        FracPrefixSeries { shift, body: LaurentSeries::monomial(0, BigRational::one(), trunc) }
    }
}
