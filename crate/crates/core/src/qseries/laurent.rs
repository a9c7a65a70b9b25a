//! Truncated Laurent series with exact rational coefficients.
//!
//! Coefficients are stored as integer numerators over one shared denominator,
//! which keeps products as plain integer convolutions.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use super::SeriesError;

/// Below this many output coefficients a product is computed on one thread.
const PAR_MIN: usize = 256;

/// `Σ c_e q^e` for `valuation <= e < trunc`; nothing is known from `trunc` on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentSeries {
    val: i64,
    num: Vec<BigInt>,
    den: BigInt,
    trunc: i64,
}

impl LaurentSeries {
    /// Series from integer coefficients, `coeffs[i]` multiplying `q^(val+i)`.
    pub fn from_ints(val: i64, coeffs: Vec<BigInt>, trunc: i64) -> Self {
        Self::build(val, coeffs, BigInt::one(), trunc)
    }

    pub fn from_i64s(val: i64, coeffs: &[i64], trunc: i64) -> Self {
        Self::from_ints(val, coeffs.iter().map(|&c| BigInt::from(c)).collect(), trunc)
    }

    pub fn from_rationals(val: i64, coeffs: &[BigRational], trunc: i64) -> Self {
        let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        Self::build(val, num, den, trunc)
    }

    pub fn zero(trunc: i64) -> Self {
        Self::build(trunc, Vec::new(), BigInt::one(), trunc)
    }

    pub fn one(trunc: i64) -> Self {
        Self::monomial(0, BigRational::one(), trunc)
    }

    /// `c q^e` known below `trunc`.
    pub fn monomial(e: i64, c: BigRational, trunc: i64) -> Self {
        if e >= trunc {
            return Self::zero(trunc);
        }
        let mut num = vec![BigInt::zero(); (trunc - e) as usize];
        num[0] = c.numer().clone();
        Self::build(e, num, c.denom().clone(), trunc)
    }

    fn build(val: i64, mut num: Vec<BigInt>, mut den: BigInt, trunc: i64) -> Self {
        num.truncate((trunc - val).max(0) as usize);
        let lead = num.iter().position(|c| !c.is_zero());
        let Some(lead) = lead else {
            return LaurentSeries { val: trunc, num: Vec::new(), den: BigInt::one(), trunc };
        };
        if lead > 0 {
            num.drain(..lead);
        }
        let val = val + lead as i64;
        num.resize((trunc - val) as usize, BigInt::zero());
        if den.is_negative() {
            den = -den;
            num.iter_mut().for_each(|c| *c = -&*c);
        }
        if !den.is_one() {
            let mut g = den.clone();
            for c in &num {
                if g.is_one() {
                    break;
                }
                g = g.gcd(c);
            }
            if !g.is_one() {
                num.iter_mut().for_each(|c| *c /= &g);
                den /= &g;
            }
        }
        LaurentSeries { val, num, den, trunc }
    }

    /// Lowest exponent with a nonzero coefficient, `None` for the zero series.
    pub fn valuation(&self) -> Option<i64> {
        (!self.num.is_empty()).then_some(self.val)
    }

    pub fn trunc(&self) -> i64 {
        self.trunc
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    /// Number of known coefficients from the valuation on.
    pub fn relative_precision(&self) -> i64 {
        self.trunc - self.val
    }

    /// Coefficient of `q^e`, or `None` when `e` is at or beyond the truncation.
    pub fn coeff(&self, e: i64) -> Option<BigRational> {
        if e >= self.trunc {
            return None;
        }
        Some(self.coeff_known(e))
    }

    fn coeff_known(&self, e: i64) -> BigRational {
        if e < self.val {
            return BigRational::zero();
        }
        BigRational::new(self.num[(e - self.val) as usize].clone(), self.den.clone())
    }

    /// Integer coefficient of `q^e`, if known and integral.
    pub fn int_coeff(&self, e: i64) -> Option<BigInt> {
        let c = self.coeff(e)?;
        c.is_integer().then(|| c.to_integer())
    }

    pub fn leading_coeff(&self) -> Option<BigRational> {
        self.valuation().map(|v| self.coeff_known(v))
    }

    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    /// Known coefficients as `(exponent, value)` from the valuation to the truncation.
    pub fn terms(&self) -> impl Iterator<Item = (i64, BigRational)> + '_ {
        self.num
            .iter()
            .enumerate()
            .map(move |(i, c)| (self.val + i as i64, BigRational::new(c.clone(), self.den.clone())))
    }

    /// Numerators of the coefficients of `q^start .. q^end` over the common
    /// denominator, which is returned alongside.
    pub fn integer_window(&self, start: i64, end: i64) -> (Vec<BigInt>, BigInt) {
        let v = (start..end)
            .map(|e| {
                if e < self.val || e >= self.trunc {
                    BigInt::zero()
                } else {
                    self.num[(e - self.val) as usize].clone()
                }
            })
            .collect();
        (v, self.den.clone())
    }

    /// Drops everything at or beyond `trunc` (no-op if already shorter).
    pub fn truncate(&self, trunc: i64) -> Self {
        if trunc >= self.trunc {
            return self.clone();
        }
        Self::build(self.val, self.num.clone(), self.den.clone(), trunc)
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        if k.is_zero() {
            return Self::zero(self.trunc);
        }
        Self::build(self.val, self.num.iter().map(|c| c * k.numer()).collect(), &self.den * k.denom(), self.trunc)
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&BigRational::from_integer(k.into()))
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentSeries { val: self.val + k, num: self.num.clone(), den: self.den.clone(), trunc: self.trunc + k }
    }

    /// Substitutes `q -> q^m` for `m >= 1`.
    pub fn substitute_power(&self, m: u32) -> Self {
        let m = m as i64;
        assert!(m >= 1);
        if self.is_zero() {
            return Self::zero(self.trunc * m);
        }
        let mut num = vec![BigInt::zero(); ((self.num.len() as i64 - 1) * m + 1) as usize];
        for (i, c) in self.num.iter().enumerate() {
            num[i * m as usize] = c.clone();
        }
        Self::build(self.val * m, num, self.den.clone(), self.trunc * m)
    }

    /// Substitutes `q -> -q`.
    pub fn negate_variable(&self) -> Self {
        let num = self
            .num
            .iter()
            .enumerate()
            .map(|(i, c)| if (self.val + i as i64) % 2 != 0 { -c } else { c.clone() })
            .collect();
        Self::build(self.val, num, self.den.clone(), self.trunc)
    }

    /// Rewrites a series in `q^m` as a series in `q`, failing if some
    /// exponent is not a multiple of `m`.
    pub fn compress(&self, m: u32) -> Result<Self, SeriesError> {
        let m = m as i64;
        if self.is_zero() {
            return Ok(Self::zero(Integer::div_ceil(&self.trunc, &m)));
        }
        if self.val.rem_euclid(m) != 0 {
            return Err(SeriesError::NotInVariable { exponent: self.val, step: m });
        }
        let mut num = Vec::new();
        for (i, c) in self.num.iter().enumerate() {
            let e = self.val + i as i64;
            if e.rem_euclid(m) == 0 {
                num.push(c.clone());
            } else if !c.is_zero() {
                return Err(SeriesError::NotInVariable { exponent: e, step: m });
            }
        }
        Ok(Self::build(self.val / m, num, self.den.clone(), Integer::div_ceil(&self.trunc, &m)))
    }

    fn align(a: &Self, b: &Self, sign: i8) -> Self {
        let trunc = a.trunc.min(b.trunc);
        let val = a.val.min(b.val).min(trunc);
        let len = (trunc - val).max(0) as usize;
        let l = a.den.lcm(&b.den);
        let (fa, fb) = (&l / &a.den, &l / &b.den);
        let mut num = vec![BigInt::zero(); len];
        for (i, c) in a.num.iter().enumerate() {
            let k = (a.val + i as i64 - val) as usize;
            if k >= len {
                break;
            }
            num[k] = c * &fa;
        }
        for (i, c) in b.num.iter().enumerate() {
            let k = (b.val + i as i64 - val) as usize;
            if k >= len {
                break;
            }
            if sign > 0 {
                num[k] += c * &fb;
            } else {
                num[k] -= c * &fb;
            }
        }
        Self::build(val, num, l, trunc)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::align(self, other, 1)
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::align(self, other, -1)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let trunc = (self.val + other.trunc).min(other.val + self.trunc);
        if self.is_zero() || other.is_zero() {
            return Self::zero(trunc);
        }
        let val = self.val + other.val;
        let len = (trunc - val).max(0) as usize;
        let nz: Vec<(usize, &BigInt)> = other.num.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        let a = &self.num;
        let term = |k: usize| -> BigInt {
            let mut acc = BigInt::zero();
            for &(j, bj) in &nz {
                if j > k {
                    break;
                }
                if let Some(ai) = a.get(k - j) {
                    if !ai.is_zero() {
                        acc += ai * bj;
                    }
                }
            }
            acc
        };
        let num: Vec<BigInt> =
            if len >= PAR_MIN { (0..len).into_par_iter().map(term).collect() } else { (0..len).map(term).collect() };
        Self::build(val, num, &self.den * &other.den, trunc)
    }

    /// Multiplicative inverse; the leading coefficient must be nonzero.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        if self.is_zero() {
            return Err(SeriesError::ZeroLeadingCoefficient);
        }
        let n = self.num.len();
        let a = &self.num;
        let a0 = &a[0];
        // 1/A = Σ C_k q^k / a0^(k+1), with C_0 = 1 and
        // C_k = -Σ_{i=1..k} A_i C_{k-i} a0^(i-1)
        let mut a0pow = vec![BigInt::one()];
        for i in 1..n {
            let next = &a0pow[i - 1] * a0;
            a0pow.push(next);
        }
        let mut c: Vec<BigInt> = Vec::with_capacity(n);
        c.push(BigInt::one());
        for k in 1..n {
            let mut acc = BigInt::zero();
            for i in 1..=k {
                if !a[i].is_zero() && !c[k - i].is_zero() {
                    acc += &a[i] * &c[k - i] * &a0pow[i - 1];
                }
            }
            c.push(-acc);
        }
        // common denominator a0^n
        let num: Vec<BigInt> = c.into_iter().enumerate().map(|(k, ck)| ck * &a0pow[n - 1 - k] * &self.den).collect();
        let den = &a0pow[n - 1] * a0;
        Ok(Self::build(-self.val, num, den, -self.val + n as i64))
    }

    pub fn div(&self, other: &Self) -> Result<Self, SeriesError> {
        Ok(self.mul(&other.inverse()?))
    }

    /// Integer power; negative exponents go through the inverse.
    pub fn pow(&self, n: i64) -> Result<Self, SeriesError> {
        if n < 0 {
            return self.inverse()?.pow(-n);
        }
        let mut acc = Self::one(self.relative_precision().max(1));
        if n == 0 {
            return Ok(acc);
        }
        let mut base = self.clone();
        let mut e = n as u64;
        let mut first = true;
        while e > 0 {
            if e & 1 == 1 {
                acc = if first { base.clone() } else { acc.mul(&base) };
                first = false;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        Ok(acc)
    }

    /// First exponent below `upto` (and below both truncations) where the
    /// series differ, with both coefficients.
    pub fn first_difference(&self, other: &Self, upto: i64) -> Option<(i64, BigRational, BigRational)> {
        let end = upto.min(self.trunc).min(other.trunc);
        let start = match (self.valuation(), other.valuation()) {
            (Some(a), Some(b)) => a.min(b),
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (None, None) => return None,
        };
        (start..end).find_map(|e| {
            let (x, y) = (self.coeff_known(e), other.coeff_known(e));
            (x != y).then_some((e, x, y))
        })
    }

    /// First nonzero coefficient below `upto`, if any.
    pub fn first_nonzero_below(&self, upto: i64) -> Option<(i64, BigRational)> {
        let v = self.valuation()?;
        (v < upto.min(self.trunc)).then(|| (v, self.coeff_known(v)))
    }
}

impl Add for &LaurentSeries {
    type Output = LaurentSeries;
    fn add(self, rhs: &LaurentSeries) -> LaurentSeries {
        LaurentSeries::add(self, rhs)
    }
}

impl Sub for &LaurentSeries {
    type Output = LaurentSeries;
    fn sub(self, rhs: &LaurentSeries) -> LaurentSeries {
        LaurentSeries::sub(self, rhs)
    }
}

impl Mul for &LaurentSeries {
    type Output = LaurentSeries;
    fn mul(self, rhs: &LaurentSeries) -> LaurentSeries {
        LaurentSeries::mul(self, rhs)
    }
}

impl Neg for &LaurentSeries {
    type Output = LaurentSeries;
    fn neg(self) -> LaurentSeries {
        self.scale_int(-1)
    }
}

impl fmt::Display for LaurentSeries {
    /// Up to the first eight nonzero terms, then `O(q^trunc)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut shown = 0;
        for (e, c) in self.terms() {
            if c.is_zero() {
                continue;
            }
            if shown == 8 {
                write!(f, " + ...")?;
                break;
            }
            let s = if c.is_negative() { "-" } else { "+" };
            if shown == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {s} ")?;
            }
            let m = c.abs();
            match (e, m.is_one()) {
                (0, _) => write!(f, "{m}")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{m}*q^{e}")?,
            }
            shown += 1;
        }
        if shown == 0 {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.trunc)
    }
}
