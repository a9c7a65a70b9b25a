//! Arbitrary-precision binary floating point with an explicit working precision.
//!
//! `BigReal` wraps an [`astro_float::BigFloat`] together with the number of
//! mantissa bits the value is meant to be trusted to. Binary operations run at
//! the smaller of the two operand precisions and round to nearest-even.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign};
use num_bigint::{BigInt, Sign as BigSign};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::KernelError;

const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constant cache"));
}

fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|cc| f(&mut cc.borrow_mut()))
}

#[derive(Clone, Debug)]
pub struct BigReal {
    value: BigFloat,
    prec: usize,
}

impl BigReal {
    fn wrap(value: BigFloat, prec: usize) -> Self {
        BigReal { value, prec }
    }

    pub fn zero(prec: usize) -> Self {
        Self::wrap(BigFloat::from_word(0, prec), prec)
    }

    pub fn one(prec: usize) -> Self {
        Self::wrap(BigFloat::from_word(1, prec), prec)
    }

    pub fn from_i64(v: i64, prec: usize) -> Self {
        Self::wrap(BigFloat::from_i64(v, prec.max(64)), prec)
    }

    pub fn from_f64(v: f64, prec: usize) -> Self {
        Self::wrap(BigFloat::from_f64(v, prec.max(64)), prec)
    }

    /// Exact integer, rounded once to `prec` bits.
    pub fn from_bigint(n: &BigInt, prec: usize) -> Self {
        if n.is_zero() {
            return Self::zero(prec);
        }
        let words = n.magnitude().to_u64_digits();
        let sign = if n.is_negative() { Sign::Neg } else { Sign::Pos };
        let exp = (words.len() * 64) as i32;
        let mut v = BigFloat::from_words(&words, sign, exp);
        v.set_precision(prec.max(64), RM).expect("precision");
        Self::wrap(v, prec)
    }

    pub fn from_rational(r: &BigRational, prec: usize) -> Self {
        let work = prec + 64;
        let n = Self::from_bigint(r.numer(), work);
        let d = Self::from_bigint(r.denom(), work);
        let v = n.value.div(&d.value, prec.max(64), RM);
        Self::wrap(v, prec)
    }

    pub fn pi(prec: usize) -> Self {
        let v = with_consts(|cc| cc.pi(prec.max(64), RM));
        Self::wrap(v, prec)
    }

    pub fn precision(&self) -> usize {
        self.prec
    }

    /// Same value re-rounded (or zero-extended) to `prec` bits.
    pub fn with_precision(&self, prec: usize) -> Self {
        let mut v = self.value.clone();
        v.set_precision(prec.max(64), RM).expect("precision");
        Self::wrap(v, prec)
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        !self.value.is_zero() && self.value.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        !self.value.is_zero() && self.value.is_negative()
    }

    pub fn abs(&self) -> Self {
        Self::wrap(self.value.abs(), self.prec)
    }

    pub fn recip(&self) -> Self {
        Self::wrap(self.value.reciprocal(self.prec.max(64), RM), self.prec)
    }

    pub fn powi(&self, n: u64) -> Self {
        if n == 0 {
            return Self::one(self.prec);
        }
        let p = self.prec.max(64);
        let mut acc = BigFloat::from_word(1, p);
        let mut base = self.value.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, p, RM);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base, p, RM);
            }
        }
        Self::wrap(acc, self.prec)
    }

    pub fn mul_i64(&self, k: i64) -> Self {
        self * &BigReal::from_i64(k, self.prec)
    }

    pub fn div_i64(&self, k: i64) -> Self {
        self / &BigReal::from_i64(k, self.prec)
    }

    pub fn sqrt(&self) -> Result<Self, KernelError> {
        if self.is_negative() {
            return Err(KernelError::NegativeRadicand { index: 2 });
        }
        Ok(Self::wrap(self.value.sqrt(self.prec.max(64), RM), self.prec))
    }

    pub fn exp(&self) -> Self {
        let v = with_consts(|cc| self.value.exp(self.prec.max(64), RM, cc));
        Self::wrap(v, self.prec)
    }

    pub fn ln(&self) -> Result<Self, KernelError> {
        if !self.is_positive() {
            return Err(KernelError::NegativeRadicand { index: 0 });
        }
        let v = with_consts(|cc| self.value.ln(self.prec.max(64), RM, cc));
        Ok(Self::wrap(v, self.prec))
    }

    /// Positive real `n`-th root by Newton iteration with precision doubling.
    ///
    /// Odd roots of negative numbers are taken as the real negative root.
    pub fn nth_root(&self, n: u32) -> Result<Self, KernelError> {
        if n == 0 {
            return Err(KernelError::InvalidRootIndex);
        }
        if n == 1 {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        if self.is_negative() {
            if n.is_multiple_of(2) {
                return Err(KernelError::NegativeRadicand { index: n });
            }
            return Ok(-&(-self).nth_root(n)?);
        }

        let target = self.prec.max(64) + 16;
        let x = self.value.clone();
        let e = x.exponent().expect("finite") as i64;
        let (m_top, _, _) = top_mantissa(&x);
        // x = m * 2^e with m in [1/2, 1)
        let q = e.div_euclid(n as i64);
        let r = e.rem_euclid(n as i64);
        let guess = (m_top * 2f64.powi(r as i32)).powf(1.0 / n as f64);
        let mut y = BigFloat::from_f64(guess, 64);
        let ye = y.exponent().expect("finite") as i64 + q;
        y.set_exponent(ye as i32);

        let nf = |p: usize| BigFloat::from_word(n as u64, p);
        let mut p = 64usize;
        loop {
            p = (p * 2).min(target);
            let mut yp = y.clone();
            yp.set_precision(p, RM).expect("precision");
            let ynm1 = pow_bf(&yp, n - 1, p);
            let t = x.div(&ynm1, p, RM);
            let num = yp.mul(&BigFloat::from_word((n - 1) as u64, p), p, RM).add(&t, p, RM);
            y = num.div(&nf(p), p, RM);
            if p == target {
                break;
            }
        }
        // two polishing steps at full precision
        for _ in 0..2 {
            let ynm1 = pow_bf(&y, n - 1, target);
            let t = x.div(&ynm1, target, RM);
            let num = y.mul(&nf(target), target, RM).sub(&y, target, RM).add(&t, target, RM);
            y = num.div(&nf(target), target, RM);
        }
        let mut out = Self::wrap(y, self.prec);
        out = out.with_precision(self.prec);
        Ok(out)
    }

    pub fn to_f64(&self) -> f64 {
        if self.value.is_zero() {
            return 0.0;
        }
        let (m, _, neg) = top_mantissa(&self.value);
        let e = self.value.exponent().expect("finite");
        let v = if e > 1023 {
            f64::INFINITY
        } else if e < -1070 {
            0.0
        } else {
            m * 2f64.powi(e)
        };
        if neg {
            -v
        } else {
            v
        }
    }

    /// Binary exponent `e` with `2^(e-1) <= |x| < 2^e`; `None` for zero.
    pub fn exponent(&self) -> Option<i64> {
        if self.value.is_zero() {
            None
        } else {
            self.value.exponent().map(|e| e as i64)
        }
    }

    /// `|x| < 2^-bits`.
    pub fn abs_below_pow2(&self, bits: i64) -> bool {
        match self.exponent() {
            None => true,
            Some(e) => e <= -bits,
        }
    }

    /// `|x| < tol` for a small decimal tolerance given as `10^-digits`.
    pub fn abs_below_pow10(&self, digits: u32) -> bool {
        let tol = BigReal::from_rational(
            &BigRational::new(BigInt::from(1), BigInt::from(10u32).pow(digits)),
            self.prec.max(64) + 16,
        );
        self.abs().cmp_value(&tol) == Ordering::Less
    }

    pub fn cmp_value(&self, other: &BigReal) -> Ordering {
        match self.value.cmp(&other.value) {
            Some(c) if c < 0 => Ordering::Less,
            Some(0) => Ordering::Equal,
            Some(_) => Ordering::Greater,
            None => panic!("comparison with NaN"),
        }
    }

    /// Exact dyadic rational equal to the stored value.
    pub fn to_rational(&self) -> BigRational {
        if self.value.is_zero() {
            return BigRational::zero();
        }
        let (words, _, sign, e, _) = self.value.as_raw_parts().expect("finite");
        let mut mag = BigInt::from_slice(BigSign::Plus, &u64s_to_u32s(words));
        if sign == Sign::Neg {
            mag = -mag;
        }
        let shift = e as i64 - 64 * words.len() as i64;
        if shift >= 0 {
            BigRational::from_integer(mag << shift as usize)
        } else {
            BigRational::new(mag, BigInt::from(1) << (-shift) as usize)
        }
    }

    /// `floor(|x| * 10^digits)` with sign, as an integer.
    fn scaled_floor(&self, digits: usize) -> BigInt {
        let scale = BigInt::from(10u32).pow(digits as u32);
        let r = self.to_rational() * BigRational::from_integer(scale);
        let neg = r.is_negative();
        let a = r.abs();
        let fl = a.numer() / a.denom();
        if neg {
            -fl
        } else {
            fl
        }
    }

    /// Fixed-point decimal with exactly `digits` fractional digits (truncated).
    pub fn to_fixed_decimal(&self, digits: usize) -> String {
        let n = self.scaled_floor(digits);
        let neg = n.is_negative();
        let mut s = n.abs().to_string();
        if s.len() <= digits {
            s = "0".repeat(digits + 1 - s.len()) + &s;
        }
        let split = s.len() - digits;
        let mut out = String::with_capacity(s.len() + 2);
        if neg {
            out.push('-');
        }
        out.push_str(&s[..split]);
        if digits > 0 {
            out.push('.');
            out.push_str(&s[split..]);
        }
        out
    }
}

fn u64s_to_u32s(words: &[u64]) -> Vec<u32> {
    let mut out = Vec::with_capacity(words.len() * 2);
    for w in words {
        out.push(*w as u32);
        out.push((*w >> 32) as u32);
    }
    out
}

/// Leading mantissa as an f64 in [1/2, 1), the word count, and the sign.
fn top_mantissa(x: &BigFloat) -> (f64, usize, bool) {
    let (words, _, sign, _, _) = x.as_raw_parts().expect("finite");
    let n = words.len();
    let hi = words[n - 1] as f64 / 2f64.powi(64);
    let lo = if n > 1 { words[n - 2] as f64 / 2f64.powi(128) } else { 0.0 };
    (hi + lo, n, sign == Sign::Neg)
}

fn pow_bf(x: &BigFloat, n: u32, p: usize) -> BigFloat {
    let mut acc = BigFloat::from_word(1, p);
    let mut base = x.clone();
    let mut e = n;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&base, p, RM);
        }
        e >>= 1;
        if e > 0 {
            base = base.mul(&base, p, RM);
        }
    }
    acc
}

macro_rules! binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&BigReal> for &BigReal {
            type Output = BigReal;
            fn $m(self, rhs: &BigReal) -> BigReal {
                let p = self.prec.min(rhs.prec);
                BigReal::wrap(self.value.$m(&rhs.value, p.max(64), RM), p)
            }
        }
        impl $tr<BigReal> for BigReal {
            type Output = BigReal;
            fn $m(self, rhs: BigReal) -> BigReal {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&BigReal> for BigReal {
            type Output = BigReal;
            fn $m(self, rhs: &BigReal) -> BigReal {
                (&self).$m(rhs)
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for &BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal::wrap(self.value.clone().neg(), self.prec)
    }
}

impl Neg for BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        -&self
    }
}

impl PartialEq for BigReal {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_value(other) == Ordering::Equal
    }
}

impl PartialOrd for BigReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_value(other))
    }
}

impl fmt::Display for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = with_consts(|cc| self.value.format(Radix::Dec, RM, cc)).unwrap_or_else(|_| "NaN".into());
        f.write_str(&s)
    }
}
