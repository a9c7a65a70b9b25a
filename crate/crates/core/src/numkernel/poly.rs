//! Dense univariate polynomials over ℤ and ℚ.
//!
//! Coefficients are stored in ascending degree order with trailing zeros
//! trimmed, so the zero polynomial has an empty coefficient vector.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::bigreal::BigReal;
use super::KernelError;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn x() -> Self {
        Self::from_i64s(&[0, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.leading().unwrap().is_negative() {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect())
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        // Horner on numerator and denominator separately to stay integral.
        let (n, d) = (x.numer(), x.denom());
        let deg = match self.degree() {
            None => return BigRational::zero(),
            Some(d) => d,
        };
        let mut acc = BigInt::zero();
        let mut dpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * n + c * &dpow;
            dpow *= d;
        }
        // acc = sum c_i n^i d^(deg-i)
        BigRational::new(acc, d.pow(deg as u32))
    }

    pub fn eval_real(&self, x: &BigReal) -> BigReal {
        let p = x.precision();
        self.coeffs.iter().rev().fold(BigReal::zero(p), |acc, c| &(&acc * x) + &BigReal::from_bigint(c, p))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = IntPoly::from_i64s(&[1]);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn to_qpoly(&self) -> QPoly {
        QPoly::new(self.coeffs.iter().cloned().map(BigRational::from_integer).collect())
    }

    /// Sign of `p(x)`, computed exactly.
    pub fn sign_at(&self, x: &BigRational) -> i8 {
        let v = self.eval_rational(x);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    /// Integer roots with multiplicities, found by divisor testing.
    pub fn integer_roots(&self) -> Result<Vec<(BigInt, usize)>, KernelError> {
        if self.is_zero() {
            return Err(KernelError::ZeroPolynomial);
        }
        let mut p = self.clone();
        let mut out = Vec::new();
        // factor out x^k
        let mut zero_mult = 0;
        while p.coeffs[0].is_zero() {
            p = IntPoly::new(p.coeffs[1..].to_vec());
            zero_mult += 1;
        }
        if zero_mult > 0 {
            out.push((BigInt::zero(), zero_mult));
        }
        let a0 = p.coeffs[0].abs();
        for d in divisors(&a0) {
            for cand in [d.clone(), -d] {
                let mut mult = 0;
                while p.degree().unwrap_or(0) > 0 && p.eval_int(&cand).is_zero() {
                    p = p.div_linear(&cand);
                    mult += 1;
                }
                if mult > 0 {
                    out.push((cand, mult));
                }
            }
        }
        out.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(out)
    }

    /// Quotient by `(x - r)` when `r` is a root.
    fn div_linear(&self, r: &BigInt) -> Self {
        let n = self.coeffs.len();
        let mut q = vec![BigInt::zero(); n - 1];
        let mut carry = BigInt::zero();
        for i in (1..n).rev() {
            carry = &self.coeffs[i] + carry * r;
            q[i - 1] = carry.clone();
        }
        IntPoly::new(q)
    }
}

/// Positive divisors of `n` by trial division (n > 0).
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut m = n.clone();
    let mut p = BigInt::from(2);
    while &p * &p <= m {
        let mut e = 0;
        while (&m % &p).is_zero() {
            m /= &p;
            e += 1;
        }
        if e > 0 {
            primes.push((p.clone(), e));
        }
        p += 1;
    }
    if m > BigInt::one() {
        primes.push((m, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::new();
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

/// Product of two integer polynomials.
pub fn poly_mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    a * b
}

fn fmt_terms<T: fmt::Display + Zero + PartialEq>(f: &mut fmt::Formatter<'_>, coeffs: &[T], var: &str) -> fmt::Result {
    if coeffs.is_empty() {
        return f.write_str("0");
    }
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let s = c.to_string();
        let (neg, mag) = match s.strip_prefix('-') {
            Some(m) => (true, m.to_string()),
            None => (false, s),
        };
        if first {
            if neg {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if neg { " - " } else { " + " })?;
        }
        first = false;
        match i {
            0 => f.write_str(&mag)?,
            _ => {
                if mag != "1" {
                    f.write_str(&mag)?;
                }
                f.write_str(var)?;
                if i > 1 {
                    write!(f, "^{i}")?;
                }
            }
        }
    }
    Ok(())
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, &self.coeffs, "x")
    }
}

/// Polynomial with rational coefficients; used for Euclidean algorithms.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigRational> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(lc) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, d: &QPoly) -> (QPoly, QPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lc_inv = d.coeffs[dd].recip();
        let mut r = self.coeffs.clone();
        let n = r.len();
        if n <= dd {
            return (QPoly::zero(), self.clone());
        }
        let mut q = vec![BigRational::zero(); n - dd];
        for i in (dd..n).rev() {
            if r[i].is_zero() {
                continue;
            }
            let f = &r[i] * &lc_inv;
            for (j, c) in d.coeffs.iter().enumerate() {
                let t = &f * c;
                r[i - dd + j] -= t;
            }
            q[i - dd] = f;
        }
        r.truncate(dd);
        (QPoly::new(q), QPoly::new(r))
    }

    pub fn rem(&self, d: &QPoly) -> QPoly {
        self.div_rem(d).1
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Clears denominators and content; leading coefficient positive.
    pub fn to_primitive_int(&self) -> IntPoly {
        let l = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        IntPoly::new(self.coeffs.iter().map(|c| (c * BigRational::from_integer(l.clone())).to_integer()).collect())
            .primitive()
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, &self.coeffs, "x")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn difference_of_squares() {
        let a = IntPoly::from_i64s(&[1, 1]);
        let b = IntPoly::from_i64s(&[-1, 1]);
        assert_eq!(poly_mul(&a, &b), IntPoly::from_i64s(&[-1, 0, 1]));
    }

    #[test]
    fn rational_evaluation() {
        let p = IntPoly::from_i64s(&[-1, 400, 40, 2]);
        assert_eq!(p.eval_rational(&q(0, 1)), q(-1, 1));
        // 2/256^3 + 40/256^2 + 400/256 - 1
        let v = p.eval_rational(&q(1, 256));
        assert_eq!(v, q(2, 256 * 256 * 256) + q(40, 256 * 256) + q(400, 256) - q(1, 1));
        assert!(v > q(0, 1));
    }

    #[test]
    fn display_form() {
        let p = IntPoly::from_i64s(&[-160, -512, -400, 231]);
        assert_eq!(p.to_string(), "231x^3 - 400x^2 - 512x - 160");
    }

    #[test]
    fn integer_roots_of_sextic() {
        let p = IntPoly::from_i64s(&[-65739380000, 989898000, 49392000, -1069320, -2442, 177, -1]);
        let roots = p.integer_roots().unwrap();
        let want: Vec<(BigInt, usize)> = vec![((-70).into(), 1), ((-37).into(), 1), (70.into(), 3), (74.into(), 1)];
        assert_eq!(roots, want);
    }

    #[test]
    fn qpoly_gcd_detects_repeated_root() {
        let p = IntPoly::from_i64s(&[1, -2, 1]).to_qpoly(); // (x-1)^2
        let g = p.gcd(&p.derivative());
        assert_eq!(g.degree(), Some(1));
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = IntPoly::from_i64s(&[3, 0, -7, 5, 2]).to_qpoly();
        let b = IntPoly::from_i64s(&[-1, 400, 40, 2]).to_qpoly();
        let (qq, r) = a.div_rem(&b);
        assert_eq!(&(&qq * &b) + &r, a);
        assert!(r.degree().unwrap() < 3);
    }
}
