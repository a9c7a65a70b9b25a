//! Arithmetic in a simple algebraic extension ℚ[x]/(m) with a chosen real embedding.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::bigreal::BigReal;
use super::poly::{IntPoly, QPoly};
use super::roots::{isolate_real_roots, refine_root, RootInterval, SturmChain};
use super::KernelError;

/// The field ℚ[x]/(m) together with an isolating interval for the real root
/// that the generator stands for.
#[derive(Debug)]
pub struct NumberField {
    modulus: IntPoly,
    qmod: QPoly,
    root: RootInterval,
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        self.modulus == other.modulus && self.root == other.root
    }
}

impl NumberField {
    /// Field whose generator is the root of `modulus` inside `root`.
    pub fn new(modulus: IntPoly, root: RootInterval) -> Result<Arc<Self>, KernelError> {
        match modulus.degree() {
            None => return Err(KernelError::ZeroPolynomial),
            Some(0) => return Err(KernelError::ConstantModulus),
            _ => {}
        }
        let (slo, shi) = (modulus.sign_at(&root.lo), modulus.sign_at(&root.hi));
        if slo == 0 || shi == 0 || slo == shi {
            return Err(KernelError::NoSignChange);
        }
        let found = SturmChain::new(&modulus).count(&root.lo, &root.hi);
        if found != 1 {
            return Err(KernelError::NotIsolating { found });
        }
        let qmod = modulus.to_qpoly();
        Ok(Arc::new(NumberField { modulus, qmod, root }))
    }

    /// Field for a polynomial with exactly one real root, which becomes the generator.
    pub fn with_unique_real_root(modulus: IntPoly) -> Result<Arc<Self>, KernelError> {
        let roots = isolate_real_roots(&modulus)?;
        if roots.len() != 1 {
            return Err(KernelError::NotIsolating { found: roots.len() });
        }
        Self::new(modulus, roots.into_iter().next().unwrap())
    }

    pub fn modulus(&self) -> &IntPoly {
        &self.modulus
    }

    pub fn root_interval(&self) -> &RootInterval {
        &self.root
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap()
    }

    pub fn generator(self: &Arc<Self>) -> AlgebraicNumber {
        self.element(vec![BigRational::zero(), BigRational::one()])
    }

    pub fn from_rational(self: &Arc<Self>, r: BigRational) -> AlgebraicNumber {
        self.element(vec![r])
    }

    pub fn from_int(self: &Arc<Self>, n: i64) -> AlgebraicNumber {
        self.from_rational(BigRational::from_integer(n.into()))
    }

    /// Element with the given power-basis coordinates, reduced modulo `m`.
    pub fn element(self: &Arc<Self>, coords: Vec<BigRational>) -> AlgebraicNumber {
        AlgebraicNumber::reduce(self.clone(), QPoly::new(coords))
    }

    /// `(c0 + c1 u + c2 u^2 + ...) / den` from integer data.
    pub fn from_ints(self: &Arc<Self>, num: &[i64], den: i64) -> AlgebraicNumber {
        let d = BigInt::from(den);
        self.element(num.iter().map(|&c| BigRational::new(c.into(), d.clone())).collect())
    }

    /// Value of the generator to within `2^-bits`.
    pub fn root_value(&self, bits: usize) -> Result<BigReal, KernelError> {
        refine_root(&self.modulus, &self.root, bits)
    }
}

/// Element of a [`NumberField`], stored by its coordinates in the basis 1, u, u², ….
#[derive(Clone, Debug)]
pub struct AlgebraicNumber {
    field: Arc<NumberField>,
    coords: Vec<BigRational>,
}

impl AlgebraicNumber {
    fn reduce(field: Arc<NumberField>, p: QPoly) -> Self {
        let r = p.rem(&field.qmod);
        let mut coords = r.into_coeffs();
        coords.resize(field.degree(), BigRational::zero());
        AlgebraicNumber { field, coords }
    }

    fn as_qpoly(&self) -> QPoly {
        QPoly::new(self.coords.clone())
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// The rational value when the element lies in ℚ.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.coords[1..].iter().all(Zero::is_zero).then(|| self.coords[0].clone())
    }

    fn check(&self, other: &Self) -> Result<(), KernelError> {
        if Arc::ptr_eq(&self.field, &other.field) || *self.field == *other.field {
            Ok(())
        } else {
            Err(KernelError::FieldMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, KernelError> {
        self.check(other)?;
        Ok(Self::reduce(self.field.clone(), &self.as_qpoly() + &other.as_qpoly()))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, KernelError> {
        self.check(other)?;
        Ok(Self::reduce(self.field.clone(), &self.as_qpoly() - &other.as_qpoly()))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, KernelError> {
        self.check(other)?;
        Ok(Self::reduce(self.field.clone(), &self.as_qpoly() * &other.as_qpoly()))
    }

    /// Inverse by the extended Euclidean algorithm against the modulus.
    pub fn inverse(&self) -> Result<Self, KernelError> {
        if self.is_zero() {
            return Err(KernelError::DivisionByZero);
        }
        // invariant: s * a ≡ r (mod m)
        let (mut r0, mut r1) = (self.field.qmod.clone(), self.as_qpoly());
        let (mut s0, mut s1) = (QPoly::zero(), QPoly::constant(BigRational::one()));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = &s0 - &(&q * &s1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        if r0.degree() != Some(0) {
            return Err(KernelError::NotInvertible);
        }
        let c = r0.coeff(0);
        Ok(Self::reduce(self.field.clone(), s0.scale(&c.recip())))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, KernelError> {
        self.check(other)?;
        self.try_mul(&other.inverse()?)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = self.field.from_int(1);
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        AlgebraicNumber { field: self.field.clone(), coords: self.coords.iter().map(|c| c * k).collect() }
    }

    /// Real value under the designated embedding, within `2^-bits`.
    pub fn eval(&self, bits: usize) -> Result<BigReal, KernelError> {
        let deg = self.coords.len();
        let ri = self.field.root_interval();
        let bound = ri.lo.abs().max(ri.hi.abs()) + BigRational::one();
        let bound = bound.to_f64().unwrap_or(f64::MAX).max(1.0);
        // |Σ c_i (r̃^i - r^i)| ≤ ε Σ |c_i| i R^(i-1); also size of the largest term
        let mut sens = 0.0f64;
        let mut big = 1.0f64;
        for (i, c) in self.coords.iter().enumerate() {
            let cf = c.abs().to_f64().unwrap_or(f64::MAX);
            sens += cf * i as f64 * bound.powi(i as i32 - 1).max(1.0);
            big = big.max(cf * bound.powi(i as i32));
        }
        let extra = sens.max(1.0).log2().ceil() as usize;
        let mag = big.log2().ceil().max(0.0) as usize;
        let wp = bits + extra.max(mag) + deg + 32;
        let r = self.field.root_value(bits + extra + 8)?.with_precision(wp);
        let mut acc = BigReal::zero(wp);
        for c in self.coords.iter().rev() {
            acc = &(&acc * &r) + &BigReal::from_rational(c, wp);
        }
        Ok(acc.with_precision(bits + mag + 16))
    }

    /// Sign under the designated embedding; exact for zero.
    pub fn sign(&self) -> Result<i8, KernelError> {
        if self.is_zero() {
            return Ok(0);
        }
        let mut bits = 128;
        loop {
            let v = self.eval(bits)?;
            if !v.abs_below_pow2(bits as i64 - 1) {
                return Ok(if v.is_positive() { 1 } else { -1 });
            }
            bits *= 2;
        }
    }
}

impl PartialEq for AlgebraicNumber {
    fn eq(&self, other: &Self) -> bool {
        *self.field == *other.field && self.coords == other.coords
    }
}

macro_rules! field_op {
    ($tr:ident, $m:ident, $try:ident) => {
        impl $tr for &AlgebraicNumber {
            type Output = AlgebraicNumber;
            /// Panics when the operands belong to different fields.
            fn $m(self, rhs: &AlgebraicNumber) -> AlgebraicNumber {
                self.$try(rhs).expect("operands in the same number field")
            }
        }
        impl $tr for AlgebraicNumber {
            type Output = AlgebraicNumber;
            fn $m(self, rhs: AlgebraicNumber) -> AlgebraicNumber {
                (&self).$m(&rhs)
            }
        }
    };
}

field_op!(Add, add, try_add);
field_op!(Sub, sub, try_sub);
field_op!(Mul, mul, try_mul);

impl Neg for &AlgebraicNumber {
    type Output = AlgebraicNumber;
    fn neg(self) -> AlgebraicNumber {
        self.scale(&-BigRational::one())
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let den = self.coords.iter().fold(BigInt::one(), |acc, c| num_integer::Integer::lcm(&acc, c.denom()));
        let mut parts = Vec::new();
        for (i, c) in self.coords.iter().enumerate().rev() {
            let n = (c * BigRational::from_integer(den.clone())).to_integer();
            if n.is_zero() {
                continue;
            }
            let sign = if n.is_negative() { "-" } else { "+" };
            let mag = n.abs();
            let body = match i {
                0 => mag.to_string(),
                1 if mag.is_one() => "u".to_string(),
                1 => format!("{mag}u"),
                _ if mag.is_one() => format!("u^{i}"),
                _ => format!("{mag}u^{i}"),
            };
            parts.push((sign, body));
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        let mut s = String::new();
        for (k, (sign, body)) in parts.iter().enumerate() {
            match (k, *sign) {
                (0, "-") => s.push('-'),
                (0, _) => {}
                (_, sg) => s.push_str(&format!(" {sg} ")),
            }
            s.push_str(body);
        }
        if den.is_one() {
            write!(f, "{s}")
        } else {
            write!(f, "({s})/{den}")
        }
    }
}

/// `p(a)` reduced in the field of `a`.
pub fn poly_eval_alg(p: &IntPoly, a: &AlgebraicNumber) -> AlgebraicNumber {
    let field = a.field();
    p.coeffs()
        .iter()
        .rev()
        .fold(field.from_int(0), |acc, c| &(&acc * a) + &field.from_rational(BigRational::from_integer(c.clone())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn qfield() -> Arc<NumberField> {
        NumberField::with_unique_real_root(IntPoly::from_i64s(&[-1, 400, 40, 2])).unwrap()
    }

    #[test]
    fn defining_relation_reduces_to_one() {
        let k = qfield();
        let u = k.generator();
        let e = &(&u.pow(3).scale(&BigRational::from_integer(2.into()))
            + &u.pow(2).scale(&BigRational::from_integer(40.into())))
            + &u.scale(&BigRational::from_integer(400.into()));
        assert_eq!(e.as_rational(), Some(BigRational::one()));
        assert!(poly_eval_alg(k.modulus(), &u).is_zero());
    }

    #[test]
    fn generator_times_inverse() {
        let k = qfield();
        let u = k.generator();
        let p = &u * &u.inverse().unwrap();
        assert_eq!(p.as_rational(), Some(BigRational::one()));
        assert_eq!(k.from_int(0).inverse(), Err(KernelError::DivisionByZero));
    }

    #[test]
    fn mismatched_fields_rejected() {
        let a = qfield().generator();
        let other = NumberField::with_unique_real_root(IntPoly::from_i64s(&[-1, 4, 4, 2])).unwrap();
        assert_eq!(a.try_mul(&other.generator()), Err(KernelError::FieldMismatch));
    }

    #[test]
    fn evaluation_bounds() {
        let k = qfield();
        assert_eq!(k.from_int(5).eval(64).unwrap().to_f64(), 5.0);
        let u = k.generator().eval(128).unwrap();
        assert!(u.is_positive() && u < BigReal::from_rational(&BigRational::new(1.into(), 256.into()), 128));
        let u6 = k.generator().pow(6).eval(128).unwrap();
        assert!(u6.is_positive() && u6.abs_below_pow2(48));
    }

    #[test]
    fn display_with_common_denominator() {
        let k = qfield();
        let v = k.from_ints(&[11680, 1372, 64], 4389);
        assert_eq!(v.to_string(), "(64u^2 + 1372u + 11680)/4389");
    }

    fn arb_elem(k: Arc<NumberField>) -> impl Strategy<Value = AlgebraicNumber> {
        proptest::collection::vec((-1000i64..1000, 1i64..50), 3)
            .prop_map(move |v| k.element(v.iter().map(|&(n, d)| BigRational::new(n.into(), d.into())).collect()))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn mul_commutes_and_associates(a in arb_elem(qfield()), b in arb_elem(qfield()), c in arb_elem(qfield())) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn inverse_law(a in arb_elem(qfield())) {
            prop_assume!(!a.is_zero());
            let one = &a * &a.inverse().unwrap();
            prop_assert_eq!(one.as_rational(), Some(BigRational::one()));
        }
    }
}
