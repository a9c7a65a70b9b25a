//! Exact q-expansions of the classical generators, in the nome `q = e^{πiτ}`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{FracPrefixSeries, LaurentSeries, SeriesError};
use crate::quatforms::GramMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThetaKind {
    Two,
    Three,
    Four,
}

impl TryFrom<u8> for ThetaKind {
    type Error = SeriesError;
    fn try_from(k: u8) -> Result<Self, SeriesError> {
        match k {
            2 => Ok(ThetaKind::Two),
            3 => Ok(ThetaKind::Three),
            4 => Ok(ThetaKind::Four),
            _ => Err(SeriesError::UnknownTheta(k)),
        }
    }
}

fn check_order(order: i64, min: i64) -> Result<(), SeriesError> {
    if order < min {
        return Err(SeriesError::OrderTooSmall { order, min });
    }
    Ok(())
}

/// θ₂, θ₃ or θ₄ through `q^order`. θ₂ comes back as `q^{1/4}` times
/// `2 Σ_{n≥0} q^{n(n+1)}`; the other two have zero shift.
pub fn theta_series(kind: ThetaKind, order: i64) -> Result<FracPrefixSeries, SeriesError> {
    check_order(order, 1)?;
    let len = (order + 1) as usize;
    let mut c = vec![BigInt::zero(); len];
    match kind {
        ThetaKind::Two => {
            let mut n = 0usize;
            while n * (n + 1) < len {
                c[n * (n + 1)] += 2;
                n += 1;
            }
            let shift = BigRational::new(1.into(), 4.into());
            Ok(FracPrefixSeries::new(shift, LaurentSeries::from_ints(0, c, order + 1)))
        }
        ThetaKind::Three | ThetaKind::Four => {
            c[0] = BigInt::from(1);
            let mut n = 1usize;
            while n * n < len {
                let s = if kind == ThetaKind::Four && n % 2 == 1 { -2 } else { 2 };
                c[n * n] += s;
                n += 1;
            }
            Ok(FracPrefixSeries::integral(LaurentSeries::from_ints(0, c, order + 1)))
        }
    }
}

/// θ₃ as a plain series.
pub fn theta3(order: i64) -> Result<LaurentSeries, SeriesError> {
    theta_series(ThetaKind::Three, order)?.into_laurent()
}

/// θ₄ as a plain series.
pub fn theta4(order: i64) -> Result<LaurentSeries, SeriesError> {
    theta_series(ThetaKind::Four, order)?.into_laurent()
}

/// `∏_{n≥1} (1 - q^{step·n})` through `q^order`, from the pentagonal-number theorem.
pub fn euler_product(step: i64, order: i64) -> LaurentSeries {
    let len = (order + 1) as usize;
    let mut c = vec![BigInt::zero(); len];
    c[0] = BigInt::from(1);
    let mut k = 1i64;
    loop {
        let e1 = step * k * (3 * k - 1) / 2;
        let e2 = step * k * (3 * k + 1) / 2;
        if e1 > order {
            break;
        }
        let s = if k % 2 == 0 { 1 } else { -1 };
        c[e1 as usize] += s;
        if e2 <= order {
            c[e2 as usize] += s;
        }
        k += 1;
    }
    LaurentSeries::from_ints(0, c, order + 1)
}

/// Dedekind eta in the variable `q^step`: `q^{step/24} ∏ (1 - q^{step·n})`.
pub fn eta(step: i64, order: i64) -> FracPrefixSeries {
    FracPrefixSeries::new(BigRational::new(step.into(), 24.into()), euler_product(step, order))
}

fn sigma1_table(n: usize) -> Vec<BigInt> {
    let mut s = vec![BigInt::zero(); n + 1];
    for d in 1..=n {
        for m in (d..=n).step_by(d) {
            s[m] += d;
        }
    }
    s
}

/// `P(q) = 1 - 24 Σ σ₁(m) q^{2m}` through `q^order`.
pub fn eisenstein_p(order: i64) -> Result<LaurentSeries, SeriesError> {
    check_order(order, 2)?;
    let len = (order + 1) as usize;
    let sig = sigma1_table(len / 2);
    let mut c = vec![BigInt::zero(); len];
    c[0] = BigInt::from(1);
    for m in 1..sig.len() {
        if 2 * m < len {
            c[2 * m] = &sig[m] * -24;
        }
    }
    Ok(LaurentSeries::from_ints(0, c, order + 1))
}

fn is_prime(p: i64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// `p² η⁴(pτ)/η⁴(τ) + η⁴(τ)/η⁴(pτ)` through `q^order`, for primes `p ≡ 7 (mod 12)`.
pub fn eta4_quotient(p: i64, order: i64) -> Result<LaurentSeries, SeriesError> {
    if p % 12 != 7 || !is_prime(p) {
        return Err(SeriesError::BadLevel(p));
    }
    check_order(order, 1)?;
    let depth = (p - 1) / 3;
    // relative precision needed for the pole part to reach q^order
    let len = order + depth + 1;
    let e4 = euler_product(2, len).pow(4)?;
    let e4p = e4.substitute_power(p as u32).truncate(len);
    let pole = e4.div(&e4p)?.shift(-depth);
    let zero_part = e4p.div(&e4)?.scale_int(p * p).shift(depth);
    Ok(pole.add(&zero_part).truncate(order + 1))
}

/// `θ_M = Σ_{x∈ℤ⁴} q^{xᵀMx}` through `q^order`, by exact lattice-point counts.
pub fn theta_from_gram(m: &GramMatrix, order: i64) -> Result<LaurentSeries, SeriesError> {
    check_order(order, 1)?;
    let counts = m.representation_counts(order);
    Ok(LaurentSeries::from_ints(0, counts.into_iter().map(BigInt::from).collect(), order + 1))
}

/// Checks `θ₃⁴ θ₂⁴ θ₄⁴ = 16 η¹²(q²)`, the cube of the exponential form of
/// `θ₃⁴ = 2^{4/3} η⁴(q²) (kk')^{-2/3}`; returns the first mismatch if any.
pub fn theta3_eta_formal_mismatch(order: i64) -> Result<Option<(i64, BigRational, BigRational)>, SeriesError> {
    let t2 = theta_series(ThetaKind::Two, order)?;
    let t3 = theta_series(ThetaKind::Three, order)?;
    let t4 = theta_series(ThetaKind::Four, order)?;
    let lhs = t3.pow(4)?.mul(&t2.pow(4)?).mul(&t4.pow(4)?).into_laurent()?;
    let rhs = eta(2, order).pow(12)?.scale(&BigRational::from_integer(16.into())).into_laurent()?;
    Ok(lhs.first_difference(&rhs, order))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ic(s: &LaurentSeries, e: i64) -> i64 {
        s.int_coeff(e).unwrap().try_into().unwrap()
    }

    #[test]
    fn theta_definitions() {
        let t3 = theta3(10).unwrap();
        let t4 = theta4(10).unwrap();
        let want3 = [1, 2, 0, 0, 2, 0, 0, 0, 0, 2, 0];
        for (e, &w) in want3.iter().enumerate() {
            assert_eq!(ic(&t3, e as i64), w);
            let s = if e % 2 == 1 { -1 } else { 1 };
            assert_eq!(ic(&t4, e as i64), s * w);
        }
        let t2 = theta_series(ThetaKind::Two, 12).unwrap();
        assert_eq!(t2.shift, BigRational::new(1.into(), 4.into()));
        assert_eq!(ic(&t2.body, 0), 2);
        assert_eq!(ic(&t2.body, 2), 2);
        assert_eq!(ic(&t2.body, 6), 2);
        assert_eq!(ic(&t2.body, 12), 2);
        assert_eq!(ic(&t2.body, 4), 0);
    }

    #[test]
    fn jacobi_quartic_identity() {
        let order = 120;
        let t2 = theta_series(ThetaKind::Two, order).unwrap().pow(4).unwrap().into_laurent().unwrap();
        let t3 = theta3(order).unwrap().pow(4).unwrap();
        let t4 = theta4(order).unwrap().pow(4).unwrap();
        assert!(t3.first_difference(&(&t2 + &t4), order).is_none());
    }

    #[test]
    fn eisenstein_small_orders() {
        let p = eisenstein_p(8).unwrap();
        let want = [1, 0, -24, 0, -72, 0, -96, 0, -168];
        for (e, &w) in want.iter().enumerate() {
            assert_eq!(ic(&p, e as i64), w);
        }
        assert_eq!(ic(&eisenstein_p(24).unwrap(), 24), -672);
    }

    #[test]
    fn eisenstein_matches_divisor_oracle() {
        let p = eisenstein_p(400).unwrap();
        for m in 1..=200i64 {
            let s: i64 = (1..=m).filter(|d| m % d == 0).sum();
            assert_eq!(ic(&p, 2 * m), -24 * s);
            assert_eq!(ic(&p, 2 * m - 1), 0);
        }
    }

    #[test]
    fn euler_product_matches_direct_product() {
        let order = 60;
        let mut direct = LaurentSeries::one(order + 1);
        for n in 1..=order / 2 {
            let mut c = vec![0i64; (2 * n + 1) as usize];
            c[0] = 1;
            c[(2 * n) as usize] = -1;
            direct = &direct * &LaurentSeries::from_i64s(0, &c, order + 1);
        }
        assert!(euler_product(2, order).first_difference(&direct, order + 1).is_none());
    }

    #[test]
    fn varphi_leading_terms() {
        let v = eta4_quotient(163, 40).unwrap();
        assert_eq!(v.valuation(), Some(-54));
        assert_eq!(ic(&v, -54), 1);
        assert_eq!(ic(&v, -52), -4);
        assert!(eta4_quotient(13, 10).is_err());
        assert!(eta4_quotient(55, 10).is_err());
    }

    #[test]
    fn gram_theta_of_scaled_identity() {
        let m = GramMatrix::new([[2, 0, 0, 0], [0, 2, 0, 0], [0, 0, 2, 0], [0, 0, 0, 2]]).unwrap();
        let t = theta_from_gram(&m, 6).unwrap();
        assert_eq!(ic(&t, 0), 1);
        assert_eq!(ic(&t, 2), 8);
        assert_eq!(ic(&t, 4), 24);
        assert_eq!(ic(&t, 6), 32);
    }

    #[test]
    fn theta3_eta_identity_holds_formally() {
        assert!(theta3_eta_formal_mismatch(100).unwrap().is_none());
    }
}
