//! Evaluation of the generators at a real nome `0 <= q0 < 1`.
//!
//! Each function sums the defining series directly and stops once a tail
//! bound drops below `2^-(bits+8)`; arithmetic runs with 32 guard bits.

use crate::numkernel::BigReal;
use crate::quatforms::GramMatrix;

use super::SeriesError;

const GUARD: usize = 32;

fn check_nome(q0: &BigReal) -> Result<(), SeriesError> {
    if q0.is_negative() || q0.cmp_value(&BigReal::one(q0.precision())).is_ge() {
        return Err(SeriesError::NomeOutOfRange(q0.to_f64()));
    }
    Ok(())
}

/// `log2 q0`, rounded up so that tail estimates built from it stay upper bounds.
fn log2_upper(q0: &BigReal) -> f64 {
    let l = match q0.exponent() {
        // very small values: exponent alone is a safe bound
        Some(e) if e < -1000 => e as f64,
        _ => q0.to_f64().log2(),
    };
    l * (1.0 - 1e-12) + 1e-12
}

/// `e^{-π t}`, the nome at `τ = i t`.
pub fn nome_at_imaginary(t: &BigReal, bits: usize) -> BigReal {
    let wp = bits + GUARD;
    let pi = BigReal::pi(wp);
    (-(&pi * &t.with_precision(wp))).exp()
}

/// `Σ_{n>=start} q0^{a n² + b n}` with `a > 0`.
fn gaussian_sum(q0: &BigReal, a: i64, b: i64, start: i64, bits: usize) -> BigReal {
    let wp = bits + GUARD;
    let x = q0.with_precision(wp);
    let lq = log2_upper(&x);
    let target = -((bits + 8) as f64);
    let mut sum = BigReal::zero(wp);
    if x.is_zero() {
        return if a * start * start + b * start == 0 { BigReal::one(wp) } else { sum };
    }
    let one_minus = 1.0 - x.to_f64();
    let mut n = start;
    let mut term = x.powi((a * n * n + b * n) as u64);
    // ratio to next term: q0^{a(2n+1)+b}
    let mut ratio = x.powi((a * (2 * n + 1) + b) as u64);
    let step = x.powi((2 * a) as u64);
    loop {
        sum = &sum + &term;
        n += 1;
        term = &term * &ratio;
        ratio = &ratio * &step;
        // tail Σ_{m>=n} q0^{e(m)} <= q0^{e(n)} / (1 - q0)
        let e = (a * n * n + b * n) as f64;
        if e * lq - one_minus.max(1e-300).log2() < target {
            break;
        }
    }
    sum
}

/// `θ₃(q0) = 1 + 2 Σ_{n>=1} q0^{n²}`.
pub fn theta3_at(q0: &BigReal, bits: usize) -> Result<BigReal, SeriesError> {
    check_nome(q0)?;
    let s = gaussian_sum(q0, 1, 0, 1, bits);
    Ok((&BigReal::one(bits + GUARD) + &s.mul_i64(2)).with_precision(bits))
}

/// `θ₄(q0) = 1 + 2 Σ_{n>=1} (-1)ⁿ q0^{n²}`, as `2θ₃(q0⁴) - θ₃(q0)`.
pub fn theta4_at(q0: &BigReal, bits: usize) -> Result<BigReal, SeriesError> {
    check_nome(q0)?;
    let wp = bits + GUARD;
    let t3 = theta3_at(q0, wp)?;
    let q4 = q0.with_precision(wp).powi(4);
    let t3_4 = theta3_at(&q4, wp)?;
    Ok((&t3_4.mul_i64(2) - &t3).with_precision(bits))
}

/// `θ₂(q0) = 2 q0^{1/4} Σ_{n>=0} q0^{n(n+1)}`.
pub fn theta2_at(q0: &BigReal, bits: usize) -> Result<BigReal, SeriesError> {
    check_nome(q0)?;
    let wp = bits + GUARD;
    if q0.is_zero() {
        return Ok(BigReal::zero(bits));
    }
    let s = gaussian_sum(q0, 1, 1, 0, bits + 8);
    let r = q0.with_precision(wp).nth_root(4).expect("positive nome");
    Ok((&r * &s).mul_i64(2).with_precision(bits))
}

/// `(k, k')` with `k = θ₂²/θ₃²`, `k' = θ₄²/θ₃²`.
pub fn modulus_at(q0: &BigReal, bits: usize) -> Result<(BigReal, BigReal), SeriesError> {
    let wp = bits + GUARD;
    let t2 = theta2_at(q0, wp)?;
    let t3 = theta3_at(q0, wp)?;
    let t4 = theta4_at(q0, wp)?;
    let t3sq = &t3 * &t3;
    let k = &(&t2 * &t2) / &t3sq;
    let kp = &(&t4 * &t4) / &t3sq;
    Ok((k.with_precision(bits), kp.with_precision(bits)))
}

/// `∏_{n>=1} (1 - x^n)` for `0 <= x < 1`.
///
/// Stops at `N` with `x^{N+1}/(1-x) < 2^-(bits+8)`; the omitted factor lies in
/// `[1 - x^{N+1}/(1-x), 1]`.
pub fn euler_product_at(x: &BigReal, bits: usize) -> Result<BigReal, SeriesError> {
    check_nome(x)?;
    let wp = bits + GUARD;
    let x = x.with_precision(wp);
    let one = BigReal::one(wp);
    if x.is_zero() {
        return Ok(one);
    }
    let lq = log2_upper(&x);
    let om = (1.0 - x.to_f64()).log2();
    let target = -((bits + 8) as f64);
    let mut prod = one.clone();
    let mut pw = x.clone();
    let mut n = 1.0f64;
    loop {
        prod = &prod * &(&one - &pw);
        pw = &pw * &x;
        n += 1.0;
        if n * lq - om < target {
            break;
        }
    }
    Ok(prod.with_precision(bits))
}

/// `P(q0) = 1 - 24 Σ n x^n/(1 - x^n)` with `x = q0²`.
///
/// Tail after N terms is at most `(N+1) x^{N+1} / (1-x)³`.
pub fn eisenstein_p_at(q0: &BigReal, bits: usize) -> Result<BigReal, SeriesError> {
    check_nome(q0)?;
    let wp = bits + GUARD;
    let x = q0.with_precision(wp).powi(2);
    let one = BigReal::one(wp);
    if x.is_zero() {
        return Ok(one.with_precision(bits));
    }
    let lq = log2_upper(&x);
    let om = (1.0 - x.to_f64()).log2();
    let target = -((bits + 8 + 5) as f64);
    let mut s = BigReal::zero(wp);
    let mut pw = x.clone();
    let mut n = 1i64;
    loop {
        s = &s + &(&pw.mul_i64(n) / &(&one - &pw));
        pw = &pw * &x;
        n += 1;
        let nf = n as f64;
        if nf.log2() + nf * lq - 3.0 * om < target {
            break;
        }
    }
    Ok((&one - &s.mul_i64(24)).with_precision(bits))
}

/// `θ_M(q0) = Σ_n r(n) q0^n` with exact counts `r(n)` and a proven tail.
///
/// With `#{x : xᵀMx <= B} <= K (B+1)²`, the tail beyond N is at most
/// `K (N+2)² q0^{N+1} / (1-ρ)`, `ρ = ((N+3)/(N+2))² q0`.
pub fn theta_gram_at(m: &GramMatrix, q0: &BigReal, bits: usize) -> Result<BigReal, SeriesError> {
    check_nome(q0)?;
    let wp = bits + GUARD;
    let x = q0.with_precision(wp);
    if x.is_zero() {
        return Ok(BigReal::one(bits));
    }
    let n = gram_cutoff(m, &x, bits);
    let counts = m.representation_counts(n);
    let mut acc = BigReal::zero(wp);
    for c in counts.iter().rev() {
        acc = &(&acc * &x) + &BigReal::from_i64(*c as i64, wp);
    }
    Ok(acc.with_precision(bits))
}

/// Smallest N whose tail bound is below `2^-(bits+8)`.
pub fn gram_cutoff(m: &GramMatrix, q0: &BigReal, bits: usize) -> i64 {
    let k = m.count_growth_constant().log2();
    let lq = log2_upper(q0);
    let qf = q0.to_f64();
    let target = -((bits + 8) as f64);
    let mut n = 1i64;
    loop {
        let nf = n as f64;
        let rho = ((nf + 3.0) / (nf + 2.0)).powi(2) * qf;
        if rho < 1.0 {
            let tail = k + 2.0 * (nf + 2.0).log2() + (nf + 1.0) * lq - (1.0 - rho).log2();
            if tail < target {
                return n;
            }
        }
        n += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &BigReal, b: &BigReal, bits: i64) -> bool {
        (a - b).abs_below_pow2(bits)
    }

    #[test]
    fn theta3_at_zero_is_one() {
        let z = BigReal::zero(128);
        assert_eq!(theta3_at(&z, 128).unwrap().to_f64(), 1.0);
        assert!(theta3_at(&BigReal::one(64), 64).is_err());
    }

    #[test]
    fn symmetric_point_has_equal_moduli() {
        // k(e^{-π}) = k'(e^{-π}) since τ = i is fixed by τ -> -1/τ
        let q0 = nome_at_imaginary(&BigReal::one(160), 160);
        let t2 = theta2_at(&q0, 160).unwrap();
        let t4 = theta4_at(&q0, 160).unwrap();
        assert!(close(&t2, &t4, 150));
        let (k, kp) = modulus_at(&q0, 160).unwrap();
        assert!(close(&k, &kp, 150));
        let sum = &(&k * &k) + &(&kp * &kp);
        assert!(close(&sum, &BigReal::one(160), 150));
    }

    #[test]
    fn jacobi_identity_numerically() {
        let q0 = BigReal::from_f64(0.37, 200);
        let t2 = theta2_at(&q0, 200).unwrap().powi(4);
        let t3 = theta3_at(&q0, 200).unwrap().powi(4);
        let t4 = theta4_at(&q0, 200).unwrap().powi(4);
        assert!(close(&t3, &(&t2 + &t4), 190));
    }

    #[test]
    fn euler_product_matches_pentagonal_sum() {
        let x = BigReal::from_f64(0.6, 200);
        let prod = euler_product_at(&x, 200).unwrap();
        // Σ_k (-1)^k x^{k(3k-1)/2} over all k
        let mut s = BigReal::one(232);
        for k in 1..200i64 {
            let sg = if k % 2 == 0 { 1 } else { -1 };
            let t = &x.with_precision(232).powi((k * (3 * k - 1) / 2) as u64)
                + &x.with_precision(232).powi((k * (3 * k + 1) / 2) as u64);
            s = &s + &t.mul_i64(sg);
        }
        assert!(close(&prod, &s, 190));
    }

    #[test]
    fn gram_theta_stable_under_precision_doubling() {
        let m = crate::quatforms::GramSet::embedded_p163().matrices[0].1;
        let t = BigReal::from_i64(163, 300).sqrt().unwrap().recip();
        let q0 = nome_at_imaginary(&t, 300);
        let a = theta_gram_at(&m, &q0, 128).unwrap();
        let b = theta_gram_at(&m, &q0, 256).unwrap();
        assert!(a.is_positive());
        assert!(close(&a, &b, 120));
    }
}
