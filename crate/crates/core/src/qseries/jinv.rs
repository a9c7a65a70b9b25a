//! The Klein invariant from theta functions, and the `1728/c` series.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::theta::{euler_product, theta_series, ThetaKind};
use super::{FracPrefixSeries, LaurentSeries, SeriesError};
use crate::report::CheckReport;

fn thetas(order: i64) -> Result<[FracPrefixSeries; 3], SeriesError> {
    Ok([
        theta_series(ThetaKind::Two, order)?,
        theta_series(ThetaKind::Three, order)?,
        theta_series(ThetaKind::Four, order)?,
    ])
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `32 (θ₂⁸ + θ₃⁸ + θ₄⁸)³ / (θ₂θ₃θ₄)⁸` in the nome q, as a series in q.
fn theta_j_in_q(base: i64) -> Result<LaurentSeries, SeriesError> {
    let [t2, t3, t4] = thetas(base)?;
    let s2 = t2.pow(8)?.into_laurent()?;
    let s3 = t3.body.pow(8)?;
    let s4 = t4.body.pow(8)?;
    let num = s2.add(&s3).add(&s4).pow(3)?.scale(&q(32));
    let den = t2.mul(&t3).mul(&t4).pow(8)?.into_laurent()?;
    num.div(&den)
}

/// `j = 1/Q + 744 + 196884 Q + ...` through `Q^order`, `Q = q²`, assembled from
/// theta functions; fails unless every coefficient is an integer.
pub fn j_oracle(order: i64) -> Result<LaurentSeries, SeriesError> {
    let j = theta_j_in_q(2 * order + 4)?.compress(2)?.truncate(order + 1);
    if !j.is_integral() {
        return Err(SeriesError::NotIntegral);
    }
    Ok(j)
}

/// `E₄³/Δ` in `Q`, with `E₄ = 1 + 240 Σ σ₃(n) Qⁿ` and `Δ = Q ∏(1-Qⁿ)²⁴`.
pub fn j_from_eisenstein(order: i64) -> Result<LaurentSeries, SeriesError> {
    let len = order + 3;
    let mut e4 = vec![BigInt::zero(); (len + 1) as usize];
    e4[0] = BigInt::one();
    for d in 1..=len {
        let d3 = BigInt::from(d).pow(3);
        for m in (d..=len).step_by(d as usize) {
            e4[m as usize] += &d3 * 240;
        }
    }
    let e4 = LaurentSeries::from_ints(0, e4, len + 1);
    let delta = euler_product(1, len).pow(24)?.shift(1);
    Ok(e4.pow(3)?.div(&delta)?.truncate(order + 1))
}

/// `w = (2kk')² = 4 θ₂⁴ θ₄⁴ / θ₃⁸` in the nome q.
fn w_series(base: i64) -> Result<LaurentSeries, SeriesError> {
    let [t2, t3, t4] = thetas(base)?;
    let num = t2.pow(4)?.mul(&t4.pow(4)?).into_laurent()?.scale(&q(4));
    num.div(&t3.body.pow(8)?)
}

/// `1728/c(k(q)) = -64 (1-4w)³ / w` with `c = -27w/(1-4w)³`.
pub fn inverse_c_series(base: i64) -> Result<LaurentSeries, SeriesError> {
    let w = w_series(base)?;
    let one = LaurentSeries::one(w.trunc());
    let t = one.sub(&w.scale(&q(4)));
    t.pow(3)?.div(&w).map(|s| s.scale(&q(-64)))
}

/// `1728/c` at the nome `-Q`, i.e. at `e^{πi(2τ+1)}`, as a series in `Q`.
pub fn c_to_j_series(order: i64) -> Result<LaurentSeries, SeriesError> {
    Ok(inverse_c_series(order + 4)?.negate_variable().truncate(order + 1))
}

/// Verifies the `1728/c` chain and compares the result with `j`.
///
/// Sub-checks: `w(-q²) = -X/4` with `X = θ₂⁸/(θ₃⁴θ₄⁴)`; `1728/c(-q²) =
/// 256(1+X)³/X = 32(θ₂⁸+θ₃⁸+θ₄⁸)³/(θ₂θ₃θ₄)⁸`; the `-Q` substitution equals `+j`
/// through `Q^order`. The opposite sign is reported as rejected.
pub fn c_to_j_check(order: i64) -> CheckReport {
    CheckReport::timed(|| match c_to_j_parts(order) {
        Ok(r) => r,
        Err(e) => CheckReport::fail("c_to_j", e.to_string()),
    })
}

fn c_to_j_parts(order: i64) -> Result<CheckReport, SeriesError> {
    if order < 3 {
        return Err(SeriesError::OrderTooSmall { order, min: 3 });
    }
    let base = 2 * order + 6;
    let [t2, t3, t4] = thetas(base)?;
    let x = t2.pow(8)?.into_laurent()?.div(&t3.body.pow(4)?.mul(&t4.body.pow(4)?))?;
    let upto = 2 * order + 2;
    let mut parts = Vec::new();

    let w_neg = w_series(base)?.negate_variable().substitute_power(2);
    let minus_x4 = x.scale(&BigRational::new((-1).into(), 4.into()));
    parts.push(diff_report("w(-q^2)=-X/4", &w_neg, &minus_x4, upto));

    let s_neg = inverse_c_series(base)?.negate_variable().substitute_power(2);
    let one = LaurentSeries::one(x.trunc());
    let chain = one.add(&x).pow(3)?.div(&x)?.scale(&q(256));
    parts.push(diff_report("1728/c(-q^2)=256(1+X)^3/X", &s_neg, &chain, upto));
    parts.push(diff_report("256(1+X)^3/X=theta_j", &chain, &theta_j_in_q(base)?, upto));

    let s = c_to_j_series(order)?;
    let j = j_oracle(order)?;
    parts.push(diff_report("1728/c(-Q)=+j", &s, &j, order + 1));
    let neg = diff_report("neg", &s, &j.scale(&q(-1)), order + 1);
    let mut r = CheckReport::combine("c_to_j", &parts);
    r.detail.push_str(if neg.passed() { "; -j also matches" } else { "; -j rejected" });
    Ok(r)
}

fn diff_report(name: &str, a: &LaurentSeries, b: &LaurentSeries, upto: i64) -> CheckReport {
    match a.first_difference(b, upto) {
        None => CheckReport::pass(name, ""),
        Some((e, x, y)) => CheckReport::fail(name, format!("exponent {e}: {x} vs {y}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ic(s: &LaurentSeries, e: i64) -> BigInt {
        s.int_coeff(e).unwrap()
    }

    #[test]
    fn j_leading_coefficients() {
        let j = j_oracle(3).unwrap();
        assert_eq!(j.valuation(), Some(-1));
        assert_eq!(ic(&j, -1), BigInt::from(1));
        assert_eq!(ic(&j, 0), BigInt::from(744));
        assert_eq!(ic(&j, 1), BigInt::from(196884));
        assert_eq!(ic(&j, 2), BigInt::from(21493760));
        assert_eq!(ic(&j, 3), BigInt::from(864299970));
    }

    #[test]
    fn theta_and_eisenstein_forms_of_j_agree() {
        let a = j_oracle(12).unwrap();
        let b = j_from_eisenstein(12).unwrap();
        assert!(a.first_difference(&b, 13).is_none());
    }

    #[test]
    fn inverse_c_leading_terms_in_q() {
        let s = inverse_c_series(10).unwrap();
        assert_eq!(s.valuation(), Some(-1));
        assert_eq!(ic(&s, -1), BigInt::from(-1));
        assert_eq!(ic(&s, 0), BigInt::from(744));
        assert_eq!(ic(&s, 1), BigInt::from(-196884));
    }

    #[test]
    fn c_to_j_orders() {
        for order in [3, 5] {
            let r = c_to_j_check(order);
            assert!(r.passed(), "{}", r.detail);
            assert!(r.detail.ends_with("-j rejected"));
        }
    }

    #[test]
    fn negated_j_does_not_match() {
        let s = c_to_j_series(5).unwrap();
        let minus_j = j_oracle(5).unwrap().scale(&q(-1));
        let (e, _, _) = s.first_difference(&minus_j, 6).unwrap();
        assert_eq!(e, -1);
    }
}
