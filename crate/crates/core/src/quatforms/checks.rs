//! The Eisenstein span identity and the Fricke relation for the eight Gram forms.

use num_rational::BigRational;
use rayon::prelude::*;

use super::{GramMatrix, GramSet};
use crate::numkernel::BigReal;
use crate::qseries::{eisenstein_p, numeric, theta_from_gram, LaurentSeries};
use crate::report::CheckReport;

/// Weights of `θ_{I1} .. θ_{I8}` in `163 P(q^163) - P(q)`.
pub const SPAN_WEIGHTS: [i64; 8] = [6, 12, 24, 24, 24, 24, 24, 24];

pub const P: i64 = 163;

/// Theta series of every matrix in `set` through `q^order`, in file order.
pub fn gram_thetas(set: &GramSet, order: i64) -> Vec<LaurentSeries> {
    set.matrices.par_iter().map(|(_, m)| theta_from_gram(m, order).expect("order >= 1")).collect()
}

/// `p P(q^p) - P(q)` through `q^order`.
pub fn eisenstein_combination(p: i64, order: i64) -> LaurentSeries {
    let e = eisenstein_p(order.max(2)).expect("order >= 2");
    let ep = e.substitute_power(p as u32).truncate(order + 1);
    ep.scale_int(p).sub(&e).truncate(order + 1)
}

/// Compares `p P(q^p) - P(q)` with `Σ wᵢ θ_{Iᵢ}` through `q^order`.
pub fn span_identity_with(set: &GramSet, weights: &[i64], order: i64) -> CheckReport {
    let thetas = gram_thetas(set, order);
    span_identity_from(&thetas, set.p, weights, order)
}

pub fn span_identity_from(thetas: &[LaurentSeries], p: i64, weights: &[i64], order: i64) -> CheckReport {
    let name = format!("span_p{p}");
    if order < 10 {
        return CheckReport::fail(name, format!("order {order} below 10"));
    }
    let lhs = eisenstein_combination(p, order);
    let mut rhs = LaurentSeries::zero(order + 1);
    for (t, &w) in thetas.iter().zip(weights) {
        rhs = rhs.add(&t.scale_int(w));
    }
    match lhs.first_difference(&rhs, order + 1) {
        None => CheckReport::pass(name, format!("coefficients agree through q^{order}")),
        Some((e, a, b)) => CheckReport::fail(name, format!("first mismatch at q^{e}: {a} vs {b}")),
    }
}

/// The identity with the published weights, on the embedded data.
pub fn span_identity_check(order: i64) -> CheckReport {
    CheckReport::timed(|| span_identity_with(&GramSet::embedded_p163(), &SPAN_WEIGHTS, order))
}

/// `|θ_M(e^{-π/(t√l)}) - t² θ_M(e^{-πt/√l})|`, the Fricke relation at `τ = it/√l`.
pub fn fricke_residual(m: &GramMatrix, t: &BigRational, l: i64, bits: usize) -> BigReal {
    let wp = bits + 32;
    let tt = BigReal::from_rational(t, wp);
    let sl = BigReal::from_i64(l, wp).sqrt().expect("positive level");
    let qa = numeric::nome_at_imaginary(&(&tt * &sl).recip(), wp);
    let qb = numeric::nome_at_imaginary(&(&tt / &sl), wp);
    let a = numeric::theta_gram_at(m, &qa, wp).expect("nome in range");
    let b = numeric::theta_gram_at(m, &qb, wp).expect("nome in range");
    (&a - &(&(&tt * &tt) * &b)).abs().with_precision(bits)
}

/// Passes when the residual is below `2^{-bits/2}`.
pub fn fricke_numeric_check(m: &GramMatrix, t: &BigRational, bits: usize) -> CheckReport {
    CheckReport::timed(|| {
        let r = fricke_residual(m, t, P, bits);
        let ok = r.abs_below_pow2((bits / 2) as i64);
        CheckReport::new(format!("fricke_t{t}"), ok, format!("residual {:.3e}", r.to_f64()))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_and_q2_terms() {
        let set = GramSet::embedded_p163();
        let thetas = gram_thetas(&set, 4);
        let lhs = eisenstein_combination(P, 4);
        assert_eq!(lhs.int_coeff(0).unwrap(), 162.into());
        assert_eq!(lhs.int_coeff(2).unwrap(), 24.into());
        let c2: i64 =
            thetas.iter().zip(SPAN_WEIGHTS).map(|(t, w)| w * i64::try_from(t.int_coeff(2).unwrap()).unwrap()).sum();
        assert_eq!(c2, 24);
        assert_eq!(thetas[0].int_coeff(2).unwrap(), 4.into());
    }

    #[test]
    fn span_holds_and_perturbations_fail_early() {
        let set = GramSet::embedded_p163();
        let thetas = gram_thetas(&set, 120);
        assert!(span_identity_from(&thetas, P, &SPAN_WEIGHTS, 120).passed());
        for i in 0..8 {
            for d in [-1, 1] {
                let mut w = SPAN_WEIGHTS;
                w[i] += d;
                assert!(!span_identity_from(&thetas, P, &w, 10).passed());
            }
        }
    }

    #[test]
    fn fricke_fixed_point() {
        let m = GramSet::embedded_p163().matrices[3].1;
        let r = fricke_residual(&m, &BigRational::from_integer(1.into()), P, 128);
        assert!(r.abs_below_pow2(120));
    }
}
