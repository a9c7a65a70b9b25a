//! Polynomials extracted from the main equation at special values.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{ModEqError, ModEqId, ModEqTable};
use crate::numkernel::{isolate_real_roots, poly_mul, refine_root, BigReal, IntPoly, QPoly, RootInterval};
use crate::qseries::numeric;
use crate::quatforms::GramSet;
use crate::report::CheckReport;

/// Cubic satisfied by `f(i/√163)`.
pub const F_CUBIC: [i64; 4] = [-160, -512, -400, 231];

/// The other factor of the specialized main equation; it appears squared.
pub const SQUARED_FACTOR: [i64; 13] = [
    -44044178,
    -500041768,
    -1716358972,
    -1771347457,
    949502158,
    1855221822,
    -251575929,
    -706717664,
    79493657,
    121939618,
    -18956160,
    -7891968,
    1622016,
];

/// Polynomial whose roots are the values of `varphi` at the poles of `f`.
pub const POLE_SEXTIC: [i64; 7] = [-65739380000, 989898000, 49392000, -1069320, -2442, 177, -1];

/// Value of `varphi` at the Fricke fixed point `i/√163`.
pub const VARPHI_AT_FIXED_POINT: i64 = 326;

fn require_main(table: &ModEqTable) -> Result<(), ModEqError> {
    if table.id != ModEqId::Varphi {
        return Err(ModEqError::WrongTable(table.id.to_string()));
    }
    Ok(())
}

/// `Σ valueⁱ yᵢ(x) + lead · value⁷`, cleared of denominators.
pub fn specialize_varphi(table: &ModEqTable, value: &BigRational) -> Result<IntPoly, ModEqError> {
    require_main(table)?;
    let deg = table.max_degree_f();
    let mut acc = vec![BigRational::zero(); deg + 1];
    let mut vp = BigRational::from_integer(1.into());
    for row in &table.rows {
        for (j, c) in row.coeffs().iter().enumerate() {
            acc[j] += &vp * BigRational::from_integer(c.clone());
        }
        vp *= value;
    }
    acc[0] += vp * BigRational::from_integer(table.lead_sign.into());
    Ok(QPoly::new(acc).to_primitive_int())
}

/// `cubic · factor²`, the printed factorization.
pub fn printed_factorization() -> IntPoly {
    let sq = IntPoly::from_i64s(&SQUARED_FACTOR);
    poly_mul(&IntPoly::from_i64s(&F_CUBIC), &poly_mul(&sq, &sq))
}

/// Equal up to a rational multiple: compares primitive parts up to sign.
fn same_up_to_scalar(a: &IntPoly, b: &IntPoly) -> Option<usize> {
    let (pa, pb) = (a.primitive(), b.primitive());
    let sign = match (pa.leading(), pb.leading()) {
        (Some(x), Some(y)) if x.is_negative() != y.is_negative() => BigInt::from(-1),
        _ => BigInt::from(1),
    };
    let pb = pb.scale(&sign);
    let len = pa.coeffs().len().max(pb.coeffs().len());
    (0..len).find(|&i| pa.coeff(i) != pb.coeff(i))
}

/// Checks that the main equation at `varphi = 326` factors as printed.
pub fn specialization_check(table: &ModEqTable) -> CheckReport {
    CheckReport::timed(|| {
        let name = "modeq_specialize_326";
        let p = match specialize_varphi(table, &BigRational::from_integer(VARPHI_AT_FIXED_POINT.into())) {
            Ok(p) => p,
            Err(e) => return CheckReport::fail(name, e.to_string()),
        };
        if p.degree() != Some(27) {
            return CheckReport::fail(name, format!("degree {:?}, expected 27", p.degree()));
        }
        match same_up_to_scalar(&p, &printed_factorization()) {
            None => CheckReport::pass(name, "P27 = cubic · (degree 12)^2 exactly".to_string()),
            Some(i) => CheckReport::fail(name, format!("first differing coefficient at x^{i}")),
        }
    })
}

/// `Σ [x^deg] yᵢ · Xⁱ`, the polynomial in the `h` variable from the top
/// coefficients in `f`.
pub fn leading_coeff_poly(table: &ModEqTable) -> IntPoly {
    let deg = table.max_degree_f();
    let mut cs: Vec<BigInt> = table.rows.iter().map(|r| r.coeff(deg)).collect();
    // h⁷ carries only a constant in f unless deg = 0
    cs.push(if deg == 0 { BigInt::from(table.lead_sign) } else { BigInt::zero() });
    IntPoly::new(cs)
}

/// Checks the pole sextic against the printed one and returns its integer
/// roots with multiplicities.
pub fn pole_values_check(table: &ModEqTable) -> (CheckReport, Vec<(BigInt, usize)>) {
    let p = leading_coeff_poly(table);
    let name = "modeq_pole_sextic";
    if let Some(i) = same_up_to_scalar(&p, &IntPoly::from_i64s(&POLE_SEXTIC)) {
        return (CheckReport::fail(name, format!("differs from printed sextic at X^{i}")), vec![]);
    }
    let roots = p.integer_roots().unwrap_or_default();
    let total: usize = roots.iter().map(|r| r.1).sum();
    let list: Vec<String> =
        roots.iter().map(|(r, m)| if *m > 1 { format!("{r}^{m}") } else { r.to_string() }).collect();
    let rep = CheckReport::new(name, total == 6, format!("integer roots {}", list.join(", ")));
    (rep, roots)
}

/// `f(i/√163) = (θ_{I₇} - θ_{I₈})/(θ_{I₆} - θ_{I₇})` at `q₀ = e^{-π/√163}`.
pub fn f_at_fixed_point(bits: usize) -> BigReal {
    let wp = bits + 32;
    let s = BigReal::from_i64(163, wp).sqrt().expect("positive");
    let q0 = numeric::nome_at_imaginary(&s.recip(), wp);
    let set = GramSet::embedded_p163();
    let th: Vec<BigReal> =
        set.matrices.iter().map(|(_, m)| numeric::theta_gram_at(m, &q0, wp).expect("nome in range")).collect();
    (&(&th[6] - &th[7]) / &(&th[5] - &th[6])).with_precision(bits)
}

/// The real root of the cubic agreeing with the numeric value of
/// `f(i/√163)` to `bits/2` bits, with its isolating interval.
pub fn locate_f_root(bits: usize) -> Option<(RootInterval, BigReal)> {
    let cubic = IntPoly::from_i64s(&F_CUBIC);
    let v = f_at_fixed_point(bits);
    isolate_real_roots(&cubic).ok()?.into_iter().find_map(|iv| {
        let r = refine_root(&cubic, &iv, bits).ok()?;
        (&r - &v).abs_below_pow2((bits / 2) as i64).then_some((iv, r))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modeq::embedded_table;

    #[test]
    fn specialization_factors() {
        let t = embedded_table(ModEqId::Varphi);
        let r = specialization_check(&t);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn pole_sextic_roots() {
        let t = embedded_table(ModEqId::Varphi);
        let (r, roots) = pole_values_check(&t);
        assert!(r.passed(), "{r}");
        let mut got: Vec<(i64, usize)> = roots.iter().map(|(x, m)| (i64::try_from(x).unwrap(), *m)).collect();
        got.sort();
        assert_eq!(got, vec![(-70, 1), (-37, 1), (70, 3), (74, 1)]);
        assert!(leading_coeff_poly(&t).eval_int(&74.into()).is_zero());
    }

    #[test]
    fn cubic_root_contains_numeric_f() {
        assert!(locate_f_root(128).is_some());
    }
}
