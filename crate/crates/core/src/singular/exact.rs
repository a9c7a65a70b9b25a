//! Exact ℚ(u) checks at `τ = i/√163` and the closed-form constants.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{SingularContext, SingularError};
use crate::modeq::f_at_fixed_point;
use crate::numkernel::{poly_eval_alg, AlgebraicNumber, BigReal, IntPoly};
use crate::qseries::numeric;
use crate::quatforms::GramSet;
use crate::report::CheckReport;

/// `θ_{Iᵢ}/θ_{I₁}` at `i/√163` for `i = 2..8`, as `([c₀, c₁, c₂], den)` in the basis `1, u, u²`.
pub const THETA_RATIOS: [([i64; 3], i64); 7] = [
    ([10681241, 1015272, 51856], 21360009),
    ([59401, 12408, 644], 176529),
    ([26905, 2592, -124], 102201),
    ([1634123, -68928, 448], 7120003),
    ([81593, 17064, 868], 374737),
    ([1528883, 77288, -3792], 7120003),
    ([133633, 19864, 400], 647273),
];

/// Minimal polynomials (ascending) of `f, g₁, …, g₆` at `i/√163`.
pub const VALUE_MINPOLYS: [(&str, [i64; 4]); 7] = [
    ("f", [-160, -512, -400, 231]),
    ("g1", [-211600, -148896, -36436, 231]),
    ("g2", [-11153, -19899, -11843, 231]),
    ("g3", [-176, 216, -80, 3]),
    ("g4", [-335, -7, -117, 11]),
    ("g5", [-81, -63, -19, 11]),
    ("g6", [-116964, 86760, -22020, 77]),
];

/// `f(i/√163)` in ℚ(u): `(64u² + 1372u + 11680)/4389`.
pub const F_VALUE: ([i64; 3], i64) = ([11680, 1372, 64], 4389);

/// Numeric tolerance for theta-value cross-checks.
pub const THETA_TOL_DIGITS: u32 = 20;

fn ctx163() -> Result<SingularContext, SingularError> {
    SingularContext::new(163)
}

/// Theta ratios at the singular point as elements of ℚ(u).
#[derive(Clone, Debug)]
pub struct ThetaRatioTable {
    /// `r₂ .. r₈`.
    pub ratios: Vec<AlgebraicNumber>,
}

impl ThetaRatioTable {
    pub fn new(ctx: &SingularContext) -> Self {
        let ratios = THETA_RATIOS.iter().map(|(c, d)| ctx.field.from_ints(c, *d)).collect();
        ThetaRatioTable { ratios }
    }

    /// `rᵢ` for `i = 1..8`, with `r₁ = 1`.
    pub fn r(&self, i: usize) -> AlgebraicNumber {
        if i == 1 {
            self.ratios[0].field().from_int(1)
        } else {
            self.ratios[i - 2].clone()
        }
    }

    /// `f, g₁, …, g₆` at `i/√163`, in the order of [`VALUE_MINPOLYS`].
    pub fn function_values(&self) -> Result<Vec<AlgebraicNumber>, SingularError> {
        let den = &self.r(6) - &self.r(7);
        let q = |a: AlgebraicNumber| a.try_div(&den);
        let mut out = vec![q(&self.r(7) - &self.r(8))?];
        for i in 1..=5 {
            out.push(q(&self.r(i) - &self.r(i + 1))?);
        }
        out.push(q(self.r(6).scale(&BigRational::from_integer(4.into())))?);
        Ok(out)
    }
}

/// Discriminant of `a x³ + b x² + c x + d` given ascending coefficients.
pub fn cubic_discriminant(p: &IntPoly) -> BigInt {
    let (d, c, b, a) = (p.coeff(0), p.coeff(1), p.coeff(2), p.coeff(3));
    BigInt::from(18) * &a * &b * &c * &d - BigInt::from(4) * b.pow(3) * &d + b.pow(2) * c.pow(2)
        - BigInt::from(4) * &a * c.pow(3)
        - BigInt::from(27) * a.pow(2) * d.pow(2)
}

/// Theta values `θ_{I₁} .. θ_{I₈}` at `q₀ = e^{-π/√163}`.
pub fn theta_values_at_fixed_point(bits: usize) -> Vec<BigReal> {
    let wp = bits + 32;
    let s = BigReal::from_i64(163, wp).sqrt().expect("positive");
    let q0 = numeric::nome_at_imaginary(&s.recip(), wp);
    GramSet::embedded_p163()
        .matrices
        .iter()
        .map(|(_, m)| numeric::theta_gram_at(m, &q0, wp).expect("nome in range"))
        .collect()
}

/// The value of `f` at `i/√163` satisfies the tabulated cubic exactly, agrees
/// with theta evaluation, and is the cubic's only real root.
pub fn verify_f_value(bits: usize) -> Result<CheckReport, SingularError> {
    let ctx = ctx163()?;
    let v = ctx.field.from_ints(&F_VALUE.0, F_VALUE.1);
    let cubic = IntPoly::from_i64s(&VALUE_MINPOLYS[0].1);
    let exact = poly_eval_alg(&cubic, &v);
    if !exact.is_zero() {
        return Ok(CheckReport::fail("f_value", format!("cubic(v) = {exact}")));
    }
    let disc = cubic_discriminant(&cubic);
    if !disc.is_negative() {
        return Ok(CheckReport::fail("f_value", format!("discriminant {disc} admits three real roots")));
    }
    let vn = v.eval(bits)?;
    let fnum = f_at_fixed_point(bits);
    let diff = (&vn - &fnum).abs();
    let resid = cubic.eval_real(&vn).abs();
    let ok = diff.abs_below_pow10(THETA_TOL_DIGITS) && resid.abs_below_pow10(25);
    Ok(CheckReport::new(
        "f_value",
        ok,
        format!(
            "cubic(v) = 0 in Q(u); disc {disc} < 0; |v - f(q0)| = {:.2e}; |cubic(v)| = {:.2e}",
            diff.to_f64(),
            resid.to_f64()
        ),
    ))
}

/// Every function value derived from the theta ratios satisfies its cubic in
/// ℚ(u), and every ratio matches theta evaluation at `q₀`.
pub fn verify_table_consistency(bits: usize) -> Result<CheckReport, SingularError> {
    let ctx = ctx163()?;
    let table = ThetaRatioTable::new(&ctx);
    let values = table.function_values()?;
    let mut parts = Vec::new();
    for ((name, poly), v) in VALUE_MINPOLYS.iter().zip(&values) {
        let r = poly_eval_alg(&IntPoly::from_i64s(poly), v);
        let label = format!("cubic_{name}");
        parts.push(if r.is_zero() {
            CheckReport::pass(label, format!("{name} = {v}"))
        } else {
            CheckReport::fail(label, format!("minimal polynomial leaves {r}"))
        });
    }
    let fv = ctx.field.from_ints(&F_VALUE.0, F_VALUE.1);
    parts.push(CheckReport::new("ratio_f_matches", values[0] == fv, format!("f = {}", values[0])));
    let th = theta_values_at_fixed_point(bits);
    for i in 2..=8 {
        let num = &th[i - 1] / &th[0];
        let alg = table.r(i).eval(bits)?;
        let d = (&num - &alg).abs();
        parts.push(CheckReport::new(
            format!("ratio_r{i}_numeric"),
            d.abs_below_pow10(THETA_TOL_DIGITS),
            format!("residual {:.2e}", d.to_f64()),
        ));
    }
    Ok(CheckReport::combine("value_tables", &parts))
}

/// Intermediate quantities of the `G₂` computation.
#[derive(Clone, Debug)]
pub struct G2Chain {
    /// `6 + 12 r₂ + 24 Σ_{i≥3} rᵢ`.
    pub a: AlgebraicNumber,
    /// `A (1 + u³)`.
    pub a_scaled: AlgebraicNumber,
    /// `40u² - 1066800u + 8003`, which equals `418 √(163 (1 - u⁶))`.
    pub radical: AlgebraicNumber,
    pub value: BigRational,
}

fn alg(ctx: &SingularContext, c: [i64; 3], d: i64) -> AlgebraicNumber {
    ctx.field.from_ints(&c, d)
}

/// Runs the chain, failing on the first identity that does not hold exactly.
pub fn g2_chain() -> Result<G2Chain, SingularError> {
    let ctx = ctx163()?;
    let t = ThetaRatioTable::new(&ctx);
    let u = ctx.generator.clone();
    let one = ctx.field.from_int(1);
    let mut a =
        t.r(1).scale(&BigRational::from_integer(6.into())) + t.r(2).scale(&BigRational::from_integer(12.into()));
    for i in 3..=8 {
        a = &a + &t.r(i).scale(&BigRational::from_integer(24.into()));
    }
    let a_printed = alg(&ctx, [336327974, 33631776, 1044640], 7120003);
    if a != a_printed {
        return Err(SingularError::Identity(format!("span weights give A = {a}")));
    }
    let a_scaled = &a * &(&one + &u.pow(3));
    let b = alg(&ctx, [8003, 748992, 40], 209);
    if a_scaled != b {
        return Err(SingularError::Identity(format!("A(1+u^3) = {a_scaled}")));
    }
    let radical = alg(&ctx, [8003, -1066800, 40], 1);
    let lhs = (&one - &u.pow(6)).scale(&BigRational::from_integer((163 * 418 * 418).into()));
    if lhs != radical.pow(2) {
        return Err(SingularError::Identity("163(1-u^6)·418² differs from the squared radical".into()));
    }
    if radical.sign()? <= 0 {
        return Err(SingularError::Identity("radical representative is not positive".into()));
    }
    // G₂ = (radical/418 - A(1+u³)/2) / (3u)
    let half = BigRational::new(1.into(), 2.into());
    let diff = &radical.scale(&BigRational::new(1.into(), 418.into())) - &a_scaled.scale(&half);
    let g2 = diff.try_div(&u.scale(&BigRational::from_integer(3.into())))?;
    let value = g2.as_rational().ok_or_else(|| SingularError::Identity(format!("G2 = {g2} is not rational")))?;
    Ok(G2Chain { a, a_scaled, radical, value })
}

/// `G₂` at `n = 163` as an exact integer.
pub fn g2_exact() -> Result<BigInt, SingularError> {
    let v = g2_chain()?.value;
    if !v.is_integer() {
        return Err(SingularError::Identity(format!("G2 = {v} is not an integer")));
    }
    Ok(v.to_integer())
}

pub fn g2_check() -> CheckReport {
    CheckReport::timed(|| match g2_exact() {
        Ok(v) if v == BigInt::from(-1448) => {
            CheckReport::pass("g2_exact", "G2 = -1448 in Q(u), coordinates (-1448, 0, 0)")
        }
        Ok(v) => CheckReport::fail("g2_exact", format!("G2 = {v}")),
        Err(e) => CheckReport::fail("g2_exact", e.to_string()),
    })
}

/// Integer identities tying the series constants to `G₂`:
/// `163 (640320³ + 1728) = 144 · 545140134²`, `1728 · 53360³ = 640320³`,
/// and `2 · 545140134 - 1448 · 640320 = 12 · 13591409`.
pub fn constant_recovery() -> CheckReport {
    let b = |v: i64| BigInt::from(v);
    let j = b(640320);
    let j3 = j.pow(3);
    let a = b(545140134);
    let v_identity = b(163) * (&j3 + b(1728)) == b(144) * &a * &a;
    let sixth = b(1728) * b(53360).pow(3) == j3;
    let lin = b(2) * &a;
    let g2 = b(-1448);
    let constant = &lin + &g2 * &j;
    let target = b(12) * b(13591409);
    let ok = v_identity && sixth && lin == b(1090280268) && constant == target;
    CheckReport::new(
        "constant_recovery",
        ok,
        format!(
            "{lin} - 1448·640320 = {constant} = 12·13591409 ({target}); v_identity {v_identity}; sixth root {sixth}"
        ),
    )
}

/// `w = (2kk′)² = 4k²(1-k²)` and `(k′)² - k² = 1 - 2k²` as polynomials in `k`.
fn w_and_diff() -> (IntPoly, IntPoly) {
    (IntPoly::from_i64s(&[0, 0, 4, 0, -4]), IntPoly::from_i64s(&[1, 0, -2]))
}

/// `((1-2k²)(1+8w))² - (1-4w)³ - 27w` in ℤ[k]. Zero exactly when
/// `2v = (1-2k²)(1+8w)/(1-4w)^{3/2}` satisfies `(2v)² = 1 - c`.
pub fn v_c_residual() -> IntPoly {
    let (w, d) = w_and_diff();
    let one = IntPoly::from_i64s(&[1]);
    let num = &d * &(&one + &w.scale(&8.into()));
    let t = &one - &w.scale(&4.into());
    &(&(&num * &num) - &t.pow(3)) - &w.scale(&27.into())
}

/// The same identity with `2v` over `(1-4w)` rather than `(1-4w)^{3/2}`:
/// `((1-2k²)(1+8w))² (1-4w) - (1-4w)³ - 27w`, which does not vanish.
pub fn v_c_residual_first_power() -> IntPoly {
    let (w, d) = w_and_diff();
    let one = IntPoly::from_i64s(&[1]);
    let num = &d * &(&one + &w.scale(&8.into()));
    let t = &one - &w.scale(&4.into());
    &(&(&(&num * &num) * &t) - &t.pow(3)) - &w.scale(&27.into())
}

/// `(2v)²` and `1 - c` at a rational `k`, using the `(1-4w)^{3/2}` form of `v`.
pub fn v_c_sides_at(k: &BigRational) -> Option<(BigRational, BigRational)> {
    let one = BigRational::one();
    let w = BigRational::from_integer(4.into()) * k * k * (&one - k * k);
    let t = &one - BigRational::from_integer(4.into()) * &w;
    if t.is_zero() {
        return None;
    }
    let d = &one - BigRational::from_integer(2.into()) * k * k;
    let num = &d * (&one + BigRational::from_integer(8.into()) * &w);
    let lhs = &num * &num / (&t * &t * &t);
    let c = -BigRational::from_integer(27.into()) * &w / (&t * &t * &t);
    Some((lhs, one - c))
}

pub fn verify_v_c_identity() -> CheckReport {
    let r = v_c_residual();
    let other = v_c_residual_first_power();
    let spots = [BigRational::zero(), BigRational::new(1.into(), 2.into()), BigRational::new(1.into(), 3.into())];
    let spot_ok = spots.iter().all(|k| v_c_sides_at(k).is_some_and(|(a, b)| a == b));
    CheckReport::new(
        "v_c_identity",
        r.is_zero() && spot_ok,
        format!(
            "residual in Z[k] is {}; spot values k = 0, 1/2, 1/3 agree: {spot_ok}; with (1-4w)^1 in 2v the residual is {}",
            if r.is_zero() { "0".to_string() } else { r.to_string() },
            other
        ),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g2_is_minus_1448() {
        let c = g2_chain().unwrap();
        assert_eq!(c.value, BigRational::from_integer((-1448).into()));
        assert_eq!(c.radical.coords().len(), 3);
        assert_eq!(g2_exact().unwrap(), BigInt::from(-1448));
    }

    #[test]
    fn constants() {
        assert!(constant_recovery().passed());
        assert_eq!(BigInt::from(1090280268) - BigInt::from(1448) * 640320, BigInt::from(163096908));
    }

    #[test]
    fn v_c() {
        assert!(v_c_residual().is_zero());
        assert!(!v_c_residual_first_power().is_zero());
        let (a, b) = v_c_sides_at(&BigRational::new(1.into(), 2.into())).unwrap();
        assert_eq!(a, b);
        assert!(verify_v_c_identity().passed());
    }

    #[test]
    fn tables_exact() {
        let ctx = SingularContext::new(163).unwrap();
        let vals = ThetaRatioTable::new(&ctx).function_values().unwrap();
        for ((name, p), v) in VALUE_MINPOLYS.iter().zip(&vals) {
            assert!(poly_eval_alg(&IntPoly::from_i64s(p), v).is_zero(), "{name}");
        }
        // g₃ satisfies 3x³ - 80x² + 216x - 176
        assert!(poly_eval_alg(&IntPoly::from_i64s(&[-176, 216, -80, 3]), &vals[3]).is_zero());
    }

    #[test]
    fn discriminant_sign() {
        assert!(cubic_discriminant(&IntPoly::from_i64s(&VALUE_MINPOLYS[0].1)).is_negative());
        // x³ - x has three real roots
        assert!(cubic_discriminant(&IntPoly::from_i64s(&[0, -1, 0, 1])).is_positive());
    }
}
