//! Arbitrary-precision checks of the identities at singular moduli.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;

use super::{SingularContext, SingularError};
use crate::numkernel::BigReal;
use crate::qseries::numeric as qn;
use crate::report::CheckReport;

/// Extra working bits on top of the requested precision.
pub const GUARD_BITS: usize = 32;

/// Where a nome-dependent check is evaluated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Nome {
    /// A rational nome, written in decimal.
    Exact(BigRational),
    /// `e^{-π√n}`.
    Singular(i64),
}

impl Nome {
    pub fn value(&self, bits: usize) -> BigReal {
        match self {
            Nome::Exact(r) => BigReal::from_rational(r, bits),
            Nome::Singular(n) => qn::nome_at_imaginary(&BigReal::from_i64(*n, bits).sqrt().expect("n > 0"), bits),
        }
    }
}

impl fmt::Display for Nome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Nome::Exact(r) => {
                let v: f64 = num_traits::ToPrimitive::to_f64(r).unwrap_or(f64::NAN);
                write!(f, "{v}")
            }
            Nome::Singular(n) => write!(f, "e^-pi*sqrt({n})"),
        }
    }
}

impl FromStr for Nome {
    type Err = SingularError;
    fn from_str(s: &str) -> Result<Self, SingularError> {
        let bad = || SingularError::BadCheckName(s.to_string());
        if let Some(n) = s.strip_prefix("e^-pi*sqrt(").and_then(|r| r.strip_suffix(')')) {
            return Ok(Nome::Singular(n.parse().map_err(|_| bad())?));
        }
        let (int, frac) = s.split_once('.').unwrap_or((s, ""));
        let digits = format!("{int}{frac}");
        let num: num_bigint::BigInt = digits.parse().map_err(|_| bad())?;
        let den = num_bigint::BigInt::from(10).pow(frac.len() as u32);
        Ok(Nome::Exact(BigRational::new(num, den)))
    }
}

/// The named numeric identities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NumericCheck {
    /// `c(k(e^{-π√163})) = -1/53360³`.
    CSingular,
    /// Cubic for `n` at `s = (2kk′)^{1/3}`, `k = k(e^{-π√n})`.
    MinpolyS(i64),
    /// The binary theta square against `θ₃⁴(1 + 2kk′)/(2√n)` at `e^{-π/√n}`.
    BinaryTheta(i64),
    /// `n P(e^{-π√n}) + P(e^{-π/√n}) = 6√n/π`.
    PTransform(i64),
    /// `(1 - 4w)^{1/2} θ₃⁴ = ₃F₂(1/6, 5/6, 1/2; 1, 1; c)`.
    Hypergeometric(Nome),
    /// `2^{4/3} η⁴(q²) (kk′)^{-2/3} = θ₃⁴(q)`.
    ThetaEta(Nome),
    /// `G₀` from `v`, `c` and `G₂` against `12 · 13591409 / 640320^{3/2}`.
    G0Const,
}

impl fmt::Display for NumericCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NumericCheck::CSingular => write!(f, "c_singular"),
            NumericCheck::MinpolyS(n) => write!(f, "minpoly_s({n})"),
            NumericCheck::BinaryTheta(n) => write!(f, "binary_theta({n})"),
            NumericCheck::PTransform(n) => write!(f, "p_transform({n})"),
            NumericCheck::Hypergeometric(q) => write!(f, "hyp3f2({q})"),
            NumericCheck::ThetaEta(q) => write!(f, "theta3_eta({q})"),
            NumericCheck::G0Const => write!(f, "G0_const"),
        }
    }
}

impl FromStr for NumericCheck {
    type Err = SingularError;
    fn from_str(s: &str) -> Result<Self, SingularError> {
        let bad = || SingularError::BadCheckName(s.to_string());
        let (head, arg) = match s.split_once('(') {
            Some((h, rest)) => (h, Some(rest.strip_suffix(')').ok_or_else(bad)?)),
            None => (s, None),
        };
        let int = |a: Option<&str>, default: Option<i64>| -> Result<i64, SingularError> {
            match a {
                Some(a) => a.parse().map_err(|_| bad()),
                None => default.ok_or_else(bad),
            }
        };
        Ok(match head {
            "c_singular" => NumericCheck::CSingular,
            "minpoly_s" => NumericCheck::MinpolyS(int(arg, None)?),
            "binary_theta" => NumericCheck::BinaryTheta(int(arg, Some(163))?),
            "p_transform" => NumericCheck::PTransform(int(arg, Some(163))?),
            "hyp3f2" => NumericCheck::Hypergeometric(arg.ok_or_else(bad)?.parse()?),
            "theta3_eta" => NumericCheck::ThetaEta(arg.ok_or_else(bad)?.parse()?),
            "G0_const" | "g0_const" => NumericCheck::G0Const,
            _ => return Err(bad()),
        })
    }
}

/// Result of a numeric check: the report plus the raw residual.
#[derive(Clone, Debug)]
pub struct NumericOutcome {
    pub report: CheckReport,
    pub residual: Option<BigReal>,
}

/// `(k, k′)` at the nome `q`.
fn moduli(q: &BigReal, bits: usize) -> Result<(BigReal, BigReal), SingularError> {
    Ok(qn::modulus_at(q, bits)?)
}

/// `w = (2kk′)²`.
fn w_of(k: &BigReal, kp: &BigReal) -> BigReal {
    let t = (k * kp).mul_i64(2);
    &t * &t
}

/// `c = -27w/(1-4w)³`.
fn c_of(w: &BigReal, wp: usize) -> BigReal {
    let t = &BigReal::one(wp) - &w.mul_i64(4);
    -(&w.mul_i64(27) / &t.powi(3))
}

/// `Σ_{x,y} q^{2x² + 2xy + ((n+1)/2) y²}` with a tail bound from
/// `#{(x, y) : form <= B} <= (2√B + 1)(2√(B/m) + 1)`, `m = (n+1)/2 - 1/2`.
fn binary_theta(n: i64, q: &BigReal, bits: usize) -> BigReal {
    let c = (n + 1) / 2;
    let lq = -q.ln().expect("q > 0").to_f64();
    // cutoff B with (B + 2)² q^B / (1 - q) well below 2^-bits
    let target = bits as f64 * std::f64::consts::LN_2 + 8.0;
    let om = -(1.0 - q.to_f64()).ln();
    let mut b = 1i64;
    while (b as f64) * lq - 2.0 * ((b + 2) as f64).ln() - om < target {
        b += 1;
    }
    let ymax = ((b as f64) / (c as f64 - 0.5)).sqrt().ceil() as i64 + 1;
    let xmax = ((b as f64) / 2.0).sqrt().ceil() as i64 + ymax + 1;
    let mut counts = vec![0u64; (b + 1) as usize];
    for y in -ymax..=ymax {
        for x in -xmax..=xmax {
            let e = 2 * x * x + 2 * x * y + c * y * y;
            if e <= b {
                counts[e as usize] += 1;
            }
        }
    }
    let mut acc = BigReal::zero(bits);
    let mut pw = BigReal::one(bits);
    for cnt in counts {
        if cnt > 0 {
            acc = &acc + &pw.mul_i64(cnt as i64);
        }
        pw = &pw * q;
    }
    acc
}

/// `₃F₂(1/6, 5/6, 1/2; 1, 1; c)` for `|c| < 1`, with the ratio-test tail.
pub fn hyp3f2(c: &BigReal, bits: usize) -> Result<BigReal, SingularError> {
    let cf = c.to_f64().abs();
    if cf >= 1.0 {
        return Err(SingularError::Domain(format!("3F2 argument {:.4} has |c| >= 1", c.to_f64())));
    }
    let mut term = BigReal::one(bits);
    let mut sum = BigReal::one(bits);
    let target = -(bits as f64) - 8.0;
    let mut m = 0i64;
    loop {
        // t_{m+1}/t_m = (6m+1)(6m+5)(2m+1) c / (72 (m+1)³)
        let num = (6 * m + 1) * (6 * m + 5) * (2 * m + 1);
        let den = 72 * (m + 1) * (m + 1) * (m + 1);
        term = (&term * c).mul_i64(num).div_i64(den);
        sum = &sum + &term;
        m += 1;
        // later ratios stay below |c|
        let tail = term.to_f64().abs() * cf / (1.0 - cf);
        if tail == 0.0 || tail.log2() < target {
            break;
        }
    }
    Ok(sum)
}

fn outcome(name: String, lhs: &BigReal, rhs: &BigReal, bits: usize, detail: &str) -> NumericOutcome {
    let r = (lhs - rhs).abs();
    let ok = r.abs_below_pow2(bits as i64);
    let report = CheckReport::new(name, ok, format!("{detail}residual {:.3e}", r.to_f64()));
    NumericOutcome { report, residual: Some(r) }
}

fn failed(name: String, e: SingularError) -> NumericOutcome {
    NumericOutcome { report: CheckReport::fail(name, e.to_string()), residual: None }
}

/// Evaluates both sides at `bits + GUARD_BITS` and passes when they agree to
/// `2^-bits`.
pub fn numeric_check(check: &NumericCheck, bits: usize) -> NumericOutcome {
    let name = check.to_string();
    let t0 = std::time::Instant::now();
    let mut out = match run(check, bits) {
        Ok((lhs, rhs, detail)) => outcome(name.clone(), &lhs, &rhs, bits, &detail),
        Err(e) => failed(name, e),
    };
    out.report.elapsed_ms = t0.elapsed().as_millis() as u64;
    out
}

fn run(check: &NumericCheck, bits: usize) -> Result<(BigReal, BigReal, String), SingularError> {
    let wp = bits + GUARD_BITS;
    let one = BigReal::one(wp);
    match check {
        NumericCheck::CSingular => {
            let q = Nome::Singular(163).value(wp);
            let (k, kp) = moduli(&q, wp)?;
            let c = c_of(&w_of(&k, &kp), wp);
            let rhs = -(BigReal::from_i64(53360, wp).powi(3).recip());
            Ok((c, rhs, String::new()))
        }
        NumericCheck::MinpolyS(n) => {
            let ctx = SingularContext::new(*n)?;
            let q = Nome::Singular(*n).value(wp);
            let (k, kp) = moduli(&q, wp)?;
            let s = (&k * &kp).mul_i64(2).nth_root(3)?;
            Ok((ctx.minpoly_s.eval_real(&s), BigReal::zero(wp), format!("s = {:.12e}; ", s.to_f64())))
        }
        NumericCheck::BinaryTheta(n) => {
            if n % 4 != 3 {
                return Err(SingularError::UnsupportedN(*n));
            }
            let sn = BigReal::from_i64(*n, wp).sqrt()?;
            let q0 = qn::nome_at_imaginary(&sn.recip(), wp);
            let b = binary_theta(*n, &q0, wp);
            let lhs = &b * &b;
            let (k, kp) = moduli(&q0, wp)?;
            let t3 = qn::theta3_at(&q0, wp)?.powi(4);
            let rhs = &(&t3 * &(&one + &(&k * &kp).mul_i64(2))) / &sn.mul_i64(2);
            Ok((lhs, rhs, String::new()))
        }
        NumericCheck::PTransform(n) => {
            let sn = BigReal::from_i64(*n, wp).sqrt()?;
            let qa = qn::nome_at_imaginary(&sn, wp);
            let qb = qn::nome_at_imaginary(&sn.recip(), wp);
            let lhs = &qn::eisenstein_p_at(&qa, wp)?.mul_i64(*n) + &qn::eisenstein_p_at(&qb, wp)?;
            let rhs = &sn.mul_i64(6) / &BigReal::pi(wp);
            Ok((lhs, rhs, String::new()))
        }
        NumericCheck::Hypergeometric(nome) => {
            let q = nome.value(wp);
            let (k, kp) = moduli(&q, wp)?;
            let w = w_of(&k, &kp);
            let t = &one - &w.mul_i64(4);
            if !t.is_positive() {
                return Err(SingularError::Domain(format!(
                    "1 - 4(2kk')^2 = {:.4} is not positive at q = {nome}",
                    t.to_f64()
                )));
            }
            let c = c_of(&w, wp);
            let rhs = hyp3f2(&c, wp)?;
            let lhs = &t.sqrt()? * &qn::theta3_at(&q, wp)?.powi(4);
            Ok((lhs, rhs, format!("c = {:.6e}; ", c.to_f64())))
        }
        NumericCheck::ThetaEta(nome) => {
            let q = nome.value(wp);
            let (k, kp) = moduli(&q, wp)?;
            let x = &q * &q;
            // η⁴(q²) = q^{1/3} ∏ (1 - q^{2n})⁴
            let eta4 = &q.nth_root(3)? * &qn::euler_product_at(&x, wp)?.powi(4);
            let two43 = BigReal::from_i64(16, wp).nth_root(3)?;
            let kk = (&k * &kp).nth_root(3)?;
            let lhs = &(&two43 * &eta4) / &(&kk * &kk);
            Ok((lhs, qn::theta3_at(&q, wp)?.powi(4), String::new()))
        }
        NumericCheck::G0Const => {
            let ctx = SingularContext::new(163)?;
            let q = Nome::Singular(163).value(wp);
            let (k, kp) = moduli(&q, wp)?;
            let w = w_of(&k, &kp);
            let c = c_of(&w, wp);
            let two_v = (&one - &c).sqrt()?;
            let sn = BigReal::from_i64(163, wp).sqrt()?;
            let sixth = (&(-&c) / &BigReal::from_i64(1728, wp)).nth_root(6)?;
            let lhs = &(&(&sn * &two_v) / &BigReal::from_i64(6, wp)) + &sixth.mul_i64(ctx.g2_expected);
            let j = BigReal::from_i64(640320, wp);
            let rhs = &BigReal::from_i64(12 * 13591409, wp) / &(&j * &j.sqrt()?);
            Ok((lhs, rhs, String::new()))
        }
    }
}

/// The checks of the acceptance suite, with their decimal tolerances.
pub fn standard_suite() -> Vec<(NumericCheck, u32)> {
    let mut v = vec![(NumericCheck::CSingular, 30)];
    for n in super::SUPPORTED_N {
        v.push((NumericCheck::MinpolyS(n), 30));
    }
    v.extend([
        (NumericCheck::BinaryTheta(163), 20),
        (NumericCheck::PTransform(163), 25),
        (NumericCheck::ThetaEta(Nome::Exact(BigRational::new(1.into(), 20.into()))), 25),
        (NumericCheck::ThetaEta(Nome::Singular(163)), 25),
        (NumericCheck::Hypergeometric(Nome::Exact(BigRational::new(1.into(), 20.into()))), 25),
        (NumericCheck::Hypergeometric(Nome::Singular(163)), 25),
        (NumericCheck::G0Const, 20),
    ]);
    v
}

/// Runs [`numeric_check`] and additionally requires the residual to be below
/// `10^-digits`.
pub fn numeric_check_tol(check: &NumericCheck, bits: usize, digits: u32) -> NumericOutcome {
    let mut out = numeric_check(check, bits);
    if let Some(r) = &out.residual {
        if !r.abs_below_pow10(digits) {
            out.report = CheckReport::fail(out.report.name.clone(), format!("{} above 1e-{digits}", out.report.detail));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for (c, _) in standard_suite() {
            assert_eq!(c.to_string().parse::<NumericCheck>().unwrap(), c);
        }
        assert_eq!("binary_theta".parse::<NumericCheck>().unwrap(), NumericCheck::BinaryTheta(163));
        assert!("bogus".parse::<NumericCheck>().is_err());
    }

    #[test]
    fn c_singular_and_minpolys() {
        assert!(numeric_check(&NumericCheck::CSingular, 128).report.passed());
        let r = numeric_check(&NumericCheck::MinpolyS(19), 128);
        assert!(r.report.passed(), "{}", r.report);
    }

    #[test]
    fn hyp_series_small_argument() {
        // ₃F₂(…; 0) = 1 and the first-order term is 5c/72
        let c = BigReal::from_f64(1e-6, 128);
        let v = hyp3f2(&c, 128).unwrap().to_f64();
        assert!((v - (1.0 + 5e-6 / 72.0)).abs() < 1e-12);
        assert!(hyp3f2(&BigReal::from_f64(1.5, 64), 64).is_err());
    }
}
