use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::machin::{machin_digits, machin_pi};
use super::split::{split, SplitNode, TermSpec};
use super::{digits_to_bits, PiError};
use crate::numkernel::BigReal;
use crate::report::CheckReport;
use crate::singular::{SingularContext, GUARD_BITS};

/// `π = C^{3/2} / (12 Σ (A m + B) (-1)^m (6m)! / ((3m)! (m!)³ C^{3m}))`.
pub const CHUD_A: i64 = 545140134;
pub const CHUD_B: i64 = 13591409;
pub const CHUD_C: i64 = 640320;

/// Decimal digits gained per Chudnovsky term, rounded down.
const CHUD_DIGITS_PER_TERM: usize = 14;

pub struct ChudnovskyTerms;

impl TermSpec for ChudnovskyTerms {
    fn p(&self, m: u64) -> BigInt {
        let m = m as i128;
        BigInt::from(-(6 * m - 5) * (2 * m - 1) * (6 * m - 1))
    }

    fn q(&self, m: u64) -> BigInt {
        let m = BigInt::from(m);
        let c3 = BigInt::from(CHUD_C).pow(3) / 24;
        &m * &m * &m * c3
    }

    fn a(&self, m: u64) -> BigInt {
        BigInt::from(CHUD_B) + BigInt::from(CHUD_A) * m
    }
}

/// Terms used by [`chudnovsky_pi`] for `digits` decimals.
pub fn chudnovsky_terms(digits: usize) -> u64 {
    (digits.div_ceil(CHUD_DIGITS_PER_TERM) + 2) as u64
}

fn chud_from_node(node: &SplitNode, bits: usize) -> BigReal {
    let wp = bits + GUARD_BITS;
    let c = BigReal::from_i64(CHUD_C, wp);
    let root = c.sqrt().expect("positive");
    let q = BigReal::from_bigint(&node.q, wp);
    let t = BigReal::from_bigint(&node.t, wp);
    (&(&c * &root) * &q / t.mul_i64(12)).with_precision(bits)
}

/// π from the first `terms` Chudnovsky terms at `bits` bits.
pub fn chudnovsky_partial(terms: u64, bits: usize) -> BigReal {
    chud_from_node(&split(&ChudnovskyTerms, 0, terms.max(1)), bits)
}

pub fn chudnovsky_pi(digits: usize) -> BigReal {
    chudnovsky_partial(chudnovsky_terms(digits), digits_to_bits(digits))
}

/// First decimal position where two `"3.…"` strings differ.
fn first_mismatch(a: &str, b: &str) -> Option<usize> {
    a.bytes().zip(b.bytes()).position(|(x, y)| x != y).map(|i| i.saturating_sub(1))
}

/// Chudnovsky digits against the Machin oracle, as `pi_<digits>`.
pub fn chudnovsky_check(digits: usize) -> (CheckReport, String) {
    let mut out = String::new();
    let report = CheckReport::timed(|| {
        out = chudnovsky_pi(digits).to_fixed_decimal(digits);
        let oracle = machin_digits(digits);
        let name = format!("pi_{digits}");
        match first_mismatch(&out, &oracle) {
            None if out.len() == oracle.len() => CheckReport::pass(name, format!("{digits} digits agree with machin")),
            None => CheckReport::fail(name, "length mismatch"),
            Some(k) => CheckReport::fail(name, format!("first mismatch at decimal {k}")),
        }
    });
    (report, out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RamanujanId {
    /// `1/π = (2√2/99²) Σ (26390m+1103) (4m)! / (396^{4m} (m!)⁴)`
    R1103,
    /// `1/π = (2/84²) Σ (21460m+1123) (-1)^m (4m)! / ((84√2)^{4m} (m!)⁴)`
    R1123,
}

impl RamanujanId {
    pub fn name(self) -> &'static str {
        match self {
            RamanujanId::R1103 => "r1103",
            RamanujanId::R1123 => "r1123",
        }
    }

    fn digits_per_term(self) -> usize {
        match self {
            RamanujanId::R1103 => 7,
            RamanujanId::R1123 => 5,
        }
    }
}

impl FromStr for RamanujanId {
    type Err = PiError;
    fn from_str(s: &str) -> Result<Self, PiError> {
        match s {
            "r1103" => Ok(RamanujanId::R1103),
            "r1123" => Ok(RamanujanId::R1123),
            _ => Err(PiError::UnknownSeries(s.to_string())),
        }
    }
}

pub struct RamanujanTerms(pub RamanujanId);

impl TermSpec for RamanujanTerms {
    fn p(&self, m: u64) -> BigInt {
        let m4 = BigInt::from(4 * m);
        let p = (&m4 - 3) * (&m4 - 2) * (&m4 - 1) * &m4;
        match self.0 {
            RamanujanId::R1103 => p,
            RamanujanId::R1123 => -p,
        }
    }

    fn q(&self, m: u64) -> BigInt {
        let m4 = BigInt::from(m).pow(4);
        match self.0 {
            RamanujanId::R1103 => m4 * BigInt::from(396).pow(4),
            // (84√2)⁴ = 4·84⁴
            RamanujanId::R1123 => m4 * BigInt::from(84).pow(4) * 4,
        }
    }

    fn a(&self, m: u64) -> BigInt {
        match self.0 {
            RamanujanId::R1103 => BigInt::from(1103) + BigInt::from(26390) * m,
            RamanujanId::R1123 => BigInt::from(1123) + BigInt::from(21460) * m,
        }
    }
}

/// π from the first `terms` terms of a Ramanujan series.
pub fn ramanujan_partial(id: RamanujanId, terms: u64, bits: usize) -> BigReal {
    let wp = bits + GUARD_BITS;
    let node = split(&RamanujanTerms(id), 0, terms.max(1));
    let q = BigReal::from_bigint(&node.q, wp);
    let t = BigReal::from_bigint(&node.t, wp);
    let v = match id {
        RamanujanId::R1103 => {
            let r2 = BigReal::from_i64(2, wp).sqrt().expect("positive");
            &BigReal::from_i64(9801, wp) * &q / (&r2.mul_i64(2) * &t)
        }
        RamanujanId::R1123 => &BigReal::from_i64(3528, wp) * &q / t,
    };
    v.with_precision(bits)
}

fn oracle_check(name: String, value: &BigReal, digits: usize) -> CheckReport {
    let err = (value - &machin_pi(digits)).abs();
    let ok = err.abs_below_pow10(digits as u32);
    CheckReport::new(name, ok, format!("|pi - oracle| = {:.3e}", err.to_f64()))
}

pub fn ramanujan_series_check(id: RamanujanId, digits: usize) -> CheckReport {
    CheckReport::timed(|| {
        let terms = (digits.div_ceil(id.digits_per_term()) + 2) as u64;
        let v = ramanujan_partial(id, terms, digits_to_bits(digits));
        oracle_check(format!("{}_{digits}", id.name()), &v, digits)
    })
}

/// Data of `1/π = Σ (2√n v m + G₀) b_m c^m` at `τ = i√n`.
#[derive(Clone, Debug)]
pub struct SeriesSpec {
    pub n: i64,
    /// `c = -27w/(1-4w)³` from `w = s⁶`, `s` the real root of the cubic for `n`.
    pub c: BigReal,
    /// `-1728/J³` with `j = -J³`; agrees with `c` numerically.
    pub c_exact: BigRational,
    /// `2√n v = √n √(1-c)`.
    pub slope: BigReal,
    /// `√n v / 3 + G₂ (-c/1728)^{1/6}`.
    pub g0: BigReal,
    pub bits: usize,
}

impl SeriesSpec {
    pub fn new(n: i64, bits: usize) -> Result<Self, PiError> {
        let ctx = SingularContext::new(n)?;
        let wp = bits + GUARD_BITS;
        let one = BigReal::one(wp);
        let s = ctx.s_value(wp)?;
        let w = s.powi(6);
        let d = &one - &w.mul_i64(4);
        let c = &w.mul_i64(-27) / &d.powi(3);
        if !c.abs_below_pow2(0) {
            return Err(PiError::Divergent(c.to_f64()));
        }
        let two_v = (&one - &c).sqrt()?;
        let rn = BigReal::from_i64(n, wp).sqrt()?;
        let slope = &rn * &two_v;
        let sixth = (&(-&c) / &BigReal::from_i64(1728, wp)).nth_root(6)?;
        let g0 = &slope.div_i64(6) + &sixth.mul_i64(ctx.g2_expected);
        let j3 = BigInt::from(ctx.j_cube_root()).pow(3);
        let c_exact = BigRational::new(BigInt::from(-1728), j3);
        Ok(SeriesSpec { n, c, c_exact, slope, g0, bits })
    }

    /// `(A, B)` with `2√n v = 12A/J^{3/2}` and `G₀ = 12B/J^{3/2}`, when
    /// `n(1-c)J³/144` is a square integer.
    pub fn integer_constants(&self) -> Option<(BigInt, BigRational)> {
        let ctx = SingularContext::new(self.n).ok()?;
        let j = BigInt::from(ctx.j_cube_root());
        let one = BigRational::one();
        let sq = (one - &self.c_exact) * BigRational::from_integer(BigInt::from(self.n) * j.pow(3))
            / BigRational::from_integer(BigInt::from(144));
        if !sq.is_integer() {
            return None;
        }
        let a = sq.to_integer().sqrt();
        if &a * &a != sq.to_integer() {
            return None;
        }
        let b = BigRational::new(a.clone(), BigInt::from(6))
            + BigRational::new(BigInt::from(ctx.g2_expected) * &j, BigInt::from(12));
        Some((a, b))
    }
}

/// `Σ_{m<terms} (slope·m + G₀) b_m c^m` at `spec.bits`.
pub fn general_series_partial(spec: &SeriesSpec, terms: u64) -> BigReal {
    let wp = spec.bits + GUARD_BITS;
    let mut t = BigReal::one(wp);
    let mut sum = BigReal::zero(wp);
    for m in 0..terms as i64 {
        if m > 0 {
            t = &(&t * &spec.c).mul_i64((6 * m - 1) * (6 * m - 3) * (6 * m - 5))
                / &BigReal::from_i64(216 * m * m * m, wp);
        }
        sum = &sum + &(&(&spec.slope.mul_i64(m) + &spec.g0) * &t);
    }
    sum
}

/// `1/π` from the series, summed until a term drops below `2^-bits`.
/// The term ratio is below `2|c| < 1/2`, so the tail is below the last term.
pub fn general_series_value(spec: &SeriesSpec) -> BigReal {
    let wp = spec.bits + GUARD_BITS;
    let mut t = BigReal::one(wp);
    let mut sum = spec.g0.clone();
    let mut m = 0i64;
    loop {
        m += 1;
        t = &(&t * &spec.c).mul_i64((6 * m - 1) * (6 * m - 3) * (6 * m - 5)) / &BigReal::from_i64(216 * m * m * m, wp);
        let term = &(&spec.slope.mul_i64(m) + &spec.g0) * &t;
        sum = &sum + &term;
        if term.abs_below_pow2(spec.bits as i64 + 8) {
            break;
        }
    }
    sum.with_precision(spec.bits)
}

/// `1/(general series)` against the Machin oracle, as `series_n<n>_<digits>`.
pub fn general_series_pi(n: i64, digits: usize) -> CheckReport {
    CheckReport::timed(|| {
        let name = format!("series_n{n}_{digits}");
        let spec = match SeriesSpec::new(n, digits_to_bits(digits)) {
            Ok(s) => s,
            Err(e) => return CheckReport::fail(name, format!("n={n}: {e}")),
        };
        let pi = general_series_value(&spec).recip();
        let mut r = oracle_check(name, &pi, digits);
        if !r.passed() {
            r.detail = format!("n={n}: {}", r.detail);
        }
        r
    })
}
