//! Real-root isolation with Sturm sequences and guarded Newton refinement.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::bigreal::BigReal;
use super::poly::{IntPoly, QPoly};
use super::KernelError;

/// A rational interval `[lo, hi]` containing exactly one real root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RootInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        RootInterval { lo, hi }
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }
}

/// Sturm sequence `p, p', -rem(p, p'), ...` over ℚ.
pub struct SturmChain {
    chain: Vec<QPoly>,
}

impl SturmChain {
    pub fn new(p: &IntPoly) -> Self {
        let p0 = p.to_qpoly();
        let p1 = p0.derivative();
        let mut chain = vec![p0, p1];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let r = chain[n - 2].rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(r.scale(&-BigRational::one()));
        }
        SturmChain { chain }
    }

    fn variations(&self, x: &BigRational) -> usize {
        let mut last = 0i8;
        let mut v = 0;
        for p in &self.chain {
            let s = p.eval(x);
            let s = if s.is_zero() {
                0
            } else if s.is_positive() {
                1
            } else {
                -1
            };
            if s != 0 {
                if last != 0 && s != last {
                    v += 1;
                }
                last = s;
            }
        }
        v
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    pub fn count(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations(a) - self.variations(b)
    }
}

fn check_squarefree(p: &IntPoly) -> Result<(), KernelError> {
    if p.is_zero() {
        return Err(KernelError::ZeroPolynomial);
    }
    let q = p.to_qpoly();
    let g = q.gcd(&q.derivative());
    if g.degree().unwrap_or(0) > 0 {
        return Err(KernelError::NotSquarefree { gcd: g.to_string() });
    }
    Ok(())
}

/// Power of two strictly larger than every root modulus (Cauchy bound).
fn root_bound(p: &IntPoly) -> BigRational {
    let lc = p.leading().expect("nonzero").abs();
    let max = p.coeffs().iter().map(|c| c.abs()).max().unwrap();
    let b = BigRational::new(max, lc) + BigRational::one();
    let mut pow = BigRational::one();
    while pow <= b {
        pow *= BigRational::from_integer(2.into());
    }
    pow
}

/// Disjoint isolating intervals, one per distinct real root, in increasing order.
///
/// Endpoints are never roots, so `p` changes sign across every interval.
pub fn isolate_real_roots(p: &IntPoly) -> Result<Vec<RootInterval>, KernelError> {
    check_squarefree(p)?;
    if p.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let sturm = SturmChain::new(p);
    let b = root_bound(p);
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        let n = sturm.count(&lo, &hi);
        match n {
            0 => {}
            1 => out.push(RootInterval::new(lo, hi)),
            _ => {
                let mid = split_point(p, &lo, &hi);
                stack.push((mid.clone(), hi));
                stack.push((lo, mid));
            }
        }
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    Ok(out)
}

/// A point strictly inside `(lo, hi)` where `p` does not vanish.
fn split_point(p: &IntPoly, lo: &BigRational, hi: &BigRational) -> BigRational {
    let two = BigRational::from_integer(2.into());
    let w = hi - lo;
    let mid = lo + &w / &two;
    if !p.eval_rational(&mid).is_zero() {
        return mid;
    }
    let mut off = &w / BigRational::from_integer(8.into());
    loop {
        let cand = &mid + &off;
        if !p.eval_rational(&cand).is_zero() {
            return cand;
        }
        off /= &two;
    }
}

fn round_dyadic(x: &BigRational, bits: usize) -> BigRational {
    let scale = BigInt::one() << bits;
    let n = (x * BigRational::from_integer(scale.clone())).round().to_integer();
    BigRational::new(n, scale)
}

/// Approximates the root isolated by `interval` to within `2^-precision_bits`.
///
/// Newton steps on dyadic rationals, kept inside the bracket; bisection when a
/// step leaves the bracket or fails to halve it.
pub fn refine_root(p: &IntPoly, interval: &RootInterval, precision_bits: usize) -> Result<BigReal, KernelError> {
    let root = refine_root_rational(p, interval, precision_bits + 2)?;
    let int_bits = root.abs().to_integer().bits() as usize;
    Ok(BigReal::from_rational(&root, precision_bits + int_bits + 16))
}

/// Dyadic rational within `2^-bits` of the isolated root.
pub fn refine_root_rational(p: &IntPoly, interval: &RootInterval, bits: usize) -> Result<BigRational, KernelError> {
    let mut lo = interval.lo.clone();
    let mut hi = interval.hi.clone();
    let slo = p.sign_at(&lo);
    let shi = p.sign_at(&hi);
    if slo == 0 {
        return Ok(lo);
    }
    if shi == 0 {
        return Ok(hi);
    }
    if slo == shi {
        return Err(KernelError::NoSignChange);
    }
    let dp = p.derivative();
    let two = BigRational::from_integer(2.into());
    let eps = BigRational::new(BigInt::one(), BigInt::one() << bits);
    let delta = BigRational::new(BigInt::one(), BigInt::one() << (bits + 1));
    let mut x = (&lo + &hi) / &two;
    while &hi - &lo >= eps {
        let width = &hi - &lo;
        let d = dp.eval_rational(&x);
        let newton = if d.is_zero() {
            None
        } else {
            let step = round_dyadic(&(&x - p.eval_rational(&x) / d), bits + 4);
            (step > lo && step < hi).then_some(step)
        };
        let cand = newton.unwrap_or_else(|| (&lo + &hi) / &two);
        let s = p.sign_at(&cand);
        if s == 0 {
            return Ok(cand);
        }
        if s == slo {
            lo = cand.clone();
            let probe = &cand + &delta;
            if probe < hi && p.sign_at(&probe) != slo {
                hi = probe;
            }
        } else {
            hi = cand.clone();
            let probe = &cand - &delta;
            if probe > lo && p.sign_at(&probe) == slo {
                lo = probe;
            }
        }
        x = cand;
        if (&hi - &lo) * &two > width {
            let mid = (&lo + &hi) / &two;
            match p.sign_at(&mid) {
                0 => return Ok(mid),
                s if s == slo => lo = mid,
                _ => hi = mid,
            }
        }
    }
    Ok((&lo + &hi) / &two)
}
