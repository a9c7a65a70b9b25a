//! Binary splitting for `Σ a(m) Π_{i<=m} p(i)/q(i)` with integer data.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Ranges shorter than this are accumulated directly.
pub const SPLIT_THRESHOLD: u64 = 32;

/// Integer description of a hypergeometric-type series. `p(0)` and `q(0)`
/// are taken as 1 by the callers.
pub trait TermSpec: Sync {
    fn p(&self, m: u64) -> BigInt;
    fn q(&self, m: u64) -> BigInt;
    fn a(&self, m: u64) -> BigInt;
}

/// `P = Π p(i)`, `Q = Π q(i)` and `T` with `T/Q = Σ a(m) Π_{a<=i<=m} p(i)/q(i)`
/// over a term range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitNode {
    pub p: BigInt,
    pub q: BigInt,
    pub t: BigInt,
}

impl SplitNode {
    fn leaf<S: TermSpec + ?Sized>(spec: &S, m: u64) -> Self {
        let (p, q) = if m == 0 { (BigInt::one(), BigInt::one()) } else { (spec.p(m), spec.q(m)) };
        let t = spec.a(m) * &p;
        SplitNode { p, q, t }
    }

    /// The partial sum `T/Q` over the node's range, when it starts at 0.
    pub fn sum(&self) -> BigRational {
        BigRational::new(self.t.clone(), self.q.clone())
    }

    /// Combines adjacent ranges `self = [a, m)` and `right = [m, b)`.
    pub fn merge(&self, right: &SplitNode) -> SplitNode {
        SplitNode { p: &self.p * &right.p, q: &self.q * &right.q, t: &self.t * &right.q + &self.p * &right.t }
    }
}

fn direct<S: TermSpec + ?Sized>(spec: &S, a: u64, b: u64) -> SplitNode {
    let mut acc = SplitNode::leaf(spec, a);
    for m in a + 1..b {
        acc = acc.merge(&SplitNode::leaf(spec, m));
    }
    acc
}

/// Node for the range `[a, b)`, `a < b`. The split points depend only on the
/// range, so the result does not depend on scheduling.
pub fn split<S: TermSpec + ?Sized>(spec: &S, a: u64, b: u64) -> SplitNode {
    assert!(a < b, "empty range");
    if b - a < SPLIT_THRESHOLD {
        return direct(spec, a, b);
    }
    let m = a + (b - a) / 2;
    let (l, r) = rayon::join(|| split(spec, a, m), || split(spec, m, b));
    l.merge(&r)
}

/// `P`, `Q`, `T` over `[0, n)` accumulated term by term, with `T` written
/// out as `Σ a(m) (Π_{i<=m} p(i)) (Π_{i>m} q(i))`.
pub fn naive(spec: &(impl TermSpec + ?Sized), n: u64) -> SplitNode {
    let ps: Vec<BigInt> = (0..n).map(|m| if m == 0 { BigInt::one() } else { spec.p(m) }).collect();
    let qs: Vec<BigInt> = (0..n).map(|m| if m == 0 { BigInt::one() } else { spec.q(m) }).collect();
    let mut t = BigInt::zero();
    for m in 0..n as usize {
        let num: BigInt = ps[..=m].iter().product();
        let den: BigInt = qs[m + 1..].iter().product();
        t += spec.a(m as u64) * num * den;
    }
    SplitNode { p: ps.iter().product(), q: qs.iter().product(), t }
}
