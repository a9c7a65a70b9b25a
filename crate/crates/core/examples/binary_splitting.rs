//! The splitting engine is generic: any series with integer `p(m)/q(m)` term
//! ratios and integer weights `a(m)` plugs in. Here `e = Σ 1/m!`.
//!
//! ```text
//! cargo run --example binary_splitting
//! ```

use num_bigint::BigInt;

use modpi::numkernel::BigReal;
use modpi::pi::{naive, split, ChudnovskyTerms, TermSpec};

struct Euler;

impl TermSpec for Euler {
    fn p(&self, _m: u64) -> BigInt {
        BigInt::from(1)
    }
    fn q(&self, m: u64) -> BigInt {
        BigInt::from(m)
    }
    fn a(&self, _m: u64) -> BigInt {
        BigInt::from(1)
    }
}

fn main() {
    let node = split(&Euler, 0, 120);
    let e = BigReal::from_rational(&node.sum(), 700);
    println!("e ≈ {}", e.to_fixed_decimal(150));

    // the split tree and the left-to-right sum give the same integers
    for n in [10u64, 50, 200] {
        println!("n = {n:>3}: split == naive: {}", split(&ChudnovskyTerms, 0, n) == naive(&ChudnovskyTerms, n));
    }

    let five = split(&ChudnovskyTerms, 0, 5);
    println!("Chudnovsky, 5 terms: T has {} bits, Q has {} bits", five.t.bits(), five.q.bits());
}
