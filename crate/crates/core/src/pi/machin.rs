//! Independent π oracle: `π = 16 arctan(1/5) - 4 arctan(1/239)` in integer fixed point.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::numkernel::BigReal;

/// Extra decimal digits carried through the fixed-point sums.
const GUARD_DIGITS: usize = 12;

/// Terms of `arctan(1/x)` needed for the alternating tail to drop below
/// `10^-digits`: the first omitted term is below `x^{-2N-1}`.
pub fn arctan_terms(x: u64, digits: usize) -> usize {
    let per = 2.0 * (x as f64).log10();
    (digits as f64 / per).ceil() as usize + 1
}

/// `round(10^scale · arctan(1/x))` up to `2N + 1` units, with `N` terms.
/// Each truncating division loses less than one unit.
fn arctan_inv_fixed(x: u64, scale: usize) -> BigInt {
    let one = BigInt::from(10u32).pow(scale as u32);
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut power = &one / &x;
    let mut sum = power.clone();
    let mut k = 1u64;
    loop {
        power /= &x2;
        if power.is_zero() {
            break;
        }
        let term = &power / (2 * k + 1);
        if k % 2 == 1 {
            sum -= term;
        } else {
            sum += term;
        }
        k += 1;
    }
    sum
}

/// `π · 10^(digits + GUARD_DIGITS)` to within `10^(GUARD_DIGITS - 2)` units,
/// together with the guard-digit count.
pub fn machin_fixed(digits: usize) -> (BigInt, usize) {
    let scale = digits + GUARD_DIGITS;
    let a = arctan_inv_fixed(5, scale);
    let b = arctan_inv_fixed(239, scale);
    (a * 16 - b * 4, GUARD_DIGITS)
}

/// π to `digits` decimal digits (plus guard bits) from Machin's formula.
pub fn machin_pi(digits: usize) -> BigReal {
    let (v, g) = machin_fixed(digits);
    let bits = super::digits_to_bits(digits);
    let scale = BigInt::from(10u32).pow((digits + g) as u32);
    BigReal::from_rational(&num_rational::BigRational::new(v, scale), bits)
}

/// `"3."` followed by exactly `digits` decimals of π, truncated.
pub fn machin_digits(digits: usize) -> String {
    let (v, g) = machin_fixed(digits);
    let s = (v / BigInt::from(10u32).pow(g as u32)).abs().to_string();
    format!("{}.{}", &s[..1], &s[1..])
}
