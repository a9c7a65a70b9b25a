//! Exact real-root isolation and arithmetic in a cubic field.
//!
//! ```text
//! cargo run --example number_field
//! ```

use modpi::numkernel::{isolate_real_roots, poly_eval_alg, IntPoly, NumberField};

fn main() {
    let p = IntPoly::from_i64s(&[-1, 400, 40, 2]);
    println!("p(x) = {p}");
    for iv in isolate_real_roots(&p).unwrap() {
        println!("root in [{}, {}]", iv.lo, iv.hi);
    }

    let k = NumberField::with_unique_real_root(p.clone()).unwrap();
    let u = k.generator();
    let a = k.from_ints(&[3, 1, 0], 1);
    let inv = a.inverse().unwrap();
    println!("1/(3+u) = {inv}");
    println!("(3+u)·1/(3+u) = {}", a.try_mul(&inv).unwrap());
    println!("u⁶ = {}", u.pow(6));
    println!("p(u) = 0: {}", poly_eval_alg(&p, &u).is_zero());
    println!("u ≈ {}", u.eval(200).unwrap());

    let sextic = IntPoly::from_i64s(&[-65739380000, 989898000, 49392000, -1069320, -2442, 177, -1]);
    println!("integer roots of {sextic}: {:?}", sextic.integer_roots().unwrap());
}
