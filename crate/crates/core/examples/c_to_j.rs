//! `1728/c` at the nome `-Q` against the j-invariant from E₄³/Δ.
//!
//! ```text
//! cargo run --example c_to_j -- 8
//! ```

use modpi::qseries::{c_to_j_check, c_to_j_series, j_from_eisenstein};

fn main() {
    let order: i64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let s = c_to_j_series(order).unwrap();
    let j = j_from_eisenstein(order).unwrap();
    println!("{:>4} {:>28} {:>28}", "e", "1728/c(-Q)", "E4^3/Delta");
    for e in -1..=order {
        println!("{e:>4} {:>28} {:>28}", s.int_coeff(e).unwrap(), j.int_coeff(e).unwrap());
    }
    println!("{}", c_to_j_check(order));
}
