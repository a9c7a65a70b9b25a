//! π by Chudnovsky binary splitting, checked against the Machin oracle.
//!
//! ```text
//! cargo run --release --example pi_digits -- 5000
//! ```

use std::time::Instant;

use modpi::pi::{chudnovsky_pi, chudnovsky_terms, format_digits, machin_digits};

fn main() {
    let digits: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1000);

    let t = Instant::now();
    let chud = chudnovsky_pi(digits).to_fixed_decimal(digits);
    let t_chud = t.elapsed();

    let t = Instant::now();
    let machin = machin_digits(digits);
    let t_machin = t.elapsed();

    println!("{}", format_digits(&chud));
    println!();
    println!("terms:    {}", chudnovsky_terms(digits));
    println!("chudnovsky {:>8.3}s", t_chud.as_secs_f64());
    println!("machin     {:>8.3}s", t_machin.as_secs_f64());
    println!("agree:    {}", chud == machin);
}
