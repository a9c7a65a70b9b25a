//! `1/π = Σ (2√n v m + G₀) b_m c^m` for the four discriminants 19, 43, 67, 163, with
//! the integer constants each one reduces to.
//!
//! ```text
//! cargo run --release --example series_family
//! ```

use modpi::pi::{general_series_pi, general_series_value, ramanujan_series_check, RamanujanId, SeriesSpec};
use modpi::singular::SUPPORTED_N;

fn main() {
    for n in SUPPORTED_N {
        let spec = SeriesSpec::new(n, 256).unwrap();
        let (a, b) = spec.integer_constants().expect("square");
        println!("n = {n:>3}: c = {}, integer form ({a} m + {b})", spec.c_exact);
        println!("         1/π ≈ {}", general_series_value(&spec).to_fixed_decimal(40));
        println!("         {}", general_series_pi(n, if n == 163 { 60 } else { 30 }));
    }
    for id in [RamanujanId::R1103, RamanujanId::R1123] {
        println!("{}", ramanujan_series_check(id, 100));
    }
}
