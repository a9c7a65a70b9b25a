//! The numeric identity suite at a chosen precision, with residuals.
//!
//! ```text
//! cargo run --release --example numeric_identities -- 256
//! ```

use modpi::singular::{numeric_check_tol, standard_suite};

fn main() {
    let bits: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(128);
    for (check, tol) in standard_suite() {
        let out = numeric_check_tol(&check, bits, tol);
        let res = out.residual.map(|r| format!("{:.3e}", r.to_f64())).unwrap_or_else(|| "-".into());
        println!("{:<28} tol 1e-{tol:<3} residual {res:>10}  {}", check.to_string(), out.report.status);
    }
}
