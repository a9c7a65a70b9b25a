//! π from the Chudnovsky, Ramanujan and singular-modulus series, plus a
//! Machin oracle that shares no code with them.

mod machin;
mod series;
mod split;

pub use machin::{arctan_terms, machin_digits, machin_fixed, machin_pi};
pub use series::{
    chudnovsky_check, chudnovsky_partial, chudnovsky_pi, chudnovsky_terms, general_series_partial, general_series_pi,
    general_series_value, ramanujan_partial, ramanujan_series_check, ChudnovskyTerms, RamanujanId, RamanujanTerms,
    SeriesSpec, CHUD_A, CHUD_B, CHUD_C,
};
pub use split::{naive, split, SplitNode, TermSpec, SPLIT_THRESHOLD};

use thiserror::Error;

use crate::singular::SingularError;

#[derive(Debug, Error)]
pub enum PiError {
    #[error("unknown series `{0}`")]
    UnknownSeries(String),
    #[error("series does not converge: |c| = {0}")]
    Divergent(f64),
    #[error(transparent)]
    Singular(#[from] SingularError),
    #[error(transparent)]
    Kernel(#[from] crate::numkernel::KernelError),
}

/// Working precision for `digits` decimals: `⌈digits·log₂10⌉ + 64` bits.
pub fn digits_to_bits(digits: usize) -> usize {
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as usize + 64
}

/// CLI layout: `"3."` then the first 50 decimals, then 50 per line.
pub fn format_digits(s: &str) -> String {
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    let mut out = format!("{int}.");
    for (i, chunk) in frac.as_bytes().chunks(50).enumerate() {
        if i > 0 {
            out.push('\n');
        }
        out.push_str(std::str::from_utf8(chunk).expect("ascii digits"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layout() {
        let s = format!("3.{}", "1".repeat(120));
        let f = format_digits(&s);
        let lines: Vec<&str> = f.lines().collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[0].len(), 52);
        assert_eq!(lines[2].len(), 20);
    }
}
