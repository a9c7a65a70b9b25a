//! Exact rank of a family of q-series.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::qseries::LaurentSeries;

/// Rank of a coefficient matrix together with whether it is certified full.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankResult {
    pub rank: usize,
    pub rows: usize,
    /// `false` when some series is truncated below the requested order, or the
    /// rank falls short of the row count (it is then only a lower bound).
    pub certified_full: bool,
}

/// Rank over ℚ of integer matrix rows by fraction-free (Bareiss) elimination.
pub fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                m[i][j] = v / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

/// Rank of the coefficient rows `q^0 .. q^order` of `series`.
pub fn independence_rank(series: &[LaurentSeries], order: i64) -> RankResult {
    let complete = series.iter().all(|s| s.trunc() > order);
    let rows: Vec<Vec<BigInt>> = series
        .iter()
        .map(|s| {
            let coeffs: Vec<_> = (0..=order).map(|e| s.coeff(e).unwrap_or_default()).collect();
            let den = coeffs.iter().fold(BigInt::one(), |a, c| a.lcm(c.denom()));
            coeffs.iter().map(|c| (c * &den).to_integer()).collect()
        })
        .collect();
    let rank = bareiss_rank(rows);
    RankResult { rank, rows: series.len(), certified_full: complete && rank == series.len() }
}
