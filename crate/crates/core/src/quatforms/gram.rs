//! Integral quaternary quadratic forms given by their Gram matrices.

use std::fmt;

use rayon::prelude::*;

use super::QuatError;

/// The eight reduced forms for p = 163, as shipped with the crate.
pub const EMBEDDED_GRAM_P163: &str = include_str!("../../../../data/gram_p163.txt");

/// 4×4 symmetric positive-definite integer matrix with even diagonal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GramMatrix {
    entries: [[i64; 4]; 4],
}

fn det3(m: [[i128; 3]; 3]) -> i128 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

fn minor(e: &[[i64; 4]; 4], skip_r: usize, skip_c: usize) -> i128 {
    let mut m = [[0i128; 3]; 3];
    for (ri, r) in (0..4).filter(|&r| r != skip_r).enumerate() {
        for (ci, c) in (0..4).filter(|&c| c != skip_c).enumerate() {
            m[ri][ci] = e[r][c] as i128;
        }
    }
    det3(m)
}

fn leading_minor(e: &[[i64; 4]; 4], k: usize) -> i128 {
    match k {
        1 => e[0][0] as i128,
        2 => e[0][0] as i128 * e[1][1] as i128 - e[0][1] as i128 * e[1][0] as i128,
        3 => det3([
            [e[0][0] as i128, e[0][1] as i128, e[0][2] as i128],
            [e[1][0] as i128, e[1][1] as i128, e[1][2] as i128],
            [e[2][0] as i128, e[2][1] as i128, e[2][2] as i128],
        ]),
        _ => (0..4)
            .map(|c| {
                let s = if c % 2 == 0 { 1 } else { -1 };
                s * e[0][c] as i128 * minor(e, 0, c)
            })
            .sum(),
    }
}

impl GramMatrix {
    pub fn new(entries: [[i64; 4]; 4]) -> Result<Self, QuatError> {
        for (i, row) in entries.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if *v != entries[j][i] {
                    return Err(QuatError::NotSymmetric { row: i, col: j });
                }
            }
            if entries[i][i] % 2 != 0 {
                return Err(QuatError::OddDiagonal { index: i });
            }
        }
        for k in 1..=4 {
            if leading_minor(&entries, k) <= 0 {
                return Err(QuatError::NotPositiveDefinite { minor: k });
            }
        }
        Ok(GramMatrix { entries })
    }

    /// Validates and additionally requires `det = p²`.
    pub fn with_discriminant(entries: [[i64; 4]; 4], p: i64) -> Result<Self, QuatError> {
        let g = Self::new(entries)?;
        if g.det() != (p as i128) * (p as i128) {
            return Err(QuatError::WrongDeterminant { found: g.det(), expected: (p as i128) * (p as i128) });
        }
        Ok(g)
    }

    pub fn entries(&self) -> &[[i64; 4]; 4] {
        &self.entries
    }

    pub fn det(&self) -> i128 {
        leading_minor(&self.entries, 4)
    }

    /// `xᵀ M x`.
    pub fn eval(&self, x: [i64; 4]) -> i64 {
        let e = &self.entries;
        let mut s = 0;
        for i in 0..4 {
            s += e[i][i] * x[i] * x[i];
            for j in i + 1..4 {
                s += 2 * e[i][j] * x[i] * x[j];
            }
        }
        s
    }

    /// Largest `|x_i|` possible on the ellipsoid `xᵀ M x <= bound`:
    /// `x_i² <= bound · (M⁻¹)_ii = bound · adj_ii / det`.
    pub fn coordinate_bounds(&self, bound: i64) -> [i64; 4] {
        let det = self.det();
        let mut out = [0; 4];
        for (i, o) in out.iter_mut().enumerate() {
            let cof = minor(&self.entries, i, i);
            let lim = bound as i128 * cof;
            // largest x with x² · det <= lim
            let mut x = ((lim as f64 / det as f64).sqrt()) as i128 + 1;
            while x > 0 && x * x * det > lim {
                x -= 1;
            }
            *o = x as i64;
        }
        out
    }

    /// `r(n) = #{x ∈ ℤ⁴ : xᵀMx = n}` for `0 <= n <= bound`.
    ///
    /// Enumerates the bounding box of the ellipsoid; the outer coordinate is
    /// split across threads and the per-slice counts are summed in order.
    pub fn representation_counts(&self, bound: i64) -> Vec<u64> {
        let b = self.coordinate_bounds(bound);
        let slices: Vec<Vec<u64>> = (-b[0]..=b[0])
            .into_par_iter()
            .map(|x0| {
                let mut counts = vec![0u64; bound as usize + 1];
                for x1 in -b[1]..=b[1] {
                    for x2 in -b[2]..=b[2] {
                        for x3 in -b[3]..=b[3] {
                            let v = self.eval([x0, x1, x2, x3]);
                            if v <= bound {
                                counts[v as usize] += 1;
                            }
                        }
                    }
                }
                counts
            })
            .collect();
        let mut total = vec![0u64; bound as usize + 1];
        for s in slices {
            for (t, c) in total.iter_mut().zip(s) {
                *t += c;
            }
        }
        total
    }

    /// `K` with `#{x : xᵀMx <= B} <= K (B+1)²` for all `B >= 0`.
    pub fn count_growth_constant(&self) -> f64 {
        let det = self.det() as f64;
        (0..4).map(|i| 2.0 * (minor(&self.entries, i, i) as f64 / det).sqrt() + 1.0).product()
    }
}

impl fmt::Display for GramMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.entries.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let r: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", r.join(" "))?;
        }
        Ok(())
    }
}

/// Parsed contents of a Gram data file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramSet {
    pub p: i64,
    pub matrices: Vec<(usize, GramMatrix)>,
}

impl GramSet {
    pub fn parse(text: &str) -> Result<Self, QuatError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let bad = |line: usize, msg: &str| QuatError::Parse { line, msg: msg.to_string() };
        let (ln, head) = lines.next().ok_or_else(|| bad(0, "empty file"))?;
        let h: Vec<&str> = head.split_whitespace().collect();
        if h.len() != 4 || h[0] != "p" || h[2] != "count" {
            return Err(bad(ln, "expected `p <prime> count <n>`"));
        }
        let p: i64 = h[1].parse().map_err(|_| bad(ln, "bad prime"))?;
        let count: usize = h[3].parse().map_err(|_| bad(ln, "bad count"))?;
        let mut matrices = Vec::with_capacity(count);
        for _ in 0..count {
            let (ln, id) = lines.next().ok_or_else(|| bad(ln, "missing matrix header"))?;
            let id = id
                .strip_prefix("I ")
                .and_then(|s| s.trim().parse::<usize>().ok())
                .ok_or_else(|| bad(ln, "expected `I <k>`"))?;
            let mut e = [[0i64; 4]; 4];
            for row in e.iter_mut() {
                let (ln, l) = lines.next().ok_or_else(|| bad(ln, "missing matrix row"))?;
                let vals: Vec<i64> = l
                    .split_whitespace()
                    .map(|t| t.parse::<i64>())
                    .collect::<Result<_, _>>()
                    .map_err(|_| bad(ln, "non-integer entry"))?;
                if vals.len() != 4 {
                    return Err(bad(ln, "row must have 4 entries"));
                }
                row.copy_from_slice(&vals);
            }
            matrices.push((id, GramMatrix::with_discriminant(e, p)?));
        }
        if let Some((ln, _)) = lines.next() {
            return Err(bad(ln, "trailing data"));
        }
        Ok(GramSet { p, matrices })
    }

    pub fn to_file_string(&self) -> String {
        let mut s = format!("p {} count {}\n", self.p, self.matrices.len());
        for (id, m) in &self.matrices {
            s.push_str(&format!("I {id}\n{m}\n"));
        }
        s
    }

    /// The embedded p = 163 data.
    pub fn embedded_p163() -> Self {
        Self::parse(EMBEDDED_GRAM_P163).expect("embedded Gram data is valid")
    }

    pub fn get(&self, id: usize) -> Option<&GramMatrix> {
        self.matrices.iter().find(|(i, _)| *i == id).map(|(_, m)| m)
    }

    pub fn iter(&self) -> impl Iterator<Item = &GramMatrix> {
        self.matrices.iter().map(|(_, m)| m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_matrices_have_determinant_p_squared() {
        let set = GramSet::embedded_p163();
        assert_eq!(set.matrices.len(), 8);
        for m in set.iter() {
            assert_eq!(m.det(), 26569);
        }
    }

    #[test]
    fn file_round_trip() {
        let set = GramSet::embedded_p163();
        assert_eq!(GramSet::parse(&set.to_file_string()).unwrap(), set);
    }

    #[test]
    fn rejects_bad_matrices() {
        let odd = [[1, 0, 0, 0], [0, 2, 0, 0], [0, 0, 2, 0], [0, 0, 0, 2]];
        assert!(matches!(GramMatrix::new(odd), Err(QuatError::OddDiagonal { .. })));
        let indef = [[2, 3, 0, 0], [3, 2, 0, 0], [0, 0, 2, 0], [0, 0, 0, 2]];
        assert!(matches!(GramMatrix::new(indef), Err(QuatError::NotPositiveDefinite { minor: 2 })));
        let asym = [[2, 1, 0, 0], [0, 2, 0, 0], [0, 0, 2, 0], [0, 0, 0, 2]];
        assert!(matches!(GramMatrix::new(asym), Err(QuatError::NotSymmetric { .. })));
    }

    #[test]
    fn counts_match_brute_force() {
        let set = GramSet::embedded_p163();
        for m in set.iter() {
            let fast = m.representation_counts(30);
            let mut brute = vec![0u64; 31];
            for a in -8i64..=8 {
                for b in -8i64..=8 {
                    for c in -6i64..=6 {
                        for d in -6i64..=6 {
                            let v = m.eval([a, b, c, d]);
                            if v <= 30 {
                                brute[v as usize] += 1;
                            }
                        }
                    }
                }
            }
            assert_eq!(fast, brute);
        }
    }

    #[test]
    fn growth_constant_bounds_counts() {
        let m = GramSet::embedded_p163().matrices[0].1;
        let k = m.count_growth_constant();
        let counts = m.representation_counts(400);
        let mut cum = 0u64;
        for (b, c) in counts.iter().enumerate() {
            cum += c;
            assert!((cum as f64) <= k * ((b + 1) as f64).powi(2));
        }
    }
}
