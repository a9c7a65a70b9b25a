//! Re-deriving a modular equation from q-expansions by exact linear algebra.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{ModEqError, ModEqId, ModEqTable};
use crate::numkernel::IntPoly;
use crate::qseries::LaurentSeries;

/// Relation `Σ_{i<n} hⁱ yᵢ(f) + lead · hⁿ = 0` found by [`solve_modeq`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub lead_sign: i8,
    pub rows: Vec<IntPoly>,
}

impl Relation {
    pub fn into_table(self, id: ModEqId) -> ModEqTable {
        ModEqTable { id, lead_sign: self.lead_sign, rows: self.rows }
    }
}

/// Fraction-free column echelon form, reporting dependent columns.
struct Echelon {
    pivots: HashMap<usize, (Vec<BigInt>, Vec<BigInt>)>,
    ncols: usize,
    null: Vec<Vec<BigInt>>,
}

fn strip_content(v: &mut [BigInt], c: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in v.iter().chain(c.iter()) {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                return;
            }
        }
    }
    if g > BigInt::one() {
        v.iter_mut().chain(c.iter_mut()).for_each(|x| *x /= &g);
    }
}

impl Echelon {
    fn new(ncols: usize) -> Self {
        Echelon { pivots: HashMap::new(), ncols, null: Vec::new() }
    }

    fn push(&mut self, k: usize, mut v: Vec<BigInt>) {
        let mut comb = vec![BigInt::zero(); self.ncols];
        comb[k] = BigInt::one();
        let mut from = 0;
        loop {
            let Some(r) = (from..v.len()).find(|&r| !v[r].is_zero()) else {
                self.null.push(comb);
                return;
            };
            let Some((pv, pc)) = self.pivots.get(&r) else {
                self.pivots.insert(r, (v, comb));
                return;
            };
            let (a, b) = (pv[r].clone(), v[r].clone());
            let g = a.gcd(&b);
            let (a, b) = (&a / &g, &b / &g);
            for (x, y) in v.iter_mut().zip(pv).skip(r) {
                *x = &a * &*x - &b * y;
            }
            for (x, y) in comb.iter_mut().zip(pc) {
                *x = &a * &*x - &b * y;
            }
            strip_content(&mut v, &mut comb);
            from = r + 1;
        }
    }
}

/// Recovers `y₀ .. y_{n-1}` from q-expansions, where `n = row_degrees.len()`
/// and `yᵢ` has degree at most `row_degrees[i]`, using coefficients through
/// `q^order`. The `hⁿ` coefficient is normalized to `lead_sign`.
pub fn solve_modeq_with_bounds(
    h: &LaurentSeries,
    f: &LaurentSeries,
    row_degrees: &[usize],
    lead_sign: i8,
    order: i64,
) -> Result<Relation, ModEqError> {
    let n = row_degrees.len();
    // work in q² when both series are even
    let (h, f, order) = match (h.compress(2), f.compress(2)) {
        (Ok(a), Ok(b)) => (a, b, order.div_euclid(2)),
        _ => (h.clone(), f.clone(), order),
    };
    let maxdeg = row_degrees.iter().copied().max().unwrap_or(0);
    let fpow = super::verify::powers(&f, maxdeg);
    let hpow = super::verify::powers(&h, n);
    let mut monos: Vec<(usize, usize)> =
        row_degrees.iter().enumerate().flat_map(|(i, &d)| (0..=d).map(move |j| (i, j))).collect();
    monos.push((n, 0));
    let cols: Vec<LaurentSeries> = monos.iter().map(|&(i, j)| hpow[i].mul(&fpow[j])).collect();
    let start = cols.iter().filter_map(LaurentSeries::valuation).min().unwrap_or(0);
    let end = cols.iter().map(LaurentSeries::trunc).min().unwrap_or(0).min(order + 1);
    let equations = (end - start).max(0) as usize;
    if equations < monos.len() {
        return Err(ModEqError::OrderTooSmall { order, min: start + monos.len() as i64 });
    }
    let mut ech = Echelon::new(monos.len());
    let mut by_depth: Vec<usize> = (0..monos.len()).collect();
    by_depth.sort_by_key(|&k| cols[k].valuation().unwrap_or(i64::MAX));
    let windows: Vec<(Vec<BigInt>, BigInt)> = cols.iter().map(|c| c.integer_window(start, end)).collect();
    let dens: Vec<&BigInt> = windows.iter().map(|w| &w.1).collect();
    for k in by_depth {
        ech.push(k, windows[k].0.clone());
    }
    if ech.null.len() != 1 {
        return Err(ModEqError::NullspaceDimension { dim: ech.null.len(), unknowns: monos.len(), equations });
    }
    // column k was scaled by its denominator
    let coeffs: Vec<BigInt> = ech.null[0].iter().zip(&dens).map(|(c, d)| c * *d).collect();
    let top = &coeffs[monos.len() - 1];
    if top.is_zero() {
        return Err(ModEqError::TopCoefficientZero);
    }
    let scale = BigRational::new(BigInt::from(lead_sign), top.clone());
    let mut rows: Vec<Vec<BigInt>> = row_degrees.iter().map(|&d| vec![BigInt::zero(); d + 1]).collect();
    for (&(i, j), c) in monos.iter().zip(&coeffs).take(monos.len() - 1) {
        let v = &scale * BigRational::from_integer(c.clone());
        if !v.is_integer() {
            return Err(ModEqError::NonIntegralSolution(format!("coefficient of h^{i} f^{j} is {v}")));
        }
        rows[i][j] = v.to_integer();
    }
    Ok(Relation { lead_sign, rows: rows.into_iter().map(IntPoly::new).collect() })
}

/// [`solve_modeq_with_bounds`] with every `yᵢ` of degree at most `deg_f`.
pub fn solve_modeq(
    h: &LaurentSeries,
    f: &LaurentSeries,
    deg_h: usize,
    deg_f: usize,
    lead_sign: i8,
    order: i64,
) -> Result<Relation, ModEqError> {
    solve_modeq_with_bounds(h, f, &vec![deg_f; deg_h], lead_sign, order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_relation() {
        let f = LaurentSeries::from_i64s(-2, &[1, 0, 3, 0, -5, 0, 7, 0, 2, 0, 1], 20);
        let r = solve_modeq(&f, &f, 1, 1, 1, 18).unwrap();
        assert_eq!(r.rows, vec![IntPoly::from_i64s(&[0, -1])]);
    }

    #[test]
    fn quadratic_relation() {
        // h = f² + 3f - 2 ⇒ y0 = 2 - 3x - x², lead 1
        let f = LaurentSeries::from_i64s(-1, &[1, 2, -1, 4, 0, 1, 3, -2, 5, 1, 1, 0, 2], 12);
        let h = f.mul(&f).add(&f.scale_int(3)).sub(&LaurentSeries::one(20).scale_int(2));
        let r = solve_modeq(&h, &f, 1, 2, 1, 8).unwrap();
        assert_eq!(r.rows, vec![IntPoly::from_i64s(&[2, -3, -1])]);
        // too few degrees of freedom: no relation
        assert!(solve_modeq(&h, &f, 1, 1, 1, 8).is_err());
    }
}
