//! Exact verification of `Σ hⁱ yᵢ(f) = 0` on truncated q-series.

use num_rational::BigRational;
use rayon::prelude::*;

use super::{build_modular_functions, ModEqError, ModEqId, ModEqTable, ModularFunctionSet};
use crate::qseries::LaurentSeries;
use crate::report::CheckReport;

/// Margin added to the base theta order on top of pole depth and check order.
pub const BUDGET_MARGIN: i64 = 16;

/// Deepest pole (in q) among the monomials `hⁱ fʲ` carried by `table`,
/// given the valuations of `h` and `f`.
pub fn pole_depth(table: &ModEqTable, val_h: i64, val_f: i64) -> i64 {
    let top = -(table.degree_h() as i64) * val_h;
    table
        .rows
        .iter()
        .enumerate()
        .flat_map(|(i, r)| {
            r.coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
                .map(move |(j, _)| -(i as i64 * val_h + j as i64 * val_f))
        })
        .fold(top, i64::max)
        .max(0)
}

/// Base theta order needed to check `table` through `q^order`.
pub fn truncation_budget(table: &ModEqTable, val_h: i64, val_f: i64, order: i64) -> i64 {
    pole_depth(table, val_h, val_f) + order + BUDGET_MARGIN
}

/// `f⁰ .. f^deg`.
pub fn powers(f: &LaurentSeries, deg: usize) -> Vec<LaurentSeries> {
    let mut out = vec![LaurentSeries::one(f.relative_precision())];
    for j in 1..=deg {
        let next = if j == 1 { f.clone() } else { out[j - 1].mul(f) };
        out.push(next);
    }
    out
}

/// `Σ hⁱ yᵢ(f) + lead · h⁷` by Horner in `h`, given the powers of `f`.
pub fn assemble(table: &ModEqTable, h: &LaurentSeries, fpow: &[LaurentSeries]) -> LaurentSeries {
    let lincomb = |i: usize| -> LaurentSeries {
        let row = &table.rows[i];
        let mut acc: Option<LaurentSeries> = None;
        for (j, c) in row.coeffs().iter().enumerate() {
            if num_traits::Zero::is_zero(c) {
                continue;
            }
            let t = fpow[j].scale(&BigRational::from_integer(c.clone()));
            acc = Some(match acc {
                None => t,
                Some(a) => a.add(&t),
            });
        }
        acc.unwrap_or_else(|| LaurentSeries::zero(fpow[0].trunc()))
    };
    let mut acc = LaurentSeries::one(h.relative_precision()).scale_int(i64::from(table.lead_sign));
    for i in (0..table.degree_h()).rev() {
        acc = acc.mul(h).add(&lincomb(i));
    }
    acc
}

/// Checks that every coefficient of the assembled relation through `q^order`
/// vanishes.
pub fn verify_modeq(table: &ModEqTable, funcs: &ModularFunctionSet, order: i64) -> CheckReport {
    CheckReport::timed(|| {
        let fpow = powers(&funcs.f, table.max_degree_f());
        verify_with_powers(table, funcs.h(table.id), &fpow, order)
    })
}

fn verify_with_powers(table: &ModEqTable, h: &LaurentSeries, fpow: &[LaurentSeries], order: i64) -> CheckReport {
    let name = format!("modeq_{}", table.id);
    let rel = assemble(table, h, fpow);
    if rel.trunc() <= order {
        return CheckReport::fail(name, format!("relation known only below q^{}, need through q^{order}", rel.trunc()));
    }
    if rel.coeff(0).is_some_and(|c| !num_traits::Zero::is_zero(&c)) {
        return CheckReport::fail(name, "constant term is nonzero".to_string());
    }
    let depth = pole_depth(table, h.valuation().unwrap_or(0), fpow[1.min(fpow.len() - 1)].valuation().unwrap_or(0));
    match rel.first_nonzero_below(order + 1) {
        None => CheckReport::pass(name, format!("zero from q^-{depth} through q^{order}")),
        Some((e, c)) => CheckReport::fail(name, format!("coefficient of q^{e} is {c}")),
    }
}

/// Probe valuations from a cheap low-order build.
fn probe_valuations() -> Result<ModularFunctionSet, ModEqError> {
    build_modular_functions(40)
}

/// Valuations of `h` and `f` for equation `id`.
pub fn valuations(id: ModEqId) -> Result<(i64, i64), ModEqError> {
    let s = probe_valuations()?;
    let vh = s.h(id).valuation().ok_or(ModEqError::BadGramData("h vanishes".into()))?;
    let vf = s.f.valuation().ok_or(ModEqError::BadGramData("f vanishes".into()))?;
    Ok((vh, vf))
}

/// Builds the functions at the automatic budget for `table` and verifies it.
pub fn verify_modeq_auto(table: &ModEqTable, order: i64) -> Result<CheckReport, ModEqError> {
    let (vh, vf) = valuations(table.id)?;
    let funcs = build_modular_functions(truncation_budget(table, vh, vf, order))?;
    Ok(verify_modeq(table, &funcs, order))
}

/// Verifies several tables against one function set built at the largest
/// budget any of them needs; the equations run in parallel.
pub fn verify_tables(tables: &[ModEqTable], order: i64) -> Result<Vec<CheckReport>, ModEqError> {
    let probe = probe_valuations()?;
    let vf = probe.f.valuation().unwrap_or(0);
    let budget = tables
        .iter()
        .map(|t| truncation_budget(t, probe.h(t.id).valuation().unwrap_or(0), vf, order))
        .max()
        .unwrap_or(0);
    let funcs = build_modular_functions(budget)?;
    let maxdeg = tables.iter().map(ModEqTable::max_degree_f).max().unwrap_or(0);
    let fpow = powers(&funcs.f, maxdeg);
    Ok(tables.par_iter().map(|t| CheckReport::timed(|| verify_with_powers(t, funcs.h(t.id), &fpow, order))).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modeq::embedded_table;
    use num_bigint::BigInt;

    #[test]
    fn budgets() {
        let main = embedded_table(ModEqId::Varphi);
        // h⁶ f²⁷ and h⁷ both reach q^-378
        assert_eq!(pole_depth(&main, -54, -2), 378);
        assert_eq!(truncation_budget(&main, -54, -2, 120), 514);
        let (vh, vf) = valuations(ModEqId::G(6)).unwrap();
        assert_eq!((vh, vf), (-14, -2));
        assert!(truncation_budget(&embedded_table(ModEqId::G(6)), vh, vf, 120) <= 300);
    }

    #[test]
    fn g5_equation_and_perturbation() {
        let t = embedded_table(ModEqId::G(5));
        assert!(verify_modeq_auto(&t, 40).unwrap().passed());
        let mut bad = t.clone();
        let mut cs = bad.rows[3].coeffs().to_vec();
        cs[0] += BigInt::from(1);
        bad.rows[3] = crate::numkernel::IntPoly::new(cs);
        assert!(!verify_modeq_auto(&bad, 40).unwrap().passed());
    }
}
