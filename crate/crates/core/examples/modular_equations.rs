//! The seven modular equations between `f` and `varphi, g1..g6`: pole-depth
//! budgets, verification, and re-derivation of one equation from scratch.
//!
//! ```text
//! cargo run --release --example modular_equations
//! ```

use modpi::modeq::{
    build_modular_functions, embedded_tables, pole_depth, solve_modeq, truncation_budget, valuations, verify_tables,
    ModEqId,
};

fn main() {
    let tables = embedded_tables();
    for t in &tables {
        let (vh, vf) = valuations(t.id).expect("series build");
        println!(
            "{:<9} val(h) {vh:>3}, val(f) {vf}, degree {} in h, {:>2} in f, pole depth {:>3}, budget {:>3}",
            t.id.to_string(),
            t.degree_h(),
            t.max_degree_f(),
            pole_depth(t, vh, vf),
            truncation_budget(t, vh, vf, 120)
        );
    }

    for r in verify_tables(&tables, 120).expect("series build") {
        println!("{r}");
    }

    // recover f-g5 as the nullspace of a coefficient matrix
    let funcs = build_modular_functions(300).expect("series build");
    let t = tables.iter().find(|t| t.id == ModEqId::G(5)).unwrap();
    let rel = solve_modeq(funcs.h(t.id), &funcs.f, 7, t.max_degree_f(), t.lead_sign, 120).expect("solvable");
    let back = rel.into_table(t.id);
    println!("f-g5 re-derived: {}", &back == t);
    for (i, row) in back.rows.iter().enumerate() {
        println!("  y{i}: {row}");
    }
}
