use modpi::modeq::{build_modular_functions, embedded_table, embedded_tables, solve_modeq, verify_tables, ModEqId};

#[test]
fn all_seven_equations_vanish_through_q120() {
    let reports = verify_tables(&embedded_tables(), 120).unwrap();
    assert_eq!(reports.len(), 7);
    for r in &reports {
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn g_equations_round_trip() {
    let funcs = build_modular_functions(300).unwrap();
    for i in 1..=6 {
        let t = embedded_table(ModEqId::G(i));
        let rel = solve_modeq(funcs.h(t.id), &funcs.f, 7, t.max_degree_f(), t.lead_sign, 120).unwrap();
        assert_eq!(rel.into_table(t.id), t, "f-g{i}");
    }
}

#[test]
fn main_equation_round_trip() {
    let funcs = build_modular_functions(600).unwrap();
    let t = embedded_table(ModEqId::Varphi);
    let rel = solve_modeq(&funcs.varphi, &funcs.f, 7, 27, t.lead_sign, 120).unwrap();
    assert_eq!(rel.into_table(t.id), t);
}
