use modpi::singular::{
    numeric_check, numeric_check_tol, standard_suite, verify_f_value, verify_table_consistency, Nome, NumericCheck,
};

fn in_domain(c: &NumericCheck) -> bool {
    !matches!(c, NumericCheck::Hypergeometric(Nome::Exact(_)))
}

#[test]
fn suite_at_128_bits() {
    for (c, digits) in standard_suite().into_iter().filter(|(c, _)| in_domain(c)) {
        let out = numeric_check_tol(&c, 128, digits);
        println!("{}", out.report);
        assert!(out.report.passed(), "{}", out.report);
    }
}

#[test]
fn residuals_shrink_with_precision() {
    for (c, _) in standard_suite().into_iter().filter(|(c, _)| in_domain(c)) {
        let lo = numeric_check(&c, 128);
        let hi = numeric_check(&c, 256);
        assert!(hi.report.passed(), "{}", hi.report);
        let (a, b) = (lo.residual.unwrap(), hi.residual.unwrap());
        if !b.is_zero() {
            let shrink = a.to_f64().log2() - b.to_f64().log2();
            assert!(a.is_zero() || shrink >= 64.0, "{c}: shrink 2^{shrink}");
        }
    }
}

#[test]
fn hyp3f2_outside_domain_is_reported() {
    let out = numeric_check(&"hyp3f2(0.05)".parse().unwrap(), 128);
    println!("{}", out.report);
    assert!(!out.report.passed());
    assert!(out.residual.is_none());
}

#[test]
fn f_value_and_tables() {
    let r = verify_f_value(128).unwrap();
    println!("{r}");
    assert!(r.passed());
    let t = verify_table_consistency(128).unwrap();
    println!("{t}");
    assert!(t.passed());
}
