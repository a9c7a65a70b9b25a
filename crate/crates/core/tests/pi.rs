use modpi::pi::{
    chudnovsky_check, chudnovsky_pi, general_series_pi, machin_digits, naive, ramanujan_series_check, split,
    ChudnovskyTerms, RamanujanId, RamanujanTerms,
};
use proptest::prelude::*;

#[test]
fn chudnovsky_matches_machin() {
    for d in [10, 100, 1000, 10000] {
        assert_eq!(chudnovsky_pi(d).to_fixed_decimal(d), machin_digits(d), "d={d}");
    }
}

#[test]
fn check_report_names() {
    let (r, digits) = chudnovsky_check(50);
    assert!(r.passed(), "{r}");
    assert_eq!(r.name, "pi_50");
    assert_eq!(digits.len(), 52);
}

#[test]
fn naive_fifty_terms() {
    assert_eq!(split(&ChudnovskyTerms, 0, 50), naive(&ChudnovskyTerms, 50));
    assert_eq!(split(&RamanujanTerms(RamanujanId::R1103), 0, 50), naive(&RamanujanTerms(RamanujanId::R1103), 50));
}

#[test]
fn ramanujan_at_100() {
    for id in [RamanujanId::R1103, RamanujanId::R1123] {
        let r = ramanujan_series_check(id, 100);
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn general_series_table_one() {
    for (n, d) in [(19, 30), (43, 30), (67, 30), (163, 60), (19, 60)] {
        let r = general_series_pi(n, d);
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn wrong_g2_fails() {
    // sanity: the check is sensitive to the constant term
    use modpi::numkernel::BigReal;
    use modpi::pi::{general_series_value, SeriesSpec};
    let mut s = SeriesSpec::new(19, 200).unwrap();
    let good = general_series_value(&s);
    let wp = s.bits + 32;
    let sixth = (&(-&s.c) / &BigReal::from_i64(1728, wp)).nth_root(6).unwrap();
    s.g0 = &s.g0 + &sixth;
    let bad = general_series_value(&s);
    assert!(!(&good - &bad).abs_below_pow10(10));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn split_is_associative(a in 0u64..60, l in 1u64..80, r in 1u64..80) {
        let left = split(&ChudnovskyTerms, a, a + l);
        let right = split(&ChudnovskyTerms, a + l, a + l + r);
        prop_assert_eq!(left.merge(&right), split(&ChudnovskyTerms, a, a + l + r));
    }

    #[test]
    fn machin_prefix_stable(d in 5usize..300) {
        let long = machin_digits(d + 20);
        let short = machin_digits(d);
        prop_assert_eq!(&long[..d + 2], short.as_str());
    }
}
