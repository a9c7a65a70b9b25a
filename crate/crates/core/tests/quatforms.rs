use modpi::quatforms::{
    class_number, gram_thetas, independence_rank, reduced_forms, span_identity_from, type_number, GramMatrix, GramSet,
    QuatError, P, SPAN_WEIGHTS,
};
use proptest::prelude::*;

#[test]
fn table_data_is_validated_on_load() {
    let set = GramSet::embedded_p163();
    assert_eq!(set.matrices.len() as i64, type_number(P).unwrap());
    for (_, m) in &set.matrices {
        assert_eq!(m.det(), 163 * 163);
    }
    let mut bad = *set.matrices[0].1.entries();
    bad[0][0] += 2;
    assert!(matches!(GramMatrix::with_discriminant(bad, P), Err(QuatError::WrongDeterminant { .. })));
}

#[test]
fn rank_is_monotone_in_order() {
    let set = GramSet::embedded_p163();
    let thetas = gram_thetas(&set, 100);
    let mut last = 0;
    for order in (0..=100).step_by(5) {
        let r = independence_rank(&thetas, order).rank;
        assert!(r >= last, "order {order}");
        last = r;
    }
    assert_eq!(last, 8);
}

#[test]
fn span_weights_are_tight() {
    let set = GramSet::embedded_p163();
    let thetas = gram_thetas(&set, 200);
    assert!(span_identity_from(&thetas, P, &SPAN_WEIGHTS, 200).passed());
    for i in 0..8 {
        let mut w = SPAN_WEIGHTS;
        w[i] *= 2;
        assert!(!span_identity_from(&thetas, P, &w, 10).passed(), "weight {i}");
    }
}

proptest! {
    #[test]
    fn class_number_counts_reduced_forms(k in 1i64..400) {
        let d = -(4 * k + 3);
        let h = class_number(d).unwrap();
        // brute force over all |b| <= a <= c with b^2 - 4ac = d
        let mut n = 0;
        for a in 1..=(-d) {
            for b in -a..=a {
                let num = b * b - d;
                if num % (4 * a) != 0 {
                    continue;
                }
                let c = num / (4 * a);
                if c < a || (b < 0 && (b == -a || a == c)) {
                    continue;
                }
                if num_integer::gcd(num_integer::gcd(a, b), c) == 1 {
                    n += 1;
                }
            }
        }
        prop_assert_eq!(h, n);
        prop_assert_eq!(reduced_forms(d).unwrap().len(), n);
    }
}
