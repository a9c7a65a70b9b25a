use modpi::numkernel::{isolate_real_roots, poly_eval_alg, rat, BigReal, IntPoly, NumberField, Rational};
use modpi::singular::{SingularContext, SUPPORTED_N};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn big() -> impl Strategy<Value = BigInt> {
    (any::<i128>(), any::<u64>()).prop_map(|(a, b)| BigInt::from(a) * BigInt::from(b) + 1)
}

fn nonzero_big() -> impl Strategy<Value = BigInt> {
    big().prop_filter("nonzero", |b| !b.is_zero())
}

fn field163() -> std::sync::Arc<NumberField> {
    SingularContext::new(163).unwrap().field
}

proptest! {
    #[test]
    fn rational_sums_are_exact(a in big(), b in nonzero_big(), c in big(), d in nonzero_big()) {
        let s = Rational::new(a.clone(), b.clone()) + Rational::new(c.clone(), d.clone());
        let lhs = s * Rational::from_integer(&b * &d);
        prop_assert_eq!(lhs, Rational::from_integer(a * d + c * b));
    }

    #[test]
    fn isolating_intervals_bracket_roots(mut roots in prop::collection::btree_set(-60i64..60, 1..7)) {
        let roots: Vec<i64> = std::mem::take(&mut roots).into_iter().collect();
        let mut p = IntPoly::from_i64s(&[1]);
        for r in &roots {
            p = modpi::numkernel::poly_mul(&p, &IntPoly::from_i64s(&[-2 * r - 1, 2]));
        }
        let ivs = isolate_real_roots(&p).unwrap();
        prop_assert_eq!(ivs.len(), roots.len());
        for (iv, r) in ivs.iter().zip(&roots) {
            prop_assert!(iv.contains(&rat(2 * r + 1, 2)));
            // an endpoint may be the root itself; otherwise the sign changes
            let (a, b) = (p.sign_at(&iv.lo), p.sign_at(&iv.hi));
            prop_assert!(a * b < 0 || a == 0 || b == 0);
        }
    }

    #[test]
    fn field_multiplication_laws(x in prop::array::uniform3(-50i64..50), y in prop::array::uniform3(-50i64..50), z in prop::array::uniform3(-50i64..50)) {
        let k = field163();
        let (a, b, c) = (k.from_ints(&x, 7), k.from_ints(&y, 3), k.from_ints(&z, 1));
        let ab = a.try_mul(&b).unwrap();
        let ba = b.try_mul(&a).unwrap();
        prop_assert_eq!(ab.coords(), ba.coords());
        let l = ab.try_mul(&c).unwrap();
        let r = a.try_mul(&b.try_mul(&c).unwrap()).unwrap();
        prop_assert_eq!(l.coords(), r.coords());
    }

    #[test]
    fn inverse_law(x in prop::array::uniform3(-1000i64..1000)) {
        prop_assume!(x.iter().any(|&v| v != 0));
        let k = field163();
        let a = k.from_ints(&x, 11);
        let one = a.inverse().unwrap().try_mul(&a).unwrap();
        prop_assert_eq!(one.as_rational(), Some(Rational::one()));
    }

    #[test]
    fn doubling_precision_agrees(n in 1i64..10_000_000, d in 1i64..1000, p in 64usize..300) {
        let x = Rational::new(n.into(), d.into());
        let lo = BigReal::from_rational(&x, p);
        let hi = BigReal::from_rational(&x, 2 * p);
        let ops: [fn(&BigReal) -> BigReal; 3] = [
            |v| v.sqrt().unwrap(),
            |v| v.nth_root(6).unwrap(),
            |v| v.ln().unwrap(),
        ];
        for f in ops {
            let (a, b) = (f(&lo), f(&hi));
            let scale = b.abs().exponent().unwrap_or(0).max(0);
            prop_assert!((&a.with_precision(2 * p) - &b).abs_below_pow2(p as i64 - 4 - scale));
        }
    }
}

#[test]
fn generators_satisfy_their_moduli() {
    for n in SUPPORTED_N {
        let ctx = SingularContext::new(n).unwrap();
        assert!(poly_eval_alg(&ctx.minpoly_s, &ctx.generator).is_zero(), "n={n}");
    }
}

#[test]
fn table_cubic_has_one_real_root() {
    let p = IntPoly::from_i64s(&[-1, 400, 40, 2]);
    assert_eq!(isolate_real_roots(&p).unwrap().len(), 1);
}
