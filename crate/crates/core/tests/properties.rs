//! Property tests for the exact-arithmetic substrate and the transform.

use proptest::prelude::*;
use symplectic_euler_core::algebra::{rat, ratio, BigRat, QPoly, TruncSeries};
use symplectic_euler_core::partitions::ts_transform;

fn arb_qpoly() -> impl Strategy<Value = QPoly> {
    prop::collection::vec((-6i64..=6, 1i64..=3), 0..5).prop_map(|pairs| {
        QPoly::from_coeffs(pairs.into_iter().map(|(n, d)| ratio(n, d)).collect())
    })
}

fn arb_series(order: usize) -> impl Strategy<Value = TruncSeries<BigRat>> {
    prop::collection::vec((-9i64..=9, 1i64..=4), order + 1..=order + 1)
        .prop_map(|cs| TruncSeries::from_coeffs(cs.into_iter().map(|(n, d)| ratio(n, d)).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn poly_ring_axioms(a in arb_qpoly(), b in arb_qpoly(), c in arb_qpoly()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn series_ring_axioms(a in arb_series(6), b in arb_series(6), c in arb_series(6)) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn series_inverse_roundtrip(a in arb_series(7), unit in 1i64..=5) {
        // force an invertible constant term
        let shifted = a.sub(&TruncSeries::constant(a.coeff(0).clone(), 7))
            .add(&TruncSeries::constant(rat(unit), 7));
        let inv = shifted.inv().unwrap();
        prop_assert!(shifted.mul(&inv).is_one());
    }

    #[test]
    fn exp_log_roundtrip(a in arb_series(6)) {
        let one_plus = a.sub(&TruncSeries::constant(a.coeff(0).clone(), 6))
            .add(&TruncSeries::one(6));
        prop_assert_eq!(one_plus.log().unwrap().exp().unwrap(), one_plus.clone());
        let zero_const = one_plus.sub(&TruncSeries::one(6));
        prop_assert_eq!(zero_const.exp().unwrap().log().unwrap(), zero_const);
    }

    #[test]
    fn poly_display_parse_roundtrip(p in arb_qpoly()) {
        let text = p.to_string();
        let back: QPoly = text.parse().unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn transform_multiplicative_in_weights(
        s1 in prop::collection::vec(-4i64..=4, 8),
        s2 in prop::collection::vec(-4i64..=4, 8),
    ) {
        let order = 6usize;
        let w1 = move |d: u32| QPoly::from_int(s1[(d as usize - 1).min(7)]);
        let w2 = move |d: u32| QPoly::from_int(s2[(d as usize - 1).min(7)]);
        let input = |m: u32, _d: u32| {
            if m == 1 { QPoly::from_int(-1) } else { QPoly::zero() }
        };
        let lhs = ts_transform(|d| w1(d).add(&w2(d)), input, order);
        let rhs = ts_transform(w1, input, order).mul(&ts_transform(w2, input, order));
        prop_assert_eq!(lhs, rhs);
    }
}
