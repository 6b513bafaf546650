mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use stanley_core::partitions::{
    classify, conjugate, corner_parity_check, hook_grid, inner_corners, partitions_of, remove_corner,
    Partition,
};
use stanley_core::series::{expand_theta, Sign, ThetaSpec, TruncatedSeries};
use stanley_core::stanley::{p_series, t_series_andrews, t_series_eq1, u_series, f_series};
use stanley_core::verify::check_jtp;

fn series_of(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(-1000i64..1000, order + 1).prop_map(|c| TruncatedSeries::from_i64s(&c))
}

fn series() -> impl Strategy<Value = TruncatedSeries> {
    (0usize..=64).prop_flat_map(series_of)
}

fn triple() -> impl Strategy<Value = (TruncatedSeries, TruncatedSeries, TruncatedSeries)> {
    (0usize..=64).prop_flat_map(|n| (series_of(n), series_of(n), series_of(n)))
}

fn unit_series() -> impl Strategy<Value = TruncatedSeries> {
    (0usize..=64, any::<bool>()).prop_flat_map(|(n, neg)| {
        prop::collection::vec(-50i64..50, n).prop_map(move |tail| {
            let mut c = vec![if neg { -1 } else { 1 }];
            c.extend(tail);
            TruncatedSeries::from_i64s(&c)
        })
    })
}

fn as_i128(s: &TruncatedSeries) -> Vec<i128> {
    s.coeffs().iter().map(|c| i128::try_from(c).unwrap()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_laws((a, b, c) in triple()) {
        let n = a.order();
        let zero = TruncatedSeries::zero(n);
        let one = TruncatedSeries::one(n);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &zero, a.clone());
        prop_assert_eq!(&a * &one, a.clone());
        prop_assert_eq!(&a - &a, zero.clone());
        prop_assert_eq!(&a + &(-a.clone()), zero);
    }

    #[test]
    fn product_matches_schoolbook((a, b) in (0usize..=64).prop_flat_map(|n| (series_of(n), series_of(n)))) {
        let n = a.order();
        let expected = common::naive_mul(&as_i128(&a), &as_i128(&b), n);
        prop_assert_eq!(as_i128(&(&a * &b)), expected);
    }

    #[test]
    fn mixed_orders_coerce_to_minimum(a in series(), b in series()) {
        let m = a.order().min(b.order());
        let sum = &a + &b;
        let prod = &a * &b;
        prop_assert_eq!(sum.order(), m);
        prop_assert_eq!(prod.order(), m);
        prop_assert_eq!(sum, &a.truncate(m).unwrap() + &b.truncate(m).unwrap());
    }

    #[test]
    fn truncation_commutes_with_arithmetic(a in series(), b in series(), k in 0usize..=64) {
        let m = a.order().min(b.order());
        let k = k.min(m);
        let tr = |s: &TruncatedSeries| s.truncate(k).unwrap();
        prop_assert_eq!(tr(&(&a * &b)), &tr(&a) * &tr(&b));
        prop_assert_eq!(tr(&(&a + &b)), &tr(&a) + &tr(&b));
        prop_assert!(a.truncate(a.order() + 1).is_err());
    }

    #[test]
    fn reciprocal_inverts_units(a in unit_series()) {
        let inv = a.reciprocal().unwrap();
        prop_assert_eq!(&a * &inv, TruncatedSeries::one(a.order()));
        prop_assert_eq!(inv.reciprocal().unwrap(), a.clone());
    }

    #[test]
    fn negative_powers_are_reciprocals(a in unit_series(), e in 0i64..4) {
        prop_assert_eq!(a.pow(-e).unwrap(), a.pow(e).unwrap().reciprocal().unwrap());
        prop_assert_eq!(&a.pow(e).unwrap() * &a, a.pow(e + 1).unwrap());
    }

    #[test]
    fn non_units_are_not_invertible(a in series(), c0 in prop_oneof![Just(0i64), 2i64..9, -9i64..-1]) {
        let mut c: Vec<i64> = a.coeffs().iter().map(|x| i64::try_from(x).unwrap()).collect();
        c[0] = c0;
        prop_assert!(TruncatedSeries::from_i64s(&c).reciprocal().is_err());
    }

    #[test]
    fn dilation_then_extraction_recovers(a in series(), m in 1usize..6) {
        let d = a.dilate(m).unwrap();
        prop_assert_eq!(d.order(), a.order() * m);
        prop_assert_eq!(d.extract_progression(0, m).unwrap(), a.clone());
        for r in 1..m {
            prop_assert!(d.extract_progression(r, m).map(|s| s.is_zero()).unwrap_or(true));
        }
    }

    #[test]
    fn shift_is_monomial_product(a in series(), k in 0usize..10) {
        let q_k = TruncatedSeries::monomial(1, k.min(a.order()), a.order()).unwrap();
        if k <= a.order() {
            prop_assert_eq!(a.shift(k), &a * &q_k);
        }
    }

    #[test]
    fn jacobi_triple_product(k in 0usize..=10, extra in 0usize..=2, minus in any::<bool>()) {
        let scale = (k + extra).max(1);
        let sign = if minus { Sign::Minus } else { Sign::Plus };
        prop_assume!(!(k == scale && minus));
        let report = check_jtp(k, sign, scale, 100).unwrap();
        prop_assert!(report.passed, "{}", report.to_line());
    }

    #[test]
    fn theta_matches_direct_sum(a in 1i64..6, b in -8i64..8, c in 0i64..4, alt in any::<bool>()) {
        prop_assume!(ThetaSpec::new(a, b, c, alt).is_ok());
        let order = 60usize;
        let s = expand_theta(&ThetaSpec::new(a, b, c, alt).unwrap(), order);
        let mut expected = vec![0i64; order + 1];
        for n in -100i64..=100 {
            let e = a * n * n + b * n + c;
            if (0..=order as i64).contains(&e) {
                expected[e as usize] += if alt && n % 2 != 0 { -1 } else { 1 };
            }
        }
        prop_assert_eq!(s.coeffs(), &common::big(&expected)[..]);
    }
}

#[test]
fn eta_quotients_match_enumeration_to_forty() {
    let n = 40;
    let p = p_series(n);
    let t = t_series_andrews(n);
    let t1 = t_series_eq1(n).unwrap();
    let u = u_series(n).unwrap();
    let f = f_series(n);
    let euler = common::euler_p(n);
    for k in 0..=n {
        let (pk, tk, uk) = common::counts(k);
        assert_eq!(pk, euler[k]);
        assert_eq!(p.coeff(k), &BigInt::from(pk), "p({k})");
        assert_eq!(t.coeff(k), &BigInt::from(tk), "t({k})");
        assert_eq!(t1.coeff(k), &BigInt::from(tk), "t({k}) via (p+f)/2");
        assert_eq!(u.coeff(k), &BigInt::from(uk), "u({k})");
        assert_eq!(f.coeff(k), &BigInt::from(tk - uk), "f({k})");
    }
}

#[test]
fn partition_invariants_to_twenty_five() {
    for n in 0..=25 {
        let oracle = common::partitions(n);
        let mut it = partitions_of(n);
        let mut listed = Vec::new();
        while let Some(parts) = it.next_parts() {
            listed.push(parts.to_vec());
        }
        assert_eq!(listed, oracle, "enumeration order for n = {n}");
        for parts in oracle {
            let lambda = Partition::new(parts.clone()).unwrap();
            assert_eq!(lambda.n(), n);
            let c = conjugate(&lambda);
            assert_eq!(c.parts(), &common::conj(&parts)[..]);
            assert_eq!(conjugate(&c), lambda);
            let stats = classify(&lambda);
            assert_eq!(stats.odd_parts, common::odd(&parts));
            assert_eq!(stats.odd_parts_conjugate, common::odd(c.parts()));
            assert_eq!(stats.odd_parts % 2, n % 2);
            assert_eq!(stats.odd_parts_conjugate % 2, n % 2);
            assert_eq!(stats.even_hooks, common::even_hooks(&parts));
            assert_eq!(stats.is_t_type, common::is_t(&parts));
            assert_eq!(stats.is_t_type, stats.even_hooks.is_multiple_of(2));
            assert_eq!(classify(&c).even_hooks, stats.even_hooks);
            let grid: Vec<usize> = hook_grid(&lambda).into_iter().flatten().collect();
            assert_eq!(grid, common::hooks(&parts));
            assert_eq!(grid.len(), n);
            if (1..=20).contains(&n) {
                for cell in inner_corners(&lambda).unwrap() {
                    assert!(corner_parity_check(&lambda, cell).unwrap());
                    assert_eq!(remove_corner(&lambda, cell).unwrap().n(), n - 1);
                }
            }
        }
    }
}
