use instability_core::bounds::{
    binomial, jh_t, padic_digits, sl2_symmetric_t, symmetric_report, tensor_t, threshold_exponent,
    wedge_t,
};
use num_bigint::BigUint;
use proptest::prelude::*;

fn prime() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![2u64, 3, 5, 7, 11, 13, 101])
}

/// `C(a, r)` from Pascal's rule.
fn pascal(a: u64, r: u64) -> u128 {
    let mut row = vec![1u128];
    for _ in 0..a {
        let mut next = vec![1u128; row.len() + 1];
        for k in 1..row.len() {
            next[k] = row[k - 1] + row[k];
        }
        row = next;
    }
    row[r as usize]
}

proptest! {
    #[test]
    fn digits_reconstruct(n in 1u64..1_000_000, p in prime()) {
        let digits = padic_digits(&BigUint::from(n), p).unwrap();
        prop_assert!(digits.iter().all(|&d| d < p));
        prop_assert!(*digits.last().unwrap() != 0);
        let back = digits.iter().rev().fold(0u64, |acc, &d| acc * p + d);
        prop_assert_eq!(back, n);
        let t = sl2_symmetric_t(n, p).unwrap();
        prop_assert!(p.pow(t) <= n && n < p.pow(t + 1));
    }

    #[test]
    fn threshold_is_minimal(bound in 0u64..10_000_000, p in prime()) {
        let t = threshold_exponent(&BigUint::from(bound), p);
        prop_assert!(u128::from(p).pow(t) > u128::from(bound));
        prop_assert!(t == 0 || u128::from(p).pow(t - 1) <= u128::from(bound));
        prop_assert_eq!(t == 0, bound == 0);
        prop_assert_eq!(t <= 1, bound < p);
    }

    #[test]
    fn symmetric_report_is_zero_below_p(n in 1u64..500, p in prime()) {
        let r = symmetric_report(n, p).unwrap();
        prop_assert_eq!(r.t == 0, n < p);
    }

    #[test]
    fn tensor_matches_definition(n in 1u64..5, m in 1u64..5, p in prime()) {
        let r = tensor_t(n, m, p).unwrap();
        prop_assert_eq!(r.n_raw.clone(), BigUint::from(m * n.pow(m as u32)));
        prop_assert_eq!(r.t, threshold_exponent(&r.n_raw, p));
        prop_assert!(!r.degenerate);
        // monotone in m and n
        prop_assert!(tensor_t(n, m + 1, p).unwrap().t >= r.t);
        prop_assert!(tensor_t(n + 1, m, p).unwrap().t >= r.t);
    }

    #[test]
    fn wedge_and_jh_match_pascal(n in 1u64..5, m in 1u64..3, p in prime()) {
        let big_m = n.pow(m as u32);
        prop_assume!(big_m <= 16);
        let brute = |lo: u64| (lo..big_m).map(|r| pascal(big_m, r) * u128::from(r * m)).max();
        let w = wedge_t(n, m, p).unwrap();
        prop_assert_eq!(w.n_raw.clone(), BigUint::from(brute(0).unwrap()));
        let j = jh_t(n, m, p).unwrap();
        match brute(1) {
            Some(v) => {
                prop_assert_eq!(j.n_raw.clone(), BigUint::from(v));
                prop_assert!(!j.degenerate);
                prop_assert_eq!(&j.n_raw, &w.n_raw);
            }
            None => prop_assert!(j.degenerate && j.t == 0),
        }
        // C(M, r) = C(M, M - r)
        for r in 0..=big_m {
            prop_assert_eq!(binomial(big_m, r).unwrap(), binomial(big_m, big_m - r).unwrap());
        }
    }

    #[test]
    fn thresholds_fall_as_p_grows(n in 1u64..4, m in 1u64..4) {
        let ts: Vec<u32> = [2u64, 3, 5, 7, 11].iter().map(|&p| wedge_t(n, m, p).unwrap().t).collect();
        prop_assert!(ts.windows(2).all(|w| w[0] >= w[1]));
    }
}

#[test]
fn rejects_bad_input() {
    assert!(padic_digits(&BigUint::from(5u32), 4).is_err());
    assert!(padic_digits(&BigUint::from(0u32), 5).is_err());
    assert!(tensor_t(0, 2, 5).is_err());
    assert!(wedge_t(2, 0, 5).is_err());
    assert!(binomial(3, 4).is_err());
}
