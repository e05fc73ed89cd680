use digibinom::digits::{
    dominates, enumerate_dominated, is_carry_free, minimal_width, sum_of_digits, w_weight, z_weight,
};
use digibinom::DigitVector;
use num_bigint::BigUint;
use proptest::prelude::*;

#[test]
fn dominance_carry_free_and_additivity_agree() {
    for b in [2u32, 3, 5] {
        for n in 0u64..1000 {
            let sn = sum_of_digits(&n, b).unwrap();
            for m in 0..=n {
                let dom = dominates(&m, &n, b).unwrap();
                let free = is_carry_free(&m, &(n - m), b).unwrap();
                let additive = sum_of_digits(&m, b).unwrap() + sum_of_digits(&(n - m), b).unwrap() == sn;
                assert!(dom == free && free == additive, "b={b} n={n} m={m}");
            }
        }
    }
}

#[test]
fn enumeration_matches_filter() {
    for b in [2u32, 3, 4, 7] {
        for n in 0u64..400 {
            let listed: Vec<u64> = enumerate_dominated(&n, b).unwrap().collect();
            let filtered: Vec<u64> = (0..=n).filter(|m| dominates(m, &n, b).unwrap()).collect();
            assert_eq!(listed, filtered, "b={b} n={n}");
            let count = DigitVector::minimal(&n, b).unwrap().dominated_count().unwrap();
            assert_eq!(listed.len() as u64, count);
        }
    }
}

#[test]
fn z_partition_over_binary_levels() {
    // for n = 2^N − 1 the z-weights are distributed like the coefficients of Π_{i<N} (1+q^i)
    for levels in 1..=9u32 {
        let n = (1u64 << levels) - 1;
        let mut counts = vec![0u64; (levels * (levels - 1) / 2 + 1) as usize];
        for m in 0..=n {
            counts[z_weight(&m, &n, 2, levels as usize).unwrap() as usize] += 1;
        }
        let mut expected = vec![0u64; counts.len()];
        expected[0] = 1;
        for i in 0..levels as usize {
            for e in (i..expected.len()).rev() {
                expected[e] += expected[e - i];
            }
        }
        assert_eq!(counts, expected, "N={levels}");
    }
}

#[test]
fn binary_z_weights_partition_the_set_bits() {
    for n in 0u64..512 {
        let w = minimal_width(&n, 2).unwrap();
        let set_positions: u64 = (0..64).filter(|k| n >> k & 1 == 1).sum();
        for m in enumerate_dominated(&n, 2).unwrap() {
            let total = z_weight(&m, &n, 2, w).unwrap() + z_weight(&(n - m), &n, 2, w).unwrap();
            assert_eq!(total, set_positions, "n={n} m={m}");
        }
    }
}

#[test]
fn w_bounds() {
    for n in 0u64..512 {
        let width = minimal_width(&n, 2).unwrap();
        for m in enumerate_dominated(&n, 2).unwrap() {
            let w = w_weight(&m, &n, width).unwrap();
            let s = sum_of_digits(&m, 2).unwrap();
            assert!(w <= (width as u64).saturating_sub(1) * s, "n={n} m={m}");
        }
    }
}

#[test]
fn biguint_agrees_with_u64() {
    for b in [2u32, 3, 10] {
        for n in [0u64, 1, 17, 999, 123_456] {
            let big = BigUint::from(n);
            assert_eq!(sum_of_digits(&big, b).unwrap(), sum_of_digits(&n, b).unwrap());
            assert_eq!(minimal_width(&big, b).unwrap(), minimal_width(&n, b).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn z_is_width_independent(n in 0u64..1 << 20, pick in any::<u64>(), extra in 0usize..8) {
        let m = enumerate_dominated(&n, 3).unwrap().nth((pick % 64) as usize).unwrap_or(0);
        let w = minimal_width(&n, 3).unwrap();
        prop_assert_eq!(z_weight(&m, &n, 3, w).unwrap(), z_weight(&m, &n, 3, w + extra).unwrap());
    }

    #[test]
    fn w_is_a_reversed_position_sum(levels in 1u32..=20, m in any::<u64>()) {
        let n = (1u64 << levels) - 1;
        let m = m & n;
        let reversed: u64 = (0..levels).filter(|i| m >> i & 1 == 1).map(|i| u64::from(levels - 1 - i)).sum();
        prop_assert_eq!(w_weight(&m, &n, levels as usize).unwrap(), reversed);
    }

    #[test]
    fn z_bounded_by_position_total(n in 0u64..1 << 24, pick in any::<u64>()) {
        let w = minimal_width(&n, 2).unwrap();
        let m = n & pick;
        let total = (w * w.saturating_sub(1) / 2) as u64;
        prop_assert!(z_weight(&m, &n, 2, w).unwrap() <= total);
        prop_assert_eq!(z_weight(&n, &n, 2, w).unwrap(), 0);
    }

    #[test]
    fn expansion_round_trips(n in any::<u64>(), b in 2u32..=36) {
        let dv = DigitVector::minimal(&n, b).unwrap();
        prop_assert_eq!(dv.value::<u64>(), Some(n));
        prop_assert_eq!(dv.digit_sum(), sum_of_digits(&n, b).unwrap());
        prop_assert!(dv.digits().iter().all(|&d| d < b));
    }
}
