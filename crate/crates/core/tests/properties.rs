//! Property tests for the weight layer.

use proptest::prelude::*;

use bgg_core::{analyze_singularity, delete_pairs, insert_pairs, Weight};

proptest! {
    // Weights are taken modulo the all-ones line: a constant shift of every
    // coordinate must not change anything downstream.
    #[test]
    fn constant_shift_is_invisible(
        coords in proptest::collection::vec(-50i64..50, 2..10),
        shift in -1000i64..1000,
    ) {
        let shifted: Vec<i64> = coords.iter().map(|&c| c + shift).collect();
        prop_assert_eq!(Weight::new(coords)?, Weight::new(shifted)?);
    }

    // Reordering the coordinates changes neither the singularity data nor
    // admissibility.
    #[test]
    fn analysis_ignores_coordinate_order(
        coords in proptest::collection::vec(0i64..8, 4..9),
        seed in any::<u64>(),
    ) {
        let n = coords.len();
        let k = 1 + (seed as usize) % (n / 2);
        let mut permuted = coords.clone();
        // Deterministic shuffle driven by the seed.
        for i in (1..n).rev() {
            permuted.swap(i, (seed as usize).wrapping_mul(i + 1) % (i + 1));
        }
        let a = analyze_singularity(&Weight::new(coords)?, k);
        let b = analyze_singularity(&Weight::new(permuted)?, k);
        match (a, b) {
            (Ok(x), Ok(y)) => prop_assert_eq!(x, y),
            (Err(_), Err(_)) => {}
            (x, y) => prop_assert!(false, "admissibility differs: {:?} vs {:?}", x, y),
        }
    }

    // Deleting the repeated pairs and reinserting them is the identity on
    // every orbit element.
    #[test]
    fn delete_insert_round_trip(doubled in proptest::collection::btree_set(0i64..8, 0..3)) {
        let doubled: Vec<i64> = doubled.into_iter().collect();
        let mut coords: Vec<i64> = Vec::new();
        for v in (0..8i64).rev() {
            coords.push(v);
            if doubled.contains(&v) {
                coords.push(v);
            }
        }
        let k = coords.len() / 2;
        prop_assume!(doubled.len() <= k);
        let profile = analyze_singularity(&Weight::new(coords).unwrap(), k).unwrap();
        for element in bgg_core::compute_orbit(&profile) {
            let reduced = delete_pairs(&element, &profile).unwrap();
            prop_assert_eq!(insert_pairs(&reduced, &profile).unwrap(), element);
        }
    }
}
