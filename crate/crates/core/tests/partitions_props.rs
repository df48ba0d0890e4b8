mod common;

use nilgrass::partitions::{dominates, dual, orbit_dim_symmetric, PairCase, Partition};
use proptest::prelude::*;

#[test]
fn symmetric_dims_are_integral() {
    common::symmetric_dims_integral().unwrap();
}

#[test]
fn dims_are_monotone_in_dominance() {
    common::dominance_dims_monotone().unwrap();
}

#[test]
fn dual_is_an_involution() {
    common::dual_involution().unwrap();
}

#[test]
fn symplectic_orbits_match_partitions_of_n() {
    common::symp_classification_count().unwrap();
}

fn partition(max_n: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..=6, 0..=max_n / 2).prop_map(|v| Partition::new(v).unwrap())
}

fn same_size_pair() -> impl Strategy<Value = (Partition, Partition)> {
    // Two compositions of the same total, each folded into a partition.
    (1usize..=14).prop_flat_map(|n| {
        let split = move || {
            prop::collection::vec(1usize..=n, n).prop_map(move |cuts| {
                let mut left = n;
                let mut parts = Vec::new();
                for c in cuts {
                    if left == 0 {
                        break;
                    }
                    let p = c.min(left);
                    parts.push(p);
                    left -= p;
                }
                Partition::new(parts).unwrap()
            })
        };
        (split(), split())
    })
}

proptest! {
    #![proptest_config(common::prop_config(300))]

    #[test]
    fn dual_twice_is_identity(p in partition(24)) {
        prop_assert_eq!(dual(&dual(&p)), p.clone());
        prop_assert_eq!(dual(&p).n(), p.n());
        prop_assert_eq!(dual(&p).len(), p.parts().first().copied().unwrap_or(0));
    }

    #[test]
    fn dual_reverses_dominance((d, f) in same_size_pair()) {
        prop_assert_eq!(dominates(&d, &f).unwrap(), dominates(&dual(&f), &dual(&d)).unwrap());
    }

    #[test]
    fn dominance_is_antisymmetric((d, f) in same_size_pair()) {
        if dominates(&d, &f).unwrap() && dominates(&f, &d).unwrap() {
            prop_assert_eq!(d, f);
        }
    }

    #[test]
    fn symplectic_dims_double_the_half((n, half) in (1usize..=6).prop_flat_map(|n| (Just(n), prop::collection::vec(1usize..=n, n)))) {
        // Doubling every part of a partition of n gives a valid sympA orbit.
        let mut left = n;
        let mut parts = Vec::new();
        for c in half {
            if left == 0 { break; }
            let p = c.min(left);
            parts.extend([p, p]);
            left -= p;
        }
        let p = Partition::new(parts).unwrap();
        let case = PairCase::SympOnA(n);
        prop_assert!(case.is_valid(&p));
        let m = 2 * n;
        let sq = p.dual_square_sum();
        prop_assert_eq!(orbit_dim_symmetric(case, &p).unwrap() * 2, m * m - sq);
    }
}
