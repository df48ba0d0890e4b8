mod common;

use nilgrass::exactlinalg::{eigenspace_membership, form_adjoint, jordan_type, Membership};
use nilgrass::rational::rat;
use nilgrass::{RationalMatrix, TwistedCase};
use proptest::prelude::*;

#[test]
fn adjoint_pairing() {
    common::adjoint_pairing(1).unwrap();
}

#[test]
fn jordan_type_is_k_invariant() {
    common::jordan_conjugation_invariant(2).unwrap();
}

#[test]
fn rank_one_adjoint_dichotomy() {
    common::rank_one_dichotomy(3).unwrap();
}

#[test]
fn block_toeplitz_closed_form() {
    common::toeplitz_closed_form().unwrap();
}

fn matrix(m: usize) -> impl Strategy<Value = RationalMatrix> {
    prop::collection::vec(-3i64..=3, m * m).prop_map(move |v| RationalMatrix::from_fn(m, m, |i, j| rat(v[i * m + j])))
}

fn square_pair() -> impl Strategy<Value = (RationalMatrix, RationalMatrix)> {
    (1usize..=5).prop_flat_map(|m| (matrix(m), matrix(m)))
}

fn case() -> impl Strategy<Value = TwistedCase> {
    (1usize..=3, 0usize..3).prop_map(|(l, k)| common::cases(l)[k])
}

proptest! {
    #![proptest_config(common::prop_config(150))]

    #[test]
    fn rank_of_transpose((a, _) in square_pair()) {
        prop_assert_eq!(a.rank(), a.transpose().rank());
    }

    #[test]
    fn det_is_multiplicative((a, b) in square_pair()) {
        prop_assert_eq!((&a * &b).det().unwrap(), a.det().unwrap() * b.det().unwrap());
    }

    #[test]
    fn full_rank_iff_nonzero_det((a, _) in square_pair()) {
        prop_assert_eq!(a.rank() == a.rows(), a.det().unwrap() != rat(0));
    }

    #[test]
    fn nullity_plus_rank((a, _) in square_pair()) {
        prop_assert_eq!(a.nullspace().len() + a.rank(), a.cols());
        for v in a.nullspace() {
            prop_assert!(a.mul_vec(&v).iter().all(|q| *q == rat(0)));
        }
    }

    #[test]
    fn adjoint_reverses_products(c in case(), seed in prop::collection::vec(-3i64..=3, 128)) {
        let m = c.m();
        let a = RationalMatrix::from_fn(m, m, |i, j| rat(seed[i * m + j]));
        let b = RationalMatrix::from_fn(m, m, |i, j| rat(seed[64 + i * m + j]));
        let star = |x: &RationalMatrix| form_adjoint(c, x).unwrap();
        prop_assert_eq!(star(&(&a * &b)), &star(&b) * &star(&a));
        // In the A cases k is the skew part, so a − a* always lands there.
        let skew = &a - &star(&a);
        if c.is_a_case() {
            prop_assert!(skew.is_zero() || eigenspace_membership(c, &skew) == Membership::K);
        }
    }

    #[test]
    fn jordan_type_sums_to_size(m in 1usize..=7, cut in prop::collection::vec(any::<bool>(), 6)) {
        // A single shift with some superdiagonal entries removed.
        let x = RationalMatrix::from_fn(m, m, |i, j| rat((j == i + 1 && cut.get(i).copied().unwrap_or(true)) as i64));
        let p = jordan_type(&x).unwrap();
        prop_assert_eq!(p.n(), m);
        prop_assert_eq!(p.len(), m - x.rank());
    }
}
