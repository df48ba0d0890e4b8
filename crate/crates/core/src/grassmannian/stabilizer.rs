//! Random σ-fixed elements of `G(O)`, the group that acts on each cell.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::laurent::LaurentMatrix;
use crate::exactlinalg::{random_triangular, Membership, RationalMatrix, TwistedCase};
use crate::rational::frac;

/// `exp(n t^k) = Σ nⁱ t^{ki} / i!` for nilpotent `n`.
pub fn exp_loop(n: &RationalMatrix, k: i64) -> LaurentMatrix {
    let m = n.rows();
    let mut g = LaurentMatrix::identity(m);
    let mut term = RationalMatrix::identity(m);
    for i in 1..=m as i64 {
        term = (&term * n).scale(&frac(1, i));
        if term.is_zero() {
            break;
        }
        g = g.add(&LaurentMatrix::monomial(term.clone(), k * i));
    }
    g
}

/// `exp(n t^k)` with `k ∈ {0, 1, 2}` and `n` a random strictly triangular
/// element of `k` (even `k`) or `p` (odd `k`), which makes it σ-fixed.
pub fn random_stabilizer_factor(case: TwistedCase, rng: &mut ChaCha8Rng) -> LaurentMatrix {
    let k = rng.gen_range(0..=2i64);
    let part = if k % 2 == 0 { Membership::K } else { Membership::P };
    let upper = rng.gen_bool(0.5);
    match random_triangular(case, part, upper, rng) {
        Some(n) => exp_loop(&n, k),
        None => LaurentMatrix::identity(case.m()),
    }
}

/// Product of `factors` random factors.
pub fn random_stabilizer(case: TwistedCase, factors: usize, rng: &mut ChaCha8Rng) -> LaurentMatrix {
    (0..factors).fold(LaurentMatrix::identity(case.m()), |g, _| {
        g.mul(&random_stabilizer_factor(case, rng))
    })
}
