use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::matrix::RationalMatrix;
use super::twisted::{form_adjoint, Membership, TwistedCase};
use crate::error::{Error, Result};
use crate::rational::{frac, rat};

/// `exp(n) = Σ nᵏ/k!`, a finite sum for nilpotent `n`.
pub fn exp_nilpotent(n: &RationalMatrix) -> Result<RationalMatrix> {
    if !n.is_nilpotent() {
        return Err(Error::NotNilpotent);
    }
    let mut term = RationalMatrix::identity(n.rows());
    let mut acc = term.clone();
    for k in 1..=n.rows() {
        term = (&term * n).scale(&frac(1, k as i64));
        if term.is_zero() {
            break;
        }
        acc = &acc + &term;
    }
    Ok(acc)
}

/// Strictly upper (or lower) triangular basis elements of `k` or `p`.
pub fn triangular_basis(case: TwistedCase, part: Membership, upper: bool) -> Vec<RationalMatrix> {
    let m = case.m();
    let sign = if part == Membership::P { rat(-1) } else { rat(1) };
    let mut out: Vec<RationalMatrix> = Vec::new();
    for i in 0..m {
        for j in 0..m {
            if (upper && i >= j) || (!upper && i <= j) {
                continue;
            }
            let e = RationalMatrix::unit(m, i, j);
            let star = form_adjoint(case, &e).expect("square");
            let n = match case {
                TwistedCase::D(_) => {
                    let b = &e - &star;
                    &b + &case.conj_w(&b).scale(&sign)
                }
                _ => &e - &star.scale(&sign),
            };
            if n.is_zero() || out.iter().any(|o| o == &n || o == &-&n) {
                continue;
            }
            out.push(n);
        }
    }
    out
}

pub fn k_triangular_basis(case: TwistedCase, upper: bool) -> Vec<RationalMatrix> {
    triangular_basis(case, Membership::K, upper)
}

type BasisKey = (TwistedCase, Membership, bool);

/// Building a basis costs `m²` adjoints, so samplers share one copy.
fn cached_basis(case: TwistedCase, part: Membership, upper: bool) -> Arc<Vec<RationalMatrix>> {
    static CACHE: OnceLock<Mutex<HashMap<BasisKey, Arc<Vec<RationalMatrix>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(b) = cache.lock().expect("basis cache").get(&(case, part, upper)) {
        return Arc::clone(b);
    }
    let b = Arc::new(triangular_basis(case, part, upper));
    cache
        .lock()
        .expect("basis cache")
        .entry((case, part, upper))
        .or_insert(b)
        .clone()
}

/// A random strictly triangular element of `k` or `p`; `None` when the
/// chosen basis is empty.
pub fn random_triangular(
    case: TwistedCase,
    part: Membership,
    upper: bool,
    rng: &mut ChaCha8Rng,
) -> Option<RationalMatrix> {
    random_letter(&cached_basis(case, part, upper), rng)
}

fn random_letter(basis: &[RationalMatrix], rng: &mut ChaCha8Rng) -> Option<RationalMatrix> {
    let first = basis.choose(rng)?;
    let m = first.rows();
    let mut n = RationalMatrix::zeros(m, m);
    for _ in 0..rng.gen_range(1..=2) {
        let b = basis.choose(rng).expect("nonempty");
        let c = *[-2, -1, 1, 2].choose(rng).expect("nonempty");
        n = &n + &b.scale(&rat(c));
    }
    Some(n)
}

/// A random element of `K` together with its inverse, drawn from `rng`.
pub fn random_k_pair(case: TwistedCase, rng: &mut ChaCha8Rng) -> (RationalMatrix, RationalMatrix) {
    let bases = [
        cached_basis(case, Membership::K, true),
        cached_basis(case, Membership::K, false),
    ];
    let m = case.m();
    let mut k = RationalMatrix::identity(m);
    let mut kinv = RationalMatrix::identity(m);
    let len = rng.gen_range(2..=4);
    let mut side = rng.gen_range(0..2usize);
    for _ in 0..len {
        if let Some(n) = random_letter(&bases[side], rng) {
            if n.is_nilpotent() {
                let g = exp_nilpotent(&n).expect("nilpotent");
                let ginv = exp_nilpotent(&-&n).expect("nilpotent");
                k = &k * &g;
                kinv = &ginv * &kinv;
            }
        }
        side = 1 - side;
    }
    (k, kinv)
}

pub fn random_k_element(case: TwistedCase, seed: u64) -> RationalMatrix {
    random_k_pair(case, &mut ChaCha8Rng::seed_from_u64(seed)).0
}
