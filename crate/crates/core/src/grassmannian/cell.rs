use super::laurent::{sigma_fixed, LaurentMatrix};
use crate::error::{Error, Result};
use crate::exactlinalg::{block_toeplitz_rank, RationalMatrix, TwistedCase};
use crate::rational::rat;
use crate::weights::WeightTuple;

fn require_htype(case: TwistedCase, lambda: &WeightTuple) -> Result<()> {
    if lambda.htype() != case.htype() {
        return Err(Error::HTypeMismatch(case.htype().to_string(), lambda.htype().to_string()));
    }
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    Ok(())
}

/// Exponent pattern of `t^{λ+σλ}` in the standard representation.
pub fn exponent_pattern(case: TwistedCase, lambda: &WeightTuple) -> Vec<i64> {
    let a = lambda.coords();
    let rev = a.iter().rev().map(|x| -x);
    match case {
        TwistedCase::A2l(_) => a.iter().copied().chain([0]).chain(rev).collect(),
        TwistedCase::A2lMinus1(_) => a.iter().copied().chain(rev).collect(),
        TwistedCase::D(_) => a
            .iter()
            .map(|x| 2 * x)
            .chain([0, 0])
            .chain(rev.map(|x| 2 * x))
            .collect(),
    }
}

/// Diagonal σ-fixed representative of `t^{λ+σλ}`. In the A cases the first
/// half carries the sign `(−1)^{a_i}` and the middle entry of `A2l` carries
/// `(−1)^{Σa}` so the determinant stays one.
pub fn norm_element(case: TwistedCase, lambda: &WeightTuple) -> Result<LaurentMatrix> {
    require_htype(case, lambda)?;
    let exps = exponent_pattern(case, lambda);
    let m = case.m();
    let l = case.rank();
    let total: i64 = lambda.coords().iter().sum();
    let sign = |v: i64| if v.rem_euclid(2) == 0 { 1 } else { -1 };
    let mut g = LaurentMatrix::zero(m);
    for (i, &e) in exps.iter().enumerate() {
        let c = match case {
            TwistedCase::D(_) => 1,
            _ if i < l => sign(lambda.coords()[i]),
            TwistedCase::A2l(_) if i == l => sign(total),
            _ => 1,
        };
        let mut entry = RationalMatrix::zeros(m, m);
        entry.set(i, i, rat(c));
        g = g.add(&LaurentMatrix::monomial(entry, e));
    }
    Ok(g)
}

/// The multiset of exponents `μ` with `g ∈ G(O) t^μ G(O)`, ascending,
/// recovered from block Toeplitz ranks. The search stops once the rank
/// increments reach `m`, and gives up at `s = 1 − 2N` where `N` is the
/// lowest exponent; that bound suffices whenever the multiset is symmetric.
pub fn coweight_multiset(g: &LaurentMatrix) -> Result<Vec<i64>> {
    let m = g.m();
    let n = g.lowest().ok_or_else(|| Error::Malformed("zero matrix".into()))?;
    if n > 0 {
        return Err(Error::PatternMismatch(format!("lowest exponent {n} is positive")));
    }
    let s_max = (1 - 2 * n) as usize;
    let coeffs: Vec<RationalMatrix> = (0..s_max as i64).map(|i| g.coeff(n + i)).collect();
    let mut mu = Vec::with_capacity(m);
    let (mut rho_prev, mut f_prev) = (0usize, 0usize);
    for s in 1..=s_max {
        let rho = block_toeplitz_rank(&coeffs, s)?;
        let f = rho - rho_prev;
        if f < f_prev {
            return Err(Error::Malformed(format!("rank increments decrease at s = {s}")));
        }
        let at = n + s as i64 - 1;
        mu.extend(std::iter::repeat_n(at, f - f_prev));
        if f == m {
            return Ok(mu);
        }
        rho_prev = rho;
        f_prev = f;
    }
    Err(Error::Unsaturated(s_max))
}

fn match_pattern(case: TwistedCase, mu: &[i64]) -> Result<Vec<i64>> {
    let mismatch = || Error::PatternMismatch(format!("{mu:?} for {case}"));
    let mut desc = mu.to_vec();
    desc.reverse();
    let l = case.rank();
    let m = case.m();
    if desc.len() != m {
        return Err(mismatch());
    }
    let symmetric = (0..m).all(|i| desc[i] == -desc[m - 1 - i]);
    if !symmetric {
        return Err(mismatch());
    }
    let middle_ok = match case {
        TwistedCase::A2l(_) => desc[l] == 0,
        TwistedCase::A2lMinus1(_) => true,
        TwistedCase::D(_) => desc[l] == 0 && desc[l + 1] == 0,
    };
    if !middle_ok || desc[l - 1] < 0 {
        return Err(mismatch());
    }
    match case {
        TwistedCase::D(_) => {
            if desc[..l].iter().any(|e| e % 2 != 0) {
                return Err(mismatch());
            }
            Ok(desc[..l].iter().map(|e| e / 2).collect())
        }
        _ => Ok(desc[..l].to_vec()),
    }
}

/// The dominant `λ̄` with `g · e₀` in the cell of `λ̄`.
pub fn cell_of(case: TwistedCase, g: &LaurentMatrix) -> Result<WeightTuple> {
    if !sigma_fixed(case, g)? {
        return Err(Error::NotSigmaFixed);
    }
    cell_of_fixed(case, g)
}

/// [`cell_of`] without the σ-fixedness check, for callers that have already
/// established it.
pub fn cell_of_fixed(case: TwistedCase, g: &LaurentMatrix) -> Result<WeightTuple> {
    let mu = coweight_multiset(g)?;
    let a = match_pattern(case, &mu)?;
    let n = g.lowest().expect("nonzero");
    let expected_first = match case {
        TwistedCase::D(_) => -n / 2,
        _ => -n,
    };
    if a[0] != expected_first {
        return Err(Error::PatternMismatch(format!(
            "leading coordinate {} disagrees with lowest exponent {n}",
            a[0]
        )));
    }
    WeightTuple::new(case.htype(), a)
}
