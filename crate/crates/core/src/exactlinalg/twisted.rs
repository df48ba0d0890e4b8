use std::fmt;

use serde::{Deserialize, Serialize};

use super::matrix::RationalMatrix;
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::rational::rat;
use crate::weights::HType;

/// The three twisted cases: `SL_{2ℓ+1}`, `SL_{2ℓ}` with the outer involution,
/// and `SO_{2ℓ+2}` twisted by the reflection `w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "rank")]
pub enum TwistedCase {
    A2l(usize),
    A2lMinus1(usize),
    D(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Membership {
    P,
    K,
    Neither,
}

impl TwistedCase {
    pub fn new(name: &str, rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        Ok(match name {
            "A2l" => TwistedCase::A2l(rank),
            "A2lMinus1" => TwistedCase::A2lMinus1(rank),
            "D" => TwistedCase::D(rank),
            other => return Err(Error::Parse(format!("unknown twisted case {other:?}"))),
        })
    }

    /// The case of a given kind whose matrices are `m × m`.
    pub fn from_size(name: &str, m: usize) -> Result<Self> {
        let bad = || Error::DimensionMismatch {
            expected: format!("a matrix size valid for {name}"),
            got: m.to_string(),
        };
        let rank = match name {
            "A2l" if m % 2 == 1 => m / 2,
            "A2lMinus1" if m.is_multiple_of(2) => m / 2,
            "D" if m.is_multiple_of(2) && m >= 4 => m / 2 - 1,
            "A2l" | "A2lMinus1" | "D" => return Err(bad()),
            other => return Err(Error::Parse(format!("unknown twisted case {other:?}"))),
        };
        Self::new(name, rank)
    }

    pub fn name(self) -> &'static str {
        match self {
            TwistedCase::A2l(_) => "A2l",
            TwistedCase::A2lMinus1(_) => "A2lMinus1",
            TwistedCase::D(_) => "D",
        }
    }

    pub fn rank(self) -> usize {
        match self {
            TwistedCase::A2l(l) | TwistedCase::A2lMinus1(l) | TwistedCase::D(l) => l,
        }
    }

    pub fn m(self) -> usize {
        match self {
            TwistedCase::A2l(l) => 2 * l + 1,
            TwistedCase::A2lMinus1(l) => 2 * l,
            TwistedCase::D(l) => 2 * l + 2,
        }
    }

    pub fn htype(self) -> HType {
        match self {
            TwistedCase::A2l(l) | TwistedCase::D(l) => HType::B(l),
            TwistedCase::A2lMinus1(l) => HType::C(l),
        }
    }

    pub fn is_a_case(self) -> bool {
        !matches!(self, TwistedCase::D(_))
    }

    /// Antidiagonal form: alternating signs for the A cases, all ones for D.
    pub fn form(self) -> RationalMatrix {
        let m = self.m();
        let mut j = RationalMatrix::zeros(m, m);
        for i in 0..m {
            let v = match self {
                TwistedCase::D(_) => 1,
                _ if i % 2 == 0 => 1,
                _ => -1,
            };
            j.set(i, m - 1 - i, rat(v));
        }
        j
    }

    pub fn form_inverse(self) -> RationalMatrix {
        match self {
            TwistedCase::A2lMinus1(_) => -&self.form(),
            _ => self.form(),
        }
    }

    /// `diag(I_ℓ, [[0,1],[1,0]], I_ℓ)`; `None` outside the D case.
    pub fn invol_w(self) -> Option<RationalMatrix> {
        let TwistedCase::D(l) = self else {
            return None;
        };
        let m = self.m();
        let mut w = RationalMatrix::identity(m);
        w.set(l, l, rat(0));
        w.set(l + 1, l + 1, rat(0));
        w.set(l, l + 1, rat(1));
        w.set(l + 1, l, rat(1));
        Some(w)
    }

    /// Index permutation realized by `w` (identity for the A cases).
    pub fn w_index(self, i: usize) -> usize {
        match self {
            TwistedCase::D(l) if i == l => l + 1,
            TwistedCase::D(l) if i == l + 1 => l,
            _ => i,
        }
    }

    /// `wAw` as an index permutation, avoiding two products.
    pub fn conj_w(self, a: &RationalMatrix) -> RationalMatrix {
        RationalMatrix::from_fn(a.rows(), a.cols(), |i, j| a.get(self.w_index(i), self.w_index(j)).clone())
    }

    pub fn pair_case(self) -> crate::partitions::PairCase {
        use crate::partitions::PairCase;
        match self {
            TwistedCase::A2l(l) => PairCase::OrthOddOnA(l),
            TwistedCase::A2lMinus1(l) => PairCase::SympOnA(l),
            TwistedCase::D(l) => PairCase::OrthVector(l),
        }
    }
}

impl fmt::Display for TwistedCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.name(), self.rank())
    }
}

/// `J⁻¹AᵀJ`, the adjoint for the bilinear form.
pub fn form_adjoint(case: TwistedCase, a: &RationalMatrix) -> Result<RationalMatrix> {
    a.require_square(case.m())?;
    // J is a signed antidiagonal, so J⁻¹AᵀJ only permutes and signs entries.
    let j = case.form();
    let jinv = case.form_inverse();
    let m = case.m();
    Ok(RationalMatrix::from_fn(m, m, |r, c| {
        let rr = m - 1 - r;
        let cc = m - 1 - c;
        jinv.get(r, rr) * a.get(cc, rr) * j.get(cc, c)
    }))
}

/// The adjoint `A*` for the A cases; for D the involution `wAw`.
pub fn adjoint(case: TwistedCase, a: &RationalMatrix) -> Result<RationalMatrix> {
    match case {
        TwistedCase::D(_) => {
            a.require_square(case.m())?;
            Ok(case.conj_w(a))
        }
        _ => form_adjoint(case, a),
    }
}

/// `A ∈ so(J)` for D; `tr A = 0` for the A cases.
pub fn in_lie_algebra(case: TwistedCase, a: &RationalMatrix) -> bool {
    if a.require_square(case.m()).is_err() {
        return false;
    }
    match case {
        TwistedCase::D(_) => {
            let star = form_adjoint(case, a).expect("square");
            (&star + a).is_zero()
        }
        _ => a.trace() == rat(0),
    }
}

pub fn eigenspace_membership(case: TwistedCase, a: &RationalMatrix) -> Membership {
    if !in_lie_algebra(case, a) {
        return Membership::Neither;
    }
    if a.is_zero() {
        return Membership::P;
    }
    let image = match case {
        TwistedCase::D(_) => case.conj_w(a),
        _ => -&form_adjoint(case, a).expect("square"),
    };
    if &image + a == RationalMatrix::zeros(a.rows(), a.cols()) {
        Membership::P
    } else if image == *a {
        Membership::K
    } else {
        Membership::Neither
    }
}

/// Membership in `K`: preserves the form, has determinant one, and for D
/// commutes with `w`.
pub fn in_k_group(case: TwistedCase, k: &RationalMatrix) -> bool {
    if k.require_square(case.m()).is_err() {
        return false;
    }
    let j = case.form();
    let preserves = &(&k.transpose() * &j) * k == j;
    let fixed = match case {
        TwistedCase::D(_) => case.conj_w(k) == *k,
        _ => true,
    };
    preserves && fixed && k.det().is_ok_and(|d| d == rat(1))
}

pub fn jordan_type(a: &RationalMatrix) -> Result<Partition> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch {
            expected: "square matrix".into(),
            got: format!("{}x{}", a.rows(), a.cols()),
        });
    }
    let m = a.rows();
    let mut ranks = vec![m];
    let mut power = RationalMatrix::identity(m);
    while *ranks.last().expect("nonempty") > 0 {
        if ranks.len() > m {
            return Err(Error::NotNilpotent);
        }
        power = &power * a;
        ranks.push(power.rank());
    }
    // at_least[i] = number of blocks of size > i
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    let parts = (1..=at_least.first().copied().unwrap_or(0))
        .map(|k| at_least.iter().filter(|&&c| c >= k).count())
        .collect();
    Partition::new(parts)
}

/// Rank of the `s × s` upper-triangular block Toeplitz matrix whose first block
/// row is `coeffs[0..s]`.
pub fn block_toeplitz_rank(coeffs: &[RationalMatrix], s: usize) -> Result<usize> {
    if s > coeffs.len() {
        return Err(Error::NotEnoughCoefficients {
            s,
            available: coeffs.len(),
        });
    }
    if s == 0 {
        return Ok(0);
    }
    let (r, c) = (coeffs[0].rows(), coeffs[0].cols());
    for x in &coeffs[..s] {
        coeffs[0].same_shape(x)?;
    }
    let mut big = RationalMatrix::zeros(s * r, s * c);
    for bi in 0..s {
        for bj in bi..s {
            let x = &coeffs[bj - bi];
            if !x.is_zero() {
                big.set_block(bi * r, bj * c, x);
            }
        }
    }
    Ok(big.rank())
}
