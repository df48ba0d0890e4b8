//! Fibers of `π` over points of its image, and the dimension of the fiber
//! over `0`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlinalg::{eigenspace_membership, form_adjoint, Membership, RationalMatrix, TwistedCase};
use crate::grassmannian::{det1_check, sigma_fixed, LaurentMatrix};
use crate::partitions::{orbit_dim_classical, OrbitDescriptor, PairCase, Partition};
use crate::rational::frac;

fn require_shape(case: TwistedCase, a: &RationalMatrix) -> Result<()> {
    a.require_square(case.m())
}

/// Whether `z` parametrizes a point of the fiber of `π` over `x`:
/// - `A2l`: `x ∈ p`, `x² = 0` and `z = 0`;
/// - `A2lMinus1`: `x ∈ p`, `z ∈ k`, `xz + zx = 0`, `z² = 0`, `rk(z + ½x²) ≤ 1`;
/// - `D`: `x ∈ p`, `z ∈ k`, `xz + zx = 0`, `z² = 0`.
///
/// In every case the point is `I + x t⁻¹ + (½x² + z) t⁻²`.
pub fn fiber_contains(case: TwistedCase, x: &RationalMatrix, z: &RationalMatrix) -> Result<bool> {
    require_shape(case, x)?;
    require_shape(case, z)?;
    if eigenspace_membership(case, x) != Membership::P {
        return Ok(false);
    }
    let x2 = x * x;
    if let TwistedCase::A2l(_) = case {
        return Ok(x2.is_zero() && z.is_zero());
    }
    let anti = &(x * z) + &(z * x);
    let base = !x.pow(3).is_zero()
        || (!z.is_zero() && eigenspace_membership(case, z) != Membership::K)
        || !anti.is_zero()
        || !(z * z).is_zero();
    if base {
        return Ok(false);
    }
    match case {
        TwistedCase::A2lMinus1(_) => Ok((z + &x2.scale(&frac(1, 2))).rank() <= 1),
        _ => Ok(true),
    }
}

/// `I + x t⁻¹ + (½x² + z) t⁻²`
pub fn fiber_point(x: &RationalMatrix, z: &RationalMatrix) -> Result<LaurentMatrix> {
    LaurentMatrix::unipotent(x, &(z + &(x * x).scale(&frac(1, 2))))
}

/// The orbit whose closure is `π⁻¹(0)` and its dimension from the partition
/// formula. `A2l` fibers are points: the zero orbit with dimension `0`.
pub fn fiber_zero_profile(case: TwistedCase) -> Result<(OrbitDescriptor, usize)> {
    let l = case.rank();
    let (pair, p) = match case {
        TwistedCase::A2l(_) => {
            let o = OrbitDescriptor::new(case.pair_case(), Partition::ones(case.m()))?;
            return Ok((o, 0));
        }
        TwistedCase::A2lMinus1(_) => (PairCase::LieSp(l), Partition::from_exponents(&[(2, 1), (1, 2 * l - 2)])?),
        TwistedCase::D(_) => {
            let k = l / 2;
            (
                PairCase::LieSOOdd(l),
                Partition::from_exponents(&[(2, 2 * k), (1, 2 * l + 1 - 4 * k)])?,
            )
        }
    };
    let dim = orbit_dim_classical(pair, &p)?;
    Ok((OrbitDescriptor::new(pair, p)?, dim))
}

/// Matrix of the linear map `L` on `m × m` matrices, one column per `E_ab`.
fn linear_map_matrix(m: usize, l: impl Fn(&RationalMatrix) -> Vec<RationalMatrix>) -> RationalMatrix {
    let cols: Vec<Vec<_>> = (0..m * m)
        .map(|c| {
            let out = l(&RationalMatrix::unit(m, c / m, c % m));
            out.iter()
                .flat_map(|a| (0..m * m).map(move |i| a.get(i / m, i % m).clone()))
                .collect()
        })
        .collect();
    RationalMatrix::from_fn(cols[0].len(), m * m, |i, j| cols[j][i].clone())
}

fn k_constraints(case: TwistedCase, z: &RationalMatrix) -> Vec<RationalMatrix> {
    let skew = z + &form_adjoint(case, z).expect("square");
    match case {
        TwistedCase::D(_) => vec![skew, &case.conj_w(z) - z],
        _ => vec![skew],
    }
}

/// `dim k − dim z_k(x)`: the dimension of the `K`-orbit of `x ∈ k`, from
/// nullspace dimensions of the defining linear equations alone.
pub fn k_orbit_dim_by_commutant(case: TwistedCase, x: &RationalMatrix) -> Result<usize> {
    require_shape(case, x)?;
    if eigenspace_membership(case, x) != Membership::K && !x.is_zero() {
        return Err(Error::Malformed("expected an element of k".into()));
    }
    let m = case.m();
    let k_dim = m * m - linear_map_matrix(m, |z| k_constraints(case, z)).rank();
    let centralizer = m * m
        - linear_map_matrix(m, |z| {
            let mut v = k_constraints(case, z);
            v.push(&(z * x) - &(x * z));
            v
        })
        .rank();
    Ok(k_dim - centralizer)
}

/// A representative in `k` of the orbit returned by [`fiber_zero_profile`].
pub fn fiber_zero_representative(case: TwistedCase) -> Result<RationalMatrix> {
    let m = case.m();
    match case {
        TwistedCase::A2l(_) => Ok(RationalMatrix::zeros(m, m)),
        TwistedCase::A2lMinus1(_) => Ok(RationalMatrix::unit(m, 0, m - 1)),
        TwistedCase::D(l) => Ok(super::witness::z_d(case, 2 * (l / 2))),
    }
}

/// The zero-fiber dimension three ways: partition formula, commutant oracle,
/// and the stated reference value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberDimCheck {
    pub case: TwistedCase,
    pub orbit: OrbitDescriptor,
    pub formula: usize,
    pub oracle: usize,
    pub stated: usize,
}

impl FiberDimCheck {
    pub fn consistent(&self) -> bool {
        self.formula == self.oracle
    }

    pub fn matches_stated(&self) -> bool {
        self.oracle == self.stated
    }
}

fn stated_zero_fiber_dim(case: TwistedCase) -> usize {
    let l = case.rank();
    match case {
        TwistedCase::A2l(_) => 0,
        TwistedCase::A2lMinus1(_) => 2 * l + 1,
        TwistedCase::D(_) if l.is_multiple_of(2) => l * l,
        TwistedCase::D(_) => l * l - 1,
    }
}

pub fn fiber_dim_check(case: TwistedCase) -> Result<FiberDimCheck> {
    let (orbit, formula) = fiber_zero_profile(case)?;
    let oracle = k_orbit_dim_by_commutant(case, &fiber_zero_representative(case)?)?;
    Ok(FiberDimCheck {
        case,
        orbit,
        formula,
        oracle,
        stated: stated_zero_fiber_dim(case),
    })
}

/// Whether the reconstructed point is σ-fixed and of determinant one.
pub fn fiber_point_is_valid(case: TwistedCase, x: &RationalMatrix, z: &RationalMatrix) -> Result<bool> {
    let g = fiber_point(x, z)?;
    Ok(det1_check(&g) && sigma_fixed(case, &g)?)
}
