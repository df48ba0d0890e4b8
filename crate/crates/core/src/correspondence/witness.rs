//! Explicit points of each cell intersection: standard nilpotents, the
//! Laurent matrices realizing every table entry, and the non-small witnesses.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::table::{expected_image, shape, Branch, Shape};
use crate::error::{Error, Result};
use crate::exactlinalg::{
    eigenspace_membership, form_adjoint, random_k_pair, Membership, RationalMatrix, TwistedCase,
};
use crate::grassmannian::{sigma, LaurentMatrix};
use crate::partitions::OrbitDescriptor;
use crate::rational::{frac, rat};
use crate::weights::WeightTuple;

fn e(m: usize, i: usize, j: usize) -> RationalMatrix {
    RationalMatrix::unit(m, i, j)
}

/// `E_ab + E_ab*`, the self-adjoint part in the A cases.
fn sym(case: TwistedCase, a: usize, b: usize) -> RationalMatrix {
    let u = e(case.m(), a, b);
    &u + &form_adjoint(case, &u).expect("square")
}

fn sum(m: usize, terms: impl IntoIterator<Item = RationalMatrix>) -> RationalMatrix {
    terms
        .into_iter()
        .fold(RationalMatrix::zeros(m, m), |acc, t| &acc + &t)
}

/// Standard square-zero element of `p` of rank `r` (A cases; `r` even for
/// `A2lMinus1`).
pub fn order2_standard(case: TwistedCase, r: usize) -> Result<RationalMatrix> {
    let m = case.m();
    match case {
        TwistedCase::A2l(l) if r <= l => Ok(sum(m, (0..r).map(|i| e(m, i, m - 1 - i)))),
        TwistedCase::A2lMinus1(l) if r.is_multiple_of(2) && r <= l => {
            Ok(sum(m, (0..r / 2).map(|i| sym(case, 2 * i, 2 * i + 1))))
        }
        _ => Err(Error::NotInTable(format!("order-two element of rank {r} for {case}"))),
    }
}

/// `I + x t⁻¹` for square-zero `x ∈ p`.
pub fn order2_embed(case: TwistedCase, x: &RationalMatrix) -> Result<LaurentMatrix> {
    if !case.is_a_case() {
        return Err(Error::UnsupportedCase(case.to_string()));
    }
    x.require_square(case.m())?;
    if eigenspace_membership(case, x) != Membership::P {
        return Err(Error::NotInP);
    }
    if !(x * x).is_zero() {
        return Err(Error::NotSquareZero);
    }
    LaurentMatrix::unipotent(x, &RationalMatrix::zeros(case.m(), case.m()))
}

/// `Σ_{i<k} (E_{a_i,a_i+1} + adjoint)` over the given block starts: a chain
/// of `J₂` blocks mirrored by `−J₂` blocks.
fn j2_chain(case: TwistedCase, starts: impl IntoIterator<Item = usize>) -> RationalMatrix {
    sum(case.m(), starts.into_iter().map(|a| sym(case, a, a + 1)))
}

/// `J₃` at `a, a+1, a+2` with its mirrored `−J₃`.
fn j3(case: TwistedCase, a: usize) -> RationalMatrix {
    &sym(case, a, a + 1) + &sym(case, a + 1, a + 2)
}

/// `x_j = diag(0, J₂^j, 0, −J₂^j, 0)`
pub fn x_branch_one(case: TwistedCase, j: usize) -> RationalMatrix {
    j2_chain(case, (0..j).map(|i| 2 * i + 1))
}

/// `x'_j = x_j + E_{0,2j+1} + adjoint`
pub fn x_branch_one_prime(case: TwistedCase, j: usize) -> RationalMatrix {
    &x_branch_one(case, j) + &sym(case, 0, 2 * j + 1)
}

/// `diag(J₃, J₂^{k}, 0, −J₂^{k}, −J₃)`
pub fn x_branch_two(case: TwistedCase, k: usize) -> RationalMatrix {
    &j3(case, 0) + &j2_chain(case, (0..k).map(|i| 3 + 2 * i))
}

/// `diag(0, J₃, J₂^{k}, 0, −J₂^{k}, −J₃, 0)`
pub fn x_branch_two_prime(case: TwistedCase, k: usize) -> RationalMatrix {
    &j3(case, 1) + &j2_chain(case, (0..k).map(|i| 4 + 2 * i))
}

/// Rank-`j` element of `k` supported in the top-right `ℓ × ℓ` block of the D
/// case (`j` even), offset by `shift` rows and columns inwards.
fn z_block(case: TwistedCase, j: usize, shrink: usize) -> RationalMatrix {
    let m = case.m();
    let l = case.rank() - shrink;
    let col0 = case.rank() + 2 + shrink;
    let mut z = RationalMatrix::zeros(m, m);
    for r in 0..j / 2 {
        let q = j / 2 - 1 - r;
        z.set(r, col0 + q, rat(1));
        z.set(l - 1 - q, col0 + l - 1 - r, rat(-1));
    }
    z
}

/// `z_j` of the D case.
pub fn z_d(case: TwistedCase, j: usize) -> RationalMatrix {
    z_block(case, j, 0)
}

/// The square-zero-free nilpotent `x₀ ∈ p` of the D case, on indices
/// `ℓ−1 … ℓ+2`.
pub fn x0_d(case: TwistedCase) -> RationalMatrix {
    let m = case.m();
    let b = case.rank() - 1;
    let mut x = RationalMatrix::zeros(m, m);
    x.set(b, b + 1, rat(1));
    x.set(b, b + 2, rat(-1));
    x.set(b + 1, b + 3, rat(1));
    x.set(b + 2, b + 3, rat(-1));
    x
}

fn half_square(x: &RationalMatrix) -> RationalMatrix {
    (x * x).scale(&frac(1, 2))
}

fn orbit_of(orbit: &OrbitDescriptor) -> String {
    orbit.partition.to_string()
}

/// A σ-fixed Laurent matrix in the cell of `lambda` whose `π` lies in `orbit`.
pub fn witness(
    case: TwistedCase,
    lambda: &WeightTuple,
    branch: Option<Branch>,
    orbit: &OrbitDescriptor,
) -> Result<LaurentMatrix> {
    let row = expected_image(case, lambda, branch)?;
    if !row.orbits.contains(orbit) {
        return Err(Error::NotInTable(format!(
            "{case} {lambda} branch {branch:?} orbit {}",
            orbit_of(orbit)
        )));
    }
    let m = case.m();
    let zero = RationalMatrix::zeros(m, m);
    let p = orbit.partition.parts();
    let g = match (case, shape(lambda)) {
        (TwistedCase::A2l(_), Shape::Ones(j)) => order2_embed(case, &order2_standard(case, j)?)?,
        (TwistedCase::A2lMinus1(_), Shape::Ones(j)) => order2_embed(case, &order2_standard(case, j)?)?,
        (TwistedCase::A2lMinus1(_), Shape::TwoOnes(ones)) => {
            let j = ones / 2;
            let twos = p.iter().filter(|&&d| d == 2).count();
            if p[0] == 3 {
                if twos == 2 * j - 2 {
                    LaurentMatrix::unipotent(&x_branch_two(case, j - 1), &e(m, 0, 2))?
                } else {
                    // Over x'_{j-2} every σ-fixed y of rank one has
                    // im y ⊂ im x² ⊂ im x, so rank [[y, x], [0, y]] ≤ rk x + 1
                    // = 2j + 1 and the cell index is at most j − 1. The
                    // rank-two choice E_{1,3} + E_{0,m-1} leaves the small
                    // cells altogether.
                    return Err(Error::NoWitness(format!("{case} {lambda} branch II orbit {}", orbit_of(orbit))));
                }
            } else if twos == 2 * j {
                LaurentMatrix::unipotent(&x_branch_one(case, j), &e(m, 0, m - 1))?
            } else {
                LaurentMatrix::unipotent(&x_branch_one_prime(case, j), &e(m, 0, m - 1))?
            }
        }
        (TwistedCase::D(_), Shape::Ones(j)) => {
            if p[0] == 1 {
                LaurentMatrix::unipotent(&zero, &z_d(case, j))?
            } else {
                let x0 = x0_d(case);
                let z = if j % 2 == 0 { z_d(case, j) } else { z_block(case, j - 1, 1) };
                LaurentMatrix::unipotent(&x0, &(&half_square(&x0) + &z))?
            }
        }
        _ => return Err(Error::NotInTable(format!("{case} {lambda}"))),
    };
    Ok(g)
}

/// All `(orbit, witness)` pairs of a table row.
pub fn row_witnesses(
    case: TwistedCase,
    lambda: &WeightTuple,
    branch: Option<Branch>,
) -> Result<Vec<(OrbitDescriptor, LaurentMatrix)>> {
    expected_image(case, lambda, branch)?
        .orbits
        .into_iter()
        .map(|o| witness(case, lambda, branch, &o).map(|g| (o, g)))
        .collect()
}

/// Embeds the `2 × 2` Laurent matrix with entries `h[r][c]` (given as
/// `exponent → coefficient` lists) on coordinates `(a, b)`.
fn embed_2x2(m: usize, a: usize, b: usize, h: [[&[(i64, i64)]; 2]; 2]) -> LaurentMatrix {
    let idx = [a, b];
    let mut g = LaurentMatrix::identity(m);
    for (k, &i) in idx.iter().enumerate() {
        g = g.add(&LaurentMatrix::monomial(e(m, i, i), 0).neg());
        for (l, &jj) in idx.iter().enumerate() {
            for &(exp, c) in h[k][l] {
                g = g.add(&LaurentMatrix::monomial(e(m, i, jj).scale(&rat(c)), exp));
            }
        }
    }
    g
}

/// σ-fixed element of the cell of `2γ₀` whose `π` is not nilpotent.
pub fn non_small_witness(case: TwistedCase) -> Result<LaurentMatrix> {
    let m = case.m();
    match case {
        TwistedCase::A2l(_) => Ok(embed_2x2(
            m,
            0,
            m - 1,
            [[&[(0, 1)], &[(-1, 1)]], [&[(-1, 1)], &[(0, 1), (-2, 1)]]],
        )),
        TwistedCase::A2lMinus1(l) if l >= 2 => {
            let gp = embed_2x2(
                m,
                0,
                m - 2,
                [[&[(0, 1), (-1, 1)], &[(-2, 1)]], [&[(-1, 1)], &[(0, 1), (-1, -1), (-2, 1)]]],
            );
            let s = sigma(case, &gp)?;
            Ok(gp.mul(&s))
        }
        _ => Err(Error::UnsupportedCase(case.to_string())),
    }
}

/// Random nonzero nilpotent `x ∈ p` for the D case, built from an isotropic
/// `w`-fixed vector `u` and the `−1` eigenvector `v` of `w`.
pub fn random_d_nilpotent(case: TwistedCase, rng: &mut ChaCha8Rng) -> Result<RationalMatrix> {
    let TwistedCase::D(l) = case else {
        return Err(Error::UnsupportedCase(case.to_string()));
    };
    let m = case.m();
    let mut u = vec![0i64; m];
    let mut draw = || rng.gen_range(-3..=3i64);
    for i in 1..l {
        u[i] = draw();
        u[m - 1 - i] = draw();
    }
    let c = draw();
    u[l] = c;
    u[l + 1] = c;
    u[m - 1] = 1;
    u[0] = -((1..l).map(|i| u[i] * u[m - 1 - i]).sum::<i64>() + c * c);
    let mut v = vec![0i64; m];
    v[l] = 1;
    v[l + 1] = -1;
    // x = u (Jv)ᵀ − v (Ju)ᵀ
    let x = RationalMatrix::from_fn(m, m, |i, j| rat(u[i] * v[m - 1 - j] - v[i] * u[m - 1 - j]));
    let (k, kinv) = random_k_pair(case, rng);
    Ok(&(&k * &x) * &kinv)
}
