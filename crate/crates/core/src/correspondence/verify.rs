//! The table harness: every witness is re-derived through `cell_of`, `π` and
//! Jordan type, then re-checked after random `K`-conjugations.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::table::{expected_image, shape, table_rows, Branch, Shape};
use super::witness::{non_small_witness, witness};
use crate::error::{Error, Result};
use crate::exactlinalg::{eigenspace_membership, jordan_type, random_k_pair, Membership, TwistedCase};
use crate::exec::Execution;
use crate::grassmannian::{cell_of, cell_of_fixed, iota, pi, sigma_fixed, LaurentMatrix};
use crate::partitions::OrbitDescriptor;
use crate::weights::WeightTuple;

pub const CONJUGATES_PER_ROW: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checks {
    pub sigma_fixed: bool,
    pub cell: bool,
    pub jordan: bool,
    pub conjugation: bool,
}

impl Checks {
    pub fn all(&self) -> bool {
        self.sigma_fixed && self.cell && self.jordan && self.conjugation
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub lambda: WeightTuple,
    pub branch: Option<Branch>,
    /// `None` on the non-small row, whose `π` must not be nilpotent.
    pub orbit: Option<OrbitDescriptor>,
    pub checks: Checks,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub case: TwistedCase,
    pub seed: u64,
    pub rows: Vec<ReportRow>,
}

impl Report {
    pub fn pass(&self) -> bool {
        !self.rows.is_empty() && self.rows.iter().all(|r| r.pass)
    }
}

/// `I` when `im y = im y′` for the `t⁻²` coefficients `y` of `g` and `y′` of
/// `ι(g)`, `II` otherwise.
pub fn branch_of(case: TwistedCase, g: &LaurentMatrix) -> Result<Branch> {
    if !matches!(case, TwistedCase::A2lMinus1(_)) {
        return Err(Error::UnsupportedCase(case.to_string()));
    }
    if g.m() != case.m() || g.lowest().is_some_and(|n| n < -2) || pi(g).is_err() {
        return Err(Error::Malformed("expected I + x t⁻¹ + y t⁻²".into()));
    }
    if !matches!(shape(&cell_of(case, g)?), Shape::TwoOnes(_)) {
        return Err(Error::Malformed("cell is not of shape (2 1^2j 0…)".into()));
    }
    let y = g.coeff(-2);
    let yp = iota(g)?.coeff(-2);
    let r = y.rank();
    let same = r == yp.rank() && y.hstack(&yp)?.rank() == r;
    Ok(if same { Branch::I } else { Branch::II })
}

/// What a single witness must reproduce.
enum Target<'a> {
    Orbit(&'a OrbitDescriptor),
    NonNilpotent,
}

fn jordan_ok(case: TwistedCase, g: &LaurentMatrix, target: &Target) -> bool {
    let Ok(x) = pi(g) else { return false };
    match target {
        Target::Orbit(o) => {
            eigenspace_membership(case, &x) == Membership::P
                && jordan_type(&x).is_ok_and(|p| p == o.partition)
        }
        Target::NonNilpotent => !x.pow(case.m()).is_zero(),
    }
}

fn cell_ok(case: TwistedCase, g: &LaurentMatrix, lambda: &WeightTuple, branch: Option<Branch>) -> bool {
    cell_of_fixed(case, g).is_ok_and(|c| &c == lambda)
        && branch.is_none_or(|b| branch_of(case, g).is_ok_and(|got| got == b))
}

fn full_check(
    case: TwistedCase,
    g: &LaurentMatrix,
    lambda: &WeightTuple,
    branch: Option<Branch>,
    target: &Target,
) -> bool {
    sigma_fixed(case, g).unwrap_or(false)
        && cell_ok(case, g, lambda, branch)
        && jordan_ok(case, g, target)
}

fn check_row(
    case: TwistedCase,
    g: &LaurentMatrix,
    lambda: &WeightTuple,
    branch: Option<Branch>,
    target: Target,
    rng: &mut ChaCha8Rng,
) -> Checks {
    let sigma = sigma_fixed(case, g).unwrap_or(false);
    let conjugation = (0..CONJUGATES_PER_ROW).all(|_| {
        let (k, kinv) = random_k_pair(case, rng);
        full_check(case, &g.conjugate(&k, &kinv), lambda, branch, &target)
    });
    Checks {
        sigma_fixed: sigma,
        cell: sigma && cell_ok(case, g, lambda, branch),
        jordan: jordan_ok(case, g, &target),
        conjugation,
    }
}

fn row_seed(seed: u64, index: usize) -> u64 {
    seed.wrapping_mul(1_000_003).wrapping_add(index as u64)
}

enum Job {
    Entry(WeightTuple, Option<Branch>, OrbitDescriptor, LaurentMatrix),
    NonSmall(WeightTuple, LaurentMatrix),
    Broken(WeightTuple, Option<Branch>, Option<OrbitDescriptor>),
}

fn failed(lambda: WeightTuple, branch: Option<Branch>, orbit: Option<OrbitDescriptor>) -> ReportRow {
    let checks = Checks {
        sigma_fixed: false,
        cell: false,
        jordan: false,
        conjugation: false,
    };
    ReportRow {
        lambda,
        branch,
        orbit,
        checks,
        pass: false,
    }
}

fn two_gamma_zero(case: TwistedCase) -> WeightTuple {
    let l = case.rank();
    let mut c = vec![0; l];
    c[0] = 2;
    if matches!(case, TwistedCase::A2lMinus1(_)) && l >= 2 {
        c[1] = 2;
    }
    WeightTuple::new(case.htype(), c).expect("dominant")
}

/// Builds and checks every witness of the table for `case`, plus the
/// non-small witness in the A cases. Row `i` draws its conjugations from its
/// own stream seeded by `seed` and `i`, so the report does not depend on
/// `exec`.
pub fn verify_table(case: TwistedCase, seed: u64, exec: Execution) -> Report {
    let mut jobs = Vec::new();
    for (lambda, branch) in table_rows(case) {
        let Ok(row) = expected_image(case, &lambda, branch) else {
            jobs.push(Job::Broken(lambda, branch, None));
            continue;
        };
        for o in row.orbits {
            match witness(case, &lambda, branch, &o) {
                Ok(g) => jobs.push(Job::Entry(lambda.clone(), branch, o, g)),
                Err(_) => jobs.push(Job::Broken(lambda.clone(), branch, Some(o))),
            }
        }
    }
    if case.is_a_case() {
        if let Ok(g) = non_small_witness(case) {
            jobs.push(Job::NonSmall(two_gamma_zero(case), g));
        }
    }
    let indexed: Vec<(usize, Job)> = jobs.into_iter().enumerate().collect();
    let rows = exec.map(&indexed, |(i, job)| {
        let mut rng = ChaCha8Rng::seed_from_u64(row_seed(seed, *i));
        let (lambda, branch, orbit, checks) = match job {
            Job::Broken(lambda, branch, o) => return failed(lambda.clone(), *branch, o.clone()),
            Job::Entry(lambda, branch, o, g) => {
                let c = check_row(case, g, lambda, *branch, Target::Orbit(o), &mut rng);
                (lambda, *branch, Some(o.clone()), c)
            }
            Job::NonSmall(lambda, g) => {
                let c = check_row(case, g, lambda, None, Target::NonNilpotent, &mut rng);
                (lambda, None, None, c)
            }
        };
        ReportRow {
            lambda: lambda.clone(),
            branch,
            orbit,
            pass: checks.all(),
            checks,
        }
    });
    Report { case, seed, rows }
}
