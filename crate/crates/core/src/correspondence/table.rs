use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlinalg::TwistedCase;
use crate::partitions::{OrbitDescriptor, Partition};
use crate::weights::{enumerate_small, is_small, WeightTuple};

/// The `L = L′` / `L ≠ L′` split of the `(2 1^{2j} 0…)` cells for `A2lMinus1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Branch {
    I,
    II,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellImageRow {
    pub case: TwistedCase,
    pub lambda: WeightTuple,
    pub branch: Option<Branch>,
    pub orbits: BTreeSet<OrbitDescriptor>,
}

/// Shape of a small weight: `(1^j 0…)` or `(2 1^j 0…)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    Ones(usize),
    TwoOnes(usize),
}

pub fn shape(lambda: &WeightTuple) -> Shape {
    let c = lambda.coords();
    let ones = c.iter().filter(|&&a| a == 1).count();
    if c.first() == Some(&2) {
        Shape::TwoOnes(ones)
    } else {
        Shape::Ones(ones)
    }
}

/// Partition from `(part, multiplicity)` pairs, or `None` if a multiplicity
/// is negative.
fn part(pairs: &[(usize, i64)]) -> Option<Partition> {
    if pairs.iter().any(|&(_, k)| k < 0) {
        return None;
    }
    let pairs: Vec<(usize, usize)> = pairs.iter().map(|&(d, k)| (d, k as usize)).collect();
    Partition::from_exponents(&pairs).ok()
}

fn branch_orbits(l: i64, j: i64, branch: Branch) -> Vec<Option<Partition>> {
    match branch {
        Branch::I => vec![
            part(&[(2, 2 * j), (1, 2 * l - 4 * j)]),
            part(&[(2, 2 * j + 2), (1, 2 * l - 4 * j - 4)]),
        ],
        Branch::II if j == 0 => vec![],
        Branch::II => vec![
            part(&[(3, 2), (2, 2 * j - 2), (1, 2 * l - 4 * j - 2)]),
            if j >= 2 {
                part(&[(3, 2), (2, 2 * j - 4), (1, 2 * l - 4 * j + 2)])
            } else {
                None
            },
        ],
    }
}

fn raw_orbits(case: TwistedCase, lambda: &WeightTuple, branch: Option<Branch>) -> Result<Vec<Option<Partition>>> {
    let l = case.rank() as i64;
    let not_in_table = || Error::NotInTable(format!("{case} {lambda} branch {branch:?}"));
    let out = match (case, shape(lambda), branch) {
        (TwistedCase::A2l(_), Shape::Ones(j), None) => {
            let j = j as i64;
            vec![part(&[(2, j), (1, 2 * l - 2 * j + 1)])]
        }
        (TwistedCase::A2lMinus1(_), Shape::Ones(j), None) => {
            let j = j as i64 / 2;
            vec![part(&[(2, 2 * j), (1, 2 * l - 4 * j)])]
        }
        (TwistedCase::A2lMinus1(_), Shape::TwoOnes(ones), b) => {
            let j = ones as i64 / 2;
            match b {
                Some(b) => branch_orbits(l, j, b),
                None => {
                    let mut v = branch_orbits(l, j, Branch::I);
                    v.extend(branch_orbits(l, j, Branch::II));
                    v
                }
            }
        }
        (TwistedCase::D(_), Shape::Ones(j), None) => {
            let zero = Some(Partition::ones(case.m()));
            let min = part(&[(3, 1), (1, 2 * l - 1)]);
            match j {
                0 => vec![zero],
                j if j % 2 == 1 => vec![min],
                _ => vec![zero, min],
            }
        }
        _ => return Err(not_in_table()),
    };
    Ok(out)
}

pub fn expected_image(case: TwistedCase, lambda: &WeightTuple, branch: Option<Branch>) -> Result<CellImageRow> {
    if lambda.htype() != case.htype() {
        return Err(Error::HTypeMismatch(case.htype().to_string(), lambda.htype().to_string()));
    }
    if !is_small(lambda)? {
        return Err(Error::NotSmall(lambda.to_string()));
    }
    let pair = case.pair_case();
    let orbits = raw_orbits(case, lambda, branch)?
        .into_iter()
        .flatten()
        .filter_map(|p| OrbitDescriptor::new(pair, p).ok())
        .collect();
    Ok(CellImageRow {
        case,
        lambda: lambda.clone(),
        branch,
        orbits,
    })
}

/// Every `(λ̄, branch)` row of the table, split into branches where they exist.
pub fn table_rows(case: TwistedCase) -> Vec<(WeightTuple, Option<Branch>)> {
    let mut rows = Vec::new();
    for lam in enumerate_small(case.htype()) {
        match (case, shape(&lam)) {
            (TwistedCase::A2lMinus1(_), Shape::TwoOnes(_)) => {
                rows.push((lam.clone(), Some(Branch::I)));
                rows.push((lam, Some(Branch::II)));
            }
            _ => rows.push((lam, None)),
        }
    }
    rows
}
