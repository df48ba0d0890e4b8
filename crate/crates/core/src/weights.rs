//! Weight combinatorics for the rank-ℓ groups of type B and C that index the
//! twisted Schubert cells.
//!
//! Weights are integer ℓ-tuples. For type C the lattice is the sublattice of
//! tuples with even coordinate sum; construction rejects anything else.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{frac, rat, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HType {
    B(usize),
    C(usize),
}

impl HType {
    pub fn new_b(rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        Ok(HType::B(rank))
    }

    pub fn new_c(rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        Ok(HType::C(rank))
    }

    pub fn rank(self) -> usize {
        match self {
            HType::B(l) | HType::C(l) => l,
        }
    }

    pub fn letter(self) -> &'static str {
        match self {
            HType::B(_) => "B",
            HType::C(_) => "C",
        }
    }
}

impl fmt::Display for HType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter(), self.rank())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "WeightRepr", into = "WeightRepr")]
pub struct WeightTuple {
    htype: HType,
    coords: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct WeightRepr {
    htype: String,
    coords: Vec<i64>,
}

impl TryFrom<WeightRepr> for WeightTuple {
    type Error = Error;

    fn try_from(r: WeightRepr) -> Result<Self> {
        let l = r.coords.len();
        let htype = match r.htype.as_str() {
            "B" => HType::new_b(l)?,
            "C" => HType::new_c(l)?,
            other => return Err(Error::Parse(format!("unknown htype {other:?}"))),
        };
        WeightTuple::new(htype, r.coords)
    }
}

impl From<WeightTuple> for WeightRepr {
    fn from(w: WeightTuple) -> Self {
        WeightRepr {
            htype: w.htype.letter().to_string(),
            coords: w.coords,
        }
    }
}

impl WeightTuple {
    pub fn new(htype: HType, coords: Vec<i64>) -> Result<Self> {
        if coords.len() != htype.rank() {
            return Err(Error::WrongLength {
                expected: htype.rank(),
                got: coords.len(),
            });
        }
        let w = WeightTuple { htype, coords };
        if matches!(htype, HType::C(_)) && w.coords.iter().sum::<i64>().rem_euclid(2) != 0 {
            return Err(Error::OddCoordinateSum(w.to_string()));
        }
        Ok(w)
    }

    pub fn zero(htype: HType) -> Self {
        WeightTuple {
            htype,
            coords: vec![0; htype.rank()],
        }
    }

    /// `(1^j 0^{ℓ-j})`, optionally preceded by a leading 2: `(2 1^j 0^{ℓ-j-1})`.
    pub fn from_shape(htype: HType, leading_two: bool, ones: usize) -> Result<Self> {
        let l = htype.rank();
        let mut coords = Vec::with_capacity(l);
        if leading_two {
            coords.push(2);
        }
        coords.extend(std::iter::repeat_n(1, ones));
        if coords.len() > l {
            return Err(Error::WrongLength {
                expected: l,
                got: coords.len(),
            });
        }
        coords.resize(l, 0);
        WeightTuple::new(htype, coords)
    }

    pub fn htype(&self) -> HType {
        self.htype
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.windows(2).all(|w| w[0] >= w[1]) && self.coords.last().is_none_or(|&a| a >= 0)
    }

    fn require_dominant(&self) -> Result<()> {
        if self.is_dominant() {
            Ok(())
        } else {
            Err(Error::NotDominant(self.to_string()))
        }
    }

    fn scaled(&self, k: i64) -> WeightTuple {
        WeightTuple {
            htype: self.htype,
            coords: self.coords.iter().map(|a| a * k).collect(),
        }
    }

    /// Coefficients of `self` in the basis of simple roots.
    pub fn simple_root_coefficients(&self) -> Vec<Rational> {
        let mut prefix = 0i64;
        let mut c: Vec<Rational> = self
            .coords
            .iter()
            .map(|a| {
                prefix += a;
                rat(prefix)
            })
            .collect();
        if let (HType::C(_), Some(last)) = (self.htype, c.last_mut()) {
            *last = frac(prefix, 2);
        }
        c
    }

    /// Sum of the simple-root coefficients.
    pub fn height(&self) -> Rational {
        self.simple_root_coefficients().into_iter().sum()
    }
}

impl fmt::Display for WeightTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn unit(l: usize, i: usize, v: i64) -> Vec<i64> {
    let mut c = vec![0; l];
    c[i] = v;
    c
}

pub fn simple_roots(htype: HType) -> Vec<WeightTuple> {
    let l = htype.rank();
    let mut roots: Vec<WeightTuple> = (0..l.saturating_sub(1))
        .map(|i| {
            let mut c = unit(l, i, 1);
            c[i + 1] = -1;
            WeightTuple { htype, coords: c }
        })
        .collect();
    let last = match htype {
        HType::B(_) => 1,
        HType::C(_) => 2,
    };
    roots.push(WeightTuple {
        htype,
        coords: unit(l, l - 1, last),
    });
    roots
}

/// γ₀. For C₁ the only positive root is the simple root (2).
pub fn highest_short_root(htype: HType) -> WeightTuple {
    let l = htype.rank();
    let coords = match htype {
        HType::B(_) => unit(l, 0, 1),
        HType::C(1) => vec![2],
        HType::C(_) => {
            let mut c = unit(l, 0, 1);
            c[1] = 1;
            c
        }
    };
    WeightTuple { htype, coords }
}

/// ω_j for `1 ≤ j ≤ ℓ`, in ambient rational coordinates. Some of these lie
/// outside the weight lattice (ω_ℓ for B, odd j for C).
pub fn fundamental_weight(htype: HType, j: usize) -> Option<Vec<Rational>> {
    let l = htype.rank();
    if j == 0 || j > l {
        return None;
    }
    let w = match htype {
        HType::B(_) if j == l => vec![frac(1, 2); l],
        _ => (0..l).map(|i| rat(i64::from(i < j))).collect(),
    };
    Some(w)
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Cartan matrix `A[i][j] = ⟨γ_i, γ_j^∨⟩`.
pub fn cartan_matrix(htype: HType) -> Vec<Vec<i64>> {
    let simple = simple_roots(htype);
    simple
        .iter()
        .map(|a| {
            simple
                .iter()
                .map(|b| 2 * dot(&a.coords, &b.coords) / dot(&b.coords, &b.coords))
                .collect()
        })
        .collect()
}

/// Positive roots in ambient coordinates, generated by root-string closure
/// from the simple roots. Ordered by height.
pub fn positive_roots(htype: HType) -> Vec<Vec<i64>> {
    let l = htype.rank();
    let cartan = cartan_matrix(htype);
    let simple = simple_roots(htype);

    let mut known: HashSet<Vec<i64>> = HashSet::new();
    let mut order: Vec<Vec<i64>> = Vec::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..l {
        let c = unit(l, i, 1);
        known.insert(c.clone());
        order.push(c.clone());
        queue.push_back(c);
    }
    // Breadth-first order visits roots by height, so every β - kγ_i is
    // already known when β is expanded.
    while let Some(beta) = queue.pop_front() {
        for i in 0..l {
            let mut p = 0;
            let mut down = beta.clone();
            loop {
                down[i] -= 1;
                if known.contains(&down) {
                    p += 1;
                } else {
                    break;
                }
            }
            let pairing: i64 = (0..l).map(|j| beta[j] * cartan[j][i]).sum();
            if p - pairing > 0 {
                let mut up = beta.clone();
                up[i] += 1;
                if known.insert(up.clone()) {
                    order.push(up.clone());
                    queue.push_back(up);
                }
            }
        }
    }
    order
        .into_iter()
        .map(|c| {
            let mut v = vec![0i64; l];
            for (ci, s) in c.iter().zip(&simple) {
                for (vk, sk) in v.iter_mut().zip(&s.coords) {
                    *vk += ci * sk;
                }
            }
            v
        })
        .collect()
}

/// True iff `lambda - mu` is a non-negative integer combination of simple roots.
pub fn dominance_le(mu: &WeightTuple, lambda: &WeightTuple) -> Result<bool> {
    if mu.htype != lambda.htype {
        return Err(Error::HTypeMismatch(mu.htype.to_string(), lambda.htype.to_string()));
    }
    mu.require_dominant()?;
    lambda.require_dominant()?;
    let diff = WeightTuple {
        htype: lambda.htype,
        coords: lambda.coords.iter().zip(&mu.coords).map(|(a, b)| a - b).collect(),
    };
    Ok(diff
        .simple_root_coefficients()
        .iter()
        .all(|c| c.is_integer() && *c >= rat(0)))
}

pub fn is_small(lambda: &WeightTuple) -> Result<bool> {
    let two_gamma0 = highest_short_root(lambda.htype).scaled(2);
    Ok(!dominance_le(&two_gamma0, lambda)?)
}

fn sort_by_height(ws: &mut [WeightTuple]) {
    ws.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.coords.cmp(&b.coords)));
}

pub fn enumerate_small(htype: HType) -> Vec<WeightTuple> {
    let l = htype.rank();
    let mut out = Vec::new();
    match htype {
        HType::B(_) => {
            for j in 0..=l {
                out.push(WeightTuple::from_shape(htype, false, j).expect("in range"));
            }
        }
        HType::C(_) => {
            for j in 0..=l / 2 {
                out.push(WeightTuple::from_shape(htype, false, 2 * j).expect("in range"));
            }
            for j in 0..=(l - 1) / 2 {
                out.push(WeightTuple::from_shape(htype, true, 2 * j).expect("in range"));
            }
        }
    }
    sort_by_height(&mut out);
    out
}

/// Every dominant lattice tuple with `a₁ ≤ max_first`, sorted by height.
pub fn dominant_tuples(htype: HType, max_first: i64) -> Vec<WeightTuple> {
    fn rec(prefix: &mut Vec<i64>, l: usize, cap: i64, out: &mut Vec<Vec<i64>>) {
        if prefix.len() == l {
            out.push(prefix.clone());
            return;
        }
        for a in 0..=cap {
            prefix.push(a);
            rec(prefix, l, a, out);
            prefix.pop();
        }
    }
    let mut raw = Vec::new();
    rec(&mut Vec::new(), htype.rank(), max_first, &mut raw);
    let mut out: Vec<WeightTuple> = raw
        .into_iter()
        .filter_map(|c| WeightTuple::new(htype, c).ok())
        .collect();
    sort_by_height(&mut out);
    out
}

/// `⟨2ρ, λ⟩ = Σ_{α>0} ⟨λ, α^∨⟩`, the dimension of the Schubert variety.
pub fn schubert_dim(lambda: &WeightTuple) -> Result<i64> {
    lambda.require_dominant()?;
    Ok(positive_roots(lambda.htype)
        .iter()
        .map(|alpha| 2 * dot(&lambda.coords, alpha) / dot(alpha, alpha))
        .sum())
}
