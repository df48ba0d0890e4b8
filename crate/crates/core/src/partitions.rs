//! Partitions and nilpotent orbits for the symmetric pairs acting on
//! self-adjoint maps and for the classical Lie algebras that show up as fibers.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "PartitionRepr", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum PartitionRepr {
    Parts(Vec<usize>),
    Text(String),
}

impl TryFrom<PartitionRepr> for Partition {
    type Error = Error;

    fn try_from(r: PartitionRepr) -> Result<Self> {
        match r {
            PartitionRepr::Parts(p) => Partition::new(p),
            PartitionRepr::Text(s) => s.parse(),
        }
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl Partition {
    /// Parts are sorted into weakly decreasing order; zeros are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// Build from `(part, multiplicity)` pairs; zero multiplicities are skipped.
    pub fn from_exponents(pairs: &[(usize, usize)]) -> Result<Self> {
        let mut parts = Vec::new();
        for &(d, k) in pairs {
            parts.extend(std::iter::repeat_n(d, k));
        }
        Partition::new(parts)
    }

    /// `[1^m]`
    pub fn ones(m: usize) -> Self {
        Partition { parts: vec![1; m] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn multiplicity(&self, d: usize) -> usize {
        self.parts.iter().filter(|&&p| p == d).count()
    }

    fn exponents(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    pub fn odd_parts(&self) -> usize {
        self.parts.iter().filter(|&&p| p % 2 == 1).count()
    }

    /// Σ s_i² over the dual partition.
    pub fn dual_square_sum(&self) -> usize {
        dual(self).parts.iter().map(|s| s * s).sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .exponents()
            .into_iter()
            .rev()
            .map(|(d, k)| if k == 1 { d.to_string() } else { format!("{d}^{k}") })
            .collect();
        write!(f, "[{}]", terms.join(" "))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `3^2 1^4`, `[3^2,1^4]` or `3,3,1,1,1,1`.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('[').trim_end_matches(']');
        let mut pairs = Vec::new();
        for tok in body.split(|c: char| c == ',' || c.is_whitespace()) {
            if tok.is_empty() {
                continue;
            }
            let bad = || Error::Parse(format!("bad partition token {tok:?}"));
            let (d, k) = match tok.split_once('^') {
                Some((d, k)) => (d.parse().map_err(|_| bad())?, k.parse().map_err(|_| bad())?),
                None => (tok.parse().map_err(|_| bad())?, 1),
            };
            pairs.push((d, k));
        }
        Partition::from_exponents(&pairs)
    }
}

pub fn dual(p: &Partition) -> Partition {
    let top = p.parts.first().copied().unwrap_or(0);
    Partition {
        parts: (1..=top)
            .map(|i| p.parts.iter().filter(|&&d| d >= i).count())
            .collect(),
    }
}

pub fn dominates(d: &Partition, f: &Partition) -> Result<bool> {
    if d.n() != f.n() {
        return Err(Error::SizeMismatch(d.n(), f.n()));
    }
    let len = d.len().max(f.len());
    let (mut sd, mut sf) = (0, 0);
    for i in 0..len {
        sd += d.parts.get(i).copied().unwrap_or(0);
        sf += f.parts.get(i).copied().unwrap_or(0);
        if sd < sf {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All partitions of `m` in reverse lexicographic order, largest first.
pub fn all_partitions(m: usize) -> Vec<Partition> {
    fn rec(rest: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for d in (1..=cap.min(rest)).rev() {
            cur.push(d);
            rec(rest - d, d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, m, &mut Vec::new(), &mut out);
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "n")]
pub enum PairCase {
    /// Sp_{2n} on its self-adjoint maps.
    SympOnA(usize),
    /// SO_{2n+1} on its self-adjoint maps.
    OrthOddOnA(usize),
    /// SO_{2n} on its self-adjoint maps.
    OrthEvenOnA(usize),
    LieSp(usize),
    LieSOOdd(usize),
    /// SO_{2n+2} acting through `S(O_{2n+1} × O_1)` on the vector
    /// representation `C^{2n+1}`, partitions taken in `so_{2n+2}`.
    OrthVector(usize),
}

impl PairCase {
    pub fn n(self) -> usize {
        match self {
            PairCase::SympOnA(n)
            | PairCase::OrthOddOnA(n)
            | PairCase::OrthEvenOnA(n)
            | PairCase::LieSp(n)
            | PairCase::LieSOOdd(n)
            | PairCase::OrthVector(n) => n,
        }
    }

    pub fn m(self) -> usize {
        let n = self.n();
        match self {
            PairCase::SympOnA(_) | PairCase::OrthEvenOnA(_) | PairCase::LieSp(_) => 2 * n,
            PairCase::OrthOddOnA(_) | PairCase::LieSOOdd(_) => 2 * n + 1,
            PairCase::OrthVector(_) => 2 * n + 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PairCase::SympOnA(_) => "sympA",
            PairCase::OrthOddOnA(_) => "orthOddA",
            PairCase::OrthEvenOnA(_) => "orthEvenA",
            PairCase::LieSp(_) => "lieSp",
            PairCase::LieSOOdd(_) => "lieSOOdd",
            PairCase::OrthVector(_) => "orthVector",
        }
    }

    pub fn from_name(name: &str, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroRank);
        }
        Ok(match name {
            "sympA" => PairCase::SympOnA(n),
            "orthOddA" => PairCase::OrthOddOnA(n),
            "orthEvenA" => PairCase::OrthEvenOnA(n),
            "lieSp" => PairCase::LieSp(n),
            "lieSOOdd" => PairCase::LieSOOdd(n),
            "orthVector" => PairCase::OrthVector(n),
            other => return Err(Error::Parse(format!("unknown pair case {other:?}"))),
        })
    }

    pub fn is_valid(self, p: &Partition) -> bool {
        if p.n() != self.m() {
            return false;
        }
        let ex = p.exponents();
        match self {
            PairCase::SympOnA(_) => ex.values().all(|k| k % 2 == 0),
            PairCase::OrthOddOnA(_) | PairCase::OrthEvenOnA(_) => true,
            PairCase::LieSp(_) => ex.iter().all(|(d, k)| d % 2 == 0 || k % 2 == 0),
            PairCase::LieSOOdd(_) => ex.iter().all(|(d, k)| d % 2 == 1 || k % 2 == 0),
            PairCase::OrthVector(_) => p.parts[0] == 1 || (p.parts[0] == 3 && p.parts[1..].iter().all(|&d| d == 1)),
        }
    }

    fn require_valid(self, p: &Partition) -> Result<()> {
        if self.is_valid(p) {
            Ok(())
        } else {
            Err(Error::PartitionNotValidForCase {
                partition: p.to_string(),
                case: self.to_string(),
            })
        }
    }

    fn lie_dim(self) -> usize {
        let n = self.n();
        2 * n * n + n
    }
}

impl fmt::Display for PairCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.name(), self.n())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SplitLabel {
    I,
    II,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct OrbitDescriptor {
    pub case: PairCase,
    pub partition: Partition,
    pub split: Option<SplitLabel>,
}

impl OrbitDescriptor {
    /// The orbit of `p` in `case`; fails on invalid partitions and on very-even
    /// `OrthEvenOnA` partitions, which need [`OrbitDescriptor::split`].
    pub fn new(case: PairCase, partition: Partition) -> Result<Self> {
        case.require_valid(&partition)?;
        if is_very_even(case, &partition) {
            return Err(Error::PartitionNotValidForCase {
                partition: format!("{partition} (needs a split label)"),
                case: case.to_string(),
            });
        }
        Ok(OrbitDescriptor {
            case,
            partition,
            split: None,
        })
    }

    pub fn split(case: PairCase, partition: Partition, label: SplitLabel) -> Result<Self> {
        case.require_valid(&partition)?;
        if !is_very_even(case, &partition) {
            return Err(Error::PartitionNotValidForCase {
                partition: format!("{partition} (split label on non-very-even)"),
                case: case.to_string(),
            });
        }
        Ok(OrbitDescriptor {
            case,
            partition,
            split: Some(label),
        })
    }

    pub fn dim(&self) -> usize {
        orbit_dim(self.case, &self.partition).expect("descriptor is validated")
    }
}

impl fmt::Display for OrbitDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.partition)?;
        if let Some(l) = self.split {
            write!(f, "_{l:?}")?;
        }
        Ok(())
    }
}

fn is_very_even(case: PairCase, p: &Partition) -> bool {
    matches!(case, PairCase::OrthEvenOnA(_)) && p.parts.iter().all(|d| d % 2 == 0)
}

pub fn classify_orbits(case: PairCase) -> Vec<OrbitDescriptor> {
    let mut out = Vec::new();
    for p in all_partitions(case.m()) {
        if !case.is_valid(&p) {
            continue;
        }
        if is_very_even(case, &p) {
            for l in [SplitLabel::I, SplitLabel::II] {
                out.push(OrbitDescriptor {
                    case,
                    partition: p.clone(),
                    split: Some(l),
                });
            }
        } else {
            out.push(OrbitDescriptor {
                case,
                partition: p,
                split: None,
            });
        }
    }
    out
}

pub fn orbit_dim_symmetric(case: PairCase, p: &Partition) -> Result<usize> {
    match case {
        PairCase::SympOnA(_) | PairCase::OrthOddOnA(_) | PairCase::OrthEvenOnA(_) => {}
        _ => return Err(Error::UnsupportedCase(case.to_string())),
    }
    case.require_valid(p)?;
    let m = case.m();
    Ok((m * m - p.dual_square_sum()) / 2)
}

pub fn orbit_dim_classical(case: PairCase, p: &Partition) -> Result<usize> {
    case.require_valid(p)?;
    let sq = p.dual_square_sum();
    let odd = p.odd_parts();
    let centralizer = match case {
        PairCase::LieSp(_) => (sq + odd) / 2,
        PairCase::LieSOOdd(_) => (sq - odd) / 2,
        _ => return Err(Error::UnsupportedCase(case.to_string())),
    };
    Ok(case.lie_dim() - centralizer)
}

/// Dimension of the orbit in any supported case. For `OrthVector` this is half
/// the dimension of the corresponding `so_{2n+2}` orbit.
pub fn orbit_dim(case: PairCase, p: &Partition) -> Result<usize> {
    match case {
        PairCase::LieSp(_) | PairCase::LieSOOdd(_) => orbit_dim_classical(case, p),
        PairCase::OrthVector(_) => {
            case.require_valid(p)?;
            let m = case.m();
            let centralizer = (p.dual_square_sum() - p.odd_parts()) / 2;
            Ok((m * (m - 1) / 2 - centralizer) / 2)
        }
        _ => orbit_dim_symmetric(case, p),
    }
}

/// Covering relations of the closure order. `edges` point from the larger
/// orbit to the one it covers, as indices into `nodes`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Hasse {
    pub nodes: Vec<OrbitDescriptor>,
    pub edges: Vec<(usize, usize)>,
}

impl Hasse {
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph closure {\n");
        for (i, n) in self.nodes.iter().enumerate() {
            s.push_str(&format!("  n{i} [label=\"{n} ({})\"];\n", n.dim()));
        }
        for (a, b) in &self.edges {
            s.push_str(&format!("  n{a} -> n{b};\n"));
        }
        s.push_str("}\n");
        s
    }
}

fn strictly_above(a: &OrbitDescriptor, b: &OrbitDescriptor) -> bool {
    a.partition != b.partition && dominates(&a.partition, &b.partition).unwrap_or(false)
}

pub fn closure_hasse(case: PairCase) -> Hasse {
    let nodes = classify_orbits(case);
    let k = nodes.len();
    let above: Vec<Vec<bool>> = (0..k)
        .map(|i| (0..k).map(|j| strictly_above(&nodes[i], &nodes[j])).collect())
        .collect();
    let mut edges = Vec::new();
    for i in 0..k {
        for j in 0..k {
            if above[i][j] && !(0..k).any(|c| above[i][c] && above[c][j]) {
                edges.push((i, j));
            }
        }
    }
    Hasse { nodes, edges }
}
