use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{self, rat, Rational, RationalRepr};

/// Dense row-major matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    /// `E_ij` of size `n`.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m.data[i * n + j] = Rational::one();
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RationalMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::DimensionMismatch {
                expected: format!("{c} columns"),
                got: format!("{} columns", bad.len()),
            });
        }
        Ok(RationalMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Panics on ragged input; meant for literals.
    pub fn from_ints(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&a| rat(a)).collect()).collect())
            .expect("rectangular literal")
    }

    pub fn diag(entries: &[Rational]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.data[i * n + i] = e.clone();
        }
        m
    }

    /// Block-diagonal sum.
    pub fn direct_sum(blocks: &[RationalMatrix]) -> Self {
        let r = blocks.iter().map(|b| b.rows).sum();
        let c = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(r, c);
        let (mut i0, mut j0) = (0, 0);
        for b in blocks {
            m.set_block(i0, j0, b);
            i0 += b.rows;
            j0 += b.cols;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entry_mut(&mut self, i: usize, j: usize) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn set_block(&mut self, i0: usize, j0: usize, b: &RationalMatrix) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self.data[(i0 + i) * self.cols + j0 + j] = b.get(i, j).clone();
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j { e.is_one() } else { e.is_zero() }
                })
            })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn scale(&self, k: &Rational) -> Self {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * k).collect(),
        }
    }

    pub fn same_shape(&self, other: &RationalMatrix) -> Result<()> {
        if self.rows == other.rows && self.cols == other.cols {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: format!("{}x{}", self.rows, self.cols),
                got: format!("{}x{}", other.rows, other.cols),
            })
        }
    }

    pub fn require_square(&self, n: usize) -> Result<()> {
        if self.rows == n && self.cols == n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: format!("{n}x{n}"),
                got: format!("{}x{}", self.rows, self.cols),
            })
        }
    }

    pub fn try_mul(&self, other: &RationalMatrix) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: format!("{} rows", self.cols),
                got: format!("{} rows", other.rows),
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::identity(self.rows);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `[self | other]`
    pub fn hstack(&self, other: &RationalMatrix) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch {
                expected: format!("{} rows", self.rows),
                got: format!("{} rows", other.rows),
            });
        }
        Ok(Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        }))
    }

    pub fn rank(&self) -> usize {
        super::rank::rank(self)
    }

    pub fn det(&self) -> Result<Rational> {
        self.require_square(self.rows)?;
        Ok(super::rank::det(self))
    }

    pub fn is_nilpotent(&self) -> bool {
        self.is_square() && self.pow(self.rows).is_zero()
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (RationalMatrix, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a.get(i, c).is_zero()) else {
                continue;
            };
            a.swap_rows(r, p);
            let inv = a.get(r, c).recip();
            for j in c..a.cols {
                let v = a.get(r, j) * &inv;
                a.set(r, j, v);
            }
            for i in 0..a.rows {
                if i == r || a.get(i, c).is_zero() {
                    continue;
                }
                let f = a.get(i, c).clone();
                for j in c..a.cols {
                    let v = a.get(i, j) - &f * a.get(r, j);
                    a.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// Basis of `{v : self v = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -r.get(row, f).clone();
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Result<Self> {
        self.require_square(self.rows)?;
        let n = self.rows;
        let aug = self.hstack(&Self::identity(n))?;
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        Ok(Self::from_fn(n, n, |i, j| r.get(i, n + j).clone()))
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(rational::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<'a> Mul<&'a RationalMatrix> for &'a RationalMatrix {
    type Output = RationalMatrix;

    fn mul(self, rhs: &'a RationalMatrix) -> RationalMatrix {
        self.try_mul(rhs).expect("matrix product shapes")
    }
}

impl<'a> Add<&'a RationalMatrix> for &'a RationalMatrix {
    type Output = RationalMatrix;

    fn add(self, rhs: &'a RationalMatrix) -> RationalMatrix {
        self.same_shape(rhs).expect("matrix sum shapes");
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a RationalMatrix> for &'a RationalMatrix {
    type Output = RationalMatrix;

    fn sub(self, rhs: &'a RationalMatrix) -> RationalMatrix {
        self.same_shape(rhs).expect("matrix difference shapes");
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &RationalMatrix {
    type Output = RationalMatrix;

    fn neg(self) -> RationalMatrix {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

struct RowSer<'a>(&'a [Rational]);

impl Serialize for RowSer<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for q in self.0 {
            seq.serialize_element(&rational::to_string(q))?;
        }
        seq.end()
    }
}

impl Serialize for RationalMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.rows))?;
        for i in 0..self.rows {
            seq.serialize_element(&RowSer(self.row(i)))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for RationalMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = Vec::<Vec<RationalRepr>>::deserialize(d)?;
        let rows = raw
            .into_iter()
            .map(|r| r.into_iter().map(RationalRepr::into_rational).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        RationalMatrix::from_rows(rows).map_err(D::Error::custom)
    }
}
