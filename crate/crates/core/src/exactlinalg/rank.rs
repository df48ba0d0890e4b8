//! Fraction-free integer elimination. Rows are cleared of denominators first,
//! then reduced over `Z` with each updated row divided by its content.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::matrix::RationalMatrix;
use crate::rational::Rational;

fn integer_row(row: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let l = row
        .iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints = row.iter().map(|q| q.numer() * (&l / q.denom())).collect();
    (ints, l)
}

fn make_primitive(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, a| acc.gcd(a));
    if !g.is_zero() && !g.is_one() {
        for a in row.iter_mut() {
            *a /= &g;
        }
    }
}

pub fn rank(m: &RationalMatrix) -> usize {
    let mut rows: Vec<Vec<BigInt>> = (0..m.rows())
        .map(|i| integer_row(m.row(i)).0)
        .filter(|r| r.iter().any(|a| !a.is_zero()))
        .collect();
    for r in rows.iter_mut() {
        make_primitive(r);
    }
    let mut r = 0;
    for c in 0..m.cols() {
        if r == rows.len() {
            break;
        }
        // Smallest pivot keeps the multipliers short.
        let Some(p) = (r..rows.len())
            .filter(|&i| !rows[i][c].is_zero())
            .min_by_key(|&i| rows[i][c].bits())
        else {
            continue;
        };
        rows.swap(r, p);
        let (head, tail) = rows.split_at_mut(r + 1);
        let pivot = &head[r];
        for row in tail.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let g = pivot[c].gcd(&row[c]);
            let a = &pivot[c] / &g;
            let b = &row[c] / &g;
            for j in c..row.len() {
                let v = &a * &row[j] - &b * &pivot[j];
                row[j] = v;
            }
            make_primitive(&mut row[c..]);
        }
        r += 1;
    }
    r
}

/// Bareiss determinant of the row-scaled integer matrix, unscaled at the end.
pub fn det(m: &RationalMatrix) -> Rational {
    let n = m.rows();
    if n == 0 {
        return Rational::one();
    }
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let (row, l) = integer_row(m.row(i));
            scale *= l;
            row
        })
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return Rational::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[k][k] * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let d = sign * &a[n - 1][n - 1];
    Rational::new(d, scale)
}
