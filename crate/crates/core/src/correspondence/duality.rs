//! Dimension coincidences between order-two orbits on self-adjoint maps and
//! classical order-two orbits of the Langlands-dual-type group.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::partitions::{orbit_dim_classical, orbit_dim_symmetric, PairCase, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualityRow {
    pub symmetric: PairCase,
    pub classical: PairCase,
    pub j: usize,
    pub symmetric_partition: Partition,
    pub classical_partition: Partition,
    pub symmetric_dim: usize,
    pub classical_dim: usize,
    pub closed_form: usize,
}

impl DualityRow {
    pub fn holds(&self) -> bool {
        self.symmetric_dim == self.closed_form && self.classical_dim == self.closed_form
    }
}

fn twos(j: usize, m: usize) -> Result<Partition> {
    Partition::from_exponents(&[(2, j), (1, m - 2 * j)])
}

fn row(symmetric: PairCase, classical: PairCase, j: usize, twos_count: usize, closed_form: usize) -> Result<DualityRow> {
    let sp = twos(twos_count, symmetric.m())?;
    let cp = twos(twos_count, classical.m())?;
    Ok(DualityRow {
        symmetric,
        classical,
        j,
        symmetric_dim: orbit_dim_symmetric(symmetric, &sp)?,
        classical_dim: orbit_dim_classical(classical, &cp)?,
        symmetric_partition: sp,
        classical_partition: cp,
        closed_form,
    })
}

/// Both families for rank `n`:
/// `[2^j 1^{2n+1−2j}]` on `A` for `SO_{2n+1}` against `[2^j 1^{2n−2j}]` in
/// `sp_{2n}` (`0 ≤ j ≤ n`, closed form `j(2n+1−j)`), and `[2^{2j} 1^{2n−4j}]`
/// on `A` for `Sp_{2n}` against `[2^{2j} 1^{2n+1−4j}]` in `so_{2n+1}`
/// (`0 ≤ j ≤ ⌊n/2⌋`, closed form `4j(n−j)`).
pub fn duality_dims(n: usize) -> Result<Vec<DualityRow>> {
    let mut out = Vec::new();
    for j in 0..=n {
        out.push(row(PairCase::OrthOddOnA(n), PairCase::LieSp(n), j, j, j * (2 * n + 1 - j))?);
    }
    for j in 0..=n / 2 {
        out.push(row(PairCase::SympOnA(n), PairCase::LieSOOdd(n), j, 2 * j, 4 * j * (n - j))?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn find(rows: &[DualityRow], sym: PairCase, j: usize) -> &DualityRow {
        rows.iter().find(|r| r.symmetric == sym && r.j == j).unwrap()
    }

    #[test]
    fn examples() {
        let r = duality_dims(5).unwrap();
        let a = find(&r, PairCase::OrthOddOnA(5), 2);
        assert_eq!((a.symmetric_dim, a.classical_dim), (18, 18));
        let r = duality_dims(4).unwrap();
        let b = find(&r, PairCase::SympOnA(4), 1);
        assert_eq!((b.symmetric_dim, b.classical_dim), (12, 12));
        assert_eq!(find(&r, PairCase::SympOnA(4), 0).symmetric_dim, 0);
        assert_eq!(r.len(), 5 + 3);
    }

    #[test]
    fn all_hold() {
        for n in 1..=10 {
            assert!(duality_dims(n).unwrap().iter().all(DualityRow::holds), "n={n}");
        }
    }
}
