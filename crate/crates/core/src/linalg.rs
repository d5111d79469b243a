//! Exact linear algebra over `Q`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::Q;

/// Determinant by Gaussian elimination.
pub fn determinant(mut a: Vec<Vec<Q>>) -> Q {
    let k = a.len();
    let mut d = Q::one();
    for col in 0..k {
        let Some(piv) = (col..k).find(|&r| !a[r][col].is_zero()) else {
            return Q::zero();
        };
        if piv != col {
            a.swap(piv, col);
            d = -d;
        }
        let pivot = a[col].clone();
        d *= &pivot[col];
        for row in a.iter_mut().skip(col + 1) {
            if row[col].is_zero() {
                continue;
            }
            let f = &row[col] / &pivot[col];
            for (x, y) in row.iter_mut().zip(&pivot).skip(col) {
                *x -= y * &f;
            }
        }
    }
    d
}

/// Sparse row vector.
pub type SparseRow = BTreeMap<usize, Q>;

/// Incremental row echelon form over `Q` with sparse rows.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    pivots: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduce `row` against the current pivots; returns the remainder.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        loop {
            let Some((&lead, _)) = row.iter().find(|(c, _)| self.pivots.contains_key(c)) else {
                return row;
            };
            let prow = &self.pivots[&lead];
            let f = row[&lead].clone();
            for (c, x) in prow {
                let v = row.remove(c).unwrap_or_else(Q::zero) - &f * x;
                if !v.is_zero() {
                    row.insert(*c, v);
                }
            }
        }
    }

    /// Adds `row` to the span. Returns true if the rank grew.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let row = self.reduce(row);
        let Some((&lead, lc)) = row.iter().next() else {
            return false;
        };
        let inv = Q::one() / lc;
        let row: SparseRow = row.into_iter().map(|(c, x)| (c, x * &inv)).collect();
        self.pivots.insert(lead, row);
        true
    }
}

/// Rank of a dense matrix.
pub fn rank(rows: &[Vec<Q>]) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        let sr: SparseRow = r
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(c, x)| (c, x.clone()))
            .collect();
        e.insert(sr);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(x: i64) -> Q {
        Q::from_integer(x.into())
    }

    #[test]
    fn det_and_rank() {
        let a = vec![vec![q(2), q(1)], vec![q(4), q(3)]];
        assert_eq!(determinant(a.clone()), q(2));
        assert_eq!(rank(&a), 2);
        let b = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)], vec![q(0), q(1), q(1)]];
        assert_eq!(determinant(b.clone()), q(0));
        assert_eq!(rank(&b), 2);
        let p = vec![vec![q(0), q(1)], vec![q(1), q(0)]];
        assert_eq!(determinant(p), q(-1));
    }
}
