//! Rectangular semistandard tableaux as standard monomials.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::weyl::ColumnTuple;

/// An `r x d` rectangular tableau with entries in `[1, n]`, stored by columns.
///
/// Each column is strictly increasing by construction. Row weakness is
/// checked by [`Tableau::is_semistandard`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TableauRepr", into = "TableauRepr")]
pub struct Tableau {
    r: usize,
    n: usize,
    columns: Vec<ColumnTuple>,
}

#[derive(Serialize, Deserialize)]
struct TableauRepr {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<usize>>,
}

impl TryFrom<TableauRepr> for Tableau {
    type Error = Error;
    /// `n` is not part of the encoding; the largest entry is used.
    fn try_from(t: TableauRepr) -> Result<Self> {
        if t.entries.len() != t.rows || t.entries.iter().any(|row| row.len() != t.cols) {
            return Err(invalid("tableau entries do not match declared shape"));
        }
        let n = t.entries.iter().flatten().copied().max().unwrap_or(t.rows);
        Tableau::from_rows(n.max(t.rows), t.entries)
    }
}

impl From<Tableau> for TableauRepr {
    fn from(t: Tableau) -> Self {
        TableauRepr {
            rows: t.r,
            cols: t.columns.len(),
            entries: t.rows(),
        }
    }
}

impl Tableau {
    pub fn new(r: usize, n: usize, columns: Vec<ColumnTuple>) -> Result<Self> {
        for c in &columns {
            if c.r() != r || c.n() != n {
                return Err(invalid(format!("column {c} does not lie in I({r}, {n})")));
            }
        }
        Ok(Tableau { r, n, columns })
    }

    /// Empty tableau of height `r`.
    pub fn empty(r: usize, n: usize) -> Self {
        Tableau {
            r,
            n,
            columns: Vec::new(),
        }
    }

    pub fn from_rows(n: usize, rows: Vec<Vec<usize>>) -> Result<Self> {
        let r = rows.len();
        if r == 0 {
            return Err(invalid("tableau needs at least one row"));
        }
        let d = rows[0].len();
        if rows.iter().any(|row| row.len() != d) {
            return Err(invalid("ragged rows"));
        }
        let columns = (0..d)
            .map(|j| ColumnTuple::new(n, rows.iter().map(|row| row[j]).collect()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Tableau { r, n, columns })
    }

    /// Columns written as digit strings, e.g. `["135", "136"]`. Only for `n <= 9`.
    pub fn from_column_strings(n: usize, cols: &[&str]) -> Result<Self> {
        let columns = cols
            .iter()
            .map(|s| {
                let e = s
                    .chars()
                    .map(|ch| ch.to_digit(10).map(|d| d as usize).ok_or_else(|| invalid(format!("bad digit in {s}"))))
                    .collect::<Result<Vec<_>>>()?;
                ColumnTuple::new(n, e)
            })
            .collect::<Result<Vec<_>>>()?;
        let r = columns.first().map(|c| c.r()).ok_or_else(|| invalid("no columns"))?;
        Tableau::new(r, n, columns)
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of columns.
    pub fn d(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[ColumnTuple] {
        &self.columns
    }

    pub fn into_columns(self) -> Vec<ColumnTuple> {
        self.columns
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.r)
            .map(|i| self.columns.iter().map(|c| c.entries()[i]).collect())
            .collect()
    }

    /// Entry in 1-based row `i`, column `j`.
    pub fn entry(&self, i: usize, j: usize) -> usize {
        self.columns[j - 1].entries()[i - 1]
    }

    pub fn is_semistandard(&self) -> bool {
        self.columns.windows(2).all(|p| p[0].leq(&p[1]))
    }

    pub fn content(&self) -> ContentVector {
        let mut counts = vec![0; self.n];
        for c in &self.columns {
            for &x in c.entries() {
                counts[x - 1] += 1;
            }
        }
        ContentVector { counts }
    }

    /// Uniform content: every value in `[1, n]` appears equally often.
    pub fn is_zero_weight(&self) -> bool {
        let c = self.content();
        c.counts.windows(2).all(|p| p[0] == p[1])
    }

    /// Columns sorted lexicographically.
    pub fn canonicalize(&self) -> Tableau {
        let mut columns = self.columns.clone();
        columns.sort();
        Tableau {
            r: self.r,
            n: self.n,
            columns,
        }
    }

    /// Product of standard monomials: union of columns, re-sorted.
    pub fn product(&self, other: &Tableau) -> Result<Tableau> {
        if self.r != other.r || self.n != other.n {
            return Err(invalid("product of tableaux of different shape"));
        }
        let mut columns = self.columns.clone();
        columns.extend(other.columns.iter().cloned());
        columns.sort();
        Ok(Tableau {
            r: self.r,
            n: self.n,
            columns,
        })
    }

    /// Sub-tableau from the given 0-based column indices, in that order.
    pub fn select(&self, idx: &[usize]) -> Tableau {
        Tableau {
            r: self.r,
            n: self.n,
            columns: idx.iter().map(|&j| self.columns[j].clone()).collect(),
        }
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.rows();
        for (k, row) in rows.iter().enumerate() {
            if k > 0 {
                write!(f, "/")?;
            }
            for (j, x) in row.iter().enumerate() {
                if j > 0 && self.n > 9 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

/// Multiplicities `a(1), ..., a(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ContentVector {
    counts: Vec<usize>,
}

impl ContentVector {
    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// `a(i)` for 1-based `i`.
    pub fn get(&self, i: usize) -> usize {
        self.counts[i - 1]
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }
}

/// All semistandard `r x (m n)` tableaux with uniform content `r m`, first
/// column `>= v` and last column `<= w`, in deglex (column-lexicographic) order.
///
/// Tableaux are built value by value: the cells holding values `<= k` form a
/// partition inside the rectangle, and consecutive partitions differ by a
/// horizontal strip of `r m` cells.
pub fn enumerate_invariants(r: usize, n: usize, m: usize, w: &ColumnTuple, v: &ColumnTuple) -> Vec<Tableau> {
    if r == 0 || r > n || w.r() != r || v.r() != r || w.n() != n || v.n() != n || !v.leq(w) {
        return Vec::new();
    }
    if m == 0 {
        return vec![Tableau::empty(r, n)];
    }
    let d = m * n;
    let strip = r * m;
    let mut out = Vec::new();
    let mut levels: Vec<Vec<usize>> = vec![vec![0; r]];
    gt_rec(1, n, d, strip, w.entries(), v.entries(), &mut levels, &mut out);
    let mut tabs: Vec<Tableau> = out
        .into_iter()
        .map(|levels| levels_to_tableau(r, n, d, &levels))
        .collect();
    tabs.sort_by(deglex_compare);
    tabs
}

#[allow(clippy::too_many_arguments)]
fn gt_rec(
    k: usize,
    n: usize,
    d: usize,
    strip: usize,
    w: &[usize],
    v: &[usize],
    levels: &mut Vec<Vec<usize>>,
    out: &mut Vec<Vec<Vec<usize>>>,
) {
    if k > n {
        out.push(levels.clone());
        return;
    }
    let prev = levels[k - 1].clone();
    let r = prev.len();
    let mut lo = vec![0; r];
    let mut hi = vec![0; r];
    for i in 0..r {
        lo[i] = prev[i];
        hi[i] = if i == 0 { d } else { prev[i - 1] };
        if k >= w[i] {
            lo[i] = lo[i].max(d);
        }
        if k < v[i] {
            hi[i] = 0;
        }
        if lo[i] > hi[i] {
            return;
        }
    }
    let target: usize = prev.iter().sum::<usize>() + strip;
    let mut cur = vec![0; r];
    choose_rows(0, &lo, &hi, target, &mut cur, &mut |lam: &[usize]| {
        levels.push(lam.to_vec());
        gt_rec(k + 1, n, d, strip, w, v, levels, out);
        levels.pop();
    });
}

fn choose_rows(i: usize, lo: &[usize], hi: &[usize], remaining: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    let r = lo.len();
    if i == r {
        if remaining == 0 {
            f(cur);
        }
        return;
    }
    let rest_lo: usize = lo[i + 1..].iter().sum();
    let rest_hi: usize = hi[i + 1..].iter().sum();
    for x in lo[i]..=hi[i] {
        if x > remaining {
            break;
        }
        let left = remaining - x;
        if left < rest_lo || left > rest_hi {
            continue;
        }
        cur[i] = x;
        choose_rows(i + 1, lo, hi, left, cur, f);
    }
}

fn levels_to_tableau(r: usize, n: usize, d: usize, levels: &[Vec<usize>]) -> Tableau {
    let mut rows = vec![vec![0; d]; r];
    for k in 1..levels.len() {
        for i in 0..r {
            for slot in &mut rows[i][levels[k - 1][i]..levels[k][i]] {
                *slot = k;
            }
        }
    }
    let columns = (0..d)
        .map(|j| ColumnTuple::new_unchecked(n, rows.iter().map(|row| row[j]).collect()))
        .collect();
    Tableau { r, n, columns }
}

/// The first column.
pub fn first_column_class(t: &Tableau) -> Result<ColumnTuple> {
    t.columns.first().cloned().ok_or_else(|| invalid("empty tableau has no first column"))
}

/// Column multiset with counts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColumnCensus {
    pub counts: BTreeMap<ColumnTuple, usize>,
}

impl ColumnCensus {
    pub fn count(&self, entries: &[usize]) -> usize {
        self.counts
            .iter()
            .find(|(c, _)| c.entries() == entries)
            .map(|(_, k)| *k)
            .unwrap_or(0)
    }

    /// Columns that occur, with at least one entry equal to `x`.
    pub fn columns_containing(&self, x: usize) -> Vec<&ColumnTuple> {
        self.counts.keys().filter(|c| c.contains(x)).collect()
    }
}

pub fn column_census(t: &Tableau) -> ColumnCensus {
    let mut counts = BTreeMap::new();
    for c in &t.columns {
        *counts.entry(c.clone()).or_insert(0) += 1;
    }
    ColumnCensus { counts }
}

/// Longer tableaux are larger; equal lengths compare column by column.
pub fn deglex_compare(s: &Tableau, t: &Tableau) -> Ordering {
    s.d().cmp(&t.d()).then_with(|| s.columns.cmp(&t.columns))
}

/// Remove the columns of `sub` (as a multiset) from `t`. `None` if `sub` is not contained.
pub fn remove_submultiset(t: &Tableau, sub: &Tableau) -> Option<Tableau> {
    let mut rest = t.columns.clone();
    for c in &sub.columns {
        let pos = rest.iter().position(|x| x == c)?;
        rest.remove(pos);
    }
    Some(Tableau {
        r: t.r,
        n: t.n,
        columns: rest,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::g37;
    use crate::weyl::{gamma_tableau, minimal_richardson_v, minimal_schubert};
    use proptest::prelude::*;

    fn ct(n: usize, e: &[usize]) -> ColumnTuple {
        ColumnTuple::new(n, e.to_vec()).unwrap()
    }

    /// Naive oracle: depth-first over non-decreasing column sequences with a
    /// content filter at the leaves only (plus a cheap overflow cut).
    fn slow_enumerate(r: usize, n: usize, m: usize, w: &ColumnTuple, v: &ColumnTuple) -> Vec<Tableau> {
        let cands: Vec<ColumnTuple> = ColumnTuple::all(r, n).into_iter().filter(|c| v.leq(c) && c.leq(w)).collect();
        let d = m * n;
        let mut out = Vec::new();
        fn rec(
            cands: &[ColumnTuple],
            start: usize,
            d: usize,
            cap: usize,
            cur: &mut Vec<ColumnTuple>,
            counts: &mut Vec<usize>,
            out: &mut Vec<Vec<ColumnTuple>>,
        ) {
            if cur.len() == d {
                if counts.iter().all(|&c| c == cap) {
                    out.push(cur.clone());
                }
                return;
            }
            for (k, c) in cands.iter().enumerate().skip(start) {
                if let Some(last) = cur.last() {
                    if !last.leq(c) {
                        continue;
                    }
                }
                if c.entries().iter().any(|&x| counts[x - 1] == cap) {
                    continue;
                }
                for &x in c.entries() {
                    counts[x - 1] += 1;
                }
                cur.push(c.clone());
                rec(cands, k, d, cap, cur, counts, out);
                cur.pop();
                for &x in c.entries() {
                    counts[x - 1] -= 1;
                }
            }
        }
        rec(&cands, 0, d, r * m, &mut Vec::new(), &mut vec![0; n], &mut out);
        out.into_iter().map(|columns| Tableau::new(r, n, columns).unwrap()).collect()
    }

    #[test]
    fn zero_weight_examples() {
        assert!(gamma_tableau(3, 7).unwrap().is_zero_weight());
        assert!(g37::y(2).is_zero_weight());
        let t = Tableau::from_rows(4, vec![vec![1, 1], vec![2, 3]]).unwrap();
        assert!(!t.is_zero_weight());
    }

    #[test]
    fn g37_degree_one() {
        let w = minimal_schubert(3, 7).unwrap();
        let all = enumerate_invariants(3, 7, 1, &w, &ColumnTuple::identity(3, 7).unwrap());
        assert_eq!(all.len(), 7);
        let mut ys: Vec<Tableau> = (1..=7).map(g37::y).collect();
        ys.sort_by(deglex_compare);
        assert_eq!(all, ys);
        let v = minimal_richardson_v(3, 7).unwrap();
        assert_eq!(enumerate_invariants(3, 7, 1, &w, &v), vec![gamma_tableau(3, 7).unwrap()]);
    }

    #[test]
    fn degenerate_inputs_are_empty() {
        let w = ct(7, &[3, 5, 7]);
        let v = ct(7, &[4, 5, 6]);
        assert!(enumerate_invariants(3, 7, 1, &w, &v).is_empty());
        let w = ct(6, &[2, 4]);
        assert!(enumerate_invariants(2, 6, 1, &w, &ct(6, &[1, 2])).is_empty());
    }

    #[test]
    fn matches_slow_oracle() {
        let cases = [
            (3, 7, 1, vec![3, 5, 7], vec![1, 2, 3]),
            (3, 7, 2, vec![3, 5, 7], vec![1, 2, 3]),
            (2, 5, 2, vec![4, 5], vec![1, 2]),
            (2, 5, 3, vec![4, 5], vec![1, 2]),
            (2, 7, 1, vec![6, 7], vec![1, 2]),
            (3, 8, 1, vec![3, 6, 8], vec![1, 2, 6]),
            (2, 5, 2, vec![3, 5], vec![1, 2]),
            (3, 6, 1, vec![4, 5, 6], vec![1, 2, 3]),
        ];
        for (r, n, m, w, v) in cases {
            let w = ct(n, &w);
            let v = ct(n, &v);
            let mut slow = slow_enumerate(r, n, m, &w, &v);
            slow.sort_by(deglex_compare);
            assert_eq!(enumerate_invariants(r, n, m, &w, &v), slow, "({r},{n},{m})");
        }
    }

    #[test]
    fn known_counts() {
        let id2 = |n| ColumnTuple::identity(2, n).unwrap();
        let top2 = |n| ColumnTuple::top(2, n).unwrap();
        assert_eq!(enumerate_invariants(3, 7, 2, &ct(7, &[3, 5, 7]), &ct(7, &[1, 2, 3])).len(), 22);
        assert_eq!(enumerate_invariants(2, 5, 1, &top2(5), &id2(5)).len(), 6);
        assert_eq!(enumerate_invariants(2, 7, 1, &top2(7), &id2(7)).len(), 36);
        assert_eq!(enumerate_invariants(2, 9, 1, &top2(9), &id2(9)).len(), 232);
        assert_eq!(enumerate_invariants(2, 5, 2, &top2(5), &id2(5)).len(), 16);
        assert_eq!(enumerate_invariants(2, 5, 3, &top2(5), &id2(5)).len(), 31);
        assert_eq!(enumerate_invariants(2, 7, 2, &top2(7), &id2(7)).len(), 260);
        assert_eq!(enumerate_invariants(2, 5, 1, &ct(5, &[3, 5]), &id2(5)).len(), 2);
        assert_eq!(enumerate_invariants(2, 5, 2, &ct(5, &[3, 5]), &id2(5)).len(), 3);
        assert_eq!(enumerate_invariants(3, 8, 1, &ct(8, &[3, 6, 8]), &ct(8, &[1, 3, 5])).len(), 3);
    }

    #[test]
    fn g2n_minimal_pair_is_unique() {
        for n in [3, 5, 7, 9] {
            let w = minimal_schubert(2, n).unwrap();
            let v = minimal_richardson_v(2, n).unwrap();
            assert_eq!(enumerate_invariants(2, n, 1, &w, &v), vec![gamma_tableau(2, n).unwrap()]);
        }
    }

    #[test]
    fn deglex_examples() {
        let a = Tableau::from_rows(4, vec![vec![1, 3], vec![2, 4]]).unwrap();
        let b = Tableau::from_rows(4, vec![vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(deglex_compare(&a, &a), Ordering::Equal);
        assert_eq!(deglex_compare(&a, &b), Ordering::Less);
        let long = a.product(&b).unwrap();
        assert_eq!(deglex_compare(&long, &a), Ordering::Greater);
    }

    #[test]
    fn deglex_total_order_on_family() {
        let w = ct(7, &[3, 5, 7]);
        let v = ct(7, &[1, 2, 3]);
        let mut all = enumerate_invariants(3, 7, 1, &w, &v);
        all.extend(enumerate_invariants(3, 7, 2, &w, &v));
        for a in &all {
            for b in &all {
                let ab = deglex_compare(a, b);
                assert_eq!(ab, deglex_compare(b, a).reverse());
                assert_eq!(ab == Ordering::Equal, a == b);
                for c in &all {
                    if ab != Ordering::Greater && deglex_compare(b, c) != Ordering::Greater {
                        assert_ne!(deglex_compare(a, c), Ordering::Greater);
                    }
                }
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let t = g37::y(1);
        let s = serde_json::to_string(&t).unwrap();
        assert!(s.starts_with(r#"{"rows":3,"cols":7,"entries":[[1,1,1,2,2,2,3]"#));
        let back: Tableau = serde_json::from_str(&s).unwrap();
        assert_eq!(back, t);
    }

    proptest! {
        #[test]
        fn enumeration_outputs_are_valid(n in 3usize..=7, m in 1usize..=2, seed in 0usize..1000) {
            let r = 2;
            let cols = ColumnTuple::all(r, n);
            let w = cols[cols.len() - 1 - seed % cols.len().min(4)].clone();
            let v = ColumnTuple::identity(r, n).unwrap();
            let all = enumerate_invariants(r, n, m, &w, &v);
            for t in &all {
                prop_assert!(t.is_semistandard());
                prop_assert!(t.is_zero_weight());
                prop_assert!(v.leq(&t.columns()[0]));
                prop_assert!(t.columns().last().unwrap().leq(&w));
                prop_assert_eq!(t.d(), m * n);
            }
            for p in all.windows(2) {
                prop_assert_eq!(deglex_compare(&p[0], &p[1]), Ordering::Less);
            }
        }
    }
}
