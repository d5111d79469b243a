//! Plücker index tuples, permutations of `S_n`, reduced words and weights.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::tableau::Tableau;

/// Strictly increasing `r`-tuple in `[1, n]`, i.e. an element of `I(r, n)`.
///
/// Also stands for the minimal coset representative in `W / W_P`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "ColumnRepr", into = "ColumnRepr")]
pub struct ColumnTuple {
    entries: Vec<usize>,
    n: usize,
}

#[derive(Serialize, Deserialize)]
struct ColumnRepr {
    r: usize,
    n: usize,
    entries: Vec<usize>,
}

impl TryFrom<ColumnRepr> for ColumnTuple {
    type Error = Error;
    fn try_from(c: ColumnRepr) -> Result<Self> {
        if c.r != c.entries.len() {
            return Err(invalid(format!(
                "column declares r = {} but has {} entries",
                c.r,
                c.entries.len()
            )));
        }
        ColumnTuple::new(c.n, c.entries)
    }
}

impl From<ColumnTuple> for ColumnRepr {
    fn from(c: ColumnTuple) -> Self {
        ColumnRepr {
            r: c.r(),
            n: c.n,
            entries: c.entries,
        }
    }
}

impl ColumnTuple {
    pub fn new(n: usize, entries: Vec<usize>) -> Result<Self> {
        if entries.is_empty() {
            return Err(invalid("column tuple must be nonempty"));
        }
        if entries.len() > n {
            return Err(invalid(format!("{} entries do not fit in [1, {n}]", entries.len())));
        }
        for (i, &b) in entries.iter().enumerate() {
            if b < 1 || b > n {
                return Err(invalid(format!("entry {b} outside [1, {n}]")));
            }
            if i > 0 && entries[i - 1] >= b {
                return Err(invalid(format!("entries {entries:?} not strictly increasing")));
            }
        }
        Ok(ColumnTuple { entries, n })
    }

    /// Sorts the given entries first; fails on repeats.
    pub fn from_unsorted(n: usize, mut entries: Vec<usize>) -> Result<Self> {
        entries.sort_unstable();
        Self::new(n, entries)
    }

    pub(crate) fn new_unchecked(n: usize, entries: Vec<usize>) -> Self {
        debug_assert!(Self::new(n, entries.clone()).is_ok());
        ColumnTuple { entries, n }
    }

    /// `[1, 2, ..., r]`.
    pub fn identity(r: usize, n: usize) -> Result<Self> {
        Self::new(n, (1..=r).collect())
    }

    /// `[n-r+1, ..., n]`.
    pub fn top(r: usize, n: usize) -> Result<Self> {
        if r > n {
            return Err(invalid("r > n"));
        }
        Self::new(n, (n - r + 1..=n).collect())
    }

    pub fn r(&self) -> usize {
        self.entries.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn contains(&self, x: usize) -> bool {
        self.entries.binary_search(&x).is_ok()
    }

    /// Componentwise comparison. Both tuples must share `(r, n)`.
    pub fn leq(&self, other: &ColumnTuple) -> bool {
        self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b)
    }

    /// Extend to a full permutation by appending the complement in increasing order.
    pub fn to_permutation(&self) -> Permutation {
        let mut one_line = self.entries.clone();
        one_line.extend((1..=self.n).filter(|x| !self.contains(*x)));
        Permutation { one_line }
    }

    /// `Σ (b_i - i)`, the length of the minimal representative.
    pub fn length(&self) -> usize {
        self.entries.iter().enumerate().map(|(i, b)| b - (i + 1)).sum()
    }

    /// All of `I(r, n)` in lexicographic order.
    pub fn all(r: usize, n: usize) -> Vec<ColumnTuple> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(r);
        fn rec(start: usize, r: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<ColumnTuple>) {
            if cur.len() == r {
                out.push(ColumnTuple { entries: cur.clone(), n });
                return;
            }
            let need = r - cur.len();
            for x in start..=n + 1 - need {
                cur.push(x);
                rec(x + 1, r, n, cur, out);
                cur.pop();
            }
        }
        if r >= 1 && r <= n {
            rec(1, r, n, &mut cur, &mut out);
        }
        out
    }
}

impl fmt::Display for ColumnTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, b) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, "]")
    }
}

fn check_same_shape(u: &ColumnTuple, w: &ColumnTuple) -> Result<()> {
    if u.r() != w.r() || u.n != w.n {
        return Err(invalid(format!(
            "shape mismatch: {u} in I({}, {}) vs {w} in I({}, {})",
            u.r(),
            u.n,
            w.r(),
            w.n
        )));
    }
    Ok(())
}

/// Bruhat order on `I(r, n)`: `u <= w` iff `u(i) <= w(i)` for all `i`.
pub fn bruhat_leq(u: &ColumnTuple, w: &ColumnTuple) -> Result<bool> {
    check_same_shape(u, w)?;
    Ok(u.leq(w))
}

fn check_coprime(r: usize, n: usize) -> Result<()> {
    if r < 1 || r >= n {
        return Err(invalid(format!("need 1 <= r < n, got r = {r}, n = {n}")));
    }
    if r.gcd(&n) != 1 {
        return Err(Error::Unsupported(format!("gcd({r}, {n}) != 1")));
    }
    Ok(())
}

fn minimal_entries(r: usize, n: usize) -> Vec<usize> {
    (1..=r).map(|i| (i * n).div_ceil(r)).collect()
}

/// `w_{r,n}` with `a_i = ceil(i n / r)`.
pub fn minimal_schubert(r: usize, n: usize) -> Result<ColumnTuple> {
    check_coprime(r, n)?;
    ColumnTuple::new(n, minimal_entries(r, n))
}

/// `v_{r,n} = [1, a_1, ..., a_{r-1}]`.
pub fn minimal_richardson_v(r: usize, n: usize) -> Result<ColumnTuple> {
    check_coprime(r, n)?;
    let a = minimal_entries(r, n);
    let mut e = vec![1];
    e.extend_from_slice(&a[..r - 1]);
    ColumnTuple::new(n, e)
}

/// The `r x n` tableau `Γ_{r,n}`: each of `1..n` written `r` times,
/// filling rows left to right, top to bottom.
pub fn gamma_tableau(r: usize, n: usize) -> Result<Tableau> {
    check_coprime(r, n)?;
    let reading: Vec<usize> = (1..=n).flat_map(|x| std::iter::repeat_n(x, r)).collect();
    let rows: Vec<Vec<usize>> = reading.chunks(n).map(|c| c.to_vec()).collect();
    Tableau::from_rows(n, rows)
}

/// A permutation of `[1, n]` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    one_line: Vec<usize>,
}

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &x in &one_line {
            if x < 1 || x > n || seen[x] {
                return Err(invalid(format!("{one_line:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Permutation { one_line })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            one_line: (1..=n).collect(),
        }
    }

    /// The transposition `s_i = (i, i+1)`.
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        if i < 1 || i >= n {
            return Err(invalid(format!("s_{i} not a simple reflection of S_{n}")));
        }
        let mut p = Self::identity(n);
        p.one_line.swap(i - 1, i);
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.one_line.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    /// `w(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.one_line[i - 1]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "composing permutations of different degree");
        Permutation {
            one_line: other.one_line.iter().map(|&x| self.one_line[x - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &x) in self.one_line.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Permutation { one_line: inv }
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.one_line;
        let mut l = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    l += 1;
                }
            }
        }
        l
    }

    /// `w s_i`, i.e. swap positions `i` and `i + 1`.
    pub fn times_simple(&self, i: usize) -> Permutation {
        let mut p = self.clone();
        p.one_line.swap(i - 1, i);
        p
    }

    /// True iff `l(w s_i) < l(w)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.one_line[i - 1] > self.one_line[i]
    }

    /// Some reduced word, found by peeling right descents.
    pub fn reduced_word(&self) -> ReducedWord {
        let mut w = self.clone();
        let mut rev = Vec::new();
        'outer: loop {
            for i in 1..w.n() {
                if w.has_right_descent(i) {
                    rev.push(i);
                    w = w.times_simple(i);
                    continue 'outer;
                }
            }
            break;
        }
        rev.reverse();
        ReducedWord {
            n: self.n(),
            letters: rev,
        }
    }

    /// Sorted first `r` values: the image in `I(r, n)`.
    pub fn grassmannian_tuple(&self, r: usize) -> Result<ColumnTuple> {
        if r < 1 || r > self.n() {
            return Err(invalid(format!("r = {r} out of range")));
        }
        ColumnTuple::from_unsorted(self.n(), self.one_line[..r].to_vec())
    }

    /// True iff this is the minimal representative of its coset in `S_n / (S_r x S_{n-r})`.
    pub fn is_grassmannian(&self, r: usize) -> bool {
        let w = &self.one_line;
        w[..r].windows(2).all(|p| p[0] < p[1]) && w[r..].windows(2).all(|p| p[0] < p[1])
    }

    /// Bruhat order on `S_n` via the sorted-prefix criterion.
    pub fn bruhat_leq(&self, other: &Permutation) -> bool {
        let n = self.n();
        for k in 1..n {
            let mut a = self.one_line[..k].to_vec();
            let mut b = other.one_line[..k].to_vec();
            a.sort_unstable();
            b.sort_unstable();
            if a.iter().zip(&b).any(|(x, y)| x > y) {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, b) in self.one_line.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, ")")
    }
}

/// A word `s_{i_1} ... s_{i_m}` in the simple reflections of `S_n`.
///
/// Constructed through [`ReducedWord::new`] the word is checked to be reduced.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ReducedWord {
    n: usize,
    letters: Vec<usize>,
}

impl ReducedWord {
    pub fn new(n: usize, letters: Vec<usize>) -> Result<Self> {
        if let Some(bad) = letters.iter().find(|&&i| i < 1 || i >= n) {
            return Err(invalid(format!("letter {bad} outside [1, {}]", n.saturating_sub(1))));
        }
        let w = ReducedWord { n, letters };
        if w.evaluate().length() != w.len() {
            return Err(invalid(format!("word {w} is not reduced")));
        }
        Ok(w)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `s_{i_1} ∘ ... ∘ s_{i_m}` as a one-line permutation.
    pub fn evaluate(&self) -> Permutation {
        evaluate_letters(self.n, &self.letters)
    }

    /// Set of distinct letters used.
    pub fn support(&self) -> Vec<usize> {
        let mut s = self.letters.clone();
        s.sort_unstable();
        s.dedup();
        s
    }
}

pub(crate) fn evaluate_letters(n: usize, letters: &[usize]) -> Permutation {
    let mut p = Permutation::identity(n);
    for &i in letters {
        p.one_line.swap(i - 1, i);
    }
    p
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        for (k, i) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "s{i}")?;
        }
        Ok(())
    }
}

/// `(s_{b_1-1} ... s_1)(s_{b_2-1} ... s_2) ... (s_{b_r-1} ... s_r)`.
pub fn canonical_word(c: &ColumnTuple) -> ReducedWord {
    let mut letters = Vec::with_capacity(c.length());
    for (i, &b) in c.entries().iter().enumerate() {
        let lo = i + 1;
        let mut j = b;
        while j > lo {
            j -= 1;
            letters.push(j);
        }
    }
    ReducedWord { n: c.n(), letters }
}

/// True iff `w v^{-1}` is a Coxeter element of `S_n`: length `n - 1` with
/// every simple reflection in its support.
pub fn is_coxeter_quotient(w: &ColumnTuple, v: &ColumnTuple) -> Result<bool> {
    if !bruhat_leq(v, w)? {
        return Err(invalid(format!("{v} is not below {w}")));
    }
    let wp = w.to_permutation();
    let vp = v.to_permutation();
    let c = wp.compose(&vp.inverse());
    let n = w.n();
    if c.length() != n - 1 {
        return Ok(false);
    }
    Ok(c.reduced_word().support().len() == n - 1)
}

/// An integral weight in `ε`-coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "WeightRepr", into = "WeightRepr")]
pub struct Weight {
    eps: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct WeightRepr {
    eps: Vec<i64>,
}

impl TryFrom<WeightRepr> for Weight {
    type Error = Error;
    fn try_from(w: WeightRepr) -> Result<Self> {
        Weight::new(w.eps)
    }
}

impl From<Weight> for WeightRepr {
    fn from(w: Weight) -> Self {
        WeightRepr { eps: w.eps }
    }
}

impl Weight {
    pub fn new(eps: Vec<i64>) -> Result<Self> {
        if eps.iter().sum::<i64>() != 0 {
            return Err(invalid(format!("ε-coordinates {eps:?} do not sum to 0")));
        }
        Ok(Weight { eps })
    }

    /// `Σ c_i α_i` with `α_i = ε_i - ε_{i+1}`.
    pub fn from_alpha(alpha: &[i64]) -> Self {
        let n = alpha.len() + 1;
        let mut eps = vec![0; n];
        for (i, &c) in alpha.iter().enumerate() {
            eps[i] += c;
            eps[i + 1] -= c;
        }
        Weight { eps }
    }

    /// `v(n ω_r)` restricted to the maximal torus of `SL_n`: value `n - r`
    /// in the positions `v(1..r)` and `-r` elsewhere.
    pub fn of_tuple(v: &ColumnTuple) -> Self {
        let n = v.n() as i64;
        let r = v.r() as i64;
        let eps = (1..=v.n())
            .map(|i| if v.contains(i) { n - r } else { -r })
            .collect();
        Weight { eps }
    }

    pub fn eps(&self) -> &[i64] {
        &self.eps
    }

    /// Partial sums of the `ε`-coordinates.
    pub fn alpha_coords(&self) -> Vec<i64> {
        let mut acc = 0;
        self.eps[..self.eps.len().saturating_sub(1)]
            .iter()
            .map(|e| {
                acc += e;
                acc
            })
            .collect()
    }

    /// Sum of the `α`-coordinates.
    pub fn height(&self) -> i64 {
        self.alpha_coords().iter().sum()
    }
}

/// `ht v(n ω_r)`.
pub fn restriction_height(v: &ColumnTuple) -> i64 {
    Weight::of_tuple(v).height()
}

/// Number of times `a_i` occurs in row `i + 1` of `Γ_{r,n}` (1-based `i`,
/// `1 <= i < r`), plus one. This is the count of degree-one standard
/// monomials on the Richardson variety `X^{v'}_{w_{r,n}}` where `v'` lowers
/// the `(i+1)`-st entry of `v_{r,n}` by one.
pub fn descent_degree(r: usize, n: usize, i: usize) -> Result<usize> {
    check_coprime(r, n)?;
    if i < 1 || i >= r {
        return Err(invalid(format!("descent index {i} outside [1, {}]", r - 1)));
    }
    let g = gamma_tableau(r, n)?;
    let a = minimal_entries(r, n)[i - 1];
    Ok(g.rows()[i].iter().filter(|&&x| x == a).count() + 1)
}

/// `v_{r,n}` with its `(i+1)`-st entry lowered by one, i.e. `s_{a_i - 1} v_{r,n}`.
pub fn descent_v(r: usize, n: usize, i: usize) -> Result<ColumnTuple> {
    let v = minimal_richardson_v(r, n)?;
    if i < 1 || i >= r {
        return Err(invalid(format!("descent index {i} outside [1, {}]", r - 1)));
    }
    let mut e = v.entries().to_vec();
    e[i] -= 1;
    ColumnTuple::new(n, e).map_err(|_| Error::Unsupported(format!("s v_{{{r},{n}}} at {i} leaves I(r, n)")))
}

/// Lexicographic comparison of two tuples, as used for columns of tableaux.
pub fn lex_compare(a: &ColumnTuple, b: &ColumnTuple) -> Ordering {
    a.entries.cmp(&b.entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    fn ct(n: usize, e: &[usize]) -> ColumnTuple {
        ColumnTuple::new(n, e.to_vec()).unwrap()
    }

    #[test]
    fn bruhat_examples() {
        assert!(bruhat_leq(&ct(7, &[1, 2, 3]), &ct(7, &[3, 5, 7])).unwrap());
        assert!(bruhat_leq(&ct(7, &[2, 4, 6]), &ct(7, &[3, 5, 7])).unwrap());
        assert!(!bruhat_leq(&ct(7, &[1, 4, 7]), &ct(7, &[3, 5, 6])).unwrap());
        assert!(bruhat_leq(&ct(7, &[1, 2]), &ct(7, &[1, 2, 3])).is_err());
        assert!(bruhat_leq(&ct(7, &[1, 2]), &ct(8, &[1, 2])).is_err());
    }

    #[test]
    fn minimal_data() {
        assert_eq!(minimal_schubert(3, 7).unwrap(), ct(7, &[3, 5, 7]));
        assert_eq!(minimal_schubert(3, 8).unwrap(), ct(8, &[3, 6, 8]));
        assert_eq!(minimal_schubert(1, 5).unwrap(), ct(5, &[5]));
        assert_eq!(minimal_richardson_v(3, 7).unwrap(), ct(7, &[1, 3, 5]));
        assert_eq!(minimal_richardson_v(3, 8).unwrap(), ct(8, &[1, 3, 6]));
        assert_eq!(minimal_richardson_v(2, 3).unwrap(), ct(3, &[1, 2]));
        assert!(matches!(minimal_schubert(2, 4), Err(Error::Unsupported(_))));
        assert!(matches!(minimal_schubert(3, 3), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn gamma_examples() {
        let g = gamma_tableau(3, 8).unwrap();
        assert_eq!(
            g.rows(),
            vec![
                vec![1, 1, 1, 2, 2, 2, 3, 3],
                vec![3, 4, 4, 4, 5, 5, 5, 6],
                vec![6, 6, 7, 7, 7, 8, 8, 8]
            ]
        );
        let g = gamma_tableau(3, 7).unwrap();
        assert_eq!(
            g.rows(),
            vec![vec![1, 1, 1, 2, 2, 2, 3], vec![3, 3, 4, 4, 4, 5, 5], vec![5, 6, 6, 6, 7, 7, 7]]
        );
        assert_eq!(gamma_tableau(1, 3).unwrap().rows(), vec![vec![1, 2, 3]]);
    }

    #[test]
    fn canonical_word_examples() {
        let w = canonical_word(&ct(7, &[1, 3, 5]));
        assert_eq!(w.letters(), &[2, 4, 3]);
        let w = canonical_word(&ct(7, &[3, 5, 7]));
        assert_eq!(w.letters(), &[2, 1, 4, 3, 2, 6, 5, 4, 3]);
        assert_eq!(w.len(), 9);
        assert!(canonical_word(&ct(7, &[1, 2, 3])).is_empty());
    }

    #[test]
    fn word_evaluation_convention() {
        let p = evaluate_letters(7, &[2, 4, 3]);
        assert_eq!(p.one_line(), &[1, 3, 5, 2, 4, 6, 7]);
        assert!(ReducedWord::new(4, vec![1, 1]).is_err());
        assert!(ReducedWord::new(4, vec![4]).is_err());
    }

    #[test]
    fn coxeter_examples() {
        let w = minimal_schubert(3, 7).unwrap();
        let v = minimal_richardson_v(3, 7).unwrap();
        assert!(is_coxeter_quotient(&w, &v).unwrap());
        let w = minimal_schubert(3, 8).unwrap();
        let v = minimal_richardson_v(3, 8).unwrap();
        assert!(is_coxeter_quotient(&w, &v).unwrap());
        assert!(!is_coxeter_quotient(&w, &w).unwrap());
        assert!(is_coxeter_quotient(&v, &w).is_err());
    }

    /// `c = C^{-1} (λ_j - λ_{j+1})` with the Cartan matrix of `A_{n-1}`.
    fn cartan_height(eps: &[i64]) -> BigRational {
        let k = eps.len() - 1;
        let mut a: Vec<Vec<BigRational>> = (0..k)
            .map(|i| {
                let mut row: Vec<BigRational> = (0..k)
                    .map(|j| {
                        let v = if i == j {
                            2
                        } else if i.abs_diff(j) == 1 {
                            -1
                        } else {
                            0
                        };
                        BigRational::from_integer(v.into())
                    })
                    .collect();
                row.push(BigRational::from_integer((eps[i] - eps[i + 1]).into()));
                row
            })
            .collect();
        for col in 0..k {
            let piv = (col..k).find(|&r| !a[r][col].is_zero()).unwrap();
            a.swap(col, piv);
            let p = a[col][col].clone();
            for x in a[col].iter_mut() {
                *x = &*x / &p;
            }
            let pivot = a[col].clone();
            for (r, row) in a.iter_mut().enumerate() {
                if r != col && !row[col].is_zero() {
                    let f = row[col].clone();
                    for (x, y) in row.iter_mut().zip(&pivot) {
                        *x = &*x - y * &f;
                    }
                }
            }
        }
        a.iter().map(|row| row[k].clone()).fold(BigRational::zero(), |s, x| s + x)
    }

    #[test]
    fn height_examples() {
        let v = ct(7, &[1, 3, 5]);
        assert_eq!(Weight::of_tuple(&v).alpha_coords(), vec![4, 1, 5, 2, 6, 3]);
        assert_eq!(restriction_height(&v), 21);
        let id = ColumnTuple::identity(3, 7).unwrap();
        let top = ColumnTuple::top(3, 7).unwrap();
        for t in [&id, &top, &v] {
            let h = restriction_height(t);
            assert_eq!(BigRational::from_integer(h.into()), cartan_height(Weight::of_tuple(t).eps()));
        }
        assert_eq!(restriction_height(&id), 42);
        assert_eq!(restriction_height(&top), -42);
    }

    #[test]
    fn alpha_round_trip() {
        let w = Weight::new(vec![4, -3, 4, -3, 4, -3, -3]).unwrap();
        assert_eq!(Weight::from_alpha(&w.alpha_coords()), w);
        assert!(Weight::new(vec![1, 1]).is_err());
    }

    #[test]
    fn descent_degrees() {
        assert_eq!(descent_degree(3, 7, 1).unwrap(), 3);
        assert_eq!(descent_degree(3, 7, 2).unwrap(), 2);
        assert_eq!(descent_v(3, 7, 2).unwrap(), ct(7, &[1, 3, 4]));
    }

    #[test]
    fn bruhat_permutations() {
        let e = Permutation::identity(4);
        let w0 = Permutation::new(vec![4, 3, 2, 1]).unwrap();
        assert!(e.bruhat_leq(&w0));
        assert!(!w0.bruhat_leq(&e));
        assert_eq!(w0.length(), 6);
        assert!(BigRational::one() > BigRational::zero());
    }

    #[test]
    fn json_shapes() {
        let c = ct(7, &[1, 3, 5]);
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, r#"{"r":3,"n":7,"entries":[1,3,5]}"#);
        let back: ColumnTuple = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
        assert!(serde_json::from_str::<ColumnTuple>(r#"{"r":2,"n":7,"entries":[3,1]}"#).is_err());
        let w = Weight::of_tuple(&c);
        assert_eq!(serde_json::to_string(&w).unwrap(), r#"{"eps":[4,-3,4,-3,4,-3,-3]}"#);
    }

    fn coprime_pairs() -> impl Strategy<Value = (usize, usize)> {
        (1usize..=5, 2usize..=12).prop_filter("coprime, r < n", |(r, n)| r < n && r.gcd(n) == 1)
    }

    fn tuple_strategy() -> impl Strategy<Value = ColumnTuple> {
        (2usize..=10)
            .prop_flat_map(|n| (Just(n), proptest::sample::subsequence((1..=n).collect::<Vec<_>>(), 1..n)))
            .prop_map(|(n, e)| ColumnTuple::new(n, e).unwrap())
    }

    proptest! {
        #[test]
        fn minimal_schubert_is_least((r, n) in coprime_pairs()) {
            let w = minimal_schubert(r, n).unwrap();
            for (i, &a) in w.entries().iter().enumerate() {
                let i = i + 1;
                prop_assert!(a * r >= i * n);
                prop_assert!((a - 1) * r < i * n);
            }
        }

        #[test]
        fn gamma_properties((r, n) in coprime_pairs()) {
            let g = gamma_tableau(r, n).unwrap();
            prop_assert!(g.is_semistandard());
            prop_assert!(g.content().counts().iter().all(|&c| c == r));
            prop_assert_eq!(g.columns().first().unwrap(), &minimal_richardson_v(r, n).unwrap());
            prop_assert_eq!(g.columns().last().unwrap(), &minimal_schubert(r, n).unwrap());
        }

        #[test]
        fn coxeter_and_dimension((r, n) in coprime_pairs()) {
            let w = minimal_schubert(r, n).unwrap();
            let v = minimal_richardson_v(r, n).unwrap();
            prop_assert!(is_coxeter_quotient(&w, &v).unwrap());
            prop_assert_eq!(w.length(), n - 1 + v.length());
            let wp = w.to_permutation();
            let vp = v.to_permutation();
            let c = wp.compose(&vp.inverse());
            prop_assert_eq!(wp.length(), c.length() + vp.length());
        }

        #[test]
        fn canonical_word_round_trip(c in tuple_strategy()) {
            let w = canonical_word(&c);
            prop_assert_eq!(w.len(), c.length());
            let p = w.evaluate();
            prop_assert_eq!(p.length(), w.len());
            prop_assert_eq!(p.grassmannian_tuple(c.r()).unwrap(), c.clone());
            prop_assert_eq!(p, c.to_permutation());
        }

        #[test]
        fn height_matches_cartan_oracle(c in tuple_strategy()) {
            let w = Weight::of_tuple(&c);
            prop_assert_eq!(BigRational::from_integer(w.height().into()), cartan_height(w.eps()));
            prop_assert_eq!(Weight::from_alpha(&w.alpha_coords()), w);
        }

        #[test]
        fn bruhat_tuple_matches_permutation(a in tuple_strategy(), b in tuple_strategy()) {
            if a.r() == b.r() && a.n() == b.n() {
                prop_assert_eq!(a.leq(&b), a.to_permutation().bruhat_leq(&b.to_permutation()));
            }
        }
    }
}
