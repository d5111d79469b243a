//! Degree-one generation of the torus-invariant ring of `G(2, n)`, `n` odd.
//!
//! An invariant of degree `m` is a `2 x mn` tableau in which every value
//! occurs `2m` times. [`factorize`] writes it as a combination of products
//! of degree-one invariants by repeatedly extracting the subtableau `μ` of
//! columns `1, m+1, 2m+1, ...`, repairing it with column exchanges when it is
//! not itself invariant, and recursing on everything smaller.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::linalg::{Echelon, SparseRow};
use crate::pluecker::{restrict_schubert, straighten, tableau_to_poly, PlueckerPoly};
use crate::tableau::{deglex_compare, enumerate_invariants, Tableau};
use crate::weyl::ColumnTuple;
use crate::Q;

/// Sign `σ` in `p_{pr} p_{qs} = p_{pq} p_{rs} + σ p_{ps} p_{qr}` for ordered pairs.
pub const EXCHANGE_SIGN: i32 = 1;

fn degree_of(t: &Tableau) -> Result<usize> {
    if t.r() != 2 {
        return Err(invalid(format!("expected a two-row tableau, got {} rows", t.r())));
    }
    if !t.d().is_multiple_of(t.n()) {
        return Err(invalid(format!("{} columns is not a multiple of n = {}", t.d(), t.n())));
    }
    Ok(t.d() / t.n())
}

fn check_invariant(t: &Tableau) -> Result<usize> {
    let m = degree_of(t)?;
    if !t.is_semistandard() {
        return Err(invalid(format!("{t} is not semistandard")));
    }
    if t.content().counts().iter().any(|&c| c != 2 * m) {
        return Err(invalid(format!("{t} is not invariant")));
    }
    Ok(m)
}

/// `μ` = columns `1, m+1, ...`; `ν` = the rest, both in source order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MuNuSplit {
    pub source: Tableau,
    pub m: usize,
    pub mu: Tableau,
    pub nu: Tableau,
}

pub fn split(t: &Tableau, m: usize) -> Result<MuNuSplit> {
    if m == 0 || t.r() != 2 || t.d() != m * t.n() {
        return Err(invalid(format!(
            "expected a 2 x {} tableau, got {} x {}",
            m * t.n(),
            t.r(),
            t.d()
        )));
    }
    let mu_idx: Vec<usize> = (0..t.d()).step_by(m).collect();
    let nu_idx: Vec<usize> = (0..t.d()).filter(|j| j % m != 0).collect();
    Ok(MuNuSplit {
        source: t.clone(),
        m,
        mu: t.select(&mu_idx),
        nu: t.select(&nu_idx),
    })
}

/// Values of odd multiplicity in `μ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DefectProfile {
    pub defects: Vec<usize>,
    pub multiplicity: Vec<usize>,
}

impl DefectProfile {
    pub fn is_empty(&self) -> bool {
        self.defects.is_empty()
    }
}

/// Computes the defects and checks presence, parity, alternation
/// (`3, 1, 3, 1, ...`) and that odd-indexed defects sit in both rows of `μ`.
pub fn defect_profile(s: &MuNuSplit) -> Result<DefectProfile> {
    let n = s.mu.n();
    let multiplicity = s.mu.content().counts().to_vec();
    let defects: Vec<usize> = (1..=n).filter(|&i| multiplicity[i - 1] % 2 == 1).collect();
    let fail = |what: &str| Err(Error::Violation(format!("{what} fails for {}", s.source)));
    if multiplicity.contains(&0) {
        return fail("presence of every value in μ");
    }
    if !defects.len().is_multiple_of(2) {
        return fail("even number of defects");
    }
    let rows = s.mu.rows();
    for (j, &i) in defects.iter().enumerate() {
        let want = if j % 2 == 0 { 3 } else { 1 };
        if multiplicity[i - 1] != want {
            return fail("alternation of defect multiplicities");
        }
        if j % 2 == 0 && !(rows[0].contains(&i) && rows[1].contains(&i)) {
            return fail("odd defects in both rows of μ");
        }
    }
    Ok(DefectProfile { defects, multiplicity })
}

/// First and last columns (1-based) of `i` in each row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowPositions {
    pub i: usize,
    pub first_bottom: Option<usize>,
    pub last_bottom: Option<usize>,
    pub first_top: Option<usize>,
    pub last_top: Option<usize>,
    /// `(f_i - 1) + (f^i - 1) ≡ 0 (mod m)` when both exist.
    pub congruence: Option<bool>,
}

pub fn mod_m_symmetry(t: &Tableau, i: usize) -> Result<RowPositions> {
    let m = degree_of(t)?;
    let rows = t.rows();
    let first = |row: &Vec<usize>| row.iter().position(|&x| x == i).map(|p| p + 1);
    let last = |row: &Vec<usize>| row.iter().rposition(|&x| x == i).map(|p| p + 1);
    let (ft, fb) = (first(&rows[0]), first(&rows[1]));
    let congruence = match (fb, ft) {
        (Some(b), Some(a)) => Some((b - 1 + a - 1) % m == 0),
        _ => None,
    };
    Ok(RowPositions {
        i,
        first_bottom: fb,
        last_bottom: last(&rows[1]),
        first_top: ft,
        last_top: last(&rows[0]),
        congruence,
    })
}

/// Columns between consecutive defects `i_j < i_{j+1}` (`j` odd), grouped in pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SBlock {
    /// 1-based odd index of the defect `i_j`.
    pub j: usize,
    pub lower: usize,
    pub upper: usize,
    /// 1-based source columns, two per pair.
    pub columns: Vec<usize>,
    /// `(top of first, top of second, bottom of first, bottom of second)`.
    pub pairs: Vec<[usize; 4]>,
    /// 0-based pairs with `S[k](3) = S[k](2)`.
    pub equalities: Vec<usize>,
}

/// Builds the blocks and checks adjacency `S[k](4) = S[k+1](3)` and
/// `S[k](3) >= S[k](2)`, recording the equality cases.
pub fn s_blocks(t: &Tableau, d: &DefectProfile) -> Result<Vec<SBlock>> {
    let m = degree_of(t)?;
    let rows = t.rows();
    let bottom = &rows[1];
    let mut out = Vec::new();
    for (jj, pair) in d.defects.chunks(2).enumerate() {
        let (lo, hi) = (pair[0], pair[1]);
        let last_lo = bottom
            .iter()
            .rposition(|&x| x == lo)
            .ok_or_else(|| Error::Violation(format!("{lo} missing from the bottom row of {t}")))?
            + 1;
        let first_hi = bottom
            .iter()
            .position(|&x| x == hi)
            .ok_or_else(|| Error::Violation(format!("{hi} missing from the bottom row of {t}")))?
            + 1;
        let block_lo = (last_lo - 1) / m + 1;
        let block_hi = (first_hi - 1) / m + 1;
        if block_lo > block_hi {
            return Err(Error::Violation(format!(
                "defect {hi} ends before {lo} in {t}"
            )));
        }
        let mut columns = Vec::new();
        for b in block_lo..block_hi {
            columns.push((b - 1) * m + 1);
            columns.push(b * m);
        }
        columns.push((block_hi - 1) * m + 1);
        columns.push(first_hi);
        if columns.windows(2).step_by(2).any(|w| w[0] == w[1]) {
            return Err(Error::Unsupported(format!(
                "block for defects {lo}, {hi} of {t} pairs a column with itself"
            )));
        }
        let pairs: Vec<[usize; 4]> = columns
            .chunks(2)
            .map(|c| [t.entry(1, c[0]), t.entry(1, c[1]), t.entry(2, c[0]), t.entry(2, c[1])])
            .collect();
        for k in 0..pairs.len().saturating_sub(1) {
            if pairs[k][3] != pairs[k + 1][2] {
                return Err(Error::Violation(format!(
                    "adjacency S[{k}](4) = S[{}](3) fails in block {} of {t}",
                    k + 1,
                    2 * jj + 1
                )));
            }
        }
        let mut equalities = Vec::new();
        for (k, p) in pairs.iter().enumerate() {
            if p[2] < p[1] {
                return Err(Error::Violation(format!(
                    "S[{k}](3) >= S[{k}](2) fails in block {} of {t}",
                    2 * jj + 1
                )));
            }
            if p[2] == p[1] {
                equalities.push(k);
            }
        }
        out.push(SBlock {
            j: 2 * jj + 1,
            lower: lo,
            upper: hi,
            columns,
            pairs,
            equalities,
        });
    }
    Ok(out)
}

/// Exchange applied to one pair of columns `([p, r], [q, s])`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PairOp {
    /// `[p, s], [q, r]`
    Bottom,
    /// `[q, r], [p, s]`
    Top,
    /// `[q, s], [p, r]`
    Column,
    None,
}

impl PairOp {
    const ALL: [PairOp; 4] = [PairOp::Bottom, PairOp::Top, PairOp::Column, PairOp::None];

    fn apply(self, [p, q, r, s]: [usize; 4]) -> ([usize; 2], [usize; 2]) {
        match self {
            PairOp::Bottom => ([p, s], [q, r]),
            PairOp::Top => ([q, r], [p, s]),
            PairOp::Column => ([q, s], [p, r]),
            PairOp::None => ([p, r], [q, s]),
        }
    }

    /// Changes the column multiset.
    fn exchanges(self) -> bool {
        matches!(self, PairOp::Bottom | PairOp::Top)
    }
}

/// Which rule produced the exchanges for one block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SwapBranch {
    /// No equalities: exchange bottoms throughout.
    Case1,
    /// Odd number of equalities.
    Case2Odd,
    /// Even, positive number of equalities.
    Case2Even,
    /// The scheme failed and an exhaustive search found exchanges.
    Search,
}

impl SwapBranch {
    pub fn name(self) -> &'static str {
        match self {
            SwapBranch::Case1 => "case1",
            SwapBranch::Case2Odd => "case2_odd",
            SwapBranch::Case2Even => "case2_even",
            SwapBranch::Search => "search",
        }
    }
}

fn scheme(block: &SBlock) -> (Vec<PairOp>, SwapBranch) {
    let len = block.pairs.len();
    let eq = &block.equalities;
    if eq.is_empty() {
        return (vec![PairOp::Bottom; len], SwapBranch::Case1);
    }
    let (start, seq, branch) = if eq.len() % 2 == 1 {
        let start = block.pairs.iter().position(|p| p[0] == block.lower).unwrap_or(0);
        (start, [PairOp::Top, PairOp::Column, PairOp::Bottom, PairOp::None], SwapBranch::Case2Odd)
    } else {
        (0, [PairOp::Bottom, PairOp::None, PairOp::Top, PairOp::Column], SwapBranch::Case2Even)
    };
    let mut ops = vec![PairOp::None; len];
    let mut cur = start;
    for (idx, &k) in eq.iter().enumerate() {
        let run = seq[(2 * idx) % 4];
        let mark = seq[(2 * idx + 1) % 4];
        for op in ops.iter_mut().take(k).skip(cur) {
            *op = run;
        }
        ops[k] = mark;
        cur = k + 1;
    }
    for op in ops.iter_mut().skip(cur) {
        *op = PairOp::Bottom;
    }
    (ops, branch)
}

/// `p_t = p_{μ'} p_{ν'} + corrections`, where `μ'` is invariant.
#[derive(Clone, Debug, Serialize)]
pub struct SwapRewrite {
    pub original: Tableau,
    /// Columns of `t'` in position order (not sorted).
    pub rewritten: Vec<ColumnTuple>,
    pub mu_prime: Tableau,
    pub nu_prime: Tableau,
    /// Straightened; every monomial is deglex-smaller than `original`.
    pub corrections: PlueckerPoly,
    pub branches: Vec<SwapBranch>,
    pub exchange_sign: i32,
}

fn apply_ops(t: &Tableau, blocks: &[SBlock], ops: &[Vec<PairOp>]) -> Option<Vec<[usize; 2]>> {
    let mut cols: Vec<[usize; 2]> = t.columns().iter().map(|c| [c.entries()[0], c.entries()[1]]).collect();
    for (b, block_ops) in blocks.iter().zip(ops) {
        for (k, op) in block_ops.iter().enumerate() {
            let (a, c) = op.apply(b.pairs[k]);
            cols[b.columns[2 * k] - 1] = a;
            cols[b.columns[2 * k + 1] - 1] = c;
        }
    }
    cols.iter().all(|c| c[0] < c[1]).then_some(cols)
}

fn mu_is_invariant(cols: &[[usize; 2]], m: usize, n: usize) -> bool {
    let mut count = vec![0; n];
    for c in cols.iter().step_by(m) {
        count[c[0] - 1] += 1;
        count[c[1] - 1] += 1;
    }
    count.iter().all(|&x| x == 2)
}

fn search_ops(t: &Tableau, m: usize, blocks: &[SBlock]) -> Option<Vec<Vec<PairOp>>> {
    let total: usize = blocks.iter().map(|b| b.pairs.len()).sum();
    if total > 10 {
        return None;
    }
    let mut flat = vec![PairOp::None; total];
    let mut best: Option<Vec<Vec<PairOp>>> = None;
    let mut exhausted = false;
    while !exhausted {
        let mut ops = Vec::new();
        let mut off = 0;
        for b in blocks {
            ops.push(flat[off..off + b.pairs.len()].to_vec());
            off += b.pairs.len();
        }
        if let Some(cols) = apply_ops(t, blocks, &ops) {
            if mu_is_invariant(&cols, m, t.n()) && corrections_for(t, blocks, &ops).is_ok() {
                best = Some(ops);
                break;
            }
        }
        exhausted = true;
        for slot in flat.iter_mut() {
            let i = PairOp::ALL.iter().position(|o| o == slot).expect("known op");
            if i + 1 < PairOp::ALL.len() {
                *slot = PairOp::ALL[i + 1];
                exhausted = false;
                break;
            }
            *slot = PairOp::ALL[0];
        }
    }
    best
}

fn pair_poly(a: [usize; 2], b: [usize; 2], n: usize) -> Option<(i32, Vec<ColumnTuple>)> {
    let mut sign = 1;
    let mut cols = Vec::with_capacity(2);
    for [x, y] in [a, b] {
        if x == y {
            return None;
        }
        if x > y {
            sign = -sign;
        }
        cols.push(ColumnTuple::new_unchecked(n, vec![x.min(y), x.max(y)]));
    }
    Some((sign, cols))
}

/// A signed pair of columns, or `None` when the slot contributes nothing.
type SignedPair = Option<(i32, Vec<ColumnTuple>)>;

/// `p_t - p_{t'}` expanded with the exchange relation over every nonempty
/// subset of exchanged pairs, then straightened.
fn corrections_for(t: &Tableau, blocks: &[SBlock], ops: &[Vec<PairOp>]) -> Result<PlueckerPoly> {
    let n = t.n();
    let mut touched = vec![false; t.d()];
    // Each exchanged pair contributes either its new pair or the correction p_{pq} p_{rs}.
    let mut factors: Vec<[SignedPair; 2]> = Vec::new();
    for (b, block_ops) in blocks.iter().zip(ops) {
        for (k, op) in block_ops.iter().enumerate() {
            let (c1, c2) = (b.columns[2 * k] - 1, b.columns[2 * k + 1] - 1);
            if !op.exchanges() {
                continue;
            }
            touched[c1] = true;
            touched[c2] = true;
            let [p, q, r, s] = b.pairs[k];
            let (na, nb) = op.apply(b.pairs[k]);
            let kept = pair_poly(na, nb, n);
            let corr = pair_poly([p, q], [r, s], n).map(|(sg, cols)| (sg * EXCHANGE_SIGN, cols));
            factors.push([kept, corr]);
        }
    }
    let fixed: Vec<ColumnTuple> = t
        .columns()
        .iter()
        .enumerate()
        .filter(|(j, _)| !touched[*j])
        .map(|(_, c)| c.clone())
        .collect();
    let mut acc = PlueckerPoly::zero(2, n);
    let f = factors.len();
    if f > 20 {
        return Err(Error::Unsupported(format!("{f} exchanged pairs")));
    }
    for subset in 1u32..(1u32 << f) {
        let mut sign = 1;
        let mut cols = fixed.clone();
        let mut zero = false;
        for (k, fac) in factors.iter().enumerate() {
            match &fac[(subset >> k & 1) as usize] {
                Some((sg, cs)) => {
                    sign *= sg;
                    cols.extend(cs.iter().cloned());
                }
                None => zero = true,
            }
        }
        if !zero {
            acc = &acc + &PlueckerPoly::from_monomial(2, n, cols, Q::from_integer(sign.into()))?;
        }
    }
    let acc = straighten(&acc);
    for m in acc.terms().keys() {
        let tm = Tableau::new(2, n, m.clone())?;
        if deglex_compare(&tm, t) != std::cmp::Ordering::Less {
            return Err(Error::Violation(format!("correction {tm} is not below {t}")));
        }
    }
    Ok(acc)
}

/// Repairs `μ` by exchanges inside each block.
pub fn swap_rewrite(t: &Tableau) -> Result<SwapRewrite> {
    let m = check_invariant(t)?;
    let n = t.n();
    let s = split(t, m)?;
    let d = defect_profile(&s)?;
    if d.is_empty() {
        return Ok(SwapRewrite {
            original: t.clone(),
            rewritten: t.columns().to_vec(),
            mu_prime: s.mu,
            nu_prime: s.nu,
            corrections: PlueckerPoly::zero(2, n),
            branches: Vec::new(),
            exchange_sign: EXCHANGE_SIGN,
        });
    }
    let blocks = s_blocks(t, &d)?;
    let (mut ops, mut branches): (Vec<Vec<PairOp>>, Vec<SwapBranch>) = blocks.iter().map(scheme).unzip();
    let planned = apply_ops(t, &blocks, &ops).filter(|cols| mu_is_invariant(cols, m, n));
    let corrections = match planned.as_ref().map(|_| corrections_for(t, &blocks, &ops)) {
        Some(Ok(c)) => c,
        _ => {
            ops = search_ops(t, m, &blocks)
                .ok_or_else(|| Error::Internal(format!("no exchange pattern repairs {t}")))?;
            branches = vec![SwapBranch::Search; blocks.len()];
            corrections_for(t, &blocks, &ops)?
        }
    };
    let cols = apply_ops(t, &blocks, &ops).ok_or_else(|| Error::Internal("degenerate column".into()))?;
    let rewritten: Vec<ColumnTuple> = cols.iter().map(|c| ColumnTuple::new_unchecked(n, c.to_vec())).collect();
    let tp = Tableau::new(2, n, rewritten.clone())?;
    let mu_idx: Vec<usize> = (0..t.d()).step_by(m).collect();
    let nu_idx: Vec<usize> = (0..t.d()).filter(|j| j % m != 0).collect();
    let rw = SwapRewrite {
        original: t.clone(),
        mu_prime: tp.select(&mu_idx),
        nu_prime: tp.select(&nu_idx),
        rewritten,
        corrections,
        branches,
        exchange_sign: EXCHANGE_SIGN,
    };
    if !rw.mu_prime.is_zero_weight() {
        return Err(Error::Internal(format!("μ' of {t} is not invariant")));
    }
    let back = straighten(&(&PlueckerPoly::from_monomial(2, n, rw.rewritten.clone(), Q::one())? + &rw.corrections));
    if back != tableau_to_poly(t) {
        return Err(Error::Violation(format!("re-expansion of {t} differs: {back}")));
    }
    Ok(rw)
}

/// Combination of products of degree-one invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    n: usize,
    terms: BTreeMap<Vec<Vec<ColumnTuple>>, Q>,
}

impl Factorization {
    fn zero(n: usize) -> Self {
        Factorization {
            n,
            terms: BTreeMap::new(),
        }
    }

    fn add(&mut self, mut factors: Vec<Vec<ColumnTuple>>, c: Q) {
        if c.is_zero() {
            return;
        }
        factors.sort();
        let e = self.terms.entry(factors).or_insert_with(Q::zero);
        *e += c;
    }

    fn add_scaled(&mut self, other: &Factorization, c: &Q) {
        for (f, x) in &other.terms {
            self.add(f.clone(), x * c);
        }
        self.terms.retain(|_, x| !x.is_zero());
    }

    fn times(&self, g: &[ColumnTuple], c: &Q) -> Factorization {
        let mut out = Factorization::zero(self.n);
        for (f, x) in &self.terms {
            let mut f = f.clone();
            f.push(g.to_vec());
            out.add(f, x * c);
        }
        out
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// `(coefficient, factors)` pairs.
    pub fn terms(&self) -> Vec<(Q, Vec<Tableau>)> {
        self.terms
            .iter()
            .map(|(fs, c)| {
                let ts = fs
                    .iter()
                    .map(|cols| Tableau::new(2, self.n, cols.clone()).expect("stored tableau"))
                    .collect();
                (c.clone(), ts)
            })
            .collect()
    }

    /// Straightened sum of the products.
    pub fn expand(&self) -> PlueckerPoly {
        let mut acc = PlueckerPoly::zero(2, self.n);
        for (fs, c) in &self.terms {
            let cols: Vec<ColumnTuple> = fs.iter().flatten().cloned().collect();
            acc = &acc + &PlueckerPoly::from_monomial(2, self.n, cols, c.clone()).expect("shape");
        }
        straighten(&acc)
    }
}

/// Memoized [`factorize`].
#[derive(Default)]
pub struct Factorizer {
    memo: HashMap<Tableau, Factorization>,
    pub branch_counts: BTreeMap<SwapBranch, usize>,
    pub max_depth: usize,
}

impl Factorizer {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn factorize(&mut self, t: &Tableau) -> Result<Factorization> {
        self.factorize_at(t, 0)
    }

    fn factorize_at(&mut self, t: &Tableau, depth: usize) -> Result<Factorization> {
        if let Some(hit) = self.memo.get(t) {
            return Ok(hit.clone());
        }
        self.max_depth = self.max_depth.max(depth);
        let m = check_invariant(t)?;
        let n = t.n();
        let mut out = Factorization::zero(n);
        if m <= 1 {
            let factors = if m == 1 { vec![t.columns().to_vec()] } else { Vec::new() };
            out.add(factors, Q::one());
            self.memo.insert(t.clone(), out.clone());
            return Ok(out);
        }
        let rw = swap_rewrite(t)?;
        for b in &rw.branches {
            *self.branch_counts.entry(*b).or_insert(0) += 1;
        }
        let mu = straighten(&tableau_to_poly(&rw.mu_prime));
        let nu = straighten(&tableau_to_poly(&rw.nu_prime));
        for (nu_t, b) in nu.tableaux() {
            let sub = self.factorize_at(&nu_t, depth + 1)?;
            for (mu_cols, a) in mu.terms() {
                out.add_scaled(&sub.times(mu_cols, a), &b);
            }
        }
        for (tau, c) in rw.corrections.tableaux() {
            if deglex_compare(&tau, t) != std::cmp::Ordering::Less {
                return Err(Error::Internal(format!("recursion on {tau} does not decrease from {t}")));
            }
            let sub = self.factorize_at(&tau, depth + 1)?;
            out.add_scaled(&sub, &c);
        }
        self.memo.insert(t.clone(), out.clone());
        Ok(out)
    }
}

/// Expresses `p_t` through degree-one invariants.
pub fn factorize(t: &Tableau) -> Result<Factorization> {
    Factorizer::new().factorize(t)
}

/// Columns `j, j+m, j+2m, ...` for `j = 1..m`.
pub fn shifted_selections(t: &Tableau) -> Result<Vec<Tableau>> {
    let m = degree_of(t)?;
    Ok((0..m)
        .map(|j| {
            let idx: Vec<usize> = (j..t.d()).step_by(m).collect();
            t.select(&idx)
        })
        .collect())
}

/// Degree-`m` invariants of `G(2, n)`.
pub fn invariants(n: usize, m: usize) -> Result<Vec<Tableau>> {
    let w = ColumnTuple::top(2, n)?;
    let v = ColumnTuple::identity(2, n)?;
    Ok(enumerate_invariants(2, n, m, &w, &v))
}

/// A failed check, with the tableau that fails it.
#[derive(Clone, Debug, Serialize)]
pub struct Falsifier {
    pub check: String,
    pub tableau: Tableau,
    pub detail: String,
}

/// Per-check pass counts over a family of invariants.
#[derive(Clone, Debug, Serialize)]
pub struct FamilyReport {
    pub n: usize,
    pub m: usize,
    pub family_size: usize,
    pub checked: usize,
    pub sampled: bool,
    pub defected: usize,
    pub passes: BTreeMap<String, usize>,
    pub equality_blocks: usize,
    pub branches: BTreeMap<String, usize>,
    pub falsifiers: Vec<Falsifier>,
    pub passed: bool,
}

const CHECKS: [&str; 6] = [
    "defect_profile",
    "mod_m_symmetry",
    "s_blocks",
    "swap_rewrite",
    "factorize",
    "reexpansion",
];

struct TableauOutcome {
    defected: bool,
    equalities: usize,
    passes: Vec<&'static str>,
    falsifiers: Vec<Falsifier>,
}

fn check_one(t: &Tableau, m: usize) -> TableauOutcome {
    let mut o = TableauOutcome {
        defected: false,
        equalities: 0,
        passes: Vec::new(),
        falsifiers: Vec::new(),
    };
    let fail = |o: &mut TableauOutcome, check: &str, detail: String| {
        o.falsifiers.push(Falsifier {
            check: check.into(),
            tableau: t.clone(),
            detail,
        })
    };
    let split = match split(t, m) {
        Ok(s) => s,
        Err(e) => {
            fail(&mut o, "split", e.to_string());
            return o;
        }
    };
    match defect_profile(&split) {
        Ok(d) => {
            o.passes.push("defect_profile");
            o.defected = !d.is_empty();
            match s_blocks(t, &d) {
                Ok(bs) => {
                    o.passes.push("s_blocks");
                    o.equalities = bs.iter().map(|b| b.equalities.len()).sum();
                }
                Err(e) => fail(&mut o, "s_blocks", e.to_string()),
            }
        }
        Err(e) => fail(&mut o, "defect_profile", e.to_string()),
    }
    let sym = (1..=t.n()).all(|i| mod_m_symmetry(t, i).map(|p| p.congruence != Some(false)).unwrap_or(false));
    if sym {
        o.passes.push("mod_m_symmetry");
    } else {
        fail(&mut o, "mod_m_symmetry", "congruence fails".into());
    }
    match swap_rewrite(t) {
        Ok(_) => o.passes.push("swap_rewrite"),
        Err(e) => fail(&mut o, "swap_rewrite", e.to_string()),
    }
    o
}

/// Runs every check on the degree-`m` family of `G(2, n)`; with `sample =
/// Some((k, seed))` only `k` tableaux drawn without replacement.
pub fn family_check(n: usize, m: usize, sample: Option<(usize, u64)>) -> Result<FamilyReport> {
    if n.is_multiple_of(2) {
        return Err(Error::Unsupported(format!("n = {n} is even")));
    }
    let family = invariants(n, m)?;
    let mut chosen: Vec<Tableau> = family.clone();
    let sampled = match sample {
        Some((k, seed)) if k < family.len() => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            chosen.shuffle(&mut rng);
            chosen.truncate(k);
            chosen.sort_by(deglex_compare);
            true
        }
        _ => false,
    };
    let outcomes: Vec<TableauOutcome> = chosen.par_iter().map(|t| check_one(t, m)).collect();
    let mut passes: BTreeMap<String, usize> = CHECKS.iter().map(|c| (c.to_string(), 0)).collect();
    let mut falsifiers = Vec::new();
    let mut defected = 0;
    let mut equality_blocks = 0;
    for o in outcomes {
        defected += o.defected as usize;
        equality_blocks += (o.equalities > 0) as usize;
        for p in o.passes {
            *passes.get_mut(p).expect("known check") += 1;
        }
        falsifiers.extend(o.falsifiers);
    }
    let mut fz = Factorizer::new();
    for t in &chosen {
        match fz.factorize(t) {
            Ok(f) => {
                *passes.get_mut("factorize").expect("known check") += 1;
                if f.expand() == tableau_to_poly(t) {
                    *passes.get_mut("reexpansion").expect("known check") += 1;
                } else {
                    falsifiers.push(Falsifier {
                        check: "reexpansion".into(),
                        tableau: t.clone(),
                        detail: "factorization does not expand to p_t".into(),
                    });
                }
            }
            Err(e) => falsifiers.push(Falsifier {
                check: "factorize".into(),
                tableau: t.clone(),
                detail: e.to_string(),
            }),
        }
    }
    let branches = fz
        .branch_counts
        .iter()
        .map(|(b, c)| (b.name().to_string(), *c))
        .collect();
    let checked = chosen.len();
    let passed = falsifiers.is_empty() && passes.values().all(|&p| p == checked);
    Ok(FamilyReport {
        n,
        m,
        family_size: family.len(),
        checked,
        sampled,
        defected,
        passes,
        equality_blocks,
        branches,
        falsifiers,
        passed,
    })
}

/// Rank comparison for `R(1)^{⊗m} → R(m)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurjectivityReport {
    pub n: usize,
    pub m: usize,
    pub dim_r1: usize,
    pub products: usize,
    pub dim_products: usize,
    pub dim_rm: usize,
    pub equal: bool,
}

/// On the whole Grassmannian.
pub fn surjectivity_oracle(n: usize, m: usize) -> Result<SurjectivityReport> {
    surjectivity_oracle_on(n, m, &ColumnTuple::top(2, n)?, &ColumnTuple::identity(2, n)?)
}

/// On the Richardson variety `X^v_w` of `G(2, n)`.
pub fn surjectivity_oracle_on(n: usize, m: usize, w: &ColumnTuple, v: &ColumnTuple) -> Result<SurjectivityReport> {
    let r1 = enumerate_invariants(2, n, 1, w, v);
    let rm = enumerate_invariants(2, n, m, w, v);
    let index: HashMap<Vec<ColumnTuple>, usize> = rm
        .iter()
        .enumerate()
        .map(|(i, t)| (t.columns().to_vec(), i))
        .collect();
    let mut combos = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, k: usize, len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..len {
            cur.push(i);
            rec(i, k, len, cur, out);
            cur.pop();
        }
    }
    rec(0, m, r1.len(), &mut cur, &mut combos);
    let rows: Vec<Result<SparseRow>> = combos
        .par_iter()
        .map(|combo| {
            let cols: Vec<ColumnTuple> = combo.iter().flat_map(|&i| r1[i].columns().iter().cloned()).collect();
            let p = restrict_schubert(&straighten(&PlueckerPoly::from_monomial(2, n, cols, Q::one())?), w, v);
            let mut row = SparseRow::new();
            for (mono, c) in p.terms() {
                let i = index
                    .get(mono)
                    .ok_or_else(|| Error::Internal(format!("product leaves R({m}): {mono:?}")))?;
                row.insert(*i, c.clone());
            }
            Ok(row)
        })
        .collect();
    let mut ech = Echelon::new();
    for row in rows {
        ech.insert(row?);
        if ech.rank() == rm.len() {
            break;
        }
    }
    Ok(SurjectivityReport {
        n,
        m,
        dim_r1: r1.len(),
        products: combos.len(),
        dim_products: ech.rank(),
        dim_rm: rm.len(),
        equal: ech.rank() == rm.len(),
    })
}
