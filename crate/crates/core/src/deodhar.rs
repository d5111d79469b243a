//! Subexpressions of reduced words, Deodhar components and restriction of
//! invariant sections to them.

use std::collections::{BTreeMap, HashMap};

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::linalg::{Echelon, SparseRow};
use crate::mpoly::{det, MPoly};
use crate::tableau::{enumerate_invariants, Tableau};
use crate::weyl::{canonical_word, minimal_schubert, ColumnTuple, Permutation, ReducedWord};
use crate::Q;

/// Choice along a reduced word: `true` keeps the letter, `false` replaces it by 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SubexpressionMask {
    word: ReducedWord,
    keep: Vec<bool>,
}

impl SubexpressionMask {
    pub fn new(word: ReducedWord, keep: Vec<bool>) -> Result<Self> {
        if keep.len() != word.len() {
            return Err(invalid(format!("mask of length {} for a word of length {}", keep.len(), word.len())));
        }
        Ok(SubexpressionMask { word, keep })
    }

    /// Keep exactly the 1-based positions listed.
    pub fn from_positions(word: ReducedWord, positions: &[usize]) -> Result<Self> {
        let mut keep = vec![false; word.len()];
        for &p in positions {
            if p < 1 || p > word.len() {
                return Err(invalid(format!("position {p} outside the word")));
            }
            keep[p - 1] = true;
        }
        Ok(SubexpressionMask { word, keep })
    }

    pub fn word(&self) -> &ReducedWord {
        &self.word
    }

    pub fn keep(&self) -> &[bool] {
        &self.keep
    }

    /// 1-based positions kept.
    pub fn kept_positions(&self) -> Vec<usize> {
        (1..=self.keep.len()).filter(|&p| self.keep[p - 1]).collect()
    }

    /// Prefix products `v_(0), ..., v_(l)`.
    pub fn prefixes(&self) -> Vec<Permutation> {
        let mut cur = Permutation::identity(self.word.n());
        let mut out = vec![cur.clone()];
        for (&i, &k) in self.word.letters().iter().zip(&self.keep) {
            if k {
                cur = cur.times_simple(i);
            }
            out.push(cur.clone());
        }
        out
    }

    pub fn product(&self) -> Permutation {
        self.prefixes().pop().expect("nonempty prefix list")
    }

    /// Mask as a string of letters, `1` for skipped positions.
    pub fn display(&self) -> String {
        self.word
            .letters()
            .iter()
            .zip(&self.keep)
            .map(|(i, k)| if *k { format!("s{i}") } else { "1".to_string() })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SlotClass {
    /// Length goes up.
    Circle,
    /// Letter skipped, a free nonzero parameter.
    Square,
    /// Length goes down, an affine parameter.
    Bullet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub classes: Vec<SlotClass>,
    pub j_circle: Vec<usize>,
    pub j_square: Vec<usize>,
    pub j_bullet: Vec<usize>,
    pub distinguished: bool,
    pub positive: bool,
    pub product: Permutation,
}

pub fn classify(mask: &SubexpressionMask) -> Classification {
    let pre = mask.prefixes();
    let letters = mask.word.letters();
    let mut classes = Vec::with_capacity(letters.len());
    let mut distinguished = true;
    for k in 1..pre.len() {
        let (a, b) = (&pre[k - 1], &pre[k]);
        let c = match a.length().cmp(&b.length()) {
            std::cmp::Ordering::Less => SlotClass::Circle,
            std::cmp::Ordering::Equal => SlotClass::Square,
            std::cmp::Ordering::Greater => SlotClass::Bullet,
        };
        if !mask.keep[k - 1] && a.has_right_descent(letters[k - 1]) {
            distinguished = false;
        }
        classes.push(c);
    }
    let pick = |want: SlotClass| -> Vec<usize> {
        classes
            .iter()
            .enumerate()
            .filter(|(_, c)| **c == want)
            .map(|(i, _)| i + 1)
            .collect()
    };
    let j_bullet = pick(SlotClass::Bullet);
    Classification {
        j_circle: pick(SlotClass::Circle),
        j_square: pick(SlotClass::Square),
        positive: distinguished && j_bullet.is_empty(),
        j_bullet,
        distinguished,
        product: pre.last().expect("prefixes").clone(),
        classes,
    }
}

/// The positive distinguished subexpression for `v`, chosen greedily from the right.
pub fn find_pds(word: &ReducedWord, v: &Permutation) -> Result<SubexpressionMask> {
    if v.n() != word.n() {
        return Err(invalid("permutation and word live in different S_n"));
    }
    if !v.bruhat_leq(&word.evaluate()) {
        return Err(Error::NotFound(format!("{v} is not below {}", word.evaluate())));
    }
    let mut cur = v.clone();
    let mut keep = vec![false; word.len()];
    for (pos, &i) in word.letters().iter().enumerate().rev() {
        if cur.has_right_descent(i) {
            keep[pos] = true;
            cur = cur.times_simple(i);
        }
    }
    if cur != Permutation::identity(v.n()) {
        return Err(Error::NotFound(format!("no subexpression of {word} evaluates to {v}")));
    }
    Ok(SubexpressionMask {
        word: word.clone(),
        keep,
    })
}

/// All distinguished masks with product `v` (exhaustive over `2^l` masks).
pub fn enumerate_distinguished(word: &ReducedWord, v: &Permutation) -> Result<Vec<SubexpressionMask>> {
    let l = word.len();
    if l > 24 {
        return Err(Error::Unsupported(format!("exhaustive search over 2^{l} masks")));
    }
    let mut out = Vec::new();
    for bits in 0u32..(1u32 << l) {
        let keep: Vec<bool> = (0..l).map(|k| bits >> k & 1 == 1).collect();
        let mask = SubexpressionMask {
            word: word.clone(),
            keep,
        };
        let c = classify(&mask);
        if c.distinguished && &c.product == v {
            out.push(mask);
        }
    }
    Ok(out)
}

/// Ordered product over the word of `y_i(p_l)` (skipped), `ṡ_i` (length up)
/// and `x_i(m_l) ṡ_i` (length down). Variable `l-1` belongs to position `l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellMatrix {
    n: usize,
    entries: Vec<Vec<MPoly>>,
    labels: Vec<String>,
}

impl CellMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[Vec<MPoly>] {
        &self.entries
    }

    pub fn nvars(&self) -> usize {
        self.labels.len()
    }

    /// Parameter names, `p{l}` or `m{l}`; unused positions get `_{l}`.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Minor on 1-based `rows` and `cols`.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> MPoly {
        let sub: Vec<Vec<MPoly>> = rows
            .iter()
            .map(|&i| cols.iter().map(|&j| self.entries[i - 1][j - 1].clone()).collect())
            .collect();
        det(&sub, self.nvars())
    }

    pub fn determinant(&self) -> MPoly {
        det(&self.entries, self.nvars())
    }

    pub fn show(&self, p: &MPoly) -> String {
        p.display_with(&self.labels)
    }
}

pub fn cell_matrix(mask: &SubexpressionMask) -> Result<CellMatrix> {
    let c = classify(mask);
    if !c.distinguished {
        return Err(invalid(format!("mask {} is not distinguished", mask.display())));
    }
    let n = mask.word.n();
    let l = mask.word.len();
    let mut m: Vec<Vec<MPoly>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { MPoly::one(l) } else { MPoly::zero(l) }).collect())
        .collect();
    let mut labels = Vec::with_capacity(l);
    for (pos, (&i, class)) in mask.word.letters().iter().zip(&c.classes).enumerate() {
        let (a, b) = (i - 1, i);
        let param = MPoly::var(l, pos);
        match class {
            SlotClass::Square => {
                labels.push(format!("p{}", pos + 1));
                for row in m.iter_mut() {
                    let add = &row[b] * &param;
                    row[a] = &row[a] + &add;
                }
            }
            SlotClass::Circle => {
                labels.push(format!("_{}", pos + 1));
                apply_sdot(&mut m, a, b);
            }
            SlotClass::Bullet => {
                labels.push(format!("m{}", pos + 1));
                for row in m.iter_mut() {
                    let add = &row[a] * &param;
                    row[b] = &row[b] + &add;
                }
                apply_sdot(&mut m, a, b);
            }
        }
    }
    Ok(CellMatrix { n, entries: m, labels })
}

fn apply_sdot(m: &mut [Vec<MPoly>], a: usize, b: usize) {
    for row in m.iter_mut() {
        let old_a = row[a].clone();
        row[a] = row[b].clone();
        row[b] = -&old_a;
    }
}

/// Product of the minors `p_τ` (rows `τ`, columns `1..r`) over the columns of `t`.
pub fn restrict_section(t: &Tableau, mask: &SubexpressionMask) -> Result<MPoly> {
    let cm = cell_matrix(mask)?;
    restrict_on(&cm, t)
}

fn restrict_on(cm: &CellMatrix, t: &Tableau) -> Result<MPoly> {
    if t.n() != cm.n {
        return Err(invalid("tableau and matrix sizes differ"));
    }
    let cols: Vec<usize> = (1..=t.r()).collect();
    let mut cache: HashMap<&ColumnTuple, MPoly> = HashMap::new();
    let mut acc = MPoly::one(cm.nvars());
    for c in t.columns() {
        let v = cache.entry(c).or_insert_with(|| cm.minor(c.entries(), &cols));
        if v.is_zero() {
            return Ok(MPoly::zero(cm.nvars()));
        }
        acc = &acc * v;
    }
    Ok(acc)
}

/// Keep-masks that keep a suffix of the word whose product is the minimal
/// representative of its coset for `r`.
pub fn grassmannian_suffix_masks(word: &ReducedWord, r: usize) -> Vec<SubexpressionMask> {
    let l = word.len();
    (0..=l)
        .filter_map(|start| {
            let keep: Vec<bool> = (0..l).map(|k| k >= start).collect();
            let mask = SubexpressionMask {
                word: word.clone(),
                keep,
            };
            mask.product().is_grassmannian(r).then_some(mask)
        })
        .collect()
}

/// Rank of a family of polynomials as vectors over `Q`.
pub fn polynomial_rank(polys: &[MPoly]) -> usize {
    let mut index: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    let mut e = Echelon::new();
    for p in polys {
        let mut row = SparseRow::new();
        for (m, c) in p.terms() {
            let k = index.len();
            let col = *index.entry(m.clone()).or_insert(k);
            row.insert(col, c.clone());
        }
        e.insert(row);
    }
    e.rank()
}

/// Degree-one invariants on `X(w_{r,n})` restricted to the open cell of the
/// Richardson variety `X^v_{w_{r,n}}`, using the canonical word of `w_{r,n}`.
pub fn richardson_sections(r: usize, n: usize, v: &ColumnTuple) -> Result<Vec<(Tableau, MPoly)>> {
    let w = minimal_schubert(r, n)?;
    let word = canonical_word(&w);
    let mask = find_pds(&word, &v.to_permutation())?;
    let cm = cell_matrix(&mask)?;
    let inv = enumerate_invariants(r, n, 1, &w, &ColumnTuple::identity(r, n)?);
    inv.into_iter()
        .map(|t| {
            let s = restrict_on(&cm, &t)?;
            Ok((t, s))
        })
        .collect()
}

/// The reduced word `s2 s1 s4 s3 s6 s5 s2 s4 s3` of `w_{3,7}`.
pub fn g37_word() -> ReducedWord {
    ReducedWord::new(7, vec![2, 1, 4, 3, 6, 5, 2, 4, 3]).expect("reduced")
}

/// The four cells examined for `X(w_{3,7})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProbeCase {
    S2s4s3,
    S2s3,
    S4s3,
    S3,
}

impl ProbeCase {
    pub const ALL: [ProbeCase; 4] = [ProbeCase::S2s4s3, ProbeCase::S2s3, ProbeCase::S4s3, ProbeCase::S3];

    pub fn letters(self) -> &'static [usize] {
        match self {
            ProbeCase::S2s4s3 => &[2, 4, 3],
            ProbeCase::S2s3 => &[2, 3],
            ProbeCase::S4s3 => &[4, 3],
            ProbeCase::S3 => &[3],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ProbeCase::S2s4s3 => "s2s4s3",
            ProbeCase::S2s3 => "s2s3",
            ProbeCase::S4s3 => "s4s3",
            ProbeCase::S3 => "s3",
        }
    }

    pub fn v(self) -> Permutation {
        crate::weyl::evaluate_letters(7, self.letters())
    }

    /// Indices `i` with `y_i` nonzero on the cell.
    pub fn expected_nonvanishing(self) -> Vec<usize> {
        match self {
            ProbeCase::S2s4s3 => vec![1],
            ProbeCase::S2s3 => vec![1, 2],
            ProbeCase::S4s3 => vec![1, 3, 5],
            ProbeCase::S3 => vec![1, 2, 3, 4, 5, 6],
        }
    }
}

impl std::str::FromStr for ProbeCase {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ProbeCase::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| invalid(format!("unknown probe case {s}; expected s2s4s3, s2s3, s4s3 or s3")))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ProbeCheck {
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProbeReport {
    pub case: String,
    pub mask: String,
    pub kept_positions: Vec<usize>,
    pub sections: Vec<(usize, String)>,
    pub nonvanishing: Vec<usize>,
    pub expected_nonvanishing: Vec<usize>,
    pub unit: String,
    pub checks: Vec<ProbeCheck>,
    pub passed: bool,
}

fn monomial_gcd_all(polys: &[&MPoly]) -> Vec<u32> {
    let mut g: Option<Vec<u32>> = None;
    for p in polys {
        let e = p.monomial_gcd();
        g = Some(match g {
            None => e,
            Some(g) => g.iter().zip(&e).map(|(a, b)| *a.min(b)).collect(),
        });
    }
    g.unwrap_or_default()
}

/// Same scalar `c` with `got_i = c * want_i` for all `i`, and `c = ±1`.
fn proportional_family(got: &[MPoly], want: &[MPoly]) -> bool {
    let Some(c) = got.first().and_then(|g| g.proportional_to(&want[0])) else {
        return false;
    };
    let unit = c == Q::one() || c == -Q::one();
    unit && got.iter().zip(want).all(|(g, w)| *g == w.scale(&c))
}

/// Restrict `y_1..y_7` to the open cell for `case` and check the resulting structure.
pub fn quotient_probe(case: ProbeCase) -> Result<ProbeReport> {
    let word = g37_word();
    let mask = find_pds(&word, &case.v())?;
    let cm = cell_matrix(&mask)?;
    let l = word.len();
    let ys: Vec<MPoly> = (1..=7).map(|i| restrict_on(&cm, &crate::g37::y(i))).collect::<Result<_>>()?;
    let nonvanishing: Vec<usize> = (1..=7).filter(|&i| !ys[i - 1].is_zero()).collect();
    let expected = case.expected_nonvanishing();
    let nz: Vec<&MPoly> = ys.iter().filter(|p| !p.is_zero()).collect();
    let g = monomial_gcd_all(&nz);
    let reduced: Vec<MPoly> = ys
        .iter()
        .map(|p| p.div_monomial(&g).unwrap_or_else(|| MPoly::zero(l)))
        .collect();
    let y = |i: usize| &ys[i - 1];
    let red = |i: usize| reduced[i - 1].clone();
    let var = |pos: usize| MPoly::var(l, pos - 1);
    let mut checks = vec![ProbeCheck {
        name: "nonvanishing set".into(),
        passed: nonvanishing == expected,
    }];
    let homogeneous = nz.iter().all(|p| p.homogeneous_degree().is_some());
    checks.push(ProbeCheck {
        name: "sections homogeneous".into(),
        passed: homogeneous,
    });
    match case {
        ProbeCase::S2s4s3 => {
            let want = MPoly::monomial(vec![1, 4, 2, 5, 3, 6, 0, 0, 0], Q::one());
            checks.push(ProbeCheck {
                name: "y1 = ±p1 p2^4 p3^2 p4^5 p5^3 p6^6".into(),
                passed: *y(1) == want || *y(1) == -&want,
            });
        }
        ProbeCase::S2s3 => {
            checks.push(ProbeCheck {
                name: "y1, y2 algebraically independent".into(),
                passed: !y(1).is_zero() && !y(2).is_zero() && y(1).proportional_to(y(2)).is_none(),
            });
        }
        ProbeCase::S4s3 => {
            checks.push(ProbeCheck {
                name: "y1 y5 = y3^2".into(),
                passed: (&(y(1) * y(5)) - &(y(3) * y(3))).is_zero(),
            });
            let x = &var(1) + &var(7);
            let yy = var(1);
            checks.push(ProbeCheck {
                name: "(y1, y3, y5) = p (X^2, XY, Y^2), X = p1 + p7, Y = p1".into(),
                passed: proportional_family(
                    &[red(1), red(3), red(5)],
                    &[&x * &x, &x * &yy, &yy * &yy],
                ),
            });
        }
        ProbeCase::S3 => {
            let top = [y(1), y(3), y(5)];
            let bot = [y(2), y(4), y(6)];
            let mut rank_one = true;
            for a in 0..3 {
                for b in a + 1..3 {
                    if !(&(top[a] * bot[b]) - &(top[b] * bot[a])).is_zero() {
                        rank_one = false;
                    }
                }
            }
            checks.push(ProbeCheck {
                name: "2x2 minors of [[y1,y3,y5],[y2,y4,y6]] vanish".into(),
                passed: rank_one,
            });
            let x = &var(1) + &var(7);
            let yy = var(1);
            let a = var(3);
            let b = &var(3) + &var(8);
            let want = [
                &(&x * &x) * &a,
                &(&x * &yy) * &a,
                &(&yy * &yy) * &a,
                &(&x * &x) * &b,
                &(&x * &yy) * &b,
                &(&yy * &yy) * &b,
            ];
            checks.push(ProbeCheck {
                name: "(y2,y4,y6,y1,y3,y5) = p (X^2A, XYA, Y^2A, X^2B, XYB, Y^2B)".into(),
                passed: proportional_family(&[red(2), red(4), red(6), red(1), red(3), red(5)], &want),
            });
        }
    }
    let passed = checks.iter().all(|c| c.passed);
    Ok(ProbeReport {
        case: case.name().into(),
        mask: mask.display(),
        kept_positions: mask.kept_positions(),
        sections: (1..=7).map(|i| (i, cm.show(y(i)))).collect(),
        nonvanishing,
        expected_nonvanishing: expected,
        unit: cm.show(&MPoly::monomial(g, Q::one())),
        checks,
        passed,
    })
}

/// Every permutation below `w` in Bruhat order, as products of subwords.
pub fn lower_interval(word: &ReducedWord) -> Vec<Permutation> {
    let l = word.len();
    let mut set = std::collections::BTreeSet::new();
    for bits in 0u64..(1u64 << l) {
        let letters: Vec<usize> = (0..l).filter(|k| bits >> k & 1 == 1).map(|k| word.letters()[k]).collect();
        set.insert(crate::weyl::evaluate_letters(word.n(), &letters));
    }
    set.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::g37;
    use crate::weyl::restriction_height;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn classify_pds_for_v37() {
        let mask = SubexpressionMask::from_positions(g37_word(), &[7, 8, 9]).unwrap();
        let c = classify(&mask);
        assert_eq!(c.j_circle, vec![7, 8, 9]);
        assert_eq!(c.j_square, vec![1, 2, 3, 4, 5, 6]);
        assert!(c.j_bullet.is_empty());
        assert!(c.positive);
        assert_eq!(c.product.grassmannian_tuple(3).unwrap().entries(), &[1, 3, 5]);
        let none = SubexpressionMask::new(g37_word(), vec![false; 9]).unwrap();
        let c = classify(&none);
        assert_eq!(c.j_square.len(), 9);
        assert!(c.positive);
    }

    #[test]
    fn bullet_masks_are_not_positive() {
        let word = ReducedWord::new(3, vec![1, 2, 1]).unwrap();
        let mask = SubexpressionMask::from_positions(word, &[1, 3]).unwrap();
        let c = classify(&mask);
        assert_eq!(c.j_bullet, vec![3]);
        assert!(!c.positive);
    }

    #[test]
    fn pds_examples() {
        let word = g37_word();
        for (case, keep) in [
            (ProbeCase::S2s4s3, vec![7, 8, 9]),
            (ProbeCase::S2s3, vec![7, 9]),
            (ProbeCase::S4s3, vec![8, 9]),
            (ProbeCase::S3, vec![9]),
        ] {
            assert_eq!(find_pds(&word, &case.v()).unwrap().kept_positions(), keep, "{}", case.name());
        }
        assert!(find_pds(&word, &Permutation::identity(7)).unwrap().kept_positions().is_empty());
        let w0 = Permutation::new(vec![7, 6, 5, 4, 3, 2, 1]).unwrap();
        assert!(matches!(find_pds(&word, &w0), Err(Error::NotFound(_))));
    }

    #[test]
    fn pds_unique_for_every_v() {
        let word = g37_word();
        for v in lower_interval(&word) {
            let all = enumerate_distinguished(&word, &v).unwrap();
            let positive: Vec<_> = all.iter().filter(|m| classify(m).positive).collect();
            assert_eq!(positive.len(), 1, "{v}");
            let pds = find_pds(&word, &v).unwrap();
            assert_eq!(positive[0], &pds);
            assert!(all.contains(&pds));
        }
        let top = enumerate_distinguished(&word, &word.evaluate()).unwrap();
        assert_eq!(top.len(), 1);
        assert!(top[0].keep().iter().all(|&k| k));
    }

    #[test]
    fn cell_matrices_are_unimodular() {
        let word = g37_word();
        for v in lower_interval(&word).into_iter().step_by(7) {
            for mask in enumerate_distinguished(&word, &v).unwrap() {
                let d = cell_matrix(&mask).unwrap().determinant();
                assert!(d == MPoly::one(9) || d == -&MPoly::one(9), "{}", mask.display());
            }
        }
        let all_skip = SubexpressionMask::new(g37_word(), vec![false; 9]).unwrap();
        let cm = cell_matrix(&all_skip).unwrap();
        for i in 0..7 {
            assert_eq!(cm.entries()[i][i], MPoly::one(9));
            for j in i + 1..7 {
                assert!(cm.entries()[i][j].is_zero());
            }
        }
        let all_keep = SubexpressionMask::new(g37_word(), vec![true; 9]).unwrap();
        let m = cell_matrix(&all_keep).unwrap().minor(&[3, 5, 7], &[1, 2, 3]);
        assert!(m == MPoly::one(9) || m == -&MPoly::one(9));
        let not_dist = SubexpressionMask::from_positions(ReducedWord::new(3, vec![1, 2, 1]).unwrap(), &[1]).unwrap();
        assert!(!classify(&not_dist).distinguished);
        assert!(cell_matrix(&not_dist).is_err());
    }

    #[test]
    fn y1_on_open_cell() {
        let mask = find_pds(&g37_word(), &ProbeCase::S2s4s3.v()).unwrap();
        let s = restrict_section(&g37::y(1), &mask).unwrap();
        let want = MPoly::monomial(vec![1, 4, 2, 5, 3, 6, 0, 0, 0], Q::one());
        assert!(s == want || s == -&want);
        assert_eq!(s.homogeneous_degree(), Some(21));
    }

    #[test]
    fn probes_pass() {
        for case in ProbeCase::ALL {
            let rep = quotient_probe(case).unwrap();
            assert!(rep.passed, "{}: {:?}", case.name(), rep.checks);
        }
    }

    #[test]
    fn homogeneity_on_random_cells() {
        let mut rng = ChaCha8Rng::seed_from_u64(510);
        let families: Vec<(usize, usize)> = vec![(3, 7), (2, 5), (2, 7), (3, 8)];
        let mut data = Vec::new();
        for &(r, n) in &families {
            let w = minimal_schubert(r, n).unwrap();
            let word = canonical_word(&w);
            let masks = grassmannian_suffix_masks(&word, r);
            let mut tabs = enumerate_invariants(r, n, 1, &w, &ColumnTuple::identity(r, n).unwrap());
            tabs.extend(enumerate_invariants(r, n, 2, &w, &ColumnTuple::identity(r, n).unwrap()).into_iter().take(20));
            let cms: Vec<(CellMatrix, i64)> = masks
                .iter()
                .map(|m| (cell_matrix(m).unwrap(), restriction_height(&m.product().grassmannian_tuple(r).unwrap())))
                .collect();
            data.push((cms, tabs));
        }
        for _ in 0..200 {
            let (cms, tabs) = &data[rng.gen_range(0..data.len())];
            let (cm, h) = &cms[rng.gen_range(0..cms.len())];
            let t = &tabs[rng.gen_range(0..tabs.len())];
            let s = restrict_on(cm, t).unwrap();
            let m = (t.d() / t.n()) as i64;
            if !s.is_zero() {
                assert_eq!(s.homogeneous_degree().map(i64::from), Some(m * h));
            }
        }
    }

    #[test]
    fn descent_counts_match_sections() {
        for (r, n) in [(3, 7), (3, 8), (2, 5), (2, 7)] {
            for i in 1..r {
                let v = crate::weyl::descent_v(r, n, i).unwrap();
                let secs = richardson_sections(r, n, &v).unwrap();
                let polys: Vec<MPoly> = secs.into_iter().map(|(_, s)| s).filter(|s| !s.is_zero()).collect();
                assert_eq!(polynomial_rank(&polys), crate::weyl::descent_degree(r, n, i).unwrap(), "({r},{n}) i={i}");
            }
        }
    }
}
