//! Commutative rewriting over generators `Y1..Yk` with graded lex order
//! `Y1 > Y2 > ... > Yk`, plus overlap and unique-normal-form checks.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::mpoly::{Exponents, MPoly};
use crate::Q;

/// Graded lexicographic comparison with the first variable largest.
pub fn grlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u32], b: &[u32]) -> Exponents {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

fn quotient(a: &[u32], b: &[u32]) -> Exponents {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// `lhs -> rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub name: String,
    pub lhs: Exponents,
    pub rhs: MPoly,
}

/// Ordered rule set. Every right-hand monomial is strictly below its lhs.
#[derive(Clone, Debug)]
pub struct RewriteSystem {
    nvars: usize,
    rules: Vec<Rule>,
}

fn leading(p: &MPoly) -> Option<&Exponents> {
    p.terms().keys().max_by(|a, b| grlex_cmp(a, b))
}

impl RewriteSystem {
    pub fn new(nvars: usize, rules: Vec<Rule>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for rule in &rules {
            if rule.lhs.len() != nvars || rule.rhs.nvars() != nvars {
                return Err(Error::Config(format!("rule {} has the wrong number of variables", rule.name)));
            }
            if !seen.insert(rule.lhs.clone()) {
                return Err(Error::Config(format!("duplicate left-hand side in rule {}", rule.name)));
            }
            if let Some(lt) = leading(&rule.rhs) {
                if grlex_cmp(lt, &rule.lhs) != Ordering::Less {
                    return Err(Error::Config(format!(
                        "rule {} is not decreasing: {:?} is not below its lhs",
                        rule.name,
                        lt
                    )));
                }
            }
        }
        Ok(RewriteSystem { nvars, rules })
    }

    /// Parses lines like `Y1*Y5 -> Y3^2 - Y3*Y7`. `#` starts a comment.
    /// The number of generators is the largest index mentioned, or `nvars` if given.
    pub fn parse(text: &str, nvars: Option<usize>) -> Result<Self> {
        let mut raw = Vec::new();
        let mut k = nvars.unwrap_or(0);
        for (no, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (l, r) = line.split_once("->").ok_or(Error::Parse {
                line: no + 1,
                msg: "expected `lhs -> rhs`".into(),
            })?;
            let lhs = parse_poly(l, no + 1)?;
            let rhs = parse_poly(r, no + 1)?;
            for (_, mono) in lhs.iter().chain(&rhs) {
                for &(i, _) in mono {
                    if nvars.is_some_and(|n| i > n) {
                        return Err(Error::Parse {
                            line: no + 1,
                            msg: format!("Y{i} exceeds the declared {k} generators"),
                        });
                    }
                    k = k.max(i);
                }
            }
            if lhs.len() != 1 || lhs[0].0 != Q::one() {
                return Err(Error::Parse {
                    line: no + 1,
                    msg: "left-hand side must be a single monic monomial".into(),
                });
            }
            raw.push((format!("r{}", raw.len() + 1), lhs, rhs));
        }
        let to_exps = |mono: &Vec<(usize, u32)>| {
            let mut e = vec![0; k];
            for &(i, p) in mono {
                e[i - 1] += p;
            }
            e
        };
        let rules = raw
            .into_iter()
            .map(|(name, lhs, rhs)| {
                let mut p = MPoly::zero(k);
                for (c, mono) in &rhs {
                    p.add_term(to_exps(mono), c.clone());
                }
                Rule {
                    name,
                    lhs: to_exps(&lhs[0].1),
                    rhs: p,
                }
            })
            .collect();
        Self::new(k, rules)
    }

    /// Renames rules in order.
    pub fn with_names(mut self, names: &[&str]) -> Self {
        for (r, n) in self.rules.iter_mut().zip(names) {
            r.name = n.to_string();
        }
        self
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn names(&self) -> Vec<String> {
        (1..=self.nvars).map(|i| format!("Y{i}")).collect()
    }

    pub fn show(&self, p: &MPoly) -> String {
        p.display_with(&self.names())
    }

    pub fn show_mono(&self, e: &[u32]) -> String {
        self.show(&MPoly::monomial(e.to_vec(), Q::one()))
    }

    fn first_rule_for(&self, e: &[u32]) -> Option<&Rule> {
        self.rules.iter().find(|r| divides(&r.lhs, e))
    }

    fn apply(&self, rule: &Rule, e: &[u32]) -> MPoly {
        &MPoly::monomial(quotient(e, &rule.lhs), Q::one()) * &rule.rhs
    }

    /// Normal form, rewriting the grlex-largest reducible term first.
    pub fn reduce(&self, p: &MPoly) -> MPoly {
        self.reduce_counting(p).0
    }

    /// Normal form and number of rewrite steps.
    pub fn reduce_counting(&self, p: &MPoly) -> (MPoly, usize) {
        let mut cur = p.clone();
        let mut steps = 0;
        loop {
            let target = cur
                .terms()
                .iter()
                .filter(|(e, _)| self.first_rule_for(e).is_some())
                .max_by(|a, b| grlex_cmp(a.0, b.0))
                .map(|(e, c)| (e.clone(), c.clone()));
            let Some((e, c)) = target else {
                return (cur, steps);
            };
            let rule = self.first_rule_for(&e).expect("filtered above");
            let mut next = cur.clone();
            next.add_term(e.clone(), -c.clone());
            next = &next + &self.apply(rule, &e).scale(&c);
            cur = next;
            steps += 1;
        }
    }

    /// Least common multiples of properly overlapping left-hand sides.
    pub fn ambiguities(&self) -> Vec<Ambiguity> {
        self.overlap_pairs().0
    }

    fn overlap_pairs(&self) -> (Vec<Ambiguity>, Vec<(String, String)>) {
        let mut amb = Vec::new();
        let mut skipped = Vec::new();
        for i in 0..self.rules.len() {
            for j in i + 1..self.rules.len() {
                let (a, b) = (&self.rules[i], &self.rules[j]);
                if coprime(&a.lhs, &b.lhs) {
                    skipped.push((a.name.clone(), b.name.clone()));
                    continue;
                }
                amb.push(Ambiguity {
                    overlap: lcm(&a.lhs, &b.lhs),
                    rules: (i, j),
                });
            }
        }
        (amb, skipped)
    }

    /// Resolve every ambiguity along both rules, then check that every
    /// monomial up to `through_degree` has a single normal form over all
    /// reduction orders.
    pub fn check_confluence(&self, through_degree: u32) -> ConfluenceReport {
        let (amb, skipped) = self.overlap_pairs();
        let ambiguities: Vec<AmbiguityReport> = amb
            .iter()
            .map(|a| {
                let (i, j) = a.rules;
                let first = self.reduce(&self.apply(&self.rules[i], &a.overlap));
                let second = self.reduce(&self.apply(&self.rules[j], &a.overlap));
                AmbiguityReport {
                    overlap: self.show_mono(&a.overlap),
                    rules: (self.rules[i].name.clone(), self.rules[j].name.clone()),
                    joined: first == second,
                    via_first: self.show(&first),
                    via_second: self.show(&second),
                }
            })
            .collect();
        let mut memo = HashMap::new();
        let mut checked = 0;
        let mut non_unique = Vec::new();
        for d in 0..=through_degree {
            for e in monomials(self.nvars, d) {
                checked += 1;
                let set = self.nf_set(&e, &mut memo);
                if set.len() != 1 {
                    non_unique.push(NonUnique {
                        monomial: self.show_mono(&e),
                        normal_forms: set.iter().map(|p| self.show(p)).collect(),
                    });
                }
            }
        }
        let confluent = ambiguities.iter().all(|a| a.joined) && non_unique.is_empty();
        ConfluenceReport {
            ambiguities,
            skipped_coprime: skipped
                .into_iter()
                .map(|(a, b)| SkippedPair {
                    rules: (a, b),
                    reason: "coprime left-hand sides; both orders commute".into(),
                })
                .collect(),
            through_degree,
            monomials_checked: checked,
            non_unique,
            confluent,
        }
    }

    /// All normal forms reachable from the monomial `e`, over every choice of rule at every step.
    fn nf_set(&self, e: &Exponents, memo: &mut HashMap<Exponents, Vec<MPoly>>) -> Vec<MPoly> {
        if let Some(hit) = memo.get(e) {
            return hit.clone();
        }
        let mut out: Vec<MPoly> = Vec::new();
        let applicable: Vec<&Rule> = self.rules.iter().filter(|r| divides(&r.lhs, e)).collect();
        if applicable.is_empty() {
            out.push(MPoly::monomial(e.clone(), Q::one()));
        }
        for rule in applicable {
            let image = self.apply(rule, e);
            let mut partial = vec![MPoly::zero(self.nvars)];
            for (m, c) in image.terms() {
                let opts = self.nf_set(m, memo);
                let mut next = Vec::new();
                for p in &partial {
                    for o in &opts {
                        let q = p + &o.scale(c);
                        if !next.contains(&q) {
                            next.push(q);
                        }
                        if next.len() >= NF_CAP {
                            break;
                        }
                    }
                }
                partial = next;
            }
            for p in partial {
                if !out.contains(&p) {
                    out.push(p);
                }
            }
        }
        memo.insert(e.clone(), out.clone());
        out
    }

    /// Degree-`m` monomials divisible by no left-hand side.
    pub fn normal_form_count(&self, m: u32) -> usize {
        monomials(self.nvars, m)
            .into_iter()
            .filter(|e| self.rules.iter().all(|r| !divides(&r.lhs, e)))
            .count()
    }
}

/// Bound on the number of distinct normal forms tracked per monomial.
const NF_CAP: usize = 64;

/// All exponent vectors of total degree `d` in `k` variables.
pub fn monomials(k: usize, d: u32) -> Vec<Exponents> {
    let mut out = Vec::new();
    let mut cur = vec![0; k];
    fn rec(i: usize, left: u32, cur: &mut Exponents, out: &mut Vec<Exponents>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for x in (0..=left).rev() {
            cur[i] = x;
            rec(i + 1, left - x, cur, out);
        }
    }
    if k == 0 {
        if d == 0 {
            out.push(cur);
        }
        return out;
    }
    rec(0, d, &mut cur, &mut out);
    out
}

type Term = (Q, Vec<(usize, u32)>);

fn parse_poly(s: &str, line: usize) -> Result<Vec<Term>> {
    let err = |msg: String| Error::Parse { line, msg };
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(err("empty side".into()));
    }
    if s == "0" {
        return Ok(Vec::new());
    }
    let mut terms = Vec::new();
    let mut chunks = Vec::new();
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        if (ch == '+' || ch == '-') && i > 0 {
            chunks.push(&s[start..i]);
            start = i;
        }
    }
    chunks.push(&s[start..]);
    for chunk in chunks {
        let (sign, body) = match chunk.as_bytes()[0] {
            b'-' => (-1, &chunk[1..]),
            b'+' => (1, &chunk[1..]),
            _ => (1, chunk),
        };
        let mut coeff = Q::from_integer(sign.into());
        let mut mono = Vec::new();
        for factor in body.split('*') {
            if let Some(rest) = factor.strip_prefix('Y') {
                let (idx, pow) = match rest.split_once('^') {
                    Some((a, b)) => (a, b.parse::<u32>().map_err(|_| err(format!("bad exponent in {factor}")))?),
                    None => (rest, 1),
                };
                let idx: usize = idx.parse().map_err(|_| err(format!("bad generator {factor}")))?;
                if idx == 0 {
                    return Err(err("generators are numbered from 1".into()));
                }
                mono.push((idx, pow));
            } else {
                let c: Q = factor.parse().map_err(|_| err(format!("bad coefficient {factor}")))?;
                coeff *= c;
            }
        }
        if !coeff.is_zero() {
            terms.push((coeff, mono));
        }
    }
    Ok(terms)
}

/// A critical overlap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ambiguity {
    pub overlap: Exponents,
    pub rules: (usize, usize),
}

#[derive(Clone, Debug, Serialize)]
pub struct AmbiguityReport {
    pub overlap: String,
    pub rules: (String, String),
    pub via_first: String,
    pub via_second: String,
    pub joined: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SkippedPair {
    pub rules: (String, String),
    pub reason: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct NonUnique {
    pub monomial: String,
    pub normal_forms: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConfluenceReport {
    pub ambiguities: Vec<AmbiguityReport>,
    pub skipped_coprime: Vec<SkippedPair>,
    pub through_degree: u32,
    pub monomials_checked: usize,
    pub non_unique: Vec<NonUnique>,
    pub confluent: bool,
}

impl ConfluenceReport {
    /// Joined normal form of the named overlap, if present and joined.
    pub fn joined_form(&self, overlap: &str) -> Option<&str> {
        self.ambiguities
            .iter()
            .find(|a| a.overlap == overlap && a.joined)
            .map(|a| a.via_first.as_str())
    }
}

/// The `2 x 4` matrix whose minors cut out the quotient.
pub fn scroll_matrix(nvars: usize) -> [[MPoly; 4]; 2] {
    let y = |i: usize| MPoly::var(nvars, i - 1);
    [
        [y(1), y(3), y(4), y(2)],
        [&y(3) - &y(7), y(5), y(6), &y(4) - &y(7)],
    ]
}

#[derive(Clone, Debug, Serialize)]
pub struct ScrollMinor {
    pub columns: (usize, usize),
    pub minor: String,
    pub reduces_to_zero: bool,
    pub matches_rule: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScrollReport {
    pub minors: Vec<ScrollMinor>,
    pub passed: bool,
}

/// Reduce every `2 x 2` minor of [`scroll_matrix`] modulo the rules.
pub fn scroll_matrix_check(sys: &RewriteSystem) -> Result<ScrollReport> {
    if sys.nvars() < 7 {
        return Err(Error::InvalidArgument("scroll matrix needs at least 7 generators".into()));
    }
    let mtx = scroll_matrix(sys.nvars());
    let mut minors = Vec::new();
    for a in 0..4 {
        for b in a + 1..4 {
            let minor = &(&mtx[0][a] * &mtx[1][b]) - &(&mtx[0][b] * &mtx[1][a]);
            let reduced = sys.reduce(&minor);
            let matches_rule = sys
                .rules()
                .iter()
                .find(|r| {
                    let rel = &MPoly::monomial(r.lhs.clone(), Q::one()) - &r.rhs;
                    rel == minor || -&rel == minor
                })
                .map(|r| r.name.clone());
            minors.push(ScrollMinor {
                columns: (a + 1, b + 1),
                minor: sys.show(&minor),
                reduces_to_zero: reduced.is_zero(),
                matches_rule,
            });
        }
    }
    let passed = minors.iter().all(|m| m.reduces_to_zero);
    Ok(ScrollReport { minors, passed })
}

/// The six quadratic relations on `X(w_{3,7})` as a rewrite system.
pub fn g37_system() -> RewriteSystem {
    RewriteSystem::parse(crate::g37::RULES, Some(7))
        .expect("built-in rules parse")
        .with_names(&["r1", "r2", "r3", "r4", "r5", "r6"])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(sys: &RewriteSystem, s: &str) -> MPoly {
        let t = RewriteSystem::parse(&format!("Y1*Y1*Y1*Y1*Y1*Y1*Y1*Y1*Y1*Y1 -> {s}"), Some(sys.nvars())).unwrap();
        t.rules()[0].rhs.clone()
    }

    #[test]
    fn rules_are_oriented() {
        let sys = g37_system();
        assert_eq!(sys.rules().len(), 6);
        for r in sys.rules() {
            for e in r.rhs.terms().keys() {
                assert_eq!(grlex_cmp(e, &r.lhs), Ordering::Less, "{}", r.name);
            }
        }
        assert!(matches!(
            RewriteSystem::parse("Y3*Y4 -> Y1*Y2", None),
            Err(Error::Config(_))
        ));
        assert!(matches!(RewriteSystem::parse("Y1 Y2", None), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn reduction_examples() {
        let sys = g37_system();
        assert_eq!(sys.show(&sys.reduce(&p(&sys, "Y1*Y5"))), "Y3^2 - Y3*Y7");
        assert_eq!(sys.show(&sys.reduce(&p(&sys, "Y1*Y2*Y5"))), "Y2*Y3^2 - Y2*Y3*Y7");
        let y7 = p(&sys, "Y7^5");
        assert_eq!(sys.reduce(&y7), y7);
    }

    #[test]
    fn overlaps() {
        let sys = g37_system();
        let amb: Vec<String> = sys.ambiguities().iter().map(|a| sys.show_mono(&a.overlap)).collect();
        for want in ["Y1*Y2*Y5", "Y1*Y2*Y6", "Y1*Y3*Y6", "Y2*Y3*Y6", "Y2*Y5*Y6"] {
            assert!(amb.contains(&want.to_string()), "{want} missing from {amb:?}");
        }
        assert_eq!(amb.len(), 8);
        let coprime = RewriteSystem::parse("Y1^2 -> Y3^2\nY2^2 -> Y3^2", None).unwrap();
        assert!(coprime.ambiguities().is_empty());
    }

    #[test]
    fn confluence() {
        let sys = g37_system();
        let rep = sys.check_confluence(4);
        assert!(rep.confluent, "{:?}", rep.non_unique);
        assert_eq!(rep.joined_form("Y1*Y2*Y6"), Some("Y2*Y3*Y4 - Y2*Y4*Y7"));
        assert_eq!(rep.joined_form("Y1*Y2*Y5"), Some("Y2*Y3^2 - Y2*Y3*Y7"));
        assert_eq!(rep.joined_form("Y2*Y3*Y6"), Some("Y3*Y4^2 - Y3*Y4*Y7"));
        assert_eq!(rep.joined_form("Y2*Y5*Y6"), Some("Y4^2*Y5 - Y4*Y5*Y7"));
        let empty = RewriteSystem::new(3, Vec::new()).unwrap();
        assert!(empty.check_confluence(3).confluent);
    }

    #[test]
    fn non_confluent_system_is_caught() {
        let sys = RewriteSystem::parse("Y1*Y2 -> Y3^2\nY1*Y3 -> Y2^2", Some(3)).unwrap();
        let rep = sys.check_confluence(3);
        assert!(!rep.confluent);
    }

    #[test]
    fn normal_form_counts() {
        let sys = g37_system();
        assert_eq!(sys.normal_form_count(1), 7);
        assert_eq!(sys.normal_form_count(2), 22);
    }

    #[test]
    fn scroll() {
        let sys = g37_system();
        let rep = scroll_matrix_check(&sys).unwrap();
        assert!(rep.passed);
        let rule_of = |a, b| rep.minors.iter().find(|m| m.columns == (a, b)).unwrap().matches_rule.clone();
        assert_eq!(rule_of(1, 2).as_deref(), Some("r2"));
        assert_eq!(rule_of(1, 3).as_deref(), Some("r3"));
        assert_eq!(rule_of(1, 4).as_deref(), Some("r1"));
        assert_eq!(rule_of(2, 3).as_deref(), Some("r6"));
        assert_eq!(rule_of(2, 4).as_deref(), Some("r4"));
        assert_eq!(rule_of(3, 4).as_deref(), Some("r5"));
    }

    #[test]
    fn reduction_terminates_and_is_normal() {
        let sys = g37_system();
        for d in 0..=4 {
            for e in monomials(7, d) {
                let (nf, steps) = sys.reduce_counting(&MPoly::monomial(e.clone(), Q::one()));
                assert!(steps < 1000);
                for m in nf.terms().keys() {
                    assert!(sys.rules().iter().all(|r| !divides(&r.lhs, m)));
                    assert_ne!(grlex_cmp(m, &e), Ordering::Greater);
                }
            }
        }
    }
}
