//! The invariant ring of the Schubert variety `X(w_{3,7})` in `G(3, 7)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tableau::{column_census, enumerate_invariants, remove_submultiset, Tableau};
use crate::weyl::ColumnTuple;

const Y_COLUMNS: [[&str; 7]; 7] = [
    ["135", "136", "146", "246", "247", "257", "357"],
    ["134", "136", "146", "246", "257", "257", "357"],
    ["125", "136", "146", "246", "247", "357", "357"],
    ["124", "136", "146", "246", "257", "357", "357"],
    ["125", "126", "146", "246", "347", "357", "357"],
    ["124", "126", "146", "246", "357", "357", "357"],
    ["123", "146", "146", "246", "257", "357", "357"],
];

const Z20_COLUMNS: [&str; 14] = [
    "123", "125", "126", "146", "146", "146", "246", "246", "247", "357", "357", "357", "357", "357",
];

/// Generator `y_i`, `1 <= i <= 7`.
///
/// # Panics
/// If `i` is outside `1..=7`.
pub fn y(i: usize) -> Tableau {
    assert!((1..=7).contains(&i), "y_{i} does not exist");
    Tableau::from_column_strings(7, &Y_COLUMNS[i - 1]).expect("static tableau")
}

/// The degree-two invariant `z_20`.
pub fn z20() -> Tableau {
    Tableau::from_column_strings(7, &Z20_COLUMNS).expect("static tableau")
}

pub fn w() -> ColumnTuple {
    ColumnTuple::new(7, vec![3, 5, 7]).expect("static tuple")
}

pub fn v() -> ColumnTuple {
    ColumnTuple::new(7, vec![1, 2, 3]).expect("static tuple")
}

/// Degree-`m` invariants on `X(w_{3,7})`.
pub fn invariants(m: usize) -> Vec<Tableau> {
    enumerate_invariants(3, 7, m, &w(), &v())
}

/// Quadratic relation `Y_a Y_b = Σ c Y_c Y_d` among the generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    pub name: &'static str,
    pub lhs: (usize, usize),
    pub rhs: Vec<(i64, usize, usize)>,
}

pub fn relations() -> Vec<Relation> {
    vec![
        Relation {
            name: "r1",
            lhs: (1, 4),
            rhs: vec![(1, 2, 3), (-1, 2, 7), (1, 1, 7)],
        },
        Relation {
            name: "r2",
            lhs: (1, 5),
            rhs: vec![(1, 3, 3), (-1, 3, 7)],
        },
        Relation {
            name: "r3",
            lhs: (1, 6),
            rhs: vec![(1, 3, 4), (-1, 4, 7)],
        },
        Relation {
            name: "r4",
            lhs: (2, 5),
            rhs: vec![(1, 3, 4), (-1, 3, 7)],
        },
        Relation {
            name: "r5",
            lhs: (2, 6),
            rhs: vec![(1, 4, 4), (-1, 4, 7)],
        },
        Relation {
            name: "r6",
            lhs: (3, 6),
            rhs: vec![(1, 4, 5)],
        },
    ]
}

/// The relations as a rule file.
pub const RULES: &str = "\
# quadratic relations among y1..y7 on X(w_{3,7}), graded lex Y1 > ... > Y7
Y1*Y4 -> Y2*Y3 - Y2*Y7 + Y1*Y7
Y1*Y5 -> Y3^2 - Y3*Y7
Y1*Y6 -> Y3*Y4 - Y4*Y7
Y2*Y5 -> Y3*Y4 - Y3*Y7
Y2*Y6 -> Y4^2 - Y4*Y7
Y3*Y6 -> Y4*Y5
";

/// Admissible first columns of an invariant.
pub const FIRST_COLUMNS: [[usize; 3]; 5] = [[1, 2, 3], [1, 2, 4], [1, 2, 5], [1, 3, 4], [1, 3, 5]];

/// Columns that never occur in an invariant.
pub const FORBIDDEN_COLUMNS: [[usize; 3]; 13] = [
    [1, 2, 7],
    [1, 3, 7],
    [1, 4, 7],
    [1, 5, 6],
    [1, 5, 7],
    [2, 3, 4],
    [2, 3, 5],
    [2, 3, 6],
    [2, 3, 7],
    [2, 4, 5],
    [2, 5, 6],
    [3, 4, 6],
    [3, 5, 6],
];

/// Column shape checks for a degree-`m` invariant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub first_column_ok: bool,
    pub forbidden_absent: bool,
    pub count_246_eq_m: bool,
    pub count_146_ge_m: bool,
    pub count_257_357_ge_2m: bool,
    pub columns_with_6_ok: bool,
    pub columns_with_7_ok: bool,
}

impl CensusReport {
    pub fn all(&self) -> bool {
        self.first_column_ok
            && self.forbidden_absent
            && self.count_246_eq_m
            && self.count_146_ge_m
            && self.count_257_357_ge_2m
            && self.columns_with_6_ok
            && self.columns_with_7_ok
    }
}

pub fn census_report(t: &Tableau) -> CensusReport {
    let m = t.d() / 7;
    let c = column_census(t);
    let first = t.columns().first().map(|c| c.entries().to_vec()).unwrap_or_default();
    let only = |x: usize, allowed: &[[usize; 3]]| {
        c.columns_containing(x)
            .iter()
            .all(|col| allowed.iter().any(|a| col.entries() == a))
    };
    CensusReport {
        first_column_ok: FIRST_COLUMNS.iter().any(|f| f[..] == first[..]),
        forbidden_absent: FORBIDDEN_COLUMNS.iter().all(|f| c.count(f) == 0),
        count_246_eq_m: c.count(&[2, 4, 6]) == m,
        count_146_ge_m: c.count(&[1, 4, 6]) >= m,
        count_257_357_ge_2m: c.count(&[2, 5, 7]) + c.count(&[3, 5, 7]) >= 2 * m,
        columns_with_6_ok: only(6, &[[1, 2, 6], [1, 3, 6], [1, 4, 6], [2, 4, 6]]),
        columns_with_7_ok: only(7, &[[2, 4, 7], [2, 5, 7], [3, 4, 7], [3, 5, 7]]),
    }
}

/// Which generator was split off.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Generator {
    Y(usize),
    Z20,
}

/// Finds `y_i` (or else `z_20`) as a column sub-multiset of `t` whose
/// complement is again an invariant.
pub fn generator_witness(t: &Tableau) -> Result<(Generator, Tableau)> {
    let valid = |rest: &Tableau| {
        rest.is_semistandard()
            && rest.is_zero_weight()
            && rest.columns().first().is_none_or(|c| v().leq(c))
            && rest.columns().last().is_none_or(|c| c.leq(&w()))
    };
    for i in 1..=7 {
        if let Some(rest) = remove_submultiset(t, &y(i)) {
            if valid(&rest) {
                return Ok((Generator::Y(i), rest));
            }
        }
    }
    if let Some(rest) = remove_submultiset(t, &z20()) {
        if valid(&rest) {
            return Ok((Generator::Z20, rest));
        }
    }
    Err(Error::Violation(format!("no generator divides {t}")))
}
