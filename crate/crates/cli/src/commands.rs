use std::time::Instant;

use serde_json::{json, Value};

use grquot_core::deodhar::{
    cell_matrix, classify, enumerate_distinguished, find_pds, quotient_probe, CellMatrix, SubexpressionMask,
};
use grquot_core::pluecker::verify_relation;
use grquot_core::projnorm::{family_check, surjectivity_oracle_on};
use grquot_core::rewriting::{g37_system, scroll_matrix_check, RewriteSystem};
use grquot_core::tableau::enumerate_invariants;
use grquot_core::weyl::{canonical_word, gamma_tableau, is_coxeter_quotient, minimal_richardson_v, minimal_schubert};
use grquot_core::{g37, ColumnTuple, Permutation, ReducedWord, Tableau, Q};

use crate::acceptance::{run_suite, Selection};
use crate::config::{
    AcceptanceArgs, Command, ConfluenceArgs, DeodharArgs, Family, InvariantArgs, ProjnormArgs, RankArgs, RelationArgs,
    RunConfig,
};
use crate::error::{CliError, CliResult};
use crate::report::{Report, Status};

/// Dispatch `cfg.command` and build its report.
pub fn run(cfg: &RunConfig) -> CliResult<Report> {
    let start = Instant::now();
    let mut report = match &cfg.command {
        Command::MinimalSchubert(a) => minimal_schubert_cmd(a)?,
        Command::Gamma(a) => gamma_cmd(a)?,
        Command::Invariants(a) => invariants_cmd(a)?,
        Command::VerifyRelations(a) => verify_relations_cmd(a)?,
        Command::Confluence(a) => confluence_cmd(a)?,
        Command::Deodhar(a) => deodhar_cmd(a)?,
        Command::Projnorm(a) => projnorm_cmd(a, cfg.seed)?,
        Command::Acceptance(a) => acceptance_cmd(a, cfg.seed, cfg.timing)?,
    };
    if cfg.timing {
        report.timing_ms = Some(start.elapsed().as_millis() as u64);
    }
    Ok(report)
}

fn to_value<T: serde::Serialize>(x: &T) -> CliResult<Value> {
    Ok(serde_json::to_value(x)?)
}

fn tuple(n: usize, entries: &[usize]) -> CliResult<ColumnTuple> {
    Ok(ColumnTuple::new(n, entries.to_vec())?)
}

fn minimal_schubert_cmd(a: &RankArgs) -> CliResult<Report> {
    let w = minimal_schubert(a.r, a.n)?;
    let v = minimal_richardson_v(a.r, a.n)?;
    let coxeter = is_coxeter_quotient(&w, &v)?;
    let payload = json!({
        "r": a.r,
        "n": a.n,
        "w": w.entries(),
        "v": v.entries(),
        "length": w.length(),
        "reduced_word": canonical_word(&w).letters(),
        "coxeter_quotient": coxeter,
    });
    Ok(Report::new("minimal-schubert", Status::Info, payload))
}

fn gamma_cmd(a: &RankArgs) -> CliResult<Report> {
    let g = gamma_tableau(a.r, a.n)?;
    let payload = json!({ "r": a.r, "n": a.n, "rows": g.rows(), "columns": columns_of(&g) });
    Ok(Report::new("gamma", Status::Info, payload))
}

fn columns_of(t: &Tableau) -> Vec<String> {
    t.columns().iter().map(|c| c.to_string()).collect()
}

fn invariants_cmd(a: &InvariantArgs) -> CliResult<Report> {
    let w = match &a.w {
        Some(e) => tuple(a.n, e)?,
        None => ColumnTuple::top(a.r, a.n)?,
    };
    let v = match &a.v {
        Some(e) => tuple(a.n, e)?,
        None => ColumnTuple::identity(a.r, a.n)?,
    };
    if w.r() != a.r || v.r() != a.r {
        return Err(CliError::Usage(format!("w and v must have {} entries", a.r)));
    }
    if a.m == 0 {
        return Err(CliError::Usage("m must be positive".into()));
    }
    let tabs = enumerate_invariants(a.r, a.n, a.m, &w, &v);
    let mut payload = json!({
        "r": a.r,
        "n": a.n,
        "m": a.m,
        "w": w.entries(),
        "v": v.entries(),
        "count": tabs.len(),
    });
    if !a.count_only {
        payload["tableaux"] = to_value(&tabs)?;
    }
    Ok(Report::new("invariants", Status::Info, payload))
}

fn relation_rhs(rel: &g37::Relation) -> Vec<(Q, Vec<Tableau>)> {
    rel.rhs
        .iter()
        .map(|&(c, a, b)| (Q::from_integer(c.into()), vec![g37::y(a), g37::y(b)]))
        .collect()
}

fn show_relation(rel: &g37::Relation) -> String {
    let mut s = format!("y{}*y{} =", rel.lhs.0, rel.lhs.1);
    for (k, &(c, a, b)) in rel.rhs.iter().enumerate() {
        let sign = match (k, c < 0) {
            (0, false) => "",
            (0, true) => "-",
            (_, false) => "+ ",
            (_, true) => "- ",
        };
        let mag = if c.abs() == 1 { String::new() } else { format!("{}*", c.abs()) };
        s.push_str(&format!(" {sign}{mag}y{a}*y{b}"));
    }
    s
}

/// Relation checks on `X(w_{3,7})` plus the unrestricted negative control.
pub(crate) fn g37_relation_checks() -> CliResult<(Vec<Value>, usize, bool)> {
    let w = g37::w();
    let id = ColumnTuple::identity(3, 7)?;
    let top = ColumnTuple::top(3, 7)?;
    let mut rows = Vec::new();
    let mut all = true;
    let mut control_failures = 0;
    for rel in g37::relations() {
        let lhs = [g37::y(rel.lhs.0), g37::y(rel.lhs.1)];
        let rhs = relation_rhs(&rel);
        let on = verify_relation(&lhs, &rhs, &w, &id)?;
        let off = verify_relation(&lhs, &rhs, &top, &id)?;
        all &= on.holds;
        control_failures += (!off.holds) as usize;
        rows.push(json!({
            "name": rel.name,
            "relation": show_relation(&rel),
            "holds": on.holds,
            "residue": on.residue.to_string(),
            "holds_unrestricted": off.holds,
        }));
    }
    Ok((rows, control_failures, all))
}

fn verify_relations_cmd(a: &RelationArgs) -> CliResult<Report> {
    match a.family {
        Family::G37 => {
            let (rows, control_failures, all) = g37_relation_checks()?;
            let z = verify_relation(
                &[g37::y(5), g37::y(7)],
                &[(Q::from_integer(1.into()), vec![g37::z20()])],
                &g37::w(),
                &ColumnTuple::identity(3, 7)?,
            )?;
            let passed = all && control_failures >= 1 && z.holds;
            let payload = json!({
                "family": "g37",
                "w": g37::w().entries(),
                "relations": rows,
                "negative_control_failures": control_failures,
                "y5_y7_equals_z20": z.holds,
            });
            Ok(Report::new("verify-relations", Status::from_check(passed), payload))
        }
    }
}

fn load_rules(source: &str) -> CliResult<RewriteSystem> {
    if source == "g37" {
        return Ok(g37_system());
    }
    let text = std::fs::read_to_string(source)?;
    Ok(RewriteSystem::parse(&text, None)?)
}

fn confluence_cmd(a: &ConfluenceArgs) -> CliResult<Report> {
    let sys = load_rules(&a.rules)?;
    let rep = sys.check_confluence(a.max_degree);
    let mut payload = to_value(&rep)?;
    payload["rules"] = json!(a.rules);
    payload["generators"] = json!(sys.nvars());
    if sys.nvars() >= 7 && a.rules == "g37" {
        payload["scroll"] = to_value(&scroll_matrix_check(&sys)?)?;
    }
    Ok(Report::new("confluence", Status::from_check(rep.confluent), payload))
}

fn parse_word(a: &DeodharArgs) -> CliResult<ReducedWord> {
    let n = a.word.iter().copied().max().unwrap_or(0) + 1;
    let n = n.max(a.v.as_ref().map_or(0, |v| v.len()));
    Ok(ReducedWord::new(n, a.word.clone())?)
}

fn target(a: &DeodharArgs, n: usize) -> CliResult<Permutation> {
    if let Some(v) = &a.v {
        let mut one_line = v.clone();
        one_line.extend(one_line.len() + 1..=n);
        return Ok(Permutation::new(one_line)?);
    }
    if let Some(letters) = &a.v_word {
        return Ok(ReducedWord::new(n, letters.clone())?.evaluate());
    }
    Ok(Permutation::identity(n))
}

fn mask_value(mask: &SubexpressionMask) -> CliResult<Value> {
    let c = classify(mask);
    Ok(json!({
        "mask": mask.display(),
        "kept_positions": mask.kept_positions(),
        "classification": to_value(&c)?,
    }))
}

fn matrix_value(cm: &CellMatrix) -> Value {
    let rows: Vec<Vec<String>> = cm
        .entries()
        .iter()
        .map(|row| row.iter().map(|p| cm.show(p)).collect())
        .collect();
    json!({ "labels": cm.labels(), "rows": rows })
}

fn deodhar_cmd(a: &DeodharArgs) -> CliResult<Report> {
    if let Some(case) = a.probe {
        let rep = quotient_probe(case)?;
        let status = Status::from_check(rep.passed);
        return Ok(Report::new("deodhar", status, to_value(&rep)?));
    }
    let word = parse_word(a)?;
    let v = target(a, word.n())?;
    let mut payload = json!({
        "word": word.letters(),
        "v": v.one_line(),
    });
    if a.enumerate {
        let masks = enumerate_distinguished(&word, &v)?;
        let positive = masks.iter().filter(|m| classify(m).positive).count();
        payload["distinguished"] = Value::Array(masks.iter().map(mask_value).collect::<CliResult<_>>()?);
        payload["count"] = json!(masks.len());
        payload["positive_count"] = json!(positive);
        return Ok(Report::new("deodhar", Status::from_check(positive == 1), payload));
    }
    let pds = find_pds(&word, &v)?;
    payload["pds"] = mask_value(&pds)?;
    if a.pds {
        payload["cell_matrix"] = matrix_value(&cell_matrix(&pds)?);
    }
    Ok(Report::new("deodhar", Status::Info, payload))
}

fn projnorm_cmd(a: &ProjnormArgs, seed: u64) -> CliResult<Report> {
    if a.n.is_multiple_of(2) || a.n < 3 {
        return Err(CliError::Usage(format!("n must be odd and at least 3, got {}", a.n)));
    }
    if a.m == 0 {
        return Err(CliError::Usage("m must be positive".into()));
    }
    let sample = a.sample.map(|k| (k, seed));
    let fam = family_check(a.n, a.m, sample)?;
    let mut passed = fam.passed;
    let mut payload = json!({ "family": to_value(&fam)? });
    if a.exhaustive || a.sample.is_none() {
        payload["mode"] = json!("exhaustive");
    } else {
        payload["mode"] = json!("sampled");
        payload["seed"] = json!(seed);
    }
    if a.oracle {
        let w = match &a.w {
            Some(e) => tuple(a.n, e)?,
            None => ColumnTuple::top(2, a.n)?,
        };
        let rep = surjectivity_oracle_on(a.n, a.m, &w, &ColumnTuple::identity(2, a.n)?)?;
        passed &= rep.equal;
        payload["oracle"] = to_value(&rep)?;
    }
    Ok(Report::new("projnorm", Status::from_check(passed), payload))
}

fn acceptance_cmd(a: &AcceptanceArgs, seed: u64, timing: bool) -> CliResult<Report> {
    let selection = match a.criterion {
        Some(id) => Selection::One(id),
        None => Selection::All,
    };
    let suite = run_suite(selection, seed, timing)?;
    Ok(Report::new("acceptance", Status::from_check(suite.passed), to_value(&suite)?))
}
