//! Named verification suites for `ffperm check`.
//!
//! Each suite owns a default grid of cells. `--p/--r/--n` replace the
//! corresponding coordinate in every cell. Rows print in grid order; a row
//! fails the command only when it carries the theorem label.

use std::fmt;

use ffperm_core::constructions::{self, Family, FamilyParams, Property};
use ffperm_core::verify::{Label, Verifier, DEFAULT_SEED};
use ffperm_core::{make_field, Error, FieldSpec};
use serde::Serialize;

use crate::{CheckArgs, CmdResult, Fail, Format};

/// Random trials for the degree criterion once q is too large to enumerate.
const CRITERION_TRIALS: usize = 10_000;

pub const SUITES: [&str; 12] = [
    "prop3.1",
    "thm3.2",
    "remark3",
    "thm4.1",
    "thm4.3",
    "thm4.4",
    "lemma2.2",
    "lemma4.5",
    "thm5.2",
    "thm5.3",
    "thm5.4",
    "conjecture",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Task {
    Family(Family),
    /// Power construction followed by one variable restriction.
    Restricted,
    Scan,
    Identities,
    Criterion,
    Conjecture,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Cell {
    task: Task,
    p: u64,
    r: u32,
    n: usize,
    b: Option<u64>,
}

fn cell(task: Task, p: u64, r: u32, n: usize) -> Cell {
    Cell { task, p, r, n, b: None }
}

fn fam(f: Family, p: u64, r: u32, n: usize) -> Cell {
    cell(Task::Family(f), p, r, n)
}

const SMALL_FIELDS: [(u64, u32); 6] = [(3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)];

fn grid(suite: &str) -> Vec<Cell> {
    let mut g = Vec::new();
    match suite {
        "prop3.1" => g.extend([(2, 2), (2, 3), (3, 2)].map(|(p, n)| cell(Task::Scan, p, 1, n))),
        "thm3.2" => {
            for (p, r) in SMALL_FIELDS {
                g.extend((1..=3).map(|n| fam(Family::PpHn, p, r, n)));
            }
            g.push(fam(Family::PpHn, 5, 1, 4));
        }
        "remark3" => {
            for (p, r) in [(3, 1), (5, 1), (7, 1), (3, 2)] {
                g.extend((2..=3).map(|n| fam(Family::PpMonomial, p, r, n)));
            }
            g.extend((1..=3).map(|n| fam(Family::PpAlpha4, 2, 2, n)));
            g.extend((1..=2).map(|n| fam(Family::PpDickson, 2, 4, n)));
            for (p, r) in [(5, 1), (3, 2)] {
                g.extend((1..=2).map(|n| fam(Family::PpQnr, p, r, n)));
            }
            g.push(fam(Family::PpNonCube, 2, 4, 1));
            g.extend((1..=2).map(|n| fam(Family::PpMersenne, 2, 3, n)));
        }
        "thm4.1" => {
            for r in [2, 3, 4] {
                g.extend((1..=3).map(|n| fam(Family::LppBeta, 2, r, n)));
            }
        }
        "thm4.3" => {
            for (p, b) in [(5, 3), (7, 5), (11, 3)] {
                for task in [Task::Family(Family::LppPower), Task::Restricted] {
                    g.push(Cell {
                        b: Some(b),
                        ..cell(task, p, 1, b as usize)
                    });
                }
            }
        }
        "thm4.4" => {
            g.extend([(3, 2, 2), (5, 2, 2), (3, 3, 2), (3, 2, 3)].map(|(p, r, n)| fam(Family::LppIndicator, p, r, n)))
        }
        "lemma2.2" => g.extend(
            [(3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (2, 4)]
                .map(|(p, r)| cell(Task::Identities, p, r, 1)),
        ),
        "lemma4.5" => g.extend(SMALL_FIELDS.map(|(p, r)| cell(Task::Criterion, p, r, 1))),
        "thm5.2" => g.extend([(5, 1), (7, 1), (3, 2), (11, 1)].map(|(p, r)| fam(Family::LppChain, p, r, 2))),
        "thm5.3" => g.extend([(5, 1), (7, 1), (3, 2)].map(|(p, r)| fam(Family::LppChain, p, r, 3))),
        "thm5.4" => {
            g.extend([(5, 1), (7, 1)].map(|(p, r)| fam(Family::Lpp3VarA, p, r, 3)));
            g.extend([(3, 2), (3, 3)].map(|(p, r)| fam(Family::Lpp3VarB, p, r, 3)));
            g.extend([(2, 2), (2, 3), (2, 4)].map(|(p, r)| fam(Family::Lpp3VarC, p, r, 3)));
        }
        "conjecture" => g.extend([(5, 5), (7, 4)].map(|(p, n)| cell(Task::Conjecture, p, 1, n))),
        _ => {}
    }
    g
}

fn apply_overrides(cells: Vec<Cell>, a: &CheckArgs) -> Vec<Cell> {
    let mut out: Vec<Cell> = Vec::new();
    for mut c in cells {
        if let Some(p) = a.p {
            c.p = p;
            c.r = a.r.unwrap_or(1);
            c.b = None;
        } else if let Some(r) = a.r {
            c.r = r;
        }
        if let Some(n) = a.n {
            c.n = n;
        }
        if !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Serialize)]
struct Row {
    suite: &'static str,
    q: u64,
    n: usize,
    family: String,
    expected: Option<i64>,
    measured: Option<i64>,
    pp: Option<bool>,
    lpp: Option<bool>,
    label: Label,
    status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<String>,
}

impl Row {
    fn new(suite: &'static str, c: &Cell, family: String) -> Row {
        Row {
            suite,
            q: c.p.saturating_pow(c.r),
            n: c.n,
            family,
            expected: None,
            measured: None,
            pp: None,
            lpp: None,
            label: Label::Theorem,
            status: Status::Pass,
            note: None,
        }
    }

    fn skip(mut self, why: String) -> Row {
        self.status = Status::Skipped;
        self.note = Some(why);
        self
    }

    fn require(&mut self, ok: bool) {
        if !ok {
            self.status = Status::Fail;
        }
    }
}

fn opt<T: fmt::Display>(v: Option<T>) -> String {
    v.map_or_else(|| "-".into(), |x| x.to_string())
}

fn verdict(v: Option<bool>) -> &'static str {
    match v {
        None => "-",
        Some(true) => "pass",
        Some(false) => "fail",
    }
}

impl fmt::Display for Row {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match (self.label, self.status) {
            (Label::ConjectureEvidence, s) if s != Status::Skipped => {
                format!(
                    "conjecture evidence: {}",
                    if s == Status::Pass { "pass" } else { "fail" }
                )
            }
            (_, Status::Pass) => "PASS".into(),
            (_, Status::Fail) => "FAIL".into(),
            (_, Status::Skipped) => "SKIPPED".into(),
        };
        write!(
            f,
            "{:<10} q={:<3} n={:<2} {:<18} expected={:<4} measured={:<4} pp={:<4} lpp={:<4} {}",
            self.suite,
            self.q,
            self.n,
            self.family,
            opt(self.expected),
            opt(self.measured),
            verdict(self.pp),
            verdict(self.lpp),
            status
        )?;
        if let Some(n) = &self.note {
            write!(f, " ({n})")?;
        }
        Ok(())
    }
}

/// Cap overruns and inapplicable parameters skip the row instead of failing it.
fn skippable(e: &Error) -> bool {
    matches!(
        e,
        Error::CapExceeded { .. } | Error::UnsupportedField { .. } | Error::NoValidB(_) | Error::NoNonResidue { .. }
    )
}

fn family_row(
    v: &Verifier,
    suite: &'static str,
    c: &Cell,
    field: &FieldSpec,
    family: Family,
) -> ffperm_core::Result<Row> {
    let params = FamilyParams {
        b: c.b,
        ..Default::default()
    };
    let mut row = Row::new(suite, c, family.tag().into());
    if !constructions::family_applies(family, field) {
        return Ok(row.skip("family does not apply to this field".into()));
    }
    let claim = constructions::claim(family, field, c.n, &params)?;
    let f = constructions::build(family, field, c.n, &params)?;
    row.n = f.n();
    row.measured = Some(f.total_degree());
    let pp = v.is_pp(&f)?.passed();
    let lpp = v.is_lpp(&f)?.passed();
    row.pp = Some(pp);
    row.lpp = Some(lpp);
    row.require(match claim.property {
        Property::Pp => pp,
        Property::Lpp => lpp,
    });
    if let Some((d, label)) = claim.degree {
        row.expected = Some(d);
        row.require(f.total_degree() == d);
        if label == Label::ConjectureEvidence {
            row.label = label;
        }
    } else {
        row.note = Some("degree not claimed".into());
    }
    Ok(row)
}

fn restricted_row(v: &Verifier, suite: &'static str, c: &Cell, field: &FieldSpec) -> ffperm_core::Result<Row> {
    let mut row = Row::new(suite, c, "LPP_POWER/restrict".into());
    let b = match c.b {
        Some(b) => b,
        None => constructions::smallest_power_b(field).ok_or_else(|| Error::NoValidB(format!("q = {}", field.q())))?,
    };
    let f = constructions::lpp_power(field, b, 1)?;
    let (g, _) = constructions::lpp_restrict_at(&f)?;
    let want = constructions::max_lpp_degree(field.q(), g.n());
    row.n = g.n();
    row.expected = Some(want);
    row.measured = Some(g.total_degree());
    let lpp = v.is_lpp(&g)?.passed();
    row.lpp = Some(lpp);
    row.require(lpp && g.total_degree() == want);
    Ok(row)
}

fn run_cell(v: &Verifier, suite: &'static str, c: &Cell) -> Row {
    let tag = match c.task {
        Task::Family(f) => f.tag().to_string(),
        Task::Restricted => "LPP_POWER/restrict".into(),
        Task::Scan => "SCAN".into(),
        Task::Identities => "IDENTITIES".into(),
        Task::Criterion => "DEGREE_CRITERION".into(),
        Task::Conjecture => "LPP_CHAIN".into(),
    };
    let attempt = || -> ffperm_core::Result<Row> {
        let field = make_field(c.p, c.r)?;
        match c.task {
            Task::Family(f) => family_row(v, suite, c, &field, f),
            Task::Restricted => restricted_row(v, suite, c, &field),
            Task::Scan => {
                let rep = v.scan_pp_degree_bound(&field, c.n)?;
                let d = rep.detail.clone().unwrap_or_default();
                let mut row = Row::new(suite, c, tag.clone());
                row.expected = d["bound"].as_i64();
                row.measured = d["max_degree"].as_i64();
                row.note = Some(format!("{} balanced, {} PP", d["balanced"], d["pp_count"]));
                row.require(rep.passed());
                Ok(row)
            }
            Task::Identities => {
                let rep = v.check_identities(&field)?;
                let mut row = Row::new(suite, c, tag.clone());
                row.require(rep.passed());
                Ok(row)
            }
            Task::Criterion => {
                let rep = v.check_lemma_deg(&field, CRITERION_TRIALS, DEFAULT_SEED)?;
                let d = rep.detail.clone().unwrap_or_default();
                let mut row = Row::new(suite, c, tag.clone());
                row.expected = Some(field.q() as i64 - 2);
                row.note = Some(format!("{} {} cases", d["mode"].as_str().unwrap_or(""), d["cases"]));
                row.require(rep.passed());
                Ok(row)
            }
            Task::Conjecture => {
                let rep = v.conjecture_fn(&field, c.n)?;
                let d = rep.detail.clone().unwrap_or_default();
                let mut row = Row::new(suite, c, tag.clone());
                row.label = rep.label;
                row.expected = Some(c.n as i64 * (field.q() as i64 - 2));
                row.measured = d["degree"].as_i64();
                row.require(rep.passed());
                Ok(row)
            }
        }
    };
    match attempt() {
        Ok(row) => row,
        Err(e) if skippable(&e) => Row::new(suite, c, tag).skip(e.to_string()),
        Err(e) => {
            let mut row = Row::new(suite, c, tag);
            row.status = Status::Fail;
            row.note = Some(e.to_string());
            row
        }
    }
}

pub fn run(a: &CheckArgs, v: &Verifier) -> CmdResult {
    let names: Vec<&'static str> = match &a.suite {
        Some(s) => {
            let name = SUITES
                .iter()
                .find(|x| x.eq_ignore_ascii_case(s))
                .ok_or_else(|| Fail::Usage(format!("unknown suite {s}; expected one of {}", SUITES.join(", "))))?;
            vec![*name]
        }
        None => SUITES.to_vec(),
    };
    let v = Verifier {
        scan_cap: a.scan_cap,
        ..v.clone()
    };
    let mut rows = Vec::new();
    for name in names {
        for c in apply_overrides(grid(name), a) {
            let row = run_cell(&v, name, &c);
            if a.format == Format::Text {
                println!("{row}");
            }
            rows.push(row);
        }
    }
    let count = |s: Status| rows.iter().filter(|r| r.status == s).count();
    let theorem_failures = rows
        .iter()
        .filter(|r| r.status == Status::Fail && r.label == Label::Theorem)
        .count();
    match a.format {
        Format::Text => println!(
            "rows: {} pass, {} fail, {} skipped; theorem failures: {theorem_failures}",
            count(Status::Pass),
            count(Status::Fail),
            count(Status::Skipped)
        ),
        Format::Json => println!("{}", serde_json::to_string(&rows).expect("serializable")),
    }
    if theorem_failures > 0 {
        Err(Fail::Verdict)
    } else {
        Ok(())
    }
}
