use serde::{Deserialize, Serialize};

use crate::gf::Elem;
use crate::mvpoly::{FuncTable, MultiPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum ReportKind {
    Pp,
    Lpp,
    Degree,
    Identity,
    Scan,
    Conjecture,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Label {
    #[serde(rename = "theorem")]
    Theorem,
    #[serde(rename = "conjecture evidence")]
    ConjectureEvidence,
}

impl Label {
    pub fn as_str(self) -> &'static str {
        match self {
            Label::Theorem => "theorem",
            Label::ConjectureEvidence => "conjecture evidence",
        }
    }
}

/// Counterexample attached to a failing report. Element values and points
/// are given as ranks; coordinates are 1-based variable numbers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Witness {
    /// `value` has `count` preimages instead of `expected`; `preimage` is
    /// the lowest-rank point mapping to it, if any.
    Unbalanced {
        value: u32,
        count: u64,
        expected: u64,
        preimage: Option<Vec<u32>>,
    },
    /// Fixing every variable except `coordinate` to `assignment` (in
    /// variable order), the inputs `x` and `y` both map to `value`.
    Collision {
        coordinate: usize,
        assignment: Vec<u32>,
        x: u32,
        y: u32,
        value: u32,
    },
    Degree {
        expected: i64,
        actual: i64,
    },
    Identity {
        name: String,
    },
    /// A univariate value table where the degree-(q−2) criterion and the
    /// interpolated degree disagree.
    DegreeCriterion {
        values: Vec<u32>,
        criterion: bool,
        degree: i64,
    },
    /// A balanced table whose interpolant breaks the degree bound or fails
    /// the permutation check.
    Scan {
        table: Vec<u32>,
        degree: i64,
        bound: i64,
    },
}

impl Witness {
    /// Re-derives the failure for `f` by direct evaluation, independent of
    /// the table-based checkers. Witnesses that are not about `f` itself
    /// return `true` when they are internally consistent.
    pub fn recheck(&self, f: &MultiPoly) -> bool {
        let field = f.field();
        let elem = |r: u32| field.elem(r as u64).ok();
        match self {
            Witness::Unbalanced {
                value,
                count,
                expected,
                preimage,
            } => {
                if count == expected {
                    return false;
                }
                let Some(v) = elem(*value) else { return false };
                let pts: Vec<Vec<Elem>> = f.to_table().iter_points().map(|(p, _)| p).collect();
                let direct = pts.iter().filter(|p| f.eval(p).ok() == Some(v)).count() as u64;
                let pre_ok = match preimage {
                    Some(pt) => {
                        let pt: Option<Vec<Elem>> = pt.iter().map(|&r| elem(r)).collect();
                        pt.and_then(|p| f.eval(&p).ok()) == Some(v)
                    }
                    None => *count == 0,
                };
                direct == *count && pre_ok
            }
            Witness::Collision {
                coordinate,
                assignment,
                x,
                y,
                value,
            } => {
                if x == y || *coordinate == 0 || *coordinate > f.n() || assignment.len() + 1 != f.n() {
                    return false;
                }
                let build = |at: u32| -> Option<Vec<Elem>> {
                    let mut pt: Vec<Elem> = assignment.iter().map(|&r| elem(r)).collect::<Option<_>>()?;
                    pt.insert(coordinate - 1, elem(at)?);
                    Some(pt)
                };
                let (Some(px), Some(py)) = (build(*x), build(*y)) else {
                    return false;
                };
                let v = elem(*value);
                f.eval(&px).ok() == v && f.eval(&py).ok() == v
            }
            Witness::Degree { expected, actual } => expected != actual && f.total_degree() == *actual,
            Witness::Identity { .. } => true,
            Witness::DegreeCriterion {
                values,
                criterion,
                degree,
            } => {
                let vals: Option<Vec<Elem>> = values.iter().map(|&r| elem(r)).collect();
                let Some(vals) = vals else { return false };
                let Ok(t) = FuncTable::from_values(field, 1, vals) else {
                    return false;
                };
                let d = t.interpolate().total_degree();
                d == *degree && *criterion != (d == field.q() as i64 - 2)
            }
            Witness::Scan { degree, bound, .. } => degree > bound,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stats {
    pub points: u64,
    pub ms: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub kind: ReportKind,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub stats: Stats,
    pub label: Label,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<serde_json::Value>,
}

impl VerifyReport {
    pub(crate) fn new(kind: ReportKind, witness: Option<Witness>, points: u64, ms: u64) -> VerifyReport {
        VerifyReport {
            kind,
            verdict: if witness.is_some() {
                Verdict::Fail
            } else {
                Verdict::Pass
            },
            witness,
            stats: Stats { points, ms },
            label: Label::Theorem,
            detail: None,
        }
    }

    pub(crate) fn with_detail(mut self, detail: serde_json::Value) -> VerifyReport {
        self.detail = Some(detail);
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("report JSON is always serializable")
    }
}
