//! JSON emission for outcomes, comparison reports and oracle results.
//!
//! Rationals are always written as integer `num`/`den` pairs: objects
//! `{"num": n, "den": d}` for scalars and `[n, d]` arrays inside corner
//! points. Key order is fixed, so equal inputs serialize to equal bytes.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use serde_json::Number;

use crate::dictionary::{Label, LabelNames, NamingStyle};
use crate::harness::{Certificate, ComparisonReport, MethodSummary, SolveOutcome};
use crate::oracle::{OracleOptimum, OracleReport};
use crate::scalar::Scalar;
use crate::trace::Trace;

fn int(v: &BigInt) -> Number {
    Number::from_str(&v.to_string()).expect("integers are valid JSON numbers")
}

#[derive(Serialize)]
struct Ratio {
    num: Number,
    den: Number,
}

impl Ratio {
    fn of<T: Scalar>(v: &T) -> Ratio {
        let r = v.to_rational();
        Ratio {
            num: int(r.numer()),
            den: int(r.denom()),
        }
    }
}

fn pair<T: Scalar>(v: &T) -> [Number; 2] {
    let r = v.to_rational();
    [int(r.numer()), int(r.denom())]
}

fn point<T: Scalar>(p: &[T]) -> Vec<[Number; 2]> {
    p.iter().map(pair).collect()
}

#[derive(Serialize)]
struct VarValue {
    var: String,
    num: Number,
    den: Number,
}

fn assignment<T: Scalar>(names: &[String], values: &[T]) -> Vec<VarValue> {
    names
        .iter()
        .zip(values)
        .map(|(var, v)| {
            let r = Ratio::of(v);
            VarValue {
                var: var.clone(),
                num: r.num,
                den: r.den,
            }
        })
        .collect()
}

#[derive(Serialize)]
struct TraceEntry {
    iter: usize,
    entering: String,
    leaving: String,
    ratio: Ratio,
    degenerate: bool,
    infeasibility_sum: Option<Ratio>,
    infeasibility_sum_before: Option<Ratio>,
    corner: Vec<[Number; 2]>,
    basis: Vec<usize>,
    conjugate_exit: bool,
}

#[derive(Serialize)]
struct TraceJson {
    method: &'static str,
    termination: &'static str,
    pivots: usize,
    degenerate_pivots: usize,
    corners: Vec<Vec<[Number; 2]>>,
    entries: Vec<TraceEntry>,
}

impl TraceJson {
    fn of<T: Scalar>(trace: &Trace<T>, names: &LabelNames) -> TraceJson {
        TraceJson {
            method: trace.method.as_str(),
            termination: trace.termination.as_str(),
            pivots: trace.pivots(),
            degenerate_pivots: trace.degenerate_pivots(),
            corners: trace.corners().iter().map(|c| point(c)).collect(),
            entries: trace
                .records
                .iter()
                .map(|r| TraceEntry {
                    iter: r.iteration,
                    entering: names.name(r.entering),
                    leaving: names.name(r.leaving),
                    ratio: Ratio::of(&r.ratio),
                    degenerate: r.degenerate,
                    infeasibility_sum: r.infeasibility_after.as_ref().map(Ratio::of),
                    infeasibility_sum_before: r.infeasibility_before.as_ref().map(Ratio::of),
                    corner: point(&r.corner),
                    basis: r.basis_signature.clone(),
                    conjugate_exit: r.conjugate_exit,
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
struct InfeasibleJson {
    rows: Vec<String>,
    pricing: Vec<Ratio>,
}

#[derive(Serialize)]
struct UnboundedJson {
    entering: String,
    ray: Vec<VarValue>,
}

#[derive(Serialize)]
struct CertificatesJson {
    infeasible: Option<InfeasibleJson>,
    unbounded: Option<UnboundedJson>,
}

#[derive(Serialize)]
struct OutcomeJson {
    status: &'static str,
    method: &'static str,
    objective: Option<Ratio>,
    solution: Vec<VarValue>,
    phase1: TraceJson,
    phase2: Option<TraceJson>,
    certificates: CertificatesJson,
}

fn label_names(names: &LabelNames, labels: &[Label]) -> Vec<String> {
    labels.iter().map(|&l| names.name(l)).collect()
}

/// Serializes a solve outcome as pretty-printed JSON.
pub fn emit_outcome_json<T: Scalar>(outcome: &SolveOutcome<T>) -> String {
    let names = &outcome.names;
    let vars = outcome.variable_names();
    let mut certificates = CertificatesJson {
        infeasible: None,
        unbounded: None,
    };
    match &outcome.certificate {
        Some(Certificate::Infeasible { rows, pricing }) => {
            certificates.infeasible = Some(InfeasibleJson {
                rows: label_names(names, rows),
                pricing: pricing.iter().map(Ratio::of).collect(),
            })
        }
        Some(Certificate::Unbounded { entering, ray }) => {
            certificates.unbounded = Some(UnboundedJson {
                entering: names.name(*entering),
                ray: assignment(&vars, ray),
            })
        }
        None => {}
    }
    let json = OutcomeJson {
        status: outcome.status.as_str(),
        method: outcome.method.as_str(),
        objective: outcome.objective.as_ref().map(Ratio::of),
        solution: outcome
            .solution
            .as_ref()
            .map(|s| assignment(&vars, s))
            .unwrap_or_default(),
        phase1: TraceJson::of(&outcome.phase1, names),
        phase2: outcome.phase2.as_ref().map(|t| TraceJson::of(t, names)),
        certificates,
    };
    to_text(&json)
}

#[derive(Serialize)]
struct SummaryJson {
    termination: &'static str,
    pivots: usize,
    degenerate_pivots: usize,
    corners: Vec<Vec<[Number; 2]>>,
    trace: TraceJson,
}

impl SummaryJson {
    fn of<T: Scalar>(s: &MethodSummary<T>, names: &LabelNames) -> SummaryJson {
        SummaryJson {
            termination: s.termination.as_str(),
            pivots: s.pivots,
            degenerate_pivots: s.degenerate_pivots,
            corners: s.corners.iter().map(|c| point(c)).collect(),
            trace: TraceJson::of(&s.trace, names),
        }
    }
}

#[derive(Serialize)]
struct ComparisonJson {
    af: SummaryJson,
    traditional: SummaryJson,
    verdicts_equal: bool,
    corners_equal: bool,
    af_not_more_pivots: bool,
}

pub fn emit_comparison_json<T: Scalar>(report: &ComparisonReport<T>) -> String {
    let json = ComparisonJson {
        af: SummaryJson::of(&report.artificial_free, &report.names),
        traditional: SummaryJson::of(&report.traditional, &report.names.with_style(NamingStyle::Auxiliary)),
        verdicts_equal: report.verdicts_equal,
        corners_equal: report.corners_equal,
        af_not_more_pivots: report.af_not_more_pivots,
    };
    to_text(&json)
}

#[derive(Serialize)]
struct OptimumJson {
    kind: &'static str,
    value: Option<Ratio>,
    point: Option<Vec<[Number; 2]>>,
    ray: Option<Vec<[Number; 2]>>,
}

#[derive(Serialize)]
struct OracleJson {
    feasible: bool,
    bases_examined: usize,
    feasible_bases: usize,
    vertices: Vec<Vec<[Number; 2]>>,
    optimum: OptimumJson,
}

/// `value` is reported in the standard (maximizing) sense.
pub fn emit_oracle_json(report: &OracleReport) -> String {
    let optimum = match &report.optimum {
        OracleOptimum::Infeasible => OptimumJson {
            kind: "infeasible",
            value: None,
            point: None,
            ray: None,
        },
        OracleOptimum::Optimal { value, point: p } => OptimumJson {
            kind: "optimal",
            value: Some(Ratio::of::<BigRational>(value)),
            point: Some(point(p)),
            ray: None,
        },
        OracleOptimum::Unbounded { ray } => OptimumJson {
            kind: "unbounded",
            value: None,
            point: None,
            ray: Some(point(ray)),
        },
    };
    to_text(&OracleJson {
        feasible: report.feasible,
        bases_examined: report.bases_examined,
        feasible_bases: report.feasible_bases,
        vertices: report.vertices.iter().map(|v| point(v)).collect(),
        optimum,
    })
}

fn to_text<S: Serialize>(value: &S) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("JSON serialization of owned data");
    text.push('\n');
    text
}
