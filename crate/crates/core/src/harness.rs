//! Two-phase solves, method comparison and the result types they produce.

use std::fmt;
use std::str::FromStr;

use crate::dictionary::{initial_dictionary, Dictionary, Label, LabelNames, NamingStyle};
use crate::error::{Error, Result};
use crate::model::StandardProblem;
use crate::phase1::run_phase1;
use crate::phase2::run_phase2;
use crate::rules::SolverConfig;
use crate::scalar::Scalar;
use crate::trace::{Termination, Trace};
use crate::traditional::{build_auxiliary, run_traditional_phase1};

/// Which phase 1 a solve uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Phase1Method {
    #[default]
    ArtificialFree,
    Traditional,
}

impl Phase1Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Phase1Method::ArtificialFree => "af",
            Phase1Method::Traditional => "traditional",
        }
    }

    fn naming(&self) -> NamingStyle {
        match self {
            Phase1Method::ArtificialFree => NamingStyle::SignFree,
            Phase1Method::Traditional => NamingStyle::Auxiliary,
        }
    }
}

impl FromStr for Phase1Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "af" => Ok(Phase1Method::ArtificialFree),
            "trad" | "traditional" => Ok(Phase1Method::Traditional),
            other => Err(format!("unknown method `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SolveStatus {
    Optimal,
    Unbounded,
    Infeasible,
    CycleDetected,
    IterationLimit,
}

impl SolveStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            SolveStatus::Optimal => "optimal",
            SolveStatus::Unbounded => "unbounded",
            SolveStatus::Infeasible => "infeasible",
            SolveStatus::CycleDetected => "cycle_detected",
            SolveStatus::IterationLimit => "iteration_limit",
        }
    }

    fn from_termination(t: Termination) -> Self {
        match t {
            Termination::Optimal | Termination::Feasible | Termination::DualFeasible => SolveStatus::Optimal,
            Termination::Unbounded | Termination::DualInfeasible => SolveStatus::Unbounded,
            Termination::Infeasible => SolveStatus::Infeasible,
            Termination::CycleDetected => SolveStatus::CycleDetected,
            Termination::IterationLimit => SolveStatus::IterationLimit,
        }
    }
}

impl fmt::Display for SolveStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Certificate<T> {
    /// Rows (by basic label) that are negative and whose pricing vector has
    /// no negative entry.
    Infeasible { rows: Vec<Label>, pricing: Vec<T> },
    /// Improving direction in structural space: `A·ray <= 0`, `c·ray > 0`.
    Unbounded { entering: Label, ray: Vec<T> },
}

#[derive(Debug, Clone)]
pub struct SolveOutcome<T> {
    pub method: Phase1Method,
    pub status: SolveStatus,
    /// Structural values of the last basis when it is feasible (the optimum,
    /// or the vertex an unbounded ray starts from).
    pub solution: Option<Vec<T>>,
    /// Objective in the source problem's own sense.
    pub objective: Option<T>,
    pub phase1: Trace<T>,
    pub phase2: Option<Trace<T>>,
    pub certificate: Option<Certificate<T>>,
    pub final_dictionary: Dictionary<T>,
    pub names: LabelNames,
}

impl<T: Scalar> SolveOutcome<T> {
    pub fn variable_names(&self) -> Vec<String> {
        (1..=self.final_dictionary.structural_count())
            .map(|j| self.names.name(Label::structural(j)))
            .collect()
    }

    pub fn label_name(&self, label: Label) -> String {
        self.names.name(label)
    }
}

/// Phase 1 by `method`, then phase 2 when a feasible basis was found.
pub fn solve<T: Scalar>(sp: &StandardProblem, method: Phase1Method, cfg: &SolverConfig) -> Result<SolveOutcome<T>> {
    let names = LabelNames::new(sp, method.naming());
    let (dictionary, phase1, infeasible) = match method {
        Phase1Method::ArtificialFree => {
            let run = run_phase1(initial_dictionary::<T>(sp, cfg.tolerance), cfg)?;
            (run.dictionary, run.trace, run.certificate)
        }
        Phase1Method::Traditional => {
            let run = run_traditional_phase1(build_auxiliary::<T>(sp, cfg.tolerance), cfg)?;
            (run.dictionary, run.trace, run.certificate)
        }
    };
    let mut outcome = SolveOutcome {
        method,
        status: SolveStatus::from_termination(phase1.termination),
        solution: None,
        objective: None,
        phase1,
        phase2: None,
        certificate: infeasible.map(|c| Certificate::Infeasible {
            rows: c.rows,
            pricing: c.w,
        }),
        final_dictionary: dictionary.clone(),
        names,
    };
    if outcome.phase1.termination != Termination::Feasible {
        return Ok(outcome);
    }

    let run = run_phase2(dictionary, cfg)?;
    outcome.status = SolveStatus::from_termination(run.termination);
    let d = &run.dictionary;
    if let Some(col) = run.unbounded_col {
        outcome.certificate = Some(Certificate::Unbounded {
            entering: d.nonbasic_label(col),
            ray: d.structural_direction(col),
        });
    }
    outcome.solution = Some(d.corner());
    let z = d.objective_value().clone();
    outcome.objective = Some(if sp.objective_negated() { z.negated() } else { z });
    outcome.final_dictionary = run.dictionary.clone();
    outcome.phase2 = Some(run.trace);
    Ok(outcome)
}

#[derive(Debug, Clone)]
pub struct MethodSummary<T> {
    pub termination: Termination,
    pub pivots: usize,
    pub degenerate_pivots: usize,
    /// Corner sequence with consecutive repeats collapsed.
    pub corners: Vec<Vec<T>>,
    pub trace: Trace<T>,
}

impl<T: Scalar> MethodSummary<T> {
    fn of(trace: Trace<T>) -> Self {
        MethodSummary {
            termination: trace.termination,
            pivots: trace.pivots(),
            degenerate_pivots: trace.degenerate_pivots(),
            corners: trace.distinct_corners(),
            trace,
        }
    }
}

#[derive(Debug, Clone)]
pub struct ComparisonReport<T> {
    pub artificial_free: MethodSummary<T>,
    pub traditional: MethodSummary<T>,
    pub verdicts_equal: bool,
    pub corners_equal: bool,
    pub af_not_more_pivots: bool,
    pub names: LabelNames,
}

/// Runs both phase 1 methods under the same rules, concurrently.
///
/// Fails with [`Error::VerdictMismatch`] if both reach a verdict and the
/// verdicts differ.
pub fn compare<T: Scalar>(sp: &StandardProblem, cfg: &SolverConfig) -> Result<ComparisonReport<T>> {
    let (af, trad) = std::thread::scope(|s| {
        let af = s.spawn(|| run_phase1(initial_dictionary::<T>(sp, cfg.tolerance), cfg));
        let trad = s.spawn(|| run_traditional_phase1(build_auxiliary::<T>(sp, cfg.tolerance), cfg));
        (
            af.join().expect("artificial-free run panicked"),
            trad.join().expect("traditional run panicked"),
        )
    });
    let (af, trad) = (MethodSummary::of(af?.trace), MethodSummary::of(trad?.trace));
    let verdicts_equal = af.termination == trad.termination;
    if !verdicts_equal && !af.termination.is_safeguard() && !trad.termination.is_safeguard() {
        return Err(Error::VerdictMismatch {
            af: af.termination.to_string(),
            traditional: trad.termination.to_string(),
        });
    }
    Ok(ComparisonReport {
        corners_equal: af.corners == trad.corners,
        af_not_more_pivots: af.pivots <= trad.pivots,
        verdicts_equal,
        artificial_free: af,
        traditional: trad,
        names: LabelNames::new(sp, NamingStyle::SignFree),
    })
}
