//! Artificial-free primal phase 1.
//!
//! Starts from any basis, including one with negative basic values, and
//! reaches primal feasibility without auxiliary variables. Each iteration sums
//! the infeasible rows into a pricing vector `W`, enters the most negative
//! `W` column, and leaves on a two-sided ratio test that keeps every feasible
//! row feasible:
//!
//! * a feasible row (`rhs >= 0`) blocks when its pivot-column entry is
//!   positive, because that basic variable decreases toward zero;
//! * an infeasible row (`rhs < 0`) blocks when its entry is negative, because
//!   that basic variable increases toward zero.
//!
//! A zero-valued feasible row with a negative entry only increases, so it is
//! never selected. The matching artificial-variable method would spend a
//! degenerate pivot there.

use crate::dictionary::{Dictionary, Label};
use crate::error::{Error, Result};
use crate::rules::{pick_ratio, PricingRule, RatioCandidate, SolverConfig, TieBreak};
use crate::scalar::{Scalar, Tolerance};
use crate::trace::{Method, PivotRecord, Safeguard, Termination, Trace};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Phase1Verdict {
    Pivot,
    AlreadyFeasible,
    Infeasible,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Phase1Decision<T> {
    /// Rows with negative rhs (1-based).
    pub infeasible_rows: Vec<usize>,
    /// Column sums of the infeasible rows, `w[j - 1]` for column `j`.
    pub w: Vec<T>,
    pub entering: Option<usize>,
    pub leaving: Option<usize>,
    pub ratio: Option<T>,
    pub verdict: Phase1Verdict,
}

/// Proof of primal infeasibility: the listed rows have negative rhs and their
/// sum has no negative coefficient, so they cannot all be brought to zero.
#[derive(Debug, Clone, PartialEq)]
pub struct InfeasibilityCertificate<T> {
    pub rows: Vec<Label>,
    pub w: Vec<T>,
}

#[derive(Debug, Clone)]
pub struct Phase1Run<T> {
    pub dictionary: Dictionary<T>,
    pub termination: Termination,
    pub trace: Trace<T>,
    pub certificate: Option<InfeasibilityCertificate<T>>,
}

pub fn infeasible_rows<T: Scalar>(d: &Dictionary<T>) -> Vec<usize> {
    let tol = d.tolerance();
    (1..=d.rows()).filter(|&i| tol.is_negative(d.rhs(i))).collect()
}

pub fn phase1_objective_vector<T: Scalar>(d: &Dictionary<T>, rows: &[usize]) -> Vec<T> {
    (1..=d.cols())
        .map(|j| rows.iter().fold(T::zero(), |acc, &i| acc.plus(d.get(i, j))))
        .collect()
}

/// Sum of the magnitudes of the negative basic values.
pub fn infeasibility_sum<T: Scalar>(d: &Dictionary<T>) -> T {
    infeasible_rows(d)
        .into_iter()
        .fold(T::zero(), |acc, i| acc.minus(d.rhs(i)))
}

/// Entering column for pricing vector `w`; `None` means no column can reduce
/// the infeasibility, i.e. the problem is infeasible.
pub fn select_entering<T: Scalar>(w: &[T], nonbasis: &[Label], rule: PricingRule, tol: Tolerance) -> Option<usize> {
    rule.select(w, nonbasis, tol)
}

/// Leaving row for entering column `m`, with its ratio.
pub fn select_leaving<T: Scalar>(d: &Dictionary<T>, m: usize, tie: TieBreak) -> Result<(usize, T)> {
    let tol = d.tolerance();
    let mut candidates = Vec::new();
    for i in 1..=d.rows() {
        let rhs = d.rhs(i);
        let entry = d.get(i, m);
        let eligible = if tol.is_negative(rhs) {
            tol.is_negative(entry)
        } else {
            tol.is_positive(entry)
        };
        if eligible {
            candidates.push(RatioCandidate {
                index: i,
                label: d.basic_label(i),
                ratio: tol.checked_div(rhs, entry)?,
                pivot: entry.clone(),
            });
        }
    }
    pick_ratio(candidates, tie, false)
        .map(|c| (c.index, c.ratio))
        .ok_or(Error::NoEligibleRow { col: m })
}

pub fn phase1_step<T: Scalar>(d: &Dictionary<T>, cfg: &SolverConfig) -> Result<Phase1Decision<T>> {
    let rows = infeasible_rows(d);
    let w = phase1_objective_vector(d, &rows);
    let mut decision = Phase1Decision {
        infeasible_rows: rows,
        w,
        entering: None,
        leaving: None,
        ratio: None,
        verdict: Phase1Verdict::AlreadyFeasible,
    };
    if decision.infeasible_rows.is_empty() {
        return Ok(decision);
    }
    let Some(m) = select_entering(&decision.w, d.nonbasis(), cfg.pricing, d.tolerance()) else {
        decision.verdict = Phase1Verdict::Infeasible;
        return Ok(decision);
    };
    let (r, t) = select_leaving(d, m, cfg.tie_break)?;
    decision.entering = Some(m);
    decision.leaving = Some(r);
    decision.ratio = Some(t);
    decision.verdict = Phase1Verdict::Pivot;
    Ok(decision)
}

/// Iterates [`phase1_step`] until feasible, infeasible, or a safeguard stops.
pub fn run_phase1<T: Scalar>(mut d: Dictionary<T>, cfg: &SolverConfig) -> Result<Phase1Run<T>> {
    let mut trace = Trace::start(Method::ArtificialFree, &d);
    let mut guard = Safeguard::new(&cfg.limits, &d);
    let mut certificate = None;
    let tol = d.tolerance();
    loop {
        if guard.exhausted(trace.pivots()) {
            trace.termination = Termination::IterationLimit;
            break;
        }
        let decision = phase1_step(&d, cfg)?;
        let (r, m, ratio) = match decision.verdict {
            Phase1Verdict::AlreadyFeasible => {
                trace.termination = Termination::Feasible;
                break;
            }
            Phase1Verdict::Infeasible => {
                certificate = Some(InfeasibilityCertificate {
                    rows: decision.infeasible_rows.iter().map(|&i| d.basic_label(i)).collect(),
                    w: decision.w,
                });
                trace.termination = Termination::Infeasible;
                break;
            }
            Phase1Verdict::Pivot => (
                decision.leaving.expect("pivot verdict carries a row"),
                decision.entering.expect("pivot verdict carries a column"),
                decision.ratio.clone().expect("pivot verdict carries a ratio"),
            ),
        };
        let before = infeasibility_sum(&d);
        let (entering, leaving) = (d.nonbasic_label(m), d.basic_label(r));
        d.pivot_in_place(r, m)?;
        let signature = d.signature();
        trace.records.push(PivotRecord {
            iteration: trace.pivots() + 1,
            entering,
            leaving,
            row: r,
            col: m,
            degenerate: tol.is_zero(&ratio),
            ratio,
            infeasibility_before: Some(before),
            infeasibility_after: Some(infeasibility_sum(&d)),
            corner: d.corner(),
            basis_signature: signature.clone(),
            pricing: Some(decision.w),
            conjugate_exit: false,
        });
        if guard.repeats(&signature) {
            trace.termination = Termination::CycleDetected;
            break;
        }
    }
    Ok(Phase1Run {
        dictionary: d,
        termination: trace.termination,
        trace,
        certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dictionary::initial_dictionary;
    use crate::model::StandardProblem;
    use num_rational::BigRational;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn worked() -> Dictionary<BigRational> {
        let sp = StandardProblem::from_integers(
            &[&[1, 0], &[0, -1], &[-3, -2], &[-1, -1], &[-5, -4]],
            &[4, -6, -18, -8, -32],
            &[3, 5],
        )
        .unwrap();
        initial_dictionary(&sp, Tolerance::default())
    }

    #[test]
    fn first_dictionary_decision() {
        let d = worked();
        assert_eq!(infeasible_rows(&d), vec![2, 3, 4, 5]);
        let dec = phase1_step(&d, &SolverConfig::trace_mode()).unwrap();
        assert_eq!(dec.w, vec![q(-9, 1), q(-8, 1)]);
        assert_eq!(dec.entering, Some(1));
        assert_eq!(dec.leaving, Some(1));
        assert_eq!(dec.ratio, Some(q(4, 1)));
        assert_eq!(dec.verdict, Phase1Verdict::Pivot);
    }

    #[test]
    fn second_dictionary_tie_resolves_to_smaller_pivot() {
        let d = worked().pivot(1, 1).unwrap();
        let rows = infeasible_rows(&d);
        assert_eq!(phase1_objective_vector(&d, &rows), vec![q(9, 1), q(-8, 1)]);
        assert_eq!(select_leaving(&d, 2, TieBreak::SmallestAbsPivot).unwrap(), (3, q(3, 1)));
        assert_eq!(select_leaving(&d, 2, TieBreak::LargestAbsPivot).unwrap(), (5, q(3, 1)));
    }

    #[test]
    fn zero_rhs_row_with_negative_entry_is_skipped() {
        let d = worked().pivot(1, 1).unwrap().pivot(3, 2).unwrap();
        assert_eq!(infeasible_rows(&d), vec![2, 4]);
        assert_eq!(*d.rhs(5), q(0, 1));
        // column 1 holds w1; row 5 (w5) has rhs 0 and entry -1.
        assert_eq!(*d.get(5, 1), q(-1, 1));
        assert_eq!(select_leaving(&d, 1, TieBreak::SmallestAbsPivot).unwrap(), (4, q(2, 1)));
        assert_eq!(select_leaving(&d, 1, TieBreak::SmallestLabel).unwrap(), (2, q(2, 1)));
    }

    #[test]
    fn empty_w_when_feasible() {
        let sp = StandardProblem::from_integers(&[&[1]], &[1], &[1]).unwrap();
        let d: Dictionary<BigRational> = initial_dictionary(&sp, Tolerance::default());
        let dec = phase1_step(&d, &SolverConfig::default()).unwrap();
        assert_eq!(dec.verdict, Phase1Verdict::AlreadyFeasible);
        assert_eq!(dec.w, vec![q(0, 1)]);
        let run = run_phase1(d, &SolverConfig::default()).unwrap();
        assert_eq!(run.termination, Termination::Feasible);
        assert_eq!(run.trace.pivots(), 0);
    }

    #[test]
    fn contradictory_bounds_are_infeasible_after_one_pivot() {
        let sp = StandardProblem::from_integers(&[&[1], &[-1]], &[1, -2], &[0]).unwrap();
        let d: Dictionary<BigRational> = initial_dictionary(&sp, Tolerance::default());
        let run = run_phase1(d, &SolverConfig::default()).unwrap();
        assert_eq!(run.termination, Termination::Infeasible);
        assert_eq!(run.trace.pivots(), 1);
        let cert = run.certificate.unwrap();
        assert_eq!(cert.w, vec![q(1, 1)]);
        assert_eq!(cert.rows.len(), 1);
    }

    #[test]
    fn no_eligible_row_is_an_internal_error() {
        let d = worked();
        // one feasible row, entry -1: nothing bounds the step
        let sp = StandardProblem::from_integers(&[&[-1]], &[1], &[1]).unwrap();
        let f: Dictionary<BigRational> = initial_dictionary(&sp, Tolerance::default());
        assert_eq!(
            select_leaving(&f, 1, TieBreak::SmallestLabel),
            Err(Error::NoEligibleRow { col: 1 })
        );
        assert!(select_leaving(&d, 2, TieBreak::SmallestLabel).is_ok());
    }

    #[test]
    fn iteration_cap_stops_the_loop() {
        let mut cfg = SolverConfig::trace_mode();
        cfg.limits.max_iterations = Some(1);
        let run = run_phase1(worked(), &cfg).unwrap();
        assert_eq!(run.termination, Termination::IterationLimit);
        assert_eq!(run.trace.pivots(), 1);
    }
}
