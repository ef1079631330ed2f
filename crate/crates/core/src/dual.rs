//! Artificial-free dual phase 1: reach dual feasibility (a nonnegative
//! objective row) without an artificial bounding constraint.
//!
//! The step is the exact mirror of the primal artificial-free step applied to
//! the negative transpose of the dictionary. Written out on the dictionary
//! itself:
//!
//! * `K` = columns with a negative objective entry, `W'_i` = sum of row `i`
//!   over `K`;
//! * the leaving row is the one with the largest positive `W'_i` (ties: the
//!   smallest basic label); none positive means dual infeasible;
//! * the entering column maximizes `d[0][j] / d[r][j]` over columns with
//!   `d[0][j] < 0, d[r][j] > 0` or `d[0][j] >= 0, d[r][j] < 0`.

use crate::dictionary::Dictionary;
use crate::error::{Error, Result};
use crate::rules::{pick_ratio, RatioCandidate, SolverConfig};
use crate::scalar::Scalar;
use crate::trace::{Method, PivotRecord, Safeguard, Termination, Trace};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DualVerdict {
    Pivot,
    AlreadyDualFeasible,
    DualInfeasible,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DualPhase1Decision<T> {
    /// Columns with a negative objective entry (1-based).
    pub infeasible_cols: Vec<usize>,
    /// Row sums over `infeasible_cols`, `w_prime[i - 1]` for row `i`.
    pub w_prime: Vec<T>,
    pub leaving: Option<usize>,
    pub entering: Option<usize>,
    /// Mirror of the primal ratio, `-d[0][m] / d[r][m] >= 0`.
    pub ratio: Option<T>,
    pub verdict: DualVerdict,
}

#[derive(Debug, Clone)]
pub struct DualPhase1Run<T> {
    pub dictionary: Dictionary<T>,
    pub termination: Termination,
    pub trace: Trace<T>,
}

pub fn dual_infeasible_cols<T: Scalar>(d: &Dictionary<T>) -> Vec<usize> {
    let tol = d.tolerance();
    (1..=d.cols()).filter(|&j| tol.is_negative(d.get(0, j))).collect()
}

/// Sum of the magnitudes of the negative objective-row entries.
pub fn dual_infeasibility_sum<T: Scalar>(d: &Dictionary<T>) -> T {
    dual_infeasible_cols(d)
        .into_iter()
        .fold(T::zero(), |acc, j| acc.minus(d.get(0, j)))
}

pub fn dual_phase1_step<T: Scalar>(d: &Dictionary<T>, cfg: &SolverConfig) -> Result<DualPhase1Decision<T>> {
    let tol = d.tolerance();
    let cols = dual_infeasible_cols(d);
    let w_prime: Vec<T> = (1..=d.rows())
        .map(|i| cols.iter().fold(T::zero(), |acc, &k| acc.plus(d.get(i, k))))
        .collect();
    let mut decision = DualPhase1Decision {
        infeasible_cols: cols,
        w_prime,
        leaving: None,
        entering: None,
        ratio: None,
        verdict: DualVerdict::AlreadyDualFeasible,
    };
    if decision.infeasible_cols.is_empty() {
        return Ok(decision);
    }
    // Largest positive W' is the most negative entry of the mirrored vector.
    let mirrored: Vec<T> = decision.w_prime.iter().map(Scalar::negated).collect();
    let Some(r) = cfg.pricing.select(&mirrored, d.basis(), tol) else {
        decision.verdict = DualVerdict::DualInfeasible;
        return Ok(decision);
    };
    let mut candidates = Vec::new();
    for j in 1..=d.cols() {
        let obj = d.get(0, j);
        let entry = d.get(r, j);
        let eligible = if tol.is_negative(obj) {
            tol.is_positive(entry)
        } else {
            tol.is_negative(entry)
        };
        if eligible {
            candidates.push(RatioCandidate {
                index: j,
                label: d.nonbasic_label(j),
                ratio: tol.checked_div(obj, entry)?,
                pivot: entry.clone(),
            });
        }
    }
    let best = pick_ratio(candidates, cfg.tie_break, true).ok_or(Error::NoEligibleRow { col: r })?;
    decision.leaving = Some(r);
    decision.entering = Some(best.index);
    decision.ratio = Some(best.ratio.negated());
    decision.verdict = DualVerdict::Pivot;
    Ok(decision)
}

pub fn run_dual_phase1<T: Scalar>(mut d: Dictionary<T>, cfg: &SolverConfig) -> Result<DualPhase1Run<T>> {
    let mut trace = Trace::start(Method::DualArtificialFree, &d);
    let mut guard = Safeguard::new(&cfg.limits, &d);
    let tol = d.tolerance();
    loop {
        if guard.exhausted(trace.pivots()) {
            trace.termination = Termination::IterationLimit;
            break;
        }
        let decision = dual_phase1_step(&d, cfg)?;
        let (r, m, ratio) = match decision.verdict {
            DualVerdict::AlreadyDualFeasible => {
                trace.termination = Termination::DualFeasible;
                break;
            }
            DualVerdict::DualInfeasible => {
                trace.termination = Termination::DualInfeasible;
                break;
            }
            DualVerdict::Pivot => (
                decision.leaving.expect("pivot verdict carries a row"),
                decision.entering.expect("pivot verdict carries a column"),
                decision.ratio.clone().expect("pivot verdict carries a ratio"),
            ),
        };
        let before = dual_infeasibility_sum(&d);
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
            infeasibility_after: Some(dual_infeasibility_sum(&d)),
            corner: d.corner(),
            basis_signature: signature.clone(),
            pricing: Some(decision.w_prime),
            conjugate_exit: false,
        });
        if guard.repeats(&signature) {
            trace.termination = Termination::CycleDetected;
            break;
        }
    }
    Ok(DualPhase1Run {
        dictionary: d,
        termination: trace.termination,
        trace,
    })
}
