//! Primal simplex from a feasible dictionary, Dantzig pricing.

use crate::dictionary::Dictionary;
use crate::error::{Error, Result};
use crate::phase1::infeasible_rows;
use crate::rules::{pick_ratio, RatioCandidate, SolverConfig};
use crate::scalar::Scalar;
use crate::trace::{Method, PivotRecord, Safeguard, Termination, Trace};

#[derive(Debug, Clone, PartialEq)]
pub enum Phase2Decision<T> {
    Pivot {
        row: usize,
        col: usize,
        ratio: T,
    },
    Optimal,
    /// Column `col` can increase forever while improving the objective.
    Unbounded {
        col: usize,
    },
}

#[derive(Debug, Clone)]
pub struct Phase2Run<T> {
    pub dictionary: Dictionary<T>,
    pub termination: Termination,
    pub trace: Trace<T>,
    /// Set when `termination` is [`Termination::Unbounded`].
    pub unbounded_col: Option<usize>,
}

pub fn phase2_step<T: Scalar>(d: &Dictionary<T>, cfg: &SolverConfig) -> Result<Phase2Decision<T>> {
    if let Some(&row) = infeasible_rows(d).first() {
        return Err(Error::NotPrimalFeasible { row });
    }
    let tol = d.tolerance();
    let Some(m) = cfg.pricing.select(&d.row(0)[1..], d.nonbasis(), tol) else {
        return Ok(Phase2Decision::Optimal);
    };
    let mut candidates = Vec::new();
    for i in 1..=d.rows() {
        let entry = d.get(i, m);
        if tol.is_positive(entry) {
            candidates.push(RatioCandidate {
                index: i,
                label: d.basic_label(i),
                ratio: tol.checked_div(d.rhs(i), entry)?,
                pivot: entry.clone(),
            });
        }
    }
    Ok(match pick_ratio(candidates, cfg.tie_break, false) {
        Some(best) => Phase2Decision::Pivot {
            row: best.index,
            col: m,
            ratio: best.ratio,
        },
        None => Phase2Decision::Unbounded { col: m },
    })
}

pub fn run_phase2<T: Scalar>(mut d: Dictionary<T>, cfg: &SolverConfig) -> Result<Phase2Run<T>> {
    let mut trace = Trace::start(Method::Phase2, &d);
    let mut guard = Safeguard::new(&cfg.limits, &d);
    let mut unbounded_col = None;
    let tol = d.tolerance();
    loop {
        if guard.exhausted(trace.pivots()) {
            trace.termination = Termination::IterationLimit;
            break;
        }
        let (r, m, ratio) = match phase2_step(&d, cfg)? {
            Phase2Decision::Optimal => {
                trace.termination = Termination::Optimal;
                break;
            }
            Phase2Decision::Unbounded { col } => {
                unbounded_col = Some(col);
                trace.termination = Termination::Unbounded;
                break;
            }
            Phase2Decision::Pivot { row, col, ratio } => (row, col, ratio),
        };
        let pricing = d.row(0)[1..].to_vec();
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
            infeasibility_before: None,
            infeasibility_after: None,
            corner: d.corner(),
            basis_signature: signature.clone(),
            pricing: Some(pricing),
            conjugate_exit: false,
        });
        if guard.repeats(&signature) {
            trace.termination = Termination::CycleDetected;
            break;
        }
    }
    Ok(Phase2Run {
        dictionary: d,
        termination: trace.termination,
        trace,
        unbounded_col,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dictionary::{initial_dictionary, Label};
    use crate::model::StandardProblem;
    use crate::scalar::Tolerance;
    use num_rational::BigRational;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn solve(a: &[&[i64]], b: &[i64], c: &[i64]) -> Phase2Run<BigRational> {
        let sp = StandardProblem::from_integers(a, b, c).unwrap();
        run_phase2(initial_dictionary(&sp, Tolerance::default()), &SolverConfig::default()).unwrap()
    }

    #[test]
    fn single_bound() {
        let run = solve(&[&[1]], &[1], &[1]);
        assert_eq!(run.termination, Termination::Optimal);
        assert_eq!(run.dictionary.corner(), vec![q(1)]);
        assert_eq!(*run.dictionary.objective_value(), q(1));
    }

    #[test]
    fn negative_objective_stays_at_origin() {
        let run = solve(&[&[1]], &[4], &[-1]);
        assert_eq!(run.termination, Termination::Optimal);
        assert_eq!(run.trace.pivots(), 0);
        assert_eq!(run.dictionary.corner(), vec![q(0)]);
        assert_eq!(*run.dictionary.objective_value(), q(0));
    }

    #[test]
    fn detects_unbounded_column() {
        let tol = Tolerance::default();
        let d = Dictionary::from_rows(
            (1..=3).map(|i| Label::slack(1, i)).collect(),
            vec![Label::structural(1)],
            vec![
                vec![q(0), q(-5)],
                vec![q(1), q(-1)],
                vec![q(1), q(0)],
                vec![q(1), q(-2)],
            ],
            tol,
        )
        .unwrap();
        assert_eq!(
            phase2_step(&d, &SolverConfig::default()).unwrap(),
            Phase2Decision::Unbounded { col: 1 }
        );
    }

    #[test]
    fn rejects_infeasible_start() {
        let sp = StandardProblem::from_integers(&[&[1]], &[-1], &[1]).unwrap();
        let d: Dictionary<BigRational> = initial_dictionary(&sp, Tolerance::default());
        assert_eq!(
            phase2_step(&d, &SolverConfig::default()),
            Err(Error::NotPrimalFeasible { row: 1 })
        );
    }

    #[test]
    fn two_variable_optimum() {
        // max 3x + 2y s.t. x + y <= 4, x + 3y <= 6, x <= 3
        let run = solve(&[&[1, 1], &[1, 3], &[1, 0]], &[4, 6, 3], &[3, 2]);
        assert_eq!(run.termination, Termination::Optimal);
        assert_eq!(run.dictionary.corner(), vec![q(3), q(1)]);
        assert_eq!(*run.dictionary.objective_value(), q(11));
    }
}
