//! Classical phase 1 with artificial variables.
//!
//! Rows with negative rhs get an artificial variable `v_i` that starts basic
//! with value `-b_i`; the phase-1 objective maximizes `-sum(v)` and is carried
//! as an extra row next to the real objective. Artificials that leave the
//! basis are dropped. This exists as a reference for the artificial-free
//! method and reproduces the stalling that method avoids.

use std::collections::BTreeMap;

use crate::dictionary::{Dictionary, Label, LabelKind};
use crate::error::{Error, Result};
use crate::model::StandardProblem;
use crate::rules::{pick_ratio, RatioCandidate, SolverConfig};
use crate::scalar::{Scalar, Tolerance};
use crate::trace::{Method, PivotRecord, Safeguard, Termination, Trace};

#[derive(Debug, Clone, PartialEq)]
pub struct AuxiliaryDictionary<T> {
    inner: Dictionary<T>,
    /// Phase-1 objective row `z'` in dictionary convention, same width as
    /// the inner rows.
    phase1_row: Vec<T>,
    /// Artificial label -> its slack on the same row.
    conjugate: BTreeMap<Label, Label>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum TraditionalDecision<T> {
    Pivot {
        row: usize,
        col: usize,
        ratio: T,
        /// A zero-valued artificial leaves through its conjugate slack.
        conjugate_exit: bool,
    },
    /// `z'` reached its optimum at zero.
    Feasible,
    /// `z'` is optimal but negative.
    Infeasible,
}

#[derive(Debug, Clone)]
pub struct TraditionalRun<T> {
    /// Artificial-free dictionary on success; otherwise the inner dictionary
    /// with any remaining artificials.
    pub dictionary: Dictionary<T>,
    pub termination: Termination,
    pub trace: Trace<T>,
    /// Sum of the artificials at termination.
    pub artificial_sum: T,
    /// On infeasibility: the artificials still basic and the optimal,
    /// nonnegative phase-1 pricing row.
    pub certificate: Option<crate::phase1::InfeasibilityCertificate<T>>,
}

pub fn build_auxiliary<T: Scalar>(sp: &StandardProblem, tol: Tolerance) -> AuxiliaryDictionary<T> {
    let (m, p) = (sp.rows(), sp.cols());
    let negative: Vec<usize> = (1..=m)
        .filter(|&i| tol.is_negative(&T::from_rational(&sp.b()[i - 1])))
        .collect();

    let nonbasis: Vec<Label> = (1..=p)
        .map(Label::structural)
        .chain(negative.iter().map(|&i| Label::slack(p, i)))
        .collect();
    let width = nonbasis.len() + 1;

    let mut basis = Vec::with_capacity(m);
    let mut rows = Vec::with_capacity(m + 1);
    let mut objective = vec![T::zero(); width];
    for (j, c) in sp.c().iter().enumerate() {
        objective[j + 1] = T::from_rational(&-c);
    }
    rows.push(objective);
    let mut conjugate = BTreeMap::new();
    for i in 1..=m {
        let a = &sp.a()[i - 1];
        let b = T::from_rational(&sp.b()[i - 1]);
        let mut row = vec![T::zero(); width];
        if let Some(k) = negative.iter().position(|&r| r == i) {
            // v_i = -b_i + a_i x + s_i
            let art = Label::artificial(p, m, i);
            basis.push(art);
            conjugate.insert(art, Label::slack(p, i));
            row[0] = b.negated();
            for (j, v) in a.iter().enumerate() {
                row[j + 1] = T::from_rational(&-v);
            }
            row[p + 1 + k] = T::one().negated();
        } else {
            basis.push(Label::slack(p, i));
            row[0] = b;
            for (j, v) in a.iter().enumerate() {
                row[j + 1] = T::from_rational(v);
            }
        }
        rows.push(row);
    }
    let inner = Dictionary::from_rows(basis, nonbasis, rows, tol).expect("consistent dimensions");
    let phase1_row = artificial_row(&inner);
    AuxiliaryDictionary {
        inner,
        phase1_row,
        conjugate,
    }
}

/// `z' = -sum(v)` written over the current nonbasis.
fn artificial_row<T: Scalar>(d: &Dictionary<T>) -> Vec<T> {
    let mut row = vec![T::zero(); d.cols() + 1];
    for i in 1..=d.rows() {
        if d.basic_label(i).kind == LabelKind::Artificial {
            for (acc, v) in row.iter_mut().zip(d.row(i)) {
                *acc = acc.minus(v);
            }
        }
    }
    row
}

impl<T: Scalar> AuxiliaryDictionary<T> {
    pub fn inner(&self) -> &Dictionary<T> {
        &self.inner
    }

    pub fn phase1_row(&self) -> &[T] {
        &self.phase1_row
    }

    /// `z'` recomputed from the basic artificial rows; always equals
    /// [`Self::phase1_row`].
    pub fn recomputed_phase1_row(&self) -> Vec<T> {
        artificial_row(&self.inner)
    }

    pub fn artificials(&self) -> impl Iterator<Item = Label> + '_ {
        self.conjugate.keys().copied()
    }

    pub fn conjugate_of(&self, artificial: Label) -> Option<Label> {
        self.conjugate.get(&artificial).copied()
    }

    /// Sum of the basic artificials.
    pub fn artificial_sum(&self) -> T {
        self.phase1_row[0].negated()
    }

    pub fn basic_artificials(&self) -> Vec<usize> {
        (1..=self.inner.rows())
            .filter(|&i| self.inner.basic_label(i).kind == LabelKind::Artificial)
            .collect()
    }

    /// Pivots both objective rows and the constraint rows, then drops the
    /// leaving label's column if it is artificial.
    pub fn pivot(&mut self, r: usize, m: usize) -> Result<()> {
        self.inner.pivot_external_row(&mut self.phase1_row, r, m)?;
        self.inner.pivot_in_place(r, m)?;
        if self.inner.nonbasic_label(m).kind == LabelKind::Artificial {
            self.inner.remove_column(m);
            self.phase1_row.remove(m);
        }
        Ok(())
    }

    fn into_dictionary(self) -> Dictionary<T> {
        self.inner
    }
}

/// Next move of the artificial-variable phase 1.
pub fn traditional_step<T: Scalar>(aux: &AuxiliaryDictionary<T>, cfg: &SolverConfig) -> Result<TraditionalDecision<T>> {
    let d = &aux.inner;
    let tol = d.tolerance();
    if cfg.conjugate_slack_trick {
        if let Some(r) = zero_artificial_row(aux) {
            let slack = aux.conjugate[&d.basic_label(r)];
            let col = d
                .col_of(slack)
                .ok_or_else(|| Error::Internal("conjugate slack is basic".into()))?;
            return Ok(TraditionalDecision::Pivot {
                row: r,
                col,
                ratio: T::zero(),
                conjugate_exit: true,
            });
        }
    }
    let Some(m) = cfg.pricing.select(&aux.phase1_row[1..], d.nonbasis(), tol) else {
        return Ok(if tol.is_zero(&aux.phase1_row[0]) {
            TraditionalDecision::Feasible
        } else {
            TraditionalDecision::Infeasible
        });
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
    let best = pick_ratio(candidates, cfg.tie_break, false).ok_or(Error::NoEligibleRow { col: m })?;
    Ok(TraditionalDecision::Pivot {
        row: best.index,
        col: m,
        ratio: best.ratio,
        conjugate_exit: false,
    })
}

fn zero_artificial_row<T: Scalar>(aux: &AuxiliaryDictionary<T>) -> Option<usize> {
    let tol = aux.inner.tolerance();
    aux.basic_artificials()
        .into_iter()
        .find(|&i| tol.is_zero(aux.inner.rhs(i)))
}

pub fn run_traditional_phase1<T: Scalar>(
    mut aux: AuxiliaryDictionary<T>,
    cfg: &SolverConfig,
) -> Result<TraditionalRun<T>> {
    let mut trace = Trace::start(Method::Traditional, &aux.inner);
    let mut guard = Safeguard::new(&cfg.limits, &aux.inner);
    loop {
        if guard.exhausted(trace.pivots()) {
            trace.termination = Termination::IterationLimit;
            break;
        }
        match traditional_step(&aux, cfg)? {
            TraditionalDecision::Feasible => {
                // z' = 0 leaves any remaining artificials at zero; their
                // conjugate slacks carry entry -1 in the same row.
                while let Some(r) = aux.basic_artificials().first().copied() {
                    let slack = aux.conjugate[&aux.inner.basic_label(r)];
                    let col = aux
                        .inner
                        .col_of(slack)
                        .ok_or_else(|| Error::Internal("conjugate slack is basic".into()))?;
                    record_pivot(&mut aux, &mut trace, r, col, T::zero(), true)?;
                }
                trace.termination = Termination::Feasible;
                break;
            }
            TraditionalDecision::Infeasible => {
                trace.termination = Termination::Infeasible;
                break;
            }
            TraditionalDecision::Pivot {
                row,
                col,
                ratio,
                conjugate_exit,
            } => {
                record_pivot(&mut aux, &mut trace, row, col, ratio, conjugate_exit)?;
                let signature = aux.inner.signature();
                if guard.repeats(&signature) {
                    trace.termination = Termination::CycleDetected;
                    break;
                }
            }
        }
    }
    let artificial_sum = aux.artificial_sum();
    let certificate = (trace.termination == Termination::Infeasible).then(|| crate::phase1::InfeasibilityCertificate {
        rows: aux
            .basic_artificials()
            .into_iter()
            .map(|i| aux.inner.basic_label(i))
            .collect(),
        w: aux.phase1_row[1..].to_vec(),
    });
    Ok(TraditionalRun {
        certificate,
        termination: trace.termination,
        dictionary: aux.into_dictionary(),
        trace,
        artificial_sum,
    })
}

fn record_pivot<T: Scalar>(
    aux: &mut AuxiliaryDictionary<T>,
    trace: &mut Trace<T>,
    r: usize,
    m: usize,
    ratio: T,
    conjugate_exit: bool,
) -> Result<()> {
    let tol = aux.inner.tolerance();
    let before = aux.artificial_sum();
    let degenerate = tol.is_zero(aux.inner.rhs(r));
    let pricing = aux.phase1_row[1..].to_vec();
    let (entering, leaving) = (aux.inner.nonbasic_label(m), aux.inner.basic_label(r));
    aux.pivot(r, m)?;
    trace.records.push(PivotRecord {
        iteration: trace.pivots() + 1,
        entering,
        leaving,
        row: r,
        col: m,
        ratio,
        degenerate,
        infeasibility_before: Some(before),
        infeasibility_after: Some(aux.artificial_sum()),
        corner: aux.inner.corner(),
        basis_signature: aux.inner.signature(),
        pricing: Some(pricing),
        conjugate_exit,
    });
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn ints(vals: &[i64]) -> Vec<BigRational> {
        vals.iter().map(|&v| q(v, 1)).collect()
    }

    fn worked() -> StandardProblem {
        StandardProblem::from_integers(
            &[&[1, 0], &[0, -1], &[-3, -2], &[-1, -1], &[-5, -4]],
            &[4, -6, -18, -8, -32],
            &[3, 5],
        )
        .unwrap()
    }

    #[test]
    fn auxiliary_rows_for_worked_example() {
        let aux: AuxiliaryDictionary<BigRational> = build_auxiliary(&worked(), Tolerance::default());
        assert_eq!(aux.phase1_row(), ints(&[-64, -9, -8, 1, 1, 1, 1]).as_slice());
        assert_eq!(aux.inner().row(0), ints(&[0, -3, -5, 0, 0, 0, 0]).as_slice());
        assert_eq!(aux.inner().row(2), ints(&[6, 0, 1, -1, 0, 0, 0]).as_slice());
        assert_eq!(aux.inner().row(1), ints(&[4, 1, 0, 0, 0, 0, 0]).as_slice());
        assert_eq!(aux.basic_artificials(), vec![2, 3, 4, 5]);
        assert_eq!(aux.artificial_sum(), q(64, 1));
    }

    #[test]
    fn no_artificials_when_rhs_nonnegative() {
        let sp = StandardProblem::from_integers(&[&[1, 1]], &[3], &[1, 1]).unwrap();
        let aux: AuxiliaryDictionary<BigRational> = build_auxiliary(&sp, Tolerance::default());
        assert!(aux.artificials().next().is_none());
        assert_eq!(aux.phase1_row(), ints(&[0, 0, 0]).as_slice());
        let run = run_traditional_phase1(aux, &SolverConfig::default()).unwrap();
        assert_eq!(run.termination, Termination::Feasible);
        assert_eq!(run.trace.pivots(), 0);
    }

    #[test]
    fn single_negative_row_gets_one_artificial() {
        let sp = StandardProblem::from_integers(&[&[1]], &[-1], &[0]).unwrap();
        let aux: AuxiliaryDictionary<BigRational> = build_auxiliary(&sp, Tolerance::default());
        assert_eq!(aux.artificials().count(), 1);
        assert_eq!(*aux.inner().rhs(1), q(1, 1));
        // x1 <= -1 has no nonnegative solution.
        let run = run_traditional_phase1(aux, &SolverConfig::default()).unwrap();
        assert_eq!(run.termination, Termination::Infeasible);
    }

    #[test]
    fn worked_example_steps() {
        let cfg = SolverConfig::trace_mode();
        let mut aux: AuxiliaryDictionary<BigRational> = build_auxiliary(&worked(), Tolerance::default());
        let expect = [(1, 1, q(4, 1)), (3, 2, q(3, 1))];
        for (row, col, ratio) in expect {
            match traditional_step(&aux, &cfg).unwrap() {
                TraditionalDecision::Pivot {
                    row: r,
                    col: c,
                    ratio: t,
                    ..
                } => {
                    assert_eq!((r, c, t), (row, col, ratio));
                    aux.pivot(r, c).unwrap();
                }
                other => panic!("unexpected {other:?}"),
            }
            assert_eq!(aux.phase1_row(), aux.recomputed_phase1_row().as_slice());
        }
        assert_eq!(aux.phase1_row()[0], q(-4, 1));
        // third pivot: s1 enters, v5 leaves at ratio 0
        match traditional_step(&aux, &cfg).unwrap() {
            TraditionalDecision::Pivot { row, col, ratio, .. } => {
                assert_eq!(aux.inner().basic_label(row), Label::artificial(2, 5, 5));
                assert_eq!(aux.inner().nonbasic_label(col), Label::slack(2, 1));
                assert_eq!(ratio, q(0, 1));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn infeasible_pair_leaves_unit_violation() {
        let sp = StandardProblem::from_integers(&[&[1], &[-1]], &[1, -2], &[1]).unwrap();
        let aux: AuxiliaryDictionary<BigRational> = build_auxiliary(&sp, Tolerance::default());
        let run = run_traditional_phase1(aux, &SolverConfig::default()).unwrap();
        assert_eq!(run.termination, Termination::Infeasible);
        assert_eq!(run.artificial_sum, q(1, 1));
    }
}
