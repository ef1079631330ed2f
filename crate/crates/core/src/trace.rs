//! Per-pivot instrumentation shared by all methods.

use std::fmt;

use crate::dictionary::{Dictionary, Label};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Artificial-free primal phase 1.
    ArtificialFree,
    /// Artificial-variable primal phase 1.
    Traditional,
    /// Artificial-free dual phase 1.
    DualArtificialFree,
    /// Primal simplex from a feasible basis.
    Phase2,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::ArtificialFree => "af",
            Method::Traditional => "traditional",
            Method::DualArtificialFree => "dual-af",
            Method::Phase2 => "phase2",
        }
    }
}

/// How a simplex loop stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Termination {
    Feasible,
    Infeasible,
    DualFeasible,
    DualInfeasible,
    Optimal,
    Unbounded,
    /// A basis repeated. Not part of the textbook method.
    CycleDetected,
    /// The iteration cap was hit. Not part of the textbook method.
    IterationLimit,
}

impl Termination {
    pub fn as_str(&self) -> &'static str {
        match self {
            Termination::Feasible => "feasible",
            Termination::Infeasible => "infeasible",
            Termination::DualFeasible => "dual_feasible",
            Termination::DualInfeasible => "dual_infeasible",
            Termination::Optimal => "optimal",
            Termination::Unbounded => "unbounded",
            Termination::CycleDetected => "cycle_detected",
            Termination::IterationLimit => "iteration_limit",
        }
    }

    pub fn is_safeguard(&self) -> bool {
        matches!(self, Termination::CycleDetected | Termination::IterationLimit)
    }
}

impl fmt::Display for Termination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PivotRecord<T> {
    /// 1-based.
    pub iteration: usize,
    pub entering: Label,
    pub leaving: Label,
    /// Pivot position in the dictionary before the pivot.
    pub row: usize,
    pub col: usize,
    pub ratio: T,
    pub degenerate: bool,
    /// Infeasibility measure before / after (sum of negative rhs for the
    /// artificial-free methods, sum of artificials for the traditional one).
    /// `None` in phase 2.
    pub infeasibility_before: Option<T>,
    pub infeasibility_after: Option<T>,
    /// Structural point after the pivot.
    pub corner: Vec<T>,
    pub basis_signature: Vec<usize>,
    /// Pricing vector the entering column was chosen from.
    pub pricing: Option<Vec<T>>,
    /// Pivot made through the conjugate-slack shortcut.
    pub conjugate_exit: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Trace<T> {
    pub method: Method,
    pub initial_corner: Vec<T>,
    pub records: Vec<PivotRecord<T>>,
    pub termination: Termination,
}

impl<T: Scalar> Trace<T> {
    pub(crate) fn start(method: Method, d: &Dictionary<T>) -> Self {
        Trace {
            method,
            initial_corner: d.corner(),
            records: Vec::new(),
            termination: Termination::IterationLimit,
        }
    }

    pub fn pivots(&self) -> usize {
        self.records.len()
    }

    pub fn degenerate_pivots(&self) -> usize {
        self.records.iter().filter(|r| r.degenerate).count()
    }

    /// Initial corner followed by the corner after each pivot.
    pub fn corners(&self) -> Vec<Vec<T>> {
        std::iter::once(self.initial_corner.clone())
            .chain(self.records.iter().map(|r| r.corner.clone()))
            .collect()
    }

    /// [`Self::corners`] with consecutive repeats collapsed.
    pub fn distinct_corners(&self) -> Vec<Vec<T>> {
        let mut out = self.corners();
        out.dedup();
        out
    }
}

/// Iteration cap plus visited-basis memory for one run.
pub(crate) struct Safeguard {
    cap: usize,
    detect_cycles: bool,
    seen: std::collections::HashSet<Vec<usize>>,
}

impl Safeguard {
    pub(crate) fn new<T: Scalar>(limits: &crate::rules::Limits, d: &Dictionary<T>) -> Self {
        let mut seen = std::collections::HashSet::new();
        seen.insert(d.signature());
        Safeguard {
            cap: limits.iteration_cap(d.rows(), d.cols()),
            detect_cycles: limits.detect_cycles,
            seen,
        }
    }

    pub(crate) fn exhausted(&self, pivots_done: usize) -> bool {
        pivots_done >= self.cap
    }

    /// Records `signature`; `true` if it was visited before.
    pub(crate) fn repeats(&mut self, signature: &[usize]) -> bool {
        self.detect_cycles && !self.seen.insert(signature.to_vec())
    }
}
