//! Entering and leaving rules shared by every simplex variant.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::dictionary::Label;
use crate::scalar::{Scalar, Tolerance};

/// Pricing rule for the entering variable.
///
/// Only Dantzig's largest-coefficient rule is provided; further rules plug in
/// as variants with their own [`PricingRule::select`] arm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PricingRule {
    #[default]
    Dantzig,
}

impl PricingRule {
    /// Picks the column (1-based) among `scores` whose value is negative.
    /// `scores[j - 1]` belongs to `labels[j - 1]`. Ties go to the smallest
    /// label id.
    pub fn select<T: Scalar>(&self, scores: &[T], labels: &[Label], tol: Tolerance) -> Option<usize> {
        match self {
            PricingRule::Dantzig => {
                let mut best: Option<usize> = None;
                for (j, s) in scores.iter().enumerate() {
                    if !tol.is_negative(s) {
                        continue;
                    }
                    best = match best {
                        None => Some(j),
                        Some(b) => match s.partial_cmp(&scores[b]) {
                            Some(Ordering::Less) => Some(j),
                            Some(Ordering::Equal) if labels[j].id < labels[b].id => Some(j),
                            _ => Some(b),
                        },
                    };
                }
                best.map(|j| j + 1)
            }
        }
    }
}

/// Tie-break among rows sharing the best ratio.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieBreak {
    /// Smallest basic label id.
    #[default]
    SmallestLabel,
    /// Smallest |pivot element|, then smallest label. Reproduces the
    /// hand-worked traces this solver was validated against.
    SmallestAbsPivot,
    /// Largest |pivot element|, then smallest label.
    LargestAbsPivot,
}

impl TieBreak {
    pub fn as_str(&self) -> &'static str {
        match self {
            TieBreak::SmallestLabel => "smallest-label",
            TieBreak::SmallestAbsPivot => "smallest-abs-pivot",
            TieBreak::LargestAbsPivot => "largest-abs-pivot",
        }
    }
}

impl fmt::Display for TieBreak {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TieBreak {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "smallest-label" => Ok(TieBreak::SmallestLabel),
            "smallest-abs-pivot" => Ok(TieBreak::SmallestAbsPivot),
            "largest-abs-pivot" => Ok(TieBreak::LargestAbsPivot),
            other => Err(format!("unknown tie-break rule `{other}`")),
        }
    }
}

/// Loop safeguards.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// `None` means `50 * (rows + cols)` of the dictionary being solved.
    pub max_iterations: Option<usize>,
    /// Stop when a basis repeats.
    pub detect_cycles: bool,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_iterations: None,
            detect_cycles: true,
        }
    }
}

impl Limits {
    pub fn iteration_cap(&self, rows: usize, cols: usize) -> usize {
        self.max_iterations.unwrap_or(50 * (rows + cols))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SolverConfig {
    pub pricing: PricingRule,
    pub tie_break: TieBreak,
    pub limits: Limits,
    pub tolerance: Tolerance,
    /// In the artificial-variable phase 1, pivot a zero-valued basic
    /// artificial out through its conjugate slack as soon as it appears.
    pub conjugate_slack_trick: bool,
}

impl SolverConfig {
    /// Configuration that reproduces hand-worked textbook traces.
    pub fn trace_mode() -> Self {
        SolverConfig {
            tie_break: TieBreak::SmallestAbsPivot,
            ..SolverConfig::default()
        }
    }
}

/// One row (or column, for dual ratio tests) competing in a ratio test.
#[derive(Debug, Clone)]
pub(crate) struct RatioCandidate<T> {
    pub index: usize,
    pub label: Label,
    pub ratio: T,
    pub pivot: T,
}

/// Picks the candidate with the smallest ratio (or largest, when
/// `maximize`). Ratios compare exactly; ties resolve via `tie`.
pub(crate) fn pick_ratio<T: Scalar>(
    candidates: Vec<RatioCandidate<T>>,
    tie: TieBreak,
    maximize: bool,
) -> Option<RatioCandidate<T>> {
    let mut best: Option<RatioCandidate<T>> = None;
    for cand in candidates {
        let replace = match &best {
            None => true,
            Some(b) => {
                let ord = cand.ratio.partial_cmp(&b.ratio).unwrap_or(Ordering::Equal);
                let ord = if maximize { ord.reverse() } else { ord };
                match ord {
                    Ordering::Less => true,
                    Ordering::Greater => false,
                    Ordering::Equal => prefers(&cand, b, tie),
                }
            }
        };
        if replace {
            best = Some(cand);
        }
    }
    best
}

fn prefers<T: Scalar>(a: &RatioCandidate<T>, b: &RatioCandidate<T>, tie: TieBreak) -> bool {
    let by_label = a.label.id < b.label.id;
    let (pa, pb) = (a.pivot.abs(), b.pivot.abs());
    match tie {
        TieBreak::SmallestLabel => by_label,
        TieBreak::SmallestAbsPivot => match pa.partial_cmp(&pb) {
            Some(Ordering::Less) => true,
            Some(Ordering::Greater) => false,
            _ => by_label,
        },
        TieBreak::LargestAbsPivot => match pa.partial_cmp(&pb) {
            Some(Ordering::Greater) => true,
            Some(Ordering::Less) => false,
            _ => by_label,
        },
    }
}
