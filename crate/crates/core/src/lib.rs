//! Linear programming with an artificial-free phase 1.
//!
//! The solver works on explicit simplex dictionaries in exact rational
//! arithmetic (or `f64` with a sign tolerance). Phase 1 reaches a feasible
//! basis directly from the all-slack basis, negative basic values included,
//! with no artificial variables. The classical artificial-variable phase 1 is
//! kept alongside it as a reference, and a brute-force vertex enumerator
//! provides an independent oracle.
//!
//! ```
//! use afsimplex::{parse_lp, solve, standardize, Phase1Method, SolveStatus, SolverConfig};
//! use num_rational::BigRational;
//!
//! let gp = parse_lp("max: x + y; c1: x + 2y <= 4; c2: x >= 1;").unwrap();
//! let sp = standardize(&gp).unwrap();
//! let out = solve::<BigRational>(&sp, Phase1Method::ArtificialFree, &SolverConfig::default()).unwrap();
//! assert_eq!(out.status, SolveStatus::Optimal);
//! assert_eq!(out.objective.unwrap(), BigRational::from_integer(4.into()));
//! ```

pub mod cli;
pub mod dictionary;
pub mod dual;
pub mod error;
pub mod generate;
pub mod harness;
pub mod json;
pub mod lp_format;
pub mod model;
pub mod oracle;
pub mod phase1;
pub mod phase2;
pub mod rules;
pub mod scalar;
pub mod trace;
pub mod traditional;

pub use dictionary::{initial_dictionary, DictStatus, Dictionary, Label, LabelKind, LabelNames, NamingStyle};
pub use dual::{dual_phase1_step, run_dual_phase1, DualPhase1Decision, DualPhase1Run, DualVerdict};
pub use error::{Error, ParseError, Result};
pub use generate::{generate_lp, GeneratorSpec, Shape};
pub use harness::{
    compare, solve, Certificate, ComparisonReport, MethodSummary, Phase1Method, SolveOutcome, SolveStatus,
};
pub use json::{emit_comparison_json, emit_oracle_json, emit_outcome_json};
pub use lp_format::{parse_lp, print_lp};
pub use model::{standardize, GeneralProblem, Relation, RowOrigin, Sense, StandardProblem};
pub use oracle::{enumerate_vertices, OracleOptimum, OracleReport};
pub use phase1::{phase1_step, run_phase1, InfeasibilityCertificate, Phase1Decision, Phase1Run, Phase1Verdict};
pub use phase2::{phase2_step, run_phase2, Phase2Decision, Phase2Run};
pub use rules::{Limits, PricingRule, SolverConfig, TieBreak};
pub use scalar::{NumericMode, Scalar, Sign, Tolerance};
pub use trace::{Method, PivotRecord, Termination, Trace};
pub use traditional::{
    build_auxiliary, run_traditional_phase1, traditional_step, AuxiliaryDictionary, TraditionalDecision, TraditionalRun,
};
