mod common;

use afsimplex::{
    compare, emit_comparison_json, emit_outcome_json, solve, Limits, Phase1Method, SolveStatus, SolverConfig,
    StandardProblem,
};
use common::*;
use jsonschema::{Registry, Validator};
use num_rational::BigRational;
use serde_json::Value;
use std::collections::BTreeSet;

const BASE: &str = "https://afsimplex.local/schema/";

fn schema(name: &str) -> Value {
    let path = format!("{}/schema/{name}", env!("CARGO_MANIFEST_DIR"));
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn validators() -> (Validator, Validator) {
    let outcome = schema("outcome.schema.json");
    let comparison = schema("comparison.schema.json");
    let registry = Registry::new()
        .add(format!("{BASE}outcome.schema.json"), outcome.clone())
        .unwrap()
        .prepare()
        .unwrap();
    let build = |s: &Value| jsonschema::options().with_registry(&registry).build(s).unwrap();
    (build(&outcome), build(&comparison))
}

fn check(v: &Validator, text: &str) {
    let doc: Value = serde_json::from_str(text).unwrap();
    let errors: Vec<String> = v
        .iter_errors(&doc)
        .map(|e| format!("{} at {}", e, e.instance_path()))
        .collect();
    assert!(errors.is_empty(), "{errors:#?}\n{text}");
}

fn configs() -> Vec<SolverConfig> {
    vec![
        SolverConfig::default(),
        SolverConfig::trace_mode(),
        SolverConfig {
            conjugate_slack_trick: true,
            ..SolverConfig::default()
        },
        SolverConfig {
            limits: Limits {
                max_iterations: Some(1),
                ..Limits::default()
            },
            ..SolverConfig::default()
        },
    ]
}

#[test]
fn every_status_variant_validates() {
    let (outcome, _) = validators();
    let mut statuses = BTreeSet::new();
    let mut problems: Vec<StandardProblem> = vec![
        worked(),
        StandardProblem::from_integers(&[&[1]], &[1], &[1]).unwrap(),
        StandardProblem::from_integers(&[&[1], &[-1]], &[1, -2], &[1]).unwrap(),
    ];
    problems.extend((0..60).map(|s| random_instance(s).1));
    for sp in &problems {
        for cfg in configs() {
            for method in [Phase1Method::ArtificialFree, Phase1Method::Traditional] {
                let exact = solve::<BigRational>(sp, method, &cfg).unwrap();
                statuses.insert(exact.status.as_str());
                check(&outcome, &emit_outcome_json(&exact));
                check(&outcome, &emit_outcome_json(&solve::<f64>(sp, method, &cfg).unwrap()));
            }
        }
    }
    for s in [
        SolveStatus::Optimal,
        SolveStatus::Unbounded,
        SolveStatus::Infeasible,
        SolveStatus::IterationLimit,
    ] {
        assert!(statuses.contains(s.as_str()), "no {s} outcome exercised");
    }
}

#[test]
fn comparison_reports_validate() {
    let (_, comparison) = validators();
    for sp in std::iter::once(worked()).chain((0..40).map(|s| random_instance(s).1)) {
        check(
            &comparison,
            &emit_comparison_json(&compare::<BigRational>(&sp, &SolverConfig::default()).unwrap()),
        );
    }
}

#[test]
fn worked_example_trace_has_expected_corners() {
    let out = solve::<BigRational>(&worked(), Phase1Method::ArtificialFree, &SolverConfig::trace_mode()).unwrap();
    let doc: Value = serde_json::from_str(&emit_outcome_json(&out)).unwrap();
    let corners = serde_json::to_string(&doc["phase1"]["corners"]).unwrap();
    assert_eq!(corners, "[[[0,1],[0,1]],[[4,1],[0,1]],[[4,1],[3,1]],[[2,1],[6,1]]]");
    assert_eq!(doc["phase1"]["entries"].as_array().unwrap().len(), 3);
    assert_eq!(doc["status"], "unbounded");
}

#[test]
fn trivial_optimum_has_empty_phase1_trace() {
    let sp = StandardProblem::from_integers(&[&[1]], &[1], &[1]).unwrap();
    let out = solve::<BigRational>(&sp, Phase1Method::ArtificialFree, &SolverConfig::default()).unwrap();
    let doc: Value = serde_json::from_str(&emit_outcome_json(&out)).unwrap();
    assert_eq!(doc["status"], "optimal");
    assert!(doc["phase1"]["entries"].as_array().unwrap().is_empty());
    assert_eq!(doc["objective"], serde_json::json!({"num": 1, "den": 1}));
}

#[test]
fn key_order_is_fixed() {
    let out = solve::<BigRational>(&worked(), Phase1Method::Traditional, &SolverConfig::default()).unwrap();
    let text = emit_outcome_json(&out);
    let order = [
        "\"status\"",
        "\"method\"",
        "\"objective\"",
        "\"solution\"",
        "\"phase1\"",
        "\"phase2\"",
        "\"certificates\"",
    ];
    let positions: Vec<usize> = order.iter().map(|k| text.find(k).unwrap()).collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]), "{positions:?}");
}

#[test]
fn schema_rejects_malformed_documents() {
    let (outcome, _) = validators();
    let out = solve::<BigRational>(&worked(), Phase1Method::ArtificialFree, &SolverConfig::default()).unwrap();
    let good: Value = serde_json::from_str(&emit_outcome_json(&out)).unwrap();
    assert!(outcome.is_valid(&good));
    let mut bad = good.clone();
    bad["objective"]["den"] = serde_json::json!(0);
    assert!(!outcome.is_valid(&bad));
    let mut bad = good.clone();
    bad["solution"][0]["num"] = serde_json::json!("1/2");
    assert!(!outcome.is_valid(&bad));
    let mut bad = good;
    bad["status"] = serde_json::json!("solved");
    assert!(!outcome.is_valid(&bad));
}
