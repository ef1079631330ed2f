//! Seeded random LP instances for property and equivalence testing.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::model::{GeneralProblem, Relation, Sense};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Shape {
    /// Built around a planted feasible integer point.
    #[default]
    FeasibleBiased,
    /// Random data plus a planted contradictory pair of rows.
    InfeasibleBiased,
    /// Several rows pass exactly through a planted point, which produces
    /// ratio ties and zero-step pivots.
    DegenerateBiased,
}

impl Shape {
    pub const ALL: [Shape; 3] = [Shape::FeasibleBiased, Shape::InfeasibleBiased, Shape::DegenerateBiased];

    pub fn as_str(&self) -> &'static str {
        match self {
            Shape::FeasibleBiased => "feasible",
            Shape::InfeasibleBiased => "infeasible",
            Shape::DegenerateBiased => "degenerate",
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Shape {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "feasible" | "feasible-biased" => Ok(Shape::FeasibleBiased),
            "infeasible" | "infeasible-biased" => Ok(Shape::InfeasibleBiased),
            "degenerate" | "degenerate-biased" => Ok(Shape::DegenerateBiased),
            other => Err(format!("unknown shape `{other}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub seed: u64,
    pub rows: usize,
    pub cols: usize,
    pub coefficients: RangeInclusive<i64>,
    pub shape: Shape,
}

impl GeneratorSpec {
    pub fn new(seed: u64, rows: usize, cols: usize, shape: Shape) -> Self {
        GeneratorSpec {
            seed,
            rows: rows.max(1),
            cols: cols.max(1),
            coefficients: -9..=9,
            shape,
        }
    }
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

/// Deterministic for a fixed spec. Variables are `x1..xp`, constraints
/// `c1..cm`; relations are `<=` and `>=` only, so the standard form has
/// exactly `m` rows.
pub fn generate_lp(spec: &GeneratorSpec) -> GeneralProblem {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let (m, p) = (spec.rows, spec.cols);
    let range = spec.coefficients.clone();
    let sense = if rng.gen_bool(0.5) {
        Sense::Maximize
    } else {
        Sense::Minimize
    };
    let mut gp = GeneralProblem::new(sense);
    let names: Vec<String> = (1..=p).map(|j| format!("x{j}")).collect();
    for name in &names {
        gp.ensure_variable(name);
        gp.add_objective_term(name, q(rng.gen_range(range.clone())));
    }

    let anchor: Vec<i64> = (0..p).map(|_| rng.gen_range(0..=3)).collect();
    let mut tight: Vec<bool> = (0..m).map(|_| rng.gen_bool(0.75)).collect();
    if spec.shape == Shape::DegenerateBiased {
        // at least two rows active at the anchor (all of them when m < 2)
        let mut idx: Vec<usize> = (0..m).collect();
        idx.shuffle(&mut rng);
        for &i in idx.iter().take(2) {
            tight[i] = true;
        }
    }

    for (i, &is_tight) in tight.iter().enumerate() {
        let mut coefs: Vec<i64> = (0..p).map(|_| rng.gen_range(range.clone())).collect();
        if coefs.iter().all(|&v| v == 0) {
            coefs[rng.gen_range(0..p)] = 1;
        }
        let at_anchor: i64 = coefs.iter().zip(&anchor).map(|(a, x)| a * x).sum();
        let le = rng.gen_bool(0.5);
        let rhs = match spec.shape {
            Shape::FeasibleBiased => {
                let slack = rng.gen_range(0..=4);
                if le {
                    at_anchor + slack
                } else {
                    at_anchor - slack
                }
            }
            Shape::DegenerateBiased => {
                let slack = if is_tight { 0 } else { rng.gen_range(1..=4) };
                if le {
                    at_anchor + slack
                } else {
                    at_anchor - slack
                }
            }
            Shape::InfeasibleBiased => {
                let span = 3 * range.end().abs().max(range.start().abs()).max(1);
                rng.gen_range(-span..=span)
            }
        };
        let relation = if le { Relation::LessEq } else { Relation::GreaterEq };
        let terms: Vec<(&str, BigRational)> = names
            .iter()
            .zip(&coefs)
            .filter(|(_, &a)| a != 0)
            .map(|(n, &a)| (n.as_str(), q(a)))
            .collect();
        gp.add_constraint(&format!("c{}", i + 1), &terms, relation, q(rhs))
            .expect("generated names are unique");
    }

    if spec.shape == Shape::InfeasibleBiased && m >= 2 {
        // Overwrite the last row with a contradiction of the first:
        // a·x <= b  and  a·x >= b + gap.
        let first = gp.constraints()[0].clone();
        let gap = rng.gen_range(1..=5);
        let (relation, rhs) = match first.relation {
            Relation::LessEq => (Relation::GreaterEq, &first.rhs + q(gap)),
            _ => (Relation::LessEq, &first.rhs - q(gap)),
        };
        let mut rebuilt = GeneralProblem::new(gp.sense());
        for (name, c) in names.iter().zip(gp.objective()) {
            rebuilt.ensure_variable(name);
            rebuilt.add_objective_term(name, c.clone());
        }
        for con in &gp.constraints()[..m - 1] {
            let terms: Vec<(&str, BigRational)> = names
                .iter()
                .zip(&con.coefficients)
                .map(|(n, a)| (n.as_str(), a.clone()))
                .collect();
            rebuilt
                .add_constraint(&con.name, &terms, con.relation, con.rhs.clone())
                .expect("unique");
        }
        let terms: Vec<(&str, BigRational)> = names
            .iter()
            .zip(&first.coefficients)
            .map(|(n, a)| (n.as_str(), a.clone()))
            .collect();
        rebuilt
            .add_constraint(&format!("c{m}"), &terms, relation, rhs)
            .expect("unique");
        gp = rebuilt;
    }
    gp
}
