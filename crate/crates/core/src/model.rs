//! Problem representation and conversion to `max c·x s.t. Ax <= b, x >= 0`.

use std::collections::HashMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sense {
    Maximize,
    Minimize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    LessEq,
    GreaterEq,
    Equal,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::LessEq => "<=",
            Relation::GreaterEq => ">=",
            Relation::Equal => "=",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Variable {
    pub name: String,
    /// Sign-unrestricted. Accepted by the builder so that standardization can
    /// reject it with a precise error.
    pub free: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub name: String,
    /// Dense coefficients, indexed like [`GeneralProblem::variables`].
    pub coefficients: Vec<BigRational>,
    pub relation: Relation,
    pub rhs: BigRational,
}

/// A linear program with mixed relations and either sense.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralProblem {
    sense: Sense,
    variables: Vec<Variable>,
    index: HashMap<String, usize>,
    objective: Vec<BigRational>,
    constraints: Vec<Constraint>,
}

impl GeneralProblem {
    pub fn new(sense: Sense) -> Self {
        GeneralProblem {
            sense,
            variables: Vec::new(),
            index: HashMap::new(),
            objective: Vec::new(),
            constraints: Vec::new(),
        }
    }

    pub fn sense(&self) -> Sense {
        self.sense
    }

    pub fn variables(&self) -> &[Variable] {
        &self.variables
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    /// Objective coefficients, indexed like [`Self::variables`].
    pub fn objective(&self) -> &[BigRational] {
        &self.objective
    }

    pub fn variable_index(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Registers a nonnegative variable. Fails on a duplicate name.
    pub fn add_variable(&mut self, name: &str) -> Result<usize> {
        self.declare(name, false)
    }

    pub fn add_free_variable(&mut self, name: &str) -> Result<usize> {
        self.declare(name, true)
    }

    fn declare(&mut self, name: &str, free: bool) -> Result<usize> {
        if self.index.contains_key(name) {
            return Err(Error::DuplicateVariable(name.to_string()));
        }
        Ok(self.register(name, free))
    }

    /// Returns the index of `name`, registering it if new.
    pub fn ensure_variable(&mut self, name: &str) -> usize {
        match self.index.get(name) {
            Some(&idx) => idx,
            None => self.register(name, false),
        }
    }

    fn register(&mut self, name: &str, free: bool) -> usize {
        let idx = self.variables.len();
        self.variables.push(Variable {
            name: name.to_string(),
            free,
        });
        self.index.insert(name.to_string(), idx);
        self.objective.push(BigRational::zero());
        for c in &mut self.constraints {
            c.coefficients.push(BigRational::zero());
        }
        idx
    }

    /// Adds `coefficient` to the objective term of `name` (registering it).
    pub fn add_objective_term(&mut self, name: &str, coefficient: BigRational) {
        let idx = self.ensure_variable(name);
        self.objective[idx] += coefficient;
    }

    /// Adds a constraint; terms for the same variable are summed. Unknown
    /// variables are registered.
    pub fn add_constraint(
        &mut self,
        name: &str,
        terms: &[(&str, BigRational)],
        relation: Relation,
        rhs: BigRational,
    ) -> Result<usize> {
        if self.constraints.iter().any(|c| c.name == name) {
            return Err(Error::DuplicateConstraint(name.to_string()));
        }
        for (var, _) in terms {
            self.ensure_variable(var);
        }
        let mut coefficients = vec![BigRational::zero(); self.variables.len()];
        for (var, coef) in terms {
            coefficients[self.index[*var]] += coef;
        }
        self.constraints.push(Constraint {
            name: name.to_string(),
            coefficients,
            relation,
            rhs,
        });
        Ok(self.constraints.len() - 1)
    }

    /// `true` when `x` (indexed like [`Self::variables`]) satisfies every
    /// constraint and every nonnegativity bound.
    pub fn is_satisfied_by(&self, x: &[BigRational]) -> bool {
        if x.iter().any(|v| v.is_negative()) {
            return false;
        }
        self.constraints.iter().all(|c| {
            let lhs: BigRational = c.coefficients.iter().zip(x).map(|(a, v)| a * v).sum();
            match c.relation {
                Relation::LessEq => lhs <= c.rhs,
                Relation::GreaterEq => lhs >= c.rhs,
                Relation::Equal => lhs == c.rhs,
            }
        })
    }

    pub fn objective_value(&self, x: &[BigRational]) -> BigRational {
        self.objective.iter().zip(x).map(|(c, v)| c * v).sum()
    }
}

/// Where a standard-form row came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RowOrigin {
    /// Index into [`GeneralProblem::constraints`].
    pub constraint: usize,
    /// The row was multiplied by -1 (a `>=` row, or the second half of an
    /// equality).
    pub negated: bool,
}

/// `max c·x` subject to `Ax <= b`, `x >= 0`. `b` may have any sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardProblem {
    a: Vec<Vec<BigRational>>,
    b: Vec<BigRational>,
    c: Vec<BigRational>,
    variable_names: Vec<String>,
    row_names: Vec<String>,
    origins: Vec<RowOrigin>,
    objective_negated: bool,
}

impl StandardProblem {
    /// Builds a standard problem directly. Rows must all have `c.len()`
    /// entries.
    pub fn new(a: Vec<Vec<BigRational>>, b: Vec<BigRational>, c: Vec<BigRational>) -> Result<Self> {
        if a.is_empty() {
            return Err(Error::EmptyProblem);
        }
        if c.is_empty() || a.len() != b.len() || a.iter().any(|row| row.len() != c.len()) {
            return Err(Error::Internal("inconsistent standard-form dimensions".into()));
        }
        let variable_names = (1..=c.len()).map(|j| format!("x{j}")).collect();
        let row_names = (1..=a.len()).map(|i| format!("r{i}")).collect();
        let origins = (0..a.len())
            .map(|i| RowOrigin {
                constraint: i,
                negated: false,
            })
            .collect();
        Ok(StandardProblem {
            a,
            b,
            c,
            variable_names,
            row_names,
            origins,
            objective_negated: false,
        })
    }

    /// Convenience constructor from integer data.
    pub fn from_integers(a: &[&[i64]], b: &[i64], c: &[i64]) -> Result<Self> {
        let q = |v: &i64| BigRational::from_integer((*v).into());
        StandardProblem::new(
            a.iter().map(|row| row.iter().map(q).collect()).collect(),
            b.iter().map(q).collect(),
            c.iter().map(q).collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.a.len()
    }

    pub fn cols(&self) -> usize {
        self.c.len()
    }

    pub fn a(&self) -> &[Vec<BigRational>] {
        &self.a
    }

    pub fn b(&self) -> &[BigRational] {
        &self.b
    }

    pub fn c(&self) -> &[BigRational] {
        &self.c
    }

    pub fn variable_names(&self) -> &[String] {
        &self.variable_names
    }

    pub fn row_names(&self) -> &[String] {
        &self.row_names
    }

    pub fn origins(&self) -> &[RowOrigin] {
        &self.origins
    }

    /// `true` when the source problem was a minimization; reported objective
    /// values must then be negated.
    pub fn objective_negated(&self) -> bool {
        self.objective_negated
    }

    /// Columns whose entries are all zero. Permitted, but worth flagging.
    pub fn zero_columns(&self) -> Vec<usize> {
        (0..self.cols())
            .filter(|&j| self.a.iter().all(|row| row[j].is_zero()))
            .collect()
    }

    /// Checks `Ax <= b` and `x >= 0`.
    pub fn is_feasible_point(&self, x: &[BigRational]) -> bool {
        x.len() == self.cols()
            && x.iter().all(|v| !v.is_negative())
            && self.a.iter().zip(&self.b).all(|(row, bi)| {
                let lhs: BigRational = row.iter().zip(x).map(|(a, v)| a * v).sum();
                lhs <= *bi
            })
    }

    pub fn objective_value(&self, x: &[BigRational]) -> BigRational {
        self.c.iter().zip(x).map(|(c, v)| c * v).sum()
    }
}

/// Converts a general problem to standard form.
///
/// A minimization becomes a maximization of `-c`; `>=` rows are negated; `=`
/// rows become a `<=` pair. Negative right-hand sides are kept.
pub fn standardize(gp: &GeneralProblem) -> Result<StandardProblem> {
    if let Some(v) = gp.variables.iter().find(|v| v.free) {
        return Err(Error::UnsupportedFreeVariable(v.name.clone()));
    }
    if gp.constraints.is_empty() {
        return Err(Error::EmptyProblem);
    }
    let objective_negated = gp.sense == Sense::Minimize;
    let c = gp
        .objective
        .iter()
        .map(|v| if objective_negated { -v } else { v.clone() })
        .collect();

    let mut a = Vec::new();
    let mut b = Vec::new();
    let mut row_names = Vec::new();
    let mut origins = Vec::new();
    let mut push = |row: Vec<BigRational>, rhs: BigRational, name: String, origin: RowOrigin| {
        a.push(row);
        b.push(rhs);
        row_names.push(name);
        origins.push(origin);
    };
    for (k, con) in gp.constraints.iter().enumerate() {
        let negated_row = || con.coefficients.iter().map(|v| -v).collect::<Vec<_>>();
        match con.relation {
            Relation::LessEq => push(
                con.coefficients.clone(),
                con.rhs.clone(),
                con.name.clone(),
                RowOrigin {
                    constraint: k,
                    negated: false,
                },
            ),
            Relation::GreaterEq => push(
                negated_row(),
                -&con.rhs,
                con.name.clone(),
                RowOrigin {
                    constraint: k,
                    negated: true,
                },
            ),
            Relation::Equal => {
                push(
                    con.coefficients.clone(),
                    con.rhs.clone(),
                    format!("{}.le", con.name),
                    RowOrigin {
                        constraint: k,
                        negated: false,
                    },
                );
                push(
                    negated_row(),
                    -&con.rhs,
                    format!("{}.ge", con.name),
                    RowOrigin {
                        constraint: k,
                        negated: true,
                    },
                );
            }
        }
    }
    Ok(StandardProblem {
        a,
        b,
        c,
        variable_names: gp.variables.iter().map(|v| v.name.clone()).collect(),
        row_names,
        origins,
        objective_negated,
    })
}
