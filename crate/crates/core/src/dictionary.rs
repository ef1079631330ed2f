//! The simplex dictionary: basic variables and the objective written in terms
//! of the nonbasic ones.
//!
//! Row 0 is the objective row and column 0 the right-hand side. Entries follow
//! the reading
//!
//! ```text
//! x_{B_i} = d[i][0] - sum_j d[i][j] * x_{N_j}
//! z       = d[0][0] - sum_j d[0][j] * x_{N_j}
//! ```
//!
//! so the objective row holds negated reduced costs. Public row and column
//! indices are 1-based, with 0 reserved for the objective row / rhs column.

use std::fmt;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::model::StandardProblem;
use crate::scalar::{Scalar, Tolerance};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LabelKind {
    Structural,
    Slack,
    Artificial,
}

/// A variable identity. Structural variables use ids `1..=p`, slacks
/// `p+1..=p+m` (slack `p+i` belongs to row `i`), artificials `p+m+1..=p+2m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label {
    pub id: usize,
    pub kind: LabelKind,
}

impl Label {
    pub fn structural(j: usize) -> Label {
        Label {
            id: j,
            kind: LabelKind::Structural,
        }
    }

    /// Slack of standard row `i` (1-based) in a problem with `p` structurals.
    pub fn slack(p: usize, i: usize) -> Label {
        Label {
            id: p + i,
            kind: LabelKind::Slack,
        }
    }

    pub fn artificial(p: usize, m: usize, i: usize) -> Label {
        Label {
            id: p + m + i,
            kind: LabelKind::Artificial,
        }
    }
}

/// How slack and artificial labels are printed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NamingStyle {
    /// Slacks print as `w<i>`: they may go negative.
    #[default]
    SignFree,
    /// Slacks print as `s<i>`, artificials as `v<i>`.
    Auxiliary,
}

/// Resolves labels to display names for one standard problem.
#[derive(Debug, Clone)]
pub struct LabelNames {
    structural: Vec<String>,
    rows: usize,
    style: NamingStyle,
}

impl LabelNames {
    pub fn new(sp: &StandardProblem, style: NamingStyle) -> Self {
        LabelNames {
            structural: sp.variable_names().to_vec(),
            rows: sp.rows(),
            style,
        }
    }

    pub fn with_style(&self, style: NamingStyle) -> Self {
        LabelNames { style, ..self.clone() }
    }

    pub fn name(&self, label: Label) -> String {
        let p = self.structural.len();
        match (label.kind, self.style) {
            (LabelKind::Structural, _) => self
                .structural
                .get(label.id.wrapping_sub(1))
                .cloned()
                .unwrap_or_else(|| format!("x{}", label.id)),
            (LabelKind::Slack, NamingStyle::SignFree) => format!("w{}", label.id - p),
            (LabelKind::Slack, NamingStyle::Auxiliary) => format!("s{}", label.id - p),
            (LabelKind::Artificial, _) => format!("v{}", label.id - p - self.rows),
        }
    }
}

/// Feasibility / optimality classification of a dictionary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DictStatus {
    pub primal_feasible: bool,
    pub dual_feasible: bool,
    /// Smallest row with negative rhs and no negative entries.
    pub inconsistent_row: Option<usize>,
    /// Smallest column with negative objective entry and no positive entries.
    pub unbounded_col: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Dictionary<T> {
    basis: Vec<Label>,
    nonbasis: Vec<Label>,
    /// Row-major, `(m + 1) * (n + 1)`.
    cells: Vec<T>,
    tol: Tolerance,
}

/// The all-slack dictionary of a standard problem.
pub fn initial_dictionary<T: Scalar>(sp: &StandardProblem, tol: Tolerance) -> Dictionary<T> {
    let (m, p) = (sp.rows(), sp.cols());
    let basis = (1..=m).map(|i| Label::slack(p, i)).collect();
    let nonbasis = (1..=p).map(Label::structural).collect();
    let width = p + 1;
    let mut cells = Vec::with_capacity((m + 1) * width);
    cells.push(T::zero());
    cells.extend(sp.c().iter().map(|c| T::from_rational(&-c)));
    for (row, rhs) in sp.a().iter().zip(sp.b()) {
        cells.push(T::from_rational(rhs));
        cells.extend(row.iter().map(T::from_rational));
    }
    Dictionary {
        basis,
        nonbasis,
        cells,
        tol,
    }
}

impl<T: Scalar> Dictionary<T> {
    /// Builds a dictionary from explicit rows. `rows[0]` is the objective row;
    /// every row has `nonbasis.len() + 1` entries.
    pub fn from_rows(basis: Vec<Label>, nonbasis: Vec<Label>, rows: Vec<Vec<T>>, tol: Tolerance) -> Result<Self> {
        let width = nonbasis.len() + 1;
        if rows.len() != basis.len() + 1 || rows.iter().any(|r| r.len() != width) {
            return Err(Error::Internal("dictionary rows do not match label lists".into()));
        }
        Ok(Dictionary {
            basis,
            nonbasis,
            cells: rows.into_iter().flatten().collect(),
            tol,
        })
    }

    pub fn rows(&self) -> usize {
        self.basis.len()
    }

    pub fn cols(&self) -> usize {
        self.nonbasis.len()
    }

    pub fn basis(&self) -> &[Label] {
        &self.basis
    }

    pub fn nonbasis(&self) -> &[Label] {
        &self.nonbasis
    }

    pub fn tolerance(&self) -> Tolerance {
        self.tol
    }

    /// Basic label of row `i` (1-based).
    pub fn basic_label(&self, i: usize) -> Label {
        self.basis[i - 1]
    }

    /// Nonbasic label of column `j` (1-based).
    pub fn nonbasic_label(&self, j: usize) -> Label {
        self.nonbasis[j - 1]
    }

    /// Entry `d[i][j]`, `0 <= i <= rows`, `0 <= j <= cols`.
    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.cells[i * (self.cols() + 1) + j]
    }

    fn get_mut(&mut self, i: usize, j: usize) -> &mut T {
        let w = self.cols() + 1;
        &mut self.cells[i * w + j]
    }

    pub fn objective_value(&self) -> &T {
        self.get(0, 0)
    }

    pub fn rhs(&self, i: usize) -> &T {
        self.get(i, 0)
    }

    /// Row `i` including the rhs at position 0.
    pub fn row(&self, i: usize) -> &[T] {
        let w = self.cols() + 1;
        &self.cells[i * w..(i + 1) * w]
    }

    pub fn row_of(&self, label: Label) -> Option<usize> {
        self.basis.iter().position(|&l| l == label).map(|i| i + 1)
    }

    pub fn col_of(&self, label: Label) -> Option<usize> {
        self.nonbasis.iter().position(|&l| l == label).map(|j| j + 1)
    }

    /// Sorted basic label ids.
    pub fn signature(&self) -> Vec<usize> {
        let mut ids: Vec<usize> = self.basis.iter().map(|l| l.id).collect();
        ids.sort_unstable();
        ids
    }

    /// Returns a new dictionary with `d[r][m]` pivoted on.
    pub fn pivot(&self, r: usize, m: usize) -> Result<Self> {
        let mut next = self.clone();
        next.pivot_in_place(r, m)?;
        Ok(next)
    }

    /// Exchanges basic row `r` with nonbasic column `m`.
    pub fn pivot_in_place(&mut self, r: usize, m: usize) -> Result<()> {
        let (rows, cols) = (self.rows(), self.cols());
        if r == 0 || r > rows || m == 0 || m > cols {
            return Err(Error::IndexOutOfRange { row: r, col: m });
        }
        let pivot = self.get(r, m).clone();
        if self.tol.is_zero(&pivot) {
            return Err(Error::ZeroPivot { row: r, col: m });
        }
        let w = cols + 1;
        let pivot_row: Vec<T> = self.row(r).iter().map(|v| v.divided_by(&pivot)).collect();
        for i in (0..=rows).filter(|&i| i != r) {
            let factor = self.get(i, m).clone();
            if factor == T::zero() {
                continue;
            }
            let base = i * w;
            for (j, pr) in pivot_row.iter().enumerate() {
                if j == m {
                    continue;
                }
                let cell = &mut self.cells[base + j];
                *cell = cell.minus(&factor.times(pr));
            }
            self.cells[base + m] = factor.divided_by(&pivot).negated();
        }
        for (j, v) in pivot_row.into_iter().enumerate() {
            *self.get_mut(r, j) = v;
        }
        *self.get_mut(r, m) = T::one().divided_by(&pivot);
        std::mem::swap(&mut self.basis[r - 1], &mut self.nonbasis[m - 1]);
        Ok(())
    }

    /// Applies the pivot on `(r, m)` to an extra objective-style row that is
    /// stored outside the dictionary. Must be called before pivoting `self`.
    pub fn pivot_external_row(&self, row: &mut [T], r: usize, m: usize) -> Result<()> {
        let pivot = self.get(r, m);
        if self.tol.is_zero(pivot) {
            return Err(Error::ZeroPivot { row: r, col: m });
        }
        let factor = row[m].clone();
        if factor == T::zero() {
            return Ok(());
        }
        for (j, v) in self.row(r).iter().enumerate() {
            if j != m {
                row[j] = row[j].minus(&factor.times(v).divided_by(pivot));
            }
        }
        row[m] = factor.divided_by(pivot).negated();
        Ok(())
    }

    /// Removes nonbasic column `j` (1-based).
    pub fn remove_column(&mut self, j: usize) -> Label {
        let w = self.cols() + 1;
        let mut idx = 0;
        self.cells.retain(|_| {
            let keep = idx % w != j;
            idx += 1;
            keep
        });
        self.nonbasis.remove(j - 1)
    }

    pub fn classify(&self) -> DictStatus {
        let tol = self.tol;
        let primal_feasible = (1..=self.rows()).all(|i| !tol.is_negative(self.rhs(i)));
        let dual_feasible = (1..=self.cols()).all(|j| !tol.is_negative(self.get(0, j)));
        let inconsistent_row = (1..=self.rows())
            .find(|&i| tol.is_negative(self.rhs(i)) && (1..=self.cols()).all(|j| !tol.is_negative(self.get(i, j))));
        let unbounded_col = (1..=self.cols())
            .find(|&j| tol.is_negative(self.get(0, j)) && (1..=self.rows()).all(|i| !tol.is_positive(self.get(i, j))));
        DictStatus {
            primal_feasible,
            dual_feasible,
            inconsistent_row,
            unbounded_col,
        }
    }

    /// Value of every label in the basic solution, sorted by label, and `z`.
    pub fn basic_solution(&self) -> (Vec<(Label, T)>, T) {
        let mut values: Vec<(Label, T)> = self
            .basis
            .iter()
            .enumerate()
            .map(|(i, &l)| (l, self.rhs(i + 1).clone()))
            .chain(self.nonbasis.iter().map(|&l| (l, T::zero())))
            .collect();
        values.sort_by_key(|(l, _)| *l);
        (values, self.objective_value().clone())
    }

    /// Number of structural labels present.
    pub fn structural_count(&self) -> usize {
        self.basis
            .iter()
            .chain(&self.nonbasis)
            .filter(|l| l.kind == LabelKind::Structural)
            .count()
    }

    /// Basic solution restricted to structural variables, indexed by id - 1.
    pub fn corner(&self) -> Vec<T> {
        let mut point = vec![T::zero(); self.structural_count()];
        for (i, l) in self.basis.iter().enumerate() {
            if l.kind == LabelKind::Structural {
                point[l.id - 1] = self.rhs(i + 1).clone();
            }
        }
        point
    }

    /// Direction of motion when nonbasic column `j` increases by one unit,
    /// restricted to structural variables.
    pub fn structural_direction(&self, j: usize) -> Vec<T> {
        let mut dir = vec![T::zero(); self.structural_count()];
        let entering = self.nonbasic_label(j);
        if entering.kind == LabelKind::Structural {
            dir[entering.id - 1] = T::one();
        }
        for (i, l) in self.basis.iter().enumerate() {
            if l.kind == LabelKind::Structural {
                dir[l.id - 1] = self.get(i + 1, j).negated();
            }
        }
        dir
    }

    /// The dual dictionary: rows become the nonbasis, columns the basis, and
    /// every coefficient is negated. Primal and dual feasibility swap.
    pub fn negative_transpose(&self) -> Self {
        let (rows, cols) = (self.rows(), self.cols());
        let w = rows + 1;
        let mut cells = vec![T::zero(); (cols + 1) * w];
        cells[0] = self.get(0, 0).negated();
        for (i, cell) in cells[1..w].iter_mut().enumerate() {
            *cell = self.get(i + 1, 0).clone();
        }
        for j in 1..=cols {
            cells[j * w] = self.get(0, j).clone();
            for i in 1..=rows {
                cells[j * w + i] = self.get(i, j).negated();
            }
        }
        Dictionary {
            basis: self.nonbasis.clone(),
            nonbasis: self.basis.clone(),
            cells,
            tol: self.tol,
        }
    }

    /// Converts every entry to exact rationals.
    pub fn to_rational(&self) -> Dictionary<BigRational> {
        Dictionary {
            basis: self.basis.clone(),
            nonbasis: self.nonbasis.clone(),
            cells: self.cells.iter().map(Scalar::to_rational).collect(),
            tol: self.tol,
        }
    }
}

impl<T: Scalar> fmt::Display for Dictionary<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head: Vec<String> = self.nonbasis.iter().map(|l| format!("#{}", l.id)).collect();
        writeln!(f, "\t\t{}", head.join("\t"))?;
        for i in 0..=self.rows() {
            let name = if i == 0 {
                "z".to_string()
            } else {
                format!("#{}", self.basis[i - 1].id)
            };
            let vals: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "{name}\t{}", vals.join("\t"))?;
        }
        Ok(())
    }
}
