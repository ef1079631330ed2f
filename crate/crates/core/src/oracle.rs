//! Brute-force vertex enumeration, used as an independent check on the
//! simplex code paths.
//!
//! Every `m`-subset of the columns of `[A | I]` is tried as a basis. Square
//! systems are solved with fraction-free Gauss-Jordan elimination on scaled
//! integer data, first in `i128` and, if anything overflows, again in
//! `BigInt`. Unboundedness is decided by testing every edge direction leaving
//! every feasible basis for a nonnegative improving ray.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::model::StandardProblem;

/// Maximum number of bases the oracle will visit.
pub const BASIS_LIMIT: u128 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleOptimum {
    Infeasible,
    /// Maximum of `c·x` (standard, maximizing sense) and one maximizer.
    Optimal {
        value: BigRational,
        point: Vec<BigRational>,
    },
    /// A direction `r >= 0` with `A r <= 0` and `c·r > 0`.
    Unbounded {
        ray: Vec<BigRational>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub feasible: bool,
    /// Distinct basic feasible solutions, structural coordinates, sorted.
    pub vertices: Vec<Vec<BigRational>>,
    pub feasible_bases: usize,
    pub bases_examined: usize,
    pub optimum: OracleOptimum,
}

/// Binomial coefficient, saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    let k = k.min(n - k.min(n));
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

pub fn enumerate_vertices(sp: &StandardProblem) -> Result<OracleReport> {
    let (m, p) = (sp.rows(), sp.cols());
    let bases = binomial(p + m, m);
    if bases > BASIS_LIMIT {
        return Err(Error::TooLarge {
            bases,
            limit: BASIS_LIMIT,
        });
    }
    let system = IntegerSystem::new(sp);
    match system.enumerate::<i128>(sp) {
        Some(report) => Ok(report),
        None => Ok(system
            .enumerate::<BigInt>(sp)
            .expect("arbitrary precision never overflows")),
    }
}

/// Integer ring operations; `None` signals overflow.
trait ExactInt: Clone + PartialEq {
    fn from_big(v: &BigInt) -> Option<Self>;
    fn to_big(&self) -> BigInt;
    fn one() -> Self;
    fn signum(&self) -> i8;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn div_exact(&self, o: &Self) -> Option<Self>;
}

impl ExactInt for i128 {
    fn from_big(v: &BigInt) -> Option<Self> {
        v.to_i128()
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn one() -> Self {
        1
    }
    fn signum(&self) -> i8 {
        i128::signum(*self) as i8
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    fn div_exact(&self, o: &Self) -> Option<Self> {
        debug_assert_eq!(self % o, 0);
        self.checked_div(*o)
    }
}

impl ExactInt for BigInt {
    fn from_big(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn one() -> Self {
        One::one()
    }
    fn signum(&self) -> i8 {
        if self.is_negative() {
            -1
        } else if self.is_zero() {
            0
        } else {
            1
        }
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn div_exact(&self, o: &Self) -> Option<Self> {
        Some(self / o)
    }
}

/// `[A | diag(scale) | b]` with every row scaled to integers.
struct IntegerSystem {
    rows: Vec<Vec<BigInt>>,
}

impl IntegerSystem {
    fn new(sp: &StandardProblem) -> Self {
        let (m, p) = (sp.rows(), sp.cols());
        let rows = (0..m)
            .map(|i| {
                let a = &sp.a()[i];
                let b = &sp.b()[i];
                let scale = a
                    .iter()
                    .chain(std::iter::once(b))
                    .fold(BigInt::from(1), |acc, v| acc.lcm(v.denom()));
                let to_int = |v: &BigRational| (v * &scale).to_integer();
                let mut row: Vec<BigInt> = a.iter().map(to_int).collect();
                row.extend((0..m).map(|k| if k == i { scale.clone() } else { BigInt::from(0) }));
                row.push(to_int(b));
                debug_assert_eq!(row.len(), p + m + 1);
                row
            })
            .collect();
        IntegerSystem { rows }
    }

    fn enumerate<I: ExactInt>(&self, sp: &StandardProblem) -> Option<OracleReport> {
        let (m, p) = (sp.rows(), sp.cols());
        let n = p + m;
        let base: Vec<Vec<I>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(I::from_big).collect::<Option<Vec<_>>>())
            .collect::<Option<_>>()?;
        let c: Vec<BigRational> = sp.c().to_vec();

        let mut vertices = BTreeSet::new();
        let mut best: Option<(BigRational, Vec<BigRational>)> = None;
        let mut ray: Option<Vec<BigRational>> = None;
        let mut feasible_bases = 0;
        let mut examined = 0;

        let mut subset: Vec<usize> = (0..m).collect();
        loop {
            examined += 1;
            if let Some(reduced) = eliminate(&base, &subset)? {
                let diag = reduced[0][subset[0]].clone();
                let dsign = diag.signum();
                let feasible = (0..m).all(|k| reduced[k][n].signum() * dsign >= 0);
                if feasible {
                    feasible_bases += 1;
                    let diag_big = diag.to_big();
                    let mut point = vec![BigRational::zero(); p];
                    for (k, &col) in subset.iter().enumerate() {
                        if col < p {
                            point[col] = BigRational::new(reduced[k][n].to_big(), diag_big.clone());
                        }
                    }
                    let value: BigRational = c.iter().zip(&point).map(|(a, b)| a * b).sum();
                    if best.as_ref().is_none_or(|(v, _)| value > *v) {
                        best = Some((value, point.clone()));
                    }
                    vertices.insert(point);

                    if ray.is_none() {
                        ray = improving_ray(&reduced, &subset, &diag_big, &c, p, n);
                    }
                }
            }
            if !next_combination(&mut subset, n) {
                break;
            }
        }

        let optimum = match (best, ray) {
            (None, _) => OracleOptimum::Infeasible,
            (Some(_), Some(ray)) => OracleOptimum::Unbounded { ray },
            (Some((value, point)), None) => OracleOptimum::Optimal { value, point },
        };
        Some(OracleReport {
            feasible: !matches!(optimum, OracleOptimum::Infeasible),
            vertices: vertices.into_iter().collect(),
            feasible_bases,
            bases_examined: examined,
            optimum,
        })
    }
}

/// Edge directions out of a feasible basis that stay nonnegative and raise
/// the objective. Returns the structural part of the first one found.
fn improving_ray<I: ExactInt>(
    reduced: &[Vec<I>],
    subset: &[usize],
    diag: &BigInt,
    c: &[BigRational],
    p: usize,
    n: usize,
) -> Option<Vec<BigRational>> {
    let dsign = if diag.is_negative() { -1 } else { 1 };
    for j in (0..n).filter(|j| !subset.contains(j)) {
        // basic component k moves by -reduced[k][j] / diag per unit of x_j
        if reduced.iter().any(|row| row[j].signum() * dsign > 0) {
            continue;
        }
        let mut dir = vec![BigRational::zero(); p];
        if j < p {
            dir[j] = BigRational::one();
        }
        for (k, &col) in subset.iter().enumerate() {
            if col < p {
                dir[col] = BigRational::new(-reduced[k][j].to_big(), diag.clone());
            }
        }
        let slope: BigRational = c.iter().zip(&dir).map(|(a, b)| a * b).sum();
        if slope.is_positive() {
            return Some(dir);
        }
    }
    None
}

/// Fraction-free Gauss-Jordan on the columns in `subset`. Returns `Ok(None)`
/// via `Some(None)` for a singular subset and `None` on overflow. On success
/// every pivot entry equals the basis determinant (up to a shared sign) and
/// every other column holds `det * B^-1 * column`.
fn eliminate<I: ExactInt>(base: &[Vec<I>], subset: &[usize]) -> Option<Option<Vec<Vec<I>>>> {
    let m = base.len();
    let mut mat = base.to_vec();
    let mut prev = I::one();
    for (k, &col) in subset.iter().enumerate() {
        let Some(pr) = (k..m).find(|&r| mat[r][col].signum() != 0) else {
            return Some(None);
        };
        mat.swap(k, pr);
        let pivot = mat[k][col].clone();
        for i in (0..m).filter(|&i| i != k) {
            let factor = mat[i][col].clone();
            for j in 0..mat[i].len() {
                let lhs = pivot.mul(&mat[i][j])?;
                let rhs = factor.mul(&mat[k][j])?;
                mat[i][j] = lhs.sub(&rhs)?.div_exact(&prev)?;
            }
        }
        prev = pivot;
    }
    // Row k was last touched when its own pivot was chosen; bring it to the
    // common scale of the final determinant.
    let det = prev;
    for (k, &col) in subset.iter().enumerate() {
        let own = mat[k][col].clone();
        if own != det {
            for j in 0..mat[k].len() {
                mat[k][j] = mat[k][j].mul(&det)?.div_exact(&own)?;
            }
        }
    }
    Some(Some(mat))
}

/// Advances `subset` to the next `k`-combination of `0..n` in lexicographic
/// order. Returns `false` after the last one.
fn next_combination(subset: &mut [usize], n: usize) -> bool {
    let k = subset.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if subset[i] < n - k + i {
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
