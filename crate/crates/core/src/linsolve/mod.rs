//! Exact Gauss-Jordan elimination over the rationals.

mod generic;

pub use generic::{generic_phi_system, generic_psi_system, GenericSystem, PhiSystemError};

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::scalar::Scalar;

pub type Matrix = Vec<Vec<Scalar>>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SystemError {
    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedRow {
        row: usize,
        found: usize,
        expected: usize,
    },
    #[error("right-hand side has {found} entries for {rows} rows")]
    RhsLength { found: usize, rows: usize },
    #[error("{found} labels for {columns} columns")]
    LabelCount { found: usize, columns: usize },
    #[error("duplicate column label {0}")]
    DuplicateLabel(String),
}

/// `A x = b` with named unknowns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystem {
    matrix: Matrix,
    rhs: Vec<Scalar>,
    labels: Vec<String>,
}

impl LinearSystem {
    pub fn new(matrix: Matrix, rhs: Vec<Scalar>, labels: Vec<String>) -> Result<Self, SystemError> {
        let columns = labels.len();
        for (row, entries) in matrix.iter().enumerate() {
            if entries.len() != columns {
                return Err(SystemError::RaggedRow {
                    row,
                    found: entries.len(),
                    expected: columns,
                });
            }
        }
        if rhs.len() != matrix.len() {
            return Err(SystemError::RhsLength {
                found: rhs.len(),
                rows: matrix.len(),
            });
        }
        let mut seen = BTreeSet::new();
        for label in &labels {
            if !seen.insert(label) {
                return Err(SystemError::DuplicateLabel(label.clone()));
            }
        }
        Ok(Self {
            matrix,
            rhs,
            labels,
        })
    }

    /// Labels `x1, x2, ...`.
    pub fn unlabeled(matrix: Matrix, rhs: Vec<Scalar>) -> Result<Self, SystemError> {
        let columns = matrix.first().map_or(0, Vec::len);
        Self::new(
            matrix,
            rhs,
            (1..=columns).map(|i| format!("x{i}")).collect(),
        )
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn rhs(&self) -> &[Scalar] {
        &self.rhs
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn num_rows(&self) -> usize {
        self.matrix.len()
    }

    pub fn num_columns(&self) -> usize {
        self.labels.len()
    }

    /// `A x - b`.
    pub fn residual(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.matrix
            .iter()
            .zip(&self.rhs)
            .map(|(row, b)| dot(row, x) - b)
            .collect()
    }

    /// `A x`.
    pub fn apply(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.matrix.iter().map(|row| dot(row, x)).collect()
    }
}

fn dot(row: &[Scalar], x: &[Scalar]) -> Scalar {
    row.iter().zip(x).map(|(a, b)| a * b).sum()
}

/// Affine solution set `particular + span(basis)`. `particular` is `None` when the system
/// is inconsistent; `basis` always spans the kernel of the coefficient matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSpace {
    pub particular: Option<Vec<Scalar>>,
    pub basis: Vec<Vec<Scalar>>,
    pub labels: Vec<String>,
    pub rank: usize,
}

impl SolutionSpace {
    pub fn is_consistent(&self) -> bool {
        self.particular.is_some()
    }

    pub fn nullity(&self) -> usize {
        self.basis.len()
    }
}

/// Reduced row echelon form of `[A | b]` restricted to the first `columns` columns as
/// pivot candidates. Pivot rule: for each column in order, the first row at or below
/// the current pivot row with a nonzero entry.
pub fn rref(matrix: &mut Matrix, columns: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..columns {
        if row == matrix.len() {
            break;
        }
        let Some(found) = (row..matrix.len()).find(|&r| !matrix[r][col].is_zero()) else {
            continue;
        };
        matrix.swap(row, found);
        let inv = Scalar::one() / &matrix[row][col];
        for entry in matrix[row].iter_mut() {
            *entry *= &inv;
        }
        let pivot_row = matrix[row].clone();
        for (r, other) in matrix.iter_mut().enumerate() {
            if r == row || other[col].is_zero() {
                continue;
            }
            let factor = other[col].clone();
            for (entry, p) in other.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *entry -= &factor * p;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank(matrix: &Matrix) -> usize {
    let columns = matrix.first().map_or(0, Vec::len);
    rref(&mut matrix.clone(), columns).len()
}

/// Kernel basis of `matrix` (with `columns` columns), one vector per free column.
pub fn nullspace(matrix: &Matrix, columns: usize) -> Vec<Vec<Scalar>> {
    let mut reduced = matrix.clone();
    let pivots = rref(&mut reduced, columns);
    kernel_from_rref(&reduced, &pivots, columns)
}

fn kernel_from_rref(reduced: &Matrix, pivots: &[usize], columns: usize) -> Vec<Vec<Scalar>> {
    (0..columns)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Scalar::zero(); columns];
            v[free] = Scalar::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -reduced[r][free].clone();
            }
            v
        })
        .collect()
}

pub fn solve(system: &LinearSystem) -> SolutionSpace {
    let columns = system.num_columns();
    let mut augmented: Matrix = system
        .matrix
        .iter()
        .zip(&system.rhs)
        .map(|(row, b)| {
            row.iter()
                .cloned()
                .chain(std::iter::once(b.clone()))
                .collect()
        })
        .collect();
    let pivots = rref(&mut augmented, columns);
    let consistent = augmented[pivots.len()..]
        .iter()
        .all(|row| row[columns].is_zero());
    let particular = consistent.then(|| {
        let mut x = vec![Scalar::zero(); columns];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = augmented[r][columns].clone();
        }
        x
    });
    SolutionSpace {
        particular,
        basis: kernel_from_rref(&augmented, &pivots, columns),
        labels: system.labels.clone(),
        rank: pivots.len(),
    }
}

/// Exact determinant of a square matrix.
#[allow(clippy::needless_range_loop)]
pub fn determinant(matrix: &Matrix) -> Scalar {
    let n = matrix.len();
    let mut a = matrix.clone();
    let mut det = Scalar::one();
    for col in 0..n {
        let Some(found) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Scalar::zero();
        };
        if found != col {
            a.swap(found, col);
            det = -det;
        }
        let pivot = a[col][col].clone();
        det *= &pivot;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &pivot;
            for c in col..n {
                let delta = &factor * &a[col][c];
                a[r][c] -= delta;
            }
        }
    }
    det
}

/// Inertia `(positive, negative, zero)` of a symmetric matrix by congruence
/// diagonalization. Panics if the matrix is not square.
#[allow(clippy::needless_range_loop)]
pub fn inertia(symmetric: &Matrix) -> (usize, usize, usize) {
    let n = symmetric.len();
    let mut a = symmetric.clone();
    assert!(
        a.iter().all(|row| row.len() == n),
        "inertia of a non-square matrix"
    );
    let mut diagonal = Vec::with_capacity(n);
    for k in 0..n {
        if a[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero()) {
                a.swap(k, j);
                for row in a.iter_mut() {
                    row.swap(k, j);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                // replace e_k by e_k + e_j; the new diagonal entry is 2 a_kj
                for c in 0..n {
                    let v = a[j][c].clone();
                    a[k][c] += v;
                }
                for r in 0..n {
                    let v = a[r][j].clone();
                    a[r][k] += v;
                }
            }
        }
        let pivot = a[k][k].clone();
        diagonal.push(pivot.clone());
        if pivot.is_zero() {
            continue;
        }
        // Schur complement of the pivot
        let column: Vec<Scalar> = (0..n).map(|r| a[r][k].clone()).collect();
        for r in k + 1..n {
            if column[r].is_zero() {
                continue;
            }
            let factor = &column[r] / &pivot;
            for c in k + 1..n {
                let delta = &factor * &column[c];
                a[r][c] -= delta;
            }
        }
        for r in k + 1..n {
            a[r][k] = Scalar::zero();
            a[k][r] = Scalar::zero();
        }
    }
    let positive = diagonal.iter().filter(|d| d > &&Scalar::zero()).count();
    let negative = diagonal.iter().filter(|d| d < &&Scalar::zero()).count();
    (positive, negative, n - positive - negative)
}
