//! Exact rational linear algebra for the shifted adjacency system
//! `(A − λI) x = τ·e`.
//!
//! Pivoting takes the first nonzero entry in column order, so every result
//! here is a deterministic function of its input.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::graph::{Graph, VertexSet};

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn sum(a: &[Rational]) -> Rational {
    a.iter().fold(Rational::zero(), |acc, x| acc + x)
}

/// `x(S)` as a rational vector.
pub fn characteristic_vector(set: &VertexSet) -> Vec<Rational> {
    set.indicator()
        .into_iter()
        .map(|b| if b { Rational::one() } else { Rational::zero() })
        .collect()
}

/// The set whose characteristic vector is `x`, or `None` when `x` is not 0–1.
pub fn zero_one_set(x: &[Rational]) -> Option<VertexSet> {
    let mut indicator = Vec::with_capacity(x.len());
    for v in x {
        if v.is_zero() {
            indicator.push(false);
        } else if v.is_one() {
            indicator.push(true);
        } else {
            return None;
        }
    }
    Some(VertexSet::from_indicator(&indicator))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

/// Dense row-major rational matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    cols: usize,
    rows: Vec<Vec<Rational>>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix { cols, rows: vec![vec![Rational::zero(); cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(LinalgError::DimensionMismatch { expected: cols, got: bad.len() });
        }
        Ok(RationalMatrix { cols, rows })
    }

    /// The adjacency matrix `A_G`.
    pub fn adjacency(g: &Graph) -> Self {
        let mut m = Self::zeros(g.n(), g.n());
        for &(u, v) in g.edges() {
            m[(u - 1, v - 1)] = Rational::one();
            m[(v - 1, u - 1)] = Rational::one();
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.rows[i]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        self.rows.iter().map(|r| r[j].clone()).collect()
    }

    fn require_square(&self) -> Result<usize, LinalgError> {
        if self.nrows() == self.cols {
            Ok(self.cols)
        } else {
            Err(LinalgError::NotSquare { rows: self.nrows(), cols: self.cols })
        }
    }

    /// `self − λI`.
    pub fn shifted(&self, lambda: &Rational) -> Result<Self, LinalgError> {
        let n = self.require_square()?;
        let mut m = self.clone();
        for i in 0..n {
            m[(i, i)] -= lambda;
        }
        Ok(m)
    }

    pub fn mul_vec(&self, x: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
        if x.len() != self.cols {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, got: x.len() });
        }
        Ok(self.rows.iter().map(|r| dot(r, x)).collect())
    }

    pub fn mul(&self, other: &RationalMatrix) -> Result<Self, LinalgError> {
        if other.nrows() != self.cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                got: other.nrows(),
            });
        }
        let mut out = Self::zeros(self.nrows(), other.cols);
        for i in 0..self.nrows() {
            for k in 0..self.cols {
                let a = &self.rows[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other.rows[k][j];
                    out.rows[i][j] += prod;
                }
            }
        }
        Ok(out)
    }

    /// Rows `indices` of `self`, in that order.
    pub fn select_rows(&self, indices: &[usize]) -> Self {
        RationalMatrix {
            cols: self.cols,
            rows: indices.iter().map(|&i| self.rows[i].clone()).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        rref(self.clone()).pivots.len()
    }

    pub fn inverse(&self) -> Option<Self> {
        let n = self.require_square().ok()?;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Rational::one();
        }
        let reduced = rref(aug);
        if reduced.pivots.len() < n || reduced.pivots[n - 1] >= n {
            return None;
        }
        let rows = reduced.matrix.rows.into_iter().map(|r| r[n..].to_vec()).collect();
        Some(RationalMatrix { cols: n, rows })
    }
}

impl Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.rows[i][j]
    }
}

impl IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.rows[i][j]
    }
}

/// Reduced row-echelon form together with its pivot columns.
#[derive(Debug, Clone)]
pub struct Rref {
    pub matrix: RationalMatrix,
    pub pivots: Vec<usize>,
}

pub fn rref(mut m: RationalMatrix) -> Rref {
    let (nrows, ncols) = (m.nrows(), m.ncols());
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == nrows {
            break;
        }
        let Some(p) = (row..nrows).find(|&r| !m.rows[r][col].is_zero()) else {
            continue;
        };
        m.rows.swap(p, row);
        let inv = m.rows[row][col].recip();
        for c in col..ncols {
            if !m.rows[row][c].is_zero() {
                m.rows[row][c] *= &inv;
            }
        }
        let pivot_row = core::mem::take(&mut m.rows[row]);
        for (r, other) in m.rows.iter_mut().enumerate() {
            if r == row || other[col].is_zero() {
                continue;
            }
            let factor = other[col].clone();
            for c in col..ncols {
                if !pivot_row[c].is_zero() {
                    other[c] -= &factor * &pivot_row[c];
                }
            }
        }
        m.rows[row] = pivot_row;
        pivots.push(col);
        row += 1;
    }
    Rref { matrix: m, pivots }
}

/// A particular solution `x̄` of `(A − λI) x = τ·e`, canonical in that every
/// free variable is zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParticularSolution {
    values: Vec<Rational>,
    consistent: bool,
}

impl ParticularSolution {
    /// Wraps a caller-supplied solution, e.g. one taken from a worked example.
    pub fn from_values(values: Vec<Rational>) -> Self {
        ParticularSolution { values, consistent: true }
    }

    pub fn is_consistent(&self) -> bool {
        self.consistent
    }

    /// `None` when the system has no solution.
    pub fn values(&self) -> Option<&[Rational]> {
        self.consistent.then_some(&self.values[..])
    }

    /// `eᵀx̄`.
    pub fn total(&self) -> Option<Rational> {
        self.values().map(sum)
    }
}

/// Basis of `E(λ) = ker(A − λI)` as the columns of an `n × t` matrix whose
/// rows at `pivots` form the `t × t` identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelBasis {
    vectors: RationalMatrix,
    pivots: Vec<usize>,
}

impl KernelBasis {
    /// The multiplicity `t`.
    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pivots.is_empty()
    }

    /// The `n × t` matrix `V`.
    pub fn matrix(&self) -> &RationalMatrix {
        &self.vectors
    }

    pub fn vector(&self, j: usize) -> Vec<Rational> {
        self.vectors.column(j)
    }

    pub fn vectors(&self) -> Vec<Vec<Rational>> {
        (0..self.dim()).map(|j| self.vector(j)).collect()
    }

    /// 0-based rows holding the identity submatrix.
    pub fn pivot_rows(&self) -> &[usize] {
        &self.pivots
    }

    /// The pivot rows as vertex labels `i₁ < … < i_t`.
    pub fn pivot_vertices(&self) -> Vec<usize> {
        self.pivots.iter().map(|&r| r + 1).collect()
    }

    /// Re-expresses the basis so that its identity submatrix sits on `rows`
    /// (0-based). `None` when those rows of `V` are singular.
    pub fn rebase(&self, rows: &[usize]) -> Option<KernelBasis> {
        if rows.len() != self.dim() || rows.iter().any(|&r| r >= self.vectors.nrows()) {
            return None;
        }
        let inv = self.vectors.select_rows(rows).inverse()?;
        let vectors = self.vectors.mul(&inv).ok()?;
        Some(KernelBasis { vectors, pivots: rows.to_vec() })
    }

    /// Whether some basis vector has a nonzero coordinate sum, i.e. the
    /// eigenspace is not orthogonal to `e`.
    pub fn meets_all_ones(&self) -> bool {
        (0..self.dim()).any(|j| !sum(&self.vector(j)).is_zero())
    }

    /// Whether `x` is orthogonal to every basis vector.
    pub fn is_orthogonal_to(&self, x: &[Rational]) -> bool {
        (0..self.dim()).all(|j| dot(&self.vector(j), x).is_zero())
    }
}

fn kernel_from_rref(reduced: &Rref, n: usize) -> KernelBasis {
    let pivot_cols: Vec<usize> = reduced.pivots.iter().copied().filter(|&c| c < n).collect();
    let mut is_pivot = vec![false; n];
    for &c in &pivot_cols {
        is_pivot[c] = true;
    }
    let free: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
    let mut vectors = RationalMatrix::zeros(n, free.len());
    for (j, &f) in free.iter().enumerate() {
        vectors[(f, j)] = Rational::one();
        for (r, &p) in pivot_cols.iter().enumerate() {
            let entry = &reduced.matrix[(r, f)];
            if !entry.is_zero() {
                vectors[(p, j)] = -entry;
            }
        }
    }
    KernelBasis { vectors, pivots: free }
}

/// Solves `(A − λI) x = τ·e` and returns the canonical particular solution
/// together with the canonical basis of `ker(A − λI)`, from one elimination.
pub fn shifted_system(
    a: &RationalMatrix,
    lambda: i64,
    tau: u64,
) -> Result<(ParticularSolution, KernelBasis), LinalgError> {
    let n = a.require_square()?;
    let shifted = a.shifted(&int(lambda))?;
    let rhs = Rational::from_integer(BigInt::from(tau));
    let rows = shifted
        .rows
        .into_iter()
        .map(|mut r| {
            r.push(rhs.clone());
            r
        })
        .collect();
    let reduced = rref(RationalMatrix { cols: n + 1, rows });
    let consistent = reduced.pivots.last() != Some(&n);
    let mut values = vec![Rational::zero(); n];
    if consistent {
        for (r, &p) in reduced.pivots.iter().enumerate() {
            values[p] = reduced.matrix[(r, n)].clone();
        }
    }
    let kernel = kernel_from_rref(&reduced, n);
    Ok((ParticularSolution { values, consistent }, kernel))
}

pub fn solve_particular(
    a: &RationalMatrix,
    lambda: i64,
    tau: u64,
) -> Result<ParticularSolution, LinalgError> {
    shifted_system(a, lambda, tau).map(|(x, _)| x)
}

pub fn kernel_basis(a: &RationalMatrix, lambda: i64) -> Result<KernelBasis, LinalgError> {
    let n = a.require_square()?;
    let reduced = rref(a.shifted(&int(lambda))?);
    Ok(kernel_from_rref(&reduced, n))
}

/// `dim ker(A − λI)`: the multiplicity of λ as an eigenvalue, 0 if it is
/// not one.
pub fn integer_eigen_multiplicity(a: &RationalMatrix, lambda: i64) -> Result<usize, LinalgError> {
    let n = a.require_square()?;
    Ok(n - a.shifted(&int(lambda))?.rank())
}

/// The μ with `A x = μ x`, if `x` is a nonzero eigenvector.
pub fn eigenvalue_of(a: &RationalMatrix, x: &[Rational]) -> Option<Rational> {
    let ax = a.mul_vec(x).ok()?;
    let i = x.iter().position(|v| !v.is_zero())?;
    let mu = &ax[i] / &x[i];
    ax.iter()
        .zip(x)
        .all(|(l, r)| *l == &mu * r)
        .then_some(mu)
}

/// The integer value of `q`, if it is one.
pub fn as_integer(q: &Rational) -> Option<BigInt> {
    q.is_integer().then(|| q.to_integer())
}

pub fn is_nonnegative_integer(q: &Rational) -> bool {
    q.is_integer() && !q.is_negative()
}
