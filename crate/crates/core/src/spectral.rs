//! Spectra, main eigenvalues, and the eigenvector identities satisfied by
//! (κ,τ)-regular sets.
//!
//! Eigenvalues are computed numerically with cyclic Jacobi rotations.
//! Anything that looks like an integer is then confirmed or refuted with an
//! exact rank computation, and its main/non-main status is decided exactly
//! from a rational eigenspace basis. Irrational eigenvalues get a numeric
//! main flag, marked as approximate.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{ToPrimitive, Zero};

use crate::graph::{is_kt_regular, Graph, VertexSet};
use crate::linalg::{
    characteristic_vector, dot, eigenvalue_of, int, integer_eigen_multiplicity, kernel_basis,
    ParticularSolution, Rational, RationalMatrix,
};

/// Jacobi stops once every off-diagonal entry is below this.
pub const JACOBI_TOLERANCE: f64 = 1e-12;
/// Sorted eigenvalues closer than this share a multiplicity bucket.
pub const CLUSTER_TOLERANCE: f64 = 1e-6;
/// Distance to the nearest integer below which exact verification is tried.
pub const INTEGER_TOLERANCE: f64 = 0.5e-6;
/// Projection norm of `e` above which an irrational eigenvalue is main.
pub const MAIN_TOLERANCE: f64 = 1e-8;

const MAX_SWEEPS: usize = 100;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpectralError {
    #[error("{0} is not an eigenvalue")]
    NotAnEigenvalue(i64),
    #[error("the first set is not ({kappa},{tau})-regular")]
    FirstSetNotRegular { kappa: usize, tau: usize },
    #[error("the second set is not ({kappa},{tau})-regular")]
    SecondSetNotRegular { kappa: usize, tau: usize },
    #[error("the set is not ({kappa},{tau})-regular")]
    SetNotRegular { kappa: usize, tau: usize },
    #[error("the first set needs tau > 0")]
    ZeroTau,
    #[error("the two sets coincide")]
    SameSet,
    #[error("kappa - tau differs between the sets ({0} vs {1})")]
    LambdaMismatch(i64, i64),
    #[error("the vector is not an eigenvector of the adjacency matrix")]
    NotEigenvector,
    #[error("the eigenvalue {0} is not an integer")]
    EigenvalueNotInteger(Rational),
    #[error("the eigenvector is orthogonal to the all-ones vector")]
    OrthogonalToOnes,
    #[error("the linear system has no solution")]
    InconsistentSystem,
    #[error("the eigenvector is orthogonal to the particular solution")]
    ZeroProjection,
    #[error("vector length {got} does not match the graph order {n}")]
    Dimension { n: usize, got: usize },
}

/// Eigenvalues and orthonormal eigenvectors of a symmetric matrix; column
/// `k` of `vectors` belongs to `values[k]`.
#[derive(Debug, Clone)]
pub struct SymmetricEigen {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<f64>>,
}

/// Cyclic Jacobi eigendecomposition. `a` must be symmetric.
pub fn jacobi_eigen(a: &[Vec<f64>]) -> SymmetricEigen {
    let n = a.len();
    let mut m: Vec<Vec<f64>> = a.to_vec();
    let mut v = vec![vec![0.0; n]; n];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    for _ in 0..MAX_SWEEPS {
        let off = (0..n)
            .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
            .map(|(p, q)| libm::fabs(m[p][q]))
            .fold(0.0, f64::max);
        if off < JACOBI_TOLERANCE {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[p][q];
                if libm::fabs(apq) < 1e-300 {
                    continue;
                }
                let theta = (m[q][q] - m[p][p]) / (2.0 * apq);
                let t = libm::copysign(1.0, theta)
                    / (libm::fabs(theta) + libm::sqrt(theta * theta + 1.0));
                let c = 1.0 / libm::sqrt(t * t + 1.0);
                let s = t * c;
                for k in 0..n {
                    let (mkp, mkq) = (m[k][p], m[k][q]);
                    m[k][p] = c * mkp - s * mkq;
                    m[k][q] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let (mpk, mqk) = (m[p][k], m[q][k]);
                    m[p][k] = c * mpk - s * mqk;
                    m[q][k] = s * mpk + c * mqk;
                }
                for row in v.iter_mut() {
                    let (vkp, vkq) = (row[p], row[q]);
                    row[p] = c * vkp - s * vkq;
                    row[q] = s * vkp + c * vkq;
                }
            }
        }
    }
    let values = (0..n).map(|i| m[i][i]).collect();
    let vectors = (0..n).map(|k| v.iter().map(|row| row[k]).collect()).collect();
    SymmetricEigen { values, vectors }
}

/// How the main/non-main status of an eigenvalue was decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mainness {
    Exact(bool),
    Approximate(bool),
}

impl Mainness {
    pub fn is_main(self) -> bool {
        match self {
            Mainness::Exact(b) | Mainness::Approximate(b) => b,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, Mainness::Exact(_))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EigenvalueEntry {
    pub value: f64,
    pub multiplicity: usize,
    /// Set when the value is an integer confirmed by exact rank.
    pub exact_integer: Option<i64>,
    pub main: Mainness,
    /// Norm of the projection of `e` onto the numeric eigenspace.
    pub projection: f64,
}

/// Distinct eigenvalues in decreasing order; `largest` indexes λ₁.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralReport {
    pub eigenvalues: Vec<EigenvalueEntry>,
    pub largest: usize,
}

impl SpectralReport {
    pub fn order(&self) -> usize {
        self.eigenvalues.iter().map(|e| e.multiplicity).sum()
    }

    pub fn main_eigenvalues(&self) -> impl Iterator<Item = &EigenvalueEntry> {
        self.eigenvalues.iter().filter(|e| e.main.is_main())
    }

    pub fn main_count(&self) -> usize {
        self.main_eigenvalues().count()
    }

    /// All `n` eigenvalues with repetition, decreasing.
    pub fn values(&self) -> Vec<f64> {
        self.eigenvalues
            .iter()
            .flat_map(|e| core::iter::repeat_n(e.value, e.multiplicity))
            .collect()
    }

    pub fn smallest(&self) -> Option<&EigenvalueEntry> {
        self.eigenvalues.last()
    }

    pub fn integer_entry(&self, lambda: i64) -> Option<&EigenvalueEntry> {
        self.eigenvalues.iter().find(|e| e.exact_integer == Some(lambda))
    }
}

pub fn spectrum(g: &Graph) -> SpectralReport {
    let n = g.n();
    let dense: Vec<Vec<f64>> = g
        .adjacency_rows()
        .into_iter()
        .map(|r| r.into_iter().map(f64::from).collect())
        .collect();
    let eig = jacobi_eigen(&dense);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.values[b].total_cmp(&eig.values[a]));

    let mut clusters: Vec<Vec<usize>> = Vec::new();
    for &k in &order {
        match clusters.last_mut() {
            Some(c) if eig.values[*c.last().unwrap()] - eig.values[k] < CLUSTER_TOLERANCE => c.push(k),
            _ => clusters.push(vec![k]),
        }
    }

    let adjacency = RationalMatrix::adjacency(g);
    let eigenvalues = clusters
        .iter()
        .map(|cluster| {
            let value = cluster.iter().map(|&k| eig.values[k]).sum::<f64>() / cluster.len() as f64;
            let projection = libm::sqrt(
                cluster
                    .iter()
                    .map(|&k| {
                        let s: f64 = eig.vectors[k].iter().sum();
                        s * s
                    })
                    .sum(),
            );
            let rounded = libm::round(value);
            let mut exact_integer = None;
            let mut main = Mainness::Approximate(projection > MAIN_TOLERANCE);
            if libm::fabs(value - rounded) < INTEGER_TOLERANCE {
                let lambda = rounded as i64;
                let basis = kernel_basis(&adjacency, lambda).expect("square");
                if !basis.is_empty() {
                    debug_assert_eq!(basis.dim(), cluster.len());
                    exact_integer = Some(lambda);
                    main = Mainness::Exact(basis.meets_all_ones());
                }
            }
            EigenvalueEntry {
                value: exact_integer.map_or(value, |l| l as f64),
                multiplicity: cluster.len(),
                exact_integer,
                main,
                projection,
            }
        })
        .collect();
    SpectralReport { eigenvalues, largest: 0 }
}

/// Exact main test for an integer eigenvalue.
pub fn is_main(g: &Graph, lambda: i64) -> Result<bool, SpectralError> {
    let basis = kernel_basis(&RationalMatrix::adjacency(g), lambda).expect("square");
    if basis.is_empty() {
        return Err(SpectralError::NotAnEigenvalue(lambda));
    }
    Ok(basis.meets_all_ones())
}

/// `(τ₂/τ₁)·x(S₁) − x(S₂)` for two distinct regular sets with the same κ−τ;
/// the result is verified to be an eigenvector for that value.
pub fn eigenvector_from_two_sets(
    g: &Graph,
    first: (&VertexSet, usize, usize),
    second: (&VertexSet, usize, usize),
) -> Result<Vec<Rational>, SpectralError> {
    let (s1, k1, t1) = first;
    let (s2, k2, t2) = second;
    if t1 == 0 {
        return Err(SpectralError::ZeroTau);
    }
    if !is_kt_regular(g, s1, k1, t1) {
        return Err(SpectralError::FirstSetNotRegular { kappa: k1, tau: t1 });
    }
    if !is_kt_regular(g, s2, k2, t2) {
        return Err(SpectralError::SecondSetNotRegular { kappa: k2, tau: t2 });
    }
    if s1 == s2 {
        return Err(SpectralError::SameSet);
    }
    let (l1, l2) = (k1 as i64 - t1 as i64, k2 as i64 - t2 as i64);
    if l1 != l2 {
        return Err(SpectralError::LambdaMismatch(l1, l2));
    }
    let ratio = Rational::new((t2 as i64).into(), (t1 as i64).into());
    let x = characteristic_vector(s1);
    let y = characteristic_vector(s2);
    let u: Vec<Rational> = x.iter().zip(&y).map(|(a, b)| &ratio * a - b).collect();
    match eigenvalue_of(&RationalMatrix::adjacency(g), &u) {
        Some(mu) if mu == int(l1) => Ok(u),
        _ => Err(SpectralError::NotEigenvector),
    }
}

/// `μ = τ·(uᵀe)/(uᵀx̄) + (κ−τ)` for an eigenvector `u` of an integer main
/// eigenvalue μ. The returned value is checked against μ.
pub fn main_eigenvalue_from_solution(
    g: &Graph,
    u: &[Rational],
    particular: &ParticularSolution,
    kappa: usize,
    tau: usize,
) -> Result<Rational, SpectralError> {
    if u.len() != g.n() {
        return Err(SpectralError::Dimension { n: g.n(), got: u.len() });
    }
    let mu = eigenvalue_of(&RationalMatrix::adjacency(g), u).ok_or(SpectralError::NotEigenvector)?;
    if !mu.is_integer() {
        return Err(SpectralError::EigenvalueNotInteger(mu));
    }
    let xbar = particular.values().ok_or(SpectralError::InconsistentSystem)?;
    let ones = vec![Rational::from_integer(1.into()); g.n()];
    let ue = dot(u, &ones);
    if ue.is_zero() {
        return Err(SpectralError::OrthogonalToOnes);
    }
    let ux = dot(u, xbar);
    if ux.is_zero() {
        return Err(SpectralError::ZeroProjection);
    }
    let value = int(tau as i64) * ue / ux + int(kappa as i64 - tau as i64);
    if value != mu {
        return Err(SpectralError::NotEigenvector);
    }
    Ok(value)
}

/// Evaluates "λ = κ−τ or x(S) ⊥ E(λ)" for a verified (κ,τ)-regular set;
/// for such sets it is equivalent to λ being non-main.
pub fn nonmain_criterion(
    g: &Graph,
    set: &VertexSet,
    kappa: usize,
    tau: usize,
    lambda: i64,
) -> Result<bool, SpectralError> {
    if !is_kt_regular(g, set, kappa, tau) {
        return Err(SpectralError::SetNotRegular { kappa, tau });
    }
    let basis = kernel_basis(&RationalMatrix::adjacency(g), lambda).expect("square");
    if basis.is_empty() {
        return Err(SpectralError::NotAnEigenvalue(lambda));
    }
    Ok(lambda == kappa as i64 - tau as i64 || basis.is_orthogonal_to(&characteristic_vector(set)))
}

/// Integer eigenvalues present in `g`, found by exact rank over the range
/// `[-Δ, Δ]`.
pub fn integer_eigenvalues(g: &Graph) -> Vec<(i64, usize)> {
    let a = RationalMatrix::adjacency(g);
    let d = g.max_degree() as i64;
    (-d..=d)
        .rev()
        .filter_map(|l| {
            let m = integer_eigen_multiplicity(&a, l).expect("square");
            (m > 0).then_some((l, m))
        })
        .collect()
}

/// Nearest `f64` to a rational, for reporting.
pub fn approx(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}
