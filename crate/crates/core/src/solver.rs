//! Finding and enumerating (κ,τ)-regular sets.
//!
//! Every solution of `(A − (κ−τ)I) x = τ·e` is `x̄ + Σ δ_j v̂_j` where `x̄`
//! is a particular solution and the `v̂_j` form an eigenspace basis whose
//! rows at the pivot vertices `i₁ < … < i_t` are the identity. A 0–1 solution
//! therefore has `δ_j ∈ {−x̄_{i_j}, 1 − x̄_{i_j}}`, one bit per pivot. The
//! search walks those bits depth-first (0 before 1) and cuts a branch as
//! soon as some coordinate can no longer reach 0 or 1.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::graph::{is_kt_regular, Graph, GraphError, VertexSet};
use crate::linalg::{
    characteristic_vector, int, shifted_system, KernelBasis, LinalgError, ParticularSolution,
    Rational, RationalMatrix,
};

pub const DEFAULT_MAX_T: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    /// Largest eigenvalue multiplicity the search accepts (2^t branches).
    pub max_t: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { max_t: DEFAULT_MAX_T }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolveError {
    #[error("eigenvalue multiplicity t = {t} exceeds the search cap {max_t}")]
    ResourceLimit { t: usize, max_t: usize },
    #[error("cardinality bounds need min degree + tau > kappa ({min_degree} + {tau} <= {kappa})")]
    BoundsInapplicable { min_degree: usize, kappa: usize, tau: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Necessary condition that settled a query without searching.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Shortcut {
    /// κ exceeds the maximum degree.
    KappaExceedsMaxDegree,
    /// τ = 0: only the whole vertex set of a κ-regular graph qualifies.
    ZeroTau,
    /// The linear system has no solution at all.
    Inconsistent,
    /// `eᵀx̄` is not a positive integer.
    CardinalityNotPositiveInteger,
    /// The degree bounds on `|S|` exclude `eᵀx̄`.
    OutsideCardinalityBounds,
    /// κ−τ is a main eigenvalue.
    MainEigenvalue,
}

impl Shortcut {
    pub fn name(self) -> &'static str {
        match self {
            Shortcut::KappaExceedsMaxDegree => "kappa_exceeds_max_degree",
            Shortcut::ZeroTau => "zero_tau",
            Shortcut::Inconsistent => "inconsistent_system",
            Shortcut::CardinalityNotPositiveInteger => "cardinality_not_positive_integer",
            Shortcut::OutsideCardinalityBounds => "outside_cardinality_bounds",
            Shortcut::MainEigenvalue => "main_eigenvalue",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KtCertificate {
    pub set: VertexSet,
    pub kappa: usize,
    pub tau: usize,
    /// Re-checked against the definition, independently of the algebra.
    pub verified: bool,
}

/// `eᵀx̄`; every (κ,τ)-regular set has exactly this many vertices.
pub fn predicted_cardinality(x: &ParticularSolution) -> Option<Rational> {
    x.total()
}

/// Degree bounds `nτ/(Δ−(κ−τ)) ≤ |S| ≤ nτ/(δ−(κ−τ))`, valid when
/// `δ + τ > κ`. Both collapse to `nτ/(p−κ+τ)` on a p-regular graph.
pub fn cardinality_bounds(
    g: &Graph,
    kappa: usize,
    tau: usize,
) -> Result<(Rational, Rational), SolveError> {
    let (dmin, dmax) = (g.min_degree(), g.max_degree());
    if dmin + tau <= kappa {
        return Err(SolveError::BoundsInapplicable { min_degree: dmin, kappa, tau });
    }
    let num = int((g.n() * tau) as i64);
    let shift = tau as i64 - kappa as i64;
    let lower = &num / int(dmax as i64 + shift);
    let upper = &num / int(dmin as i64 + shift);
    Ok((lower, upper))
}

/// Definitional check wrapped as a certificate.
pub fn check_set(g: &Graph, set: &VertexSet, kappa: usize, tau: usize) -> KtCertificate {
    KtCertificate {
        set: set.clone(),
        kappa,
        tau,
        verified: is_kt_regular(g, set, kappa, tau),
    }
}

/// Holds the adjacency matrix of one graph and answers (κ,τ) queries on it.
#[derive(Debug, Clone)]
pub struct Solver<'g> {
    graph: &'g Graph,
    adjacency: RationalMatrix,
    config: SolverConfig,
}

impl<'g> Solver<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        Self::with_config(graph, SolverConfig::default())
    }

    pub fn with_config(graph: &'g Graph, config: SolverConfig) -> Self {
        Solver { graph, adjacency: RationalMatrix::adjacency(graph), config }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn adjacency(&self) -> &RationalMatrix {
        &self.adjacency
    }

    pub fn config(&self) -> SolverConfig {
        self.config
    }

    /// Solves the linear system and applies the necessary conditions. No
    /// search happens here and the multiplicity cap is not enforced yet.
    pub fn prepare(&self, kappa: usize, tau: usize) -> Result<KtSystem<'g>, SolveError> {
        let g = self.graph;
        let lambda = kappa as i64 - tau as i64;
        let (particular, kernel) = shifted_system(&self.adjacency, lambda, tau as u64)?;
        let predicted = predicted_cardinality(&particular);
        let bounds = cardinality_bounds(g, kappa, tau).ok();
        let main = !kernel.is_empty() && kernel.meets_all_ones();

        let shortcut = if kappa > g.max_degree() {
            Some(Shortcut::KappaExceedsMaxDegree)
        } else if tau == 0 {
            Some(Shortcut::ZeroTau)
        } else if let Some(size) = &predicted {
            if !size.is_integer() || !size.is_positive() {
                Some(Shortcut::CardinalityNotPositiveInteger)
            } else if bounds.as_ref().is_some_and(|(lo, hi)| size < lo || size > hi) {
                Some(Shortcut::OutsideCardinalityBounds)
            } else if main {
                Some(Shortcut::MainEigenvalue)
            } else {
                None
            }
        } else if main {
            // A main κ−τ always makes the system inconsistent.
            Some(Shortcut::MainEigenvalue)
        } else {
            Some(Shortcut::Inconsistent)
        };

        Ok(KtSystem {
            graph: g,
            kappa,
            tau,
            lambda,
            particular,
            kernel,
            predicted,
            bounds,
            main_eigenvalue: main,
            shortcut,
            max_t: self.config.max_t,
        })
    }

    pub fn find(&self, kappa: usize, tau: usize) -> Result<Option<KtCertificate>, SolveError> {
        self.prepare(kappa, tau)?.find()
    }

    pub fn enumerate(&self, kappa: usize, tau: usize) -> Result<Vec<KtCertificate>, SolveError> {
        self.prepare(kappa, tau)?.enumerate()
    }
}

/// First (κ,τ)-regular set in search order, if any.
pub fn find_kt_set(g: &Graph, kappa: usize, tau: usize) -> Result<Option<KtCertificate>, SolveError> {
    Solver::new(g).find(kappa, tau)
}

/// All (κ,τ)-regular sets in ascending characteristic-vector order.
pub fn enumerate_kt_sets(
    g: &Graph,
    kappa: usize,
    tau: usize,
) -> Result<Vec<KtCertificate>, SolveError> {
    Solver::new(g).enumerate(kappa, tau)
}

/// One prepared (κ,τ) query: particular solution, eigenspace basis and the
/// outcome of the necessary conditions.
#[derive(Debug, Clone)]
pub struct KtSystem<'g> {
    graph: &'g Graph,
    kappa: usize,
    tau: usize,
    lambda: i64,
    particular: ParticularSolution,
    kernel: KernelBasis,
    predicted: Option<Rational>,
    bounds: Option<(Rational, Rational)>,
    main_eigenvalue: bool,
    shortcut: Option<Shortcut>,
    max_t: usize,
}

impl<'g> KtSystem<'g> {
    pub fn kappa(&self) -> usize {
        self.kappa
    }

    pub fn tau(&self) -> usize {
        self.tau
    }

    /// κ − τ.
    pub fn lambda(&self) -> i64 {
        self.lambda
    }

    /// Multiplicity of κ−τ as an eigenvalue (0 if it is not one).
    pub fn t(&self) -> usize {
        self.kernel.dim()
    }

    pub fn particular(&self) -> &ParticularSolution {
        &self.particular
    }

    pub fn kernel(&self) -> &KernelBasis {
        &self.kernel
    }

    /// `eᵀx̄`, when the system is consistent.
    pub fn predicted_cardinality(&self) -> Option<&Rational> {
        self.predicted.as_ref()
    }

    pub fn bounds(&self) -> Option<&(Rational, Rational)> {
        self.bounds.as_ref()
    }

    /// Whether κ−τ is an eigenvalue with an eigenspace not orthogonal to `e`.
    pub fn is_main_eigenvalue(&self) -> bool {
        self.main_eigenvalue
    }

    pub fn shortcut(&self) -> Option<Shortcut> {
        self.shortcut
    }

    /// `Err(ResourceLimit)` when a search would be refused.
    pub fn check_limit(&self) -> Result<(), SolveError> {
        if self.shortcut.is_none() && self.t() > self.max_t {
            return Err(SolveError::ResourceLimit { t: self.t(), max_t: self.max_t });
        }
        Ok(())
    }

    /// δ for the set with characteristic vector `x(S)`: `x_{i_j} − x̄_{i_j}`.
    pub fn delta_tuple(&self, set: &VertexSet) -> Option<Vec<Rational>> {
        let xbar = self.particular.values()?;
        Some(
            self.kernel
                .pivot_rows()
                .iter()
                .map(|&r| {
                    let bit = if set.contains(r + 1) { Rational::one() } else { Rational::zero() };
                    bit - &xbar[r]
                })
                .collect(),
        )
    }

    /// `x̄ + Σ δ_j v̂_j`.
    pub fn assemble(&self, delta: &[Rational]) -> Option<Vec<Rational>> {
        let xbar = self.particular.values()?;
        if delta.len() != self.t() {
            return None;
        }
        let mut x = xbar.to_vec();
        for (j, d) in delta.iter().enumerate() {
            if d.is_zero() {
                continue;
            }
            for (xi, vi) in x.iter_mut().zip(self.kernel.vector(j)) {
                *xi += d * vi;
            }
        }
        Some(x)
    }

    fn certificate(&self, set: VertexSet) -> KtCertificate {
        let verified = is_kt_regular(self.graph, &set, self.kappa, self.tau);
        debug_assert!(verified, "search produced a set failing the definition");
        KtCertificate { set, kappa: self.kappa, tau: self.tau, verified }
    }

    /// Walks every 0–1 solution whose first pivot bits equal `prefix`,
    /// calling `visit` until it breaks. Returns the number of search nodes.
    pub fn search_from<F>(&self, prefix: &[bool], mut visit: F) -> Result<u64, SolveError>
    where
        F: FnMut(KtCertificate) -> ControlFlow<()>,
    {
        match self.shortcut {
            Some(Shortcut::ZeroTau) => {
                if prefix.is_empty() && self.graph.regularity() == Some(self.kappa) {
                    let _ = visit(self.certificate(VertexSet::full(self.graph.n())));
                }
                return Ok(0);
            }
            Some(_) => return Ok(0),
            None => {}
        }
        self.check_limit()?;
        if prefix.len() > self.t() {
            return Ok(0);
        }
        let xbar = self.particular.values().expect("consistent when no shortcut fired");
        let nodes = match Layout::new(xbar, &self.kernel) {
            Layout::Small(search) => search.run(prefix, &mut |ind| {
                visit(self.certificate(VertexSet::from_indicator(ind)))
            }),
            Layout::Big(search) => search.run(prefix, &mut |ind| {
                visit(self.certificate(VertexSet::from_indicator(ind)))
            }),
        };
        Ok(nodes)
    }

    pub fn find(&self) -> Result<Option<KtCertificate>, SolveError> {
        let mut found = None;
        self.search_from(&[], |c| {
            found = Some(c);
            ControlFlow::Break(())
        })?;
        Ok(found)
    }

    /// Every solution below `prefix`, unsorted.
    pub fn collect_from(&self, prefix: &[bool]) -> Result<Vec<KtCertificate>, SolveError> {
        let mut out = Vec::new();
        self.search_from(prefix, |c| {
            out.push(c);
            ControlFlow::Continue(())
        })?;
        Ok(out)
    }

    pub fn enumerate(&self) -> Result<Vec<KtCertificate>, SolveError> {
        let mut out = self.collect_from(&[])?;
        out.sort_by(|a, b| a.set.cmp(&b.set));
        Ok(out)
    }
}

/// The search over pivot bits, on integers scaled by the common
/// denominator `scale`: coordinate `r` equals
/// `(base[r] + Σ_{j: bit j set} column[j][r]) / scale`.
struct BitSearch<T> {
    n: usize,
    pivots: Vec<usize>,
    /// Nonzero entries of each basis vector off the pivot rows.
    columns: Vec<Vec<(usize, T)>>,
    base: Vec<T>,
    /// Per row: sums of negative / positive entries over unassigned columns.
    slack_lo: Vec<T>,
    slack_hi: Vec<T>,
    scale: T,
    untouched_rows: Vec<usize>,
}

enum Layout {
    Small(BitSearch<i64>),
    Big(BitSearch<BigInt>),
}

const SMALL_LIMIT: i64 = 1 << 60;

impl Layout {
    fn new(xbar: &[Rational], kernel: &KernelBasis) -> Layout {
        let n = xbar.len();
        let t = kernel.dim();
        let pivots = kernel.pivot_rows().to_vec();
        let mut is_pivot = vec![false; n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let vectors = kernel.vectors();
        // base = x̄ − V·x̄_I, so that pivot coordinate i_j equals bit j.
        let mut base = xbar.to_vec();
        for (j, v) in vectors.iter().enumerate() {
            let shift = &xbar[pivots[j]];
            if shift.is_zero() {
                continue;
            }
            for (b, vi) in base.iter_mut().zip(v) {
                *b -= shift * vi;
            }
        }
        let mut scale = BigInt::one();
        for q in base.iter().chain(vectors.iter().flatten()) {
            scale = scale.lcm(q.denom());
        }
        let scaled = |q: &Rational| -> BigInt { q.numer() * (&scale / q.denom()) };

        let base_big: Vec<BigInt> = base.iter().map(scaled).collect();
        let columns_big: Vec<Vec<(usize, BigInt)>> = (0..t)
            .map(|j| {
                (0..n)
                    .filter(|&r| !is_pivot[r] && !vectors[j][r].is_zero())
                    .map(|r| (r, scaled(&vectors[j][r])))
                    .collect()
            })
            .collect();

        let mut magnitude: Vec<BigInt> = base_big.iter().map(|b| b.abs()).collect();
        for col in &columns_big {
            for (r, w) in col {
                magnitude[*r] += w.abs();
            }
        }
        let small = scale.to_i64().is_some_and(|s| s < SMALL_LIMIT)
            && magnitude.iter().all(|m| m.to_i64().is_some_and(|m| m < SMALL_LIMIT));
        if small {
            let conv = |b: &BigInt| b.to_i64().expect("checked range");
            Layout::Small(BitSearch::new(
                n,
                pivots,
                &is_pivot,
                columns_big
                    .iter()
                    .map(|c| c.iter().map(|(r, w)| (*r, conv(w))).collect())
                    .collect(),
                base_big.iter().map(conv).collect(),
                conv(&scale),
            ))
        } else {
            Layout::Big(BitSearch::new(n, pivots, &is_pivot, columns_big, base_big, scale))
        }
    }
}

impl<T> BitSearch<T>
where
    T: Clone + Ord + Zero + for<'a> core::ops::AddAssign<&'a T> + for<'a> core::ops::SubAssign<&'a T>,
{
    fn new(
        n: usize,
        pivots: Vec<usize>,
        is_pivot: &[bool],
        columns: Vec<Vec<(usize, T)>>,
        base: Vec<T>,
        scale: T,
    ) -> Self {
        let mut slack_lo = vec![T::zero(); n];
        let mut slack_hi = vec![T::zero(); n];
        let mut touched = vec![false; n];
        for col in &columns {
            for (r, w) in col {
                touched[*r] = true;
                if *w < T::zero() {
                    slack_lo[*r] += w;
                } else {
                    slack_hi[*r] += w;
                }
            }
        }
        let untouched_rows = (0..n).filter(|&r| !is_pivot[r] && !touched[r]).collect();
        BitSearch { n, pivots, columns, base, slack_lo, slack_hi, scale, untouched_rows }
    }

    fn feasible(&self, value: &T, lo: &T, hi: &T) -> bool {
        let mut min = value.clone();
        min += lo;
        let mut max = value.clone();
        max += hi;
        let zero = T::zero();
        (min <= zero && zero <= max) || (min <= self.scale && self.scale <= max)
    }

    fn run(
        mut self,
        prefix: &[bool],
        visit: &mut dyn FnMut(&[bool]) -> ControlFlow<()>,
    ) -> u64 {
        let zero = T::zero();
        let fixed_ok = self
            .untouched_rows
            .iter()
            .all(|&r| self.base[r] == zero || self.base[r] == self.scale);
        if !fixed_ok {
            return 1;
        }
        let mut value = self.base.clone();
        let mut bits = vec![false; self.pivots.len()];
        let mut nodes = 0;
        let _ = self.descend(0, prefix, &mut value, &mut bits, &mut nodes, visit);
        nodes
    }

    fn descend(
        &mut self,
        depth: usize,
        prefix: &[bool],
        value: &mut Vec<T>,
        bits: &mut Vec<bool>,
        nodes: &mut u64,
        visit: &mut dyn FnMut(&[bool]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        *nodes += 1;
        if depth == self.pivots.len() {
            let mut indicator = vec![false; self.n];
            for (r, v) in value.iter().enumerate() {
                indicator[r] = *v == self.scale;
            }
            for (j, &p) in self.pivots.iter().enumerate() {
                indicator[p] = bits[j];
            }
            return visit(&indicator);
        }
        let column = core::mem::take(&mut self.columns[depth]);
        let zero = T::zero();
        for (r, w) in &column {
            if *w < zero {
                self.slack_lo[*r] -= w;
            } else {
                self.slack_hi[*r] -= w;
            }
        }
        let choices: &[bool] = match prefix.get(depth) {
            Some(false) => &[false],
            Some(true) => &[true],
            None => &[false, true],
        };
        let mut flow = ControlFlow::Continue(());
        for &bit in choices {
            if bit {
                for (r, w) in &column {
                    value[*r] += w;
                }
            }
            let ok = column
                .iter()
                .all(|(r, _)| self.feasible(&value[*r], &self.slack_lo[*r], &self.slack_hi[*r]));
            if ok {
                bits[depth] = bit;
                flow = self.descend(depth + 1, prefix, value, bits, nodes, visit);
            }
            if bit {
                for (r, w) in &column {
                    value[*r] -= w;
                }
            }
            if flow.is_break() {
                break;
            }
        }
        for (r, w) in &column {
            if *w < zero {
                self.slack_lo[*r] += w;
            } else {
                self.slack_hi[*r] += w;
            }
        }
        self.columns[depth] = column;
        flow
    }
}

/// Whether `x` solves `(A − (κ−τ)I) x = τ·e` exactly.
pub fn solves_system(a: &RationalMatrix, kappa: usize, tau: usize, x: &[Rational]) -> bool {
    let lambda = int(kappa as i64 - tau as i64);
    match a.shifted(&lambda).and_then(|m| m.mul_vec(x)) {
        Ok(lhs) => lhs.iter().all(|v| *v == int(tau as i64)),
        Err(_) => false,
    }
}

/// `x(S)` for a certificate, for callers mixing sets with the algebra.
pub fn certificate_vector(c: &KtCertificate) -> Vec<Rational> {
    characteristic_vector(&c.set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, ladder, octahedron, petersen};
    use crate::linalg::ratio;

    fn sets(list: &[KtCertificate]) -> Vec<Vec<usize>> {
        list.iter().map(|c| c.set.members().to_vec()).collect()
    }

    #[test]
    fn petersen_zero_two_sets() {
        let found = enumerate_kt_sets(&petersen(), 0, 2).unwrap();
        assert_eq!(
            sets(&found),
            vec![
                vec![4, 5, 7, 10],
                vec![3, 5, 8, 9],
                vec![2, 6, 7, 9],
                vec![1, 6, 8, 10],
                vec![1, 2, 3, 4],
            ]
        );
        assert!(found.iter().all(|c| c.verified));
    }

    #[test]
    fn petersen_one_three_sets() {
        let found = enumerate_kt_sets(&petersen(), 1, 3).unwrap();
        assert_eq!(
            sets(&found),
            vec![
                vec![5, 6, 7, 8, 9, 10],
                vec![2, 3, 4, 5, 7, 9],
                vec![1, 3, 4, 5, 8, 10],
                vec![1, 2, 4, 6, 7, 10],
                vec![1, 2, 3, 6, 8, 9],
            ]
        );
    }

    #[test]
    fn petersen_diagnostics() {
        let g = petersen();
        let solver = Solver::new(&g);
        let sys = solver.prepare(0, 2).unwrap();
        assert_eq!(sys.t(), 4);
        assert_eq!(sys.predicted_cardinality(), Some(&int(4)));
        assert_eq!(sys.bounds(), Some(&(int(4), int(4))));
        assert_eq!(sys.shortcut(), None);
        let sys = solver.prepare(1, 3).unwrap();
        assert_eq!(sys.predicted_cardinality(), Some(&int(6)));
        assert_eq!(sys.bounds(), Some(&(int(6), int(6))));
    }

    #[test]
    fn parametrization_reproduces_each_set() {
        let g = petersen();
        let solver = Solver::new(&g);
        for (k, t) in [(0, 2), (1, 3)] {
            let sys = solver.prepare(k, t).unwrap();
            for c in sys.enumerate().unwrap() {
                let delta = sys.delta_tuple(&c.set).unwrap();
                assert_eq!(sys.assemble(&delta).unwrap(), characteristic_vector(&c.set));
            }
        }
    }

    #[test]
    fn delta_tuples_with_rebased_basis() {
        // With the identity block on vertices 1..4 and x̄ = (2/5)e, the
        // tuples are read straight off the pivot bits.
        let g = petersen();
        let solver = Solver::new(&g);
        let sys = solver.prepare(0, 2).unwrap();
        let v = sys.kernel().rebase(&[0, 1, 2, 3]).unwrap();
        let xbar = vec![ratio(2, 5); 10];
        let table = [
            ([-2, -2, -2, 3], vec![4, 5, 7, 10]),
            ([-2, -2, 3, -2], vec![3, 5, 8, 9]),
            // Printed as (-2/5, 3/5, -2/5, 3/5), which would put vertex 4 in the set.
            ([-2, 3, -2, -2], vec![2, 6, 7, 9]),
            ([3, -2, -2, -2], vec![1, 6, 8, 10]),
            ([3, 3, 3, 3], vec![1, 2, 3, 4]),
        ];
        for (delta, members) in table {
            let mut x = xbar.clone();
            for (j, d) in delta.iter().enumerate() {
                for (xi, vi) in x.iter_mut().zip(v.vector(j)) {
                    *xi += ratio(*d, 5) * vi;
                }
            }
            let set = crate::linalg::zero_one_set(&x).unwrap();
            assert_eq!(set.members(), &members[..]);
        }
    }

    #[test]
    fn ladder_unique_solution_path() {
        let g = ladder();
        let solver = Solver::new(&g);
        let sys = solver.prepare(1, 1).unwrap();
        assert_eq!(sys.t(), 0);
        let found = sys.find().unwrap().unwrap();
        assert_eq!(found.set.members(), &[2, 5]);
        let (lo, hi) = cardinality_bounds(&g, 1, 1).unwrap();
        assert_eq!((lo, hi), (int(2), int(3)));
    }

    #[test]
    fn c4_has_no_efficient_dominating_set() {
        assert_eq!(find_kt_set(&cycle(4), 0, 1).unwrap(), None);
    }

    #[test]
    fn triangle_singletons() {
        let found = enumerate_kt_sets(&complete(3), 0, 1).unwrap();
        assert_eq!(sets(&found), vec![vec![3], vec![2], vec![1]]);
    }

    #[test]
    fn shortcuts() {
        let k2 = complete(2);
        let solver = Solver::new(&k2);
        assert_eq!(solver.prepare(3, 1).unwrap().shortcut(), Some(Shortcut::KappaExceedsMaxDegree));
        let x = crate::linalg::solve_particular(solver.adjacency(), 5, 1).unwrap();
        assert_eq!(predicted_cardinality(&x), Some(ratio(-1, 2)));

        // C4, (0,1): −1 is not an eigenvalue and x̄ = (1/3)e.
        let c4 = cycle(4);
        let sys = Solver::new(&c4).prepare(0, 1).unwrap();
        assert_eq!(sys.shortcut(), Some(Shortcut::CardinalityNotPositiveInteger));
        assert_eq!(sys.predicted_cardinality(), Some(&ratio(4, 3)));

        let p = petersen();
        let sys = Solver::new(&p).prepare(2, 0).unwrap();
        assert_eq!(sys.shortcut(), Some(Shortcut::ZeroTau));
        assert!(sys.enumerate().unwrap().is_empty());
        let sys = Solver::new(&p).prepare(3, 0).unwrap();
        assert_eq!(sets(&sys.enumerate().unwrap()), vec![(1..=10).collect::<Vec<_>>()]);
    }

    #[test]
    fn main_eigenvalue_shortcut() {
        // K2 + K3: eigenvalue 1 comes from K2 with eigenvector (1,1,0,0,0).
        let g = complete(2).disjoint_union(&complete(3));
        let sys = Solver::new(&g).prepare(2, 1).unwrap();
        assert!(sys.is_main_eigenvalue());
        assert_eq!(sys.shortcut(), Some(Shortcut::MainEigenvalue));
        assert!(sys.enumerate().unwrap().is_empty());

        // In K2 the eigenvalue −1 is non-main and both singletons qualify.
        let k2 = complete(2);
        let sys = Solver::new(&k2).prepare(0, 1).unwrap();
        assert!(!sys.is_main_eigenvalue());
        assert_eq!(sets(&sys.enumerate().unwrap()), vec![vec![2], vec![1]]);
    }

    #[test]
    fn whole_vertex_set_is_a_solution_of_regular_graphs() {
        // K3 is 2-regular, so V solves the system for (2, τ) with any τ.
        let found = enumerate_kt_sets(&complete(3), 2, 1).unwrap();
        assert_eq!(sets(&found), vec![vec![1, 2, 3]]);
    }

    #[test]
    fn resource_cap() {
        let g = octahedron();
        let solver = Solver::with_config(&g, SolverConfig { max_t: 1 });
        assert_eq!(
            solver.enumerate(2, 4),
            Err(SolveError::ResourceLimit { t: 2, max_t: 1 })
        );
    }

    #[test]
    fn bounds_precondition() {
        assert_eq!(
            cardinality_bounds(&cycle(4), 3, 1),
            Err(SolveError::BoundsInapplicable { min_degree: 2, kappa: 3, tau: 1 })
        );
    }

    #[test]
    fn check_set_examples() {
        let p = petersen();
        let s = VertexSet::new(10, [1, 2, 5, 7, 8]).unwrap();
        assert!(check_set(&p, &s, 2, 1).verified);
        let s = VertexSet::new(10, [1, 2, 3]).unwrap();
        assert!(!check_set(&p, &s, 0, 2).verified);
        let l = ladder();
        let s = VertexSet::new(6, [1, 3, 4, 6]).unwrap();
        assert!(check_set(&l, &s, 1, 2).verified);
    }

    #[test]
    fn prefix_split_matches_full_search() {
        let g = petersen();
        let solver = Solver::new(&g);
        let sys = solver.prepare(0, 2).unwrap();
        let mut merged = Vec::new();
        for prefix in [[false, false], [false, true], [true, false], [true, true]] {
            merged.extend(sys.collect_from(&prefix).unwrap());
        }
        merged.sort_by(|a, b| a.set.cmp(&b.set));
        assert_eq!(merged, sys.enumerate().unwrap());
    }
}
