//! Combinatorial structures recognised through (κ,τ)-regular sets.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use num_integer::Roots;

use crate::graph::{
    complete, cycle, has_neighbor_counts, induces_connected, is_kt_regular, Edge, Graph,
    GraphError, Vertex, VertexSet,
};
use crate::linalg::{integer_eigen_multiplicity, Rational, RationalMatrix};
use crate::solver::{SolveError, Solver, SolverConfig};
use crate::spectral::spectrum;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StructureError {
    #[error("the reduction does not apply: {0}")]
    Inapplicable(&'static str),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("invalid design: {0}")]
    Design(DesignError),
}

impl StructureError {
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, StructureError::Solve(SolveError::ResourceLimit { .. }))
    }
}

/// A perfect matching, from a (0,2)-regular set of the line graph.
///
/// `K₂` falls outside the line-graph reduction and is reported as
/// inapplicable. Graphs with an isolated vertex have no perfect matching
/// and are answered directly.
pub fn perfect_matching(g: &Graph) -> Result<Option<Vec<Edge>>, StructureError> {
    perfect_matching_with(g, SolverConfig::default())
}

pub fn perfect_matching_with(
    g: &Graph,
    config: SolverConfig,
) -> Result<Option<Vec<Edge>>, StructureError> {
    if *g == complete(2) {
        return Err(StructureError::Inapplicable("the graph is K2"));
    }
    if g.n() % 2 == 1 || g.min_degree() == 0 {
        return Ok(None);
    }
    let (l, labels) = g.line_graph()?;
    let Some(cert) = Solver::with_config(&l, config).find(0, 2)? else {
        return Ok(None);
    };
    let matching = labels.edges_of(&cert.set);
    assert!(is_perfect_matching(g, &matching), "line-graph certificate is not a perfect matching");
    Ok(Some(matching))
}

pub fn is_perfect_matching(g: &Graph, edges: &[Edge]) -> bool {
    let mut covered = vec![false; g.n() + 1];
    for &(u, v) in edges {
        if !g.is_adjacent(u, v) || covered[u] || covered[v] {
            return false;
        }
        covered[u] = true;
        covered[v] = true;
    }
    covered[1..].iter().all(|&c| c)
}

/// `Some(cycle)` when the edges form a single cycle through all `n`
/// vertices; the cycle starts at vertex 1 and continues to its smaller
/// neighbour.
pub fn cycle_from_edges(n: usize, edges: &[Edge]) -> Option<Vec<Vertex>> {
    if n < 3 || edges.len() != n {
        return None;
    }
    let mut nbrs = vec![Vec::new(); n + 1];
    for &(u, v) in edges {
        if u == 0 || v == 0 || u > n || v > n {
            return None;
        }
        nbrs[u].push(v);
        nbrs[v].push(u);
    }
    if nbrs[1..].iter().any(|a| a.len() != 2) {
        return None;
    }
    let mut seq = vec![1];
    let mut prev = 1;
    let mut cur = nbrs[1][0].min(nbrs[1][1]);
    while cur != 1 {
        seq.push(cur);
        let next = if nbrs[cur][0] == prev { nbrs[cur][1] } else { nbrs[cur][0] };
        prev = cur;
        cur = next;
        if seq.len() > n {
            return None;
        }
    }
    (seq.len() == n).then_some(seq)
}

pub fn is_hamilton_cycle(g: &Graph, seq: &[Vertex]) -> bool {
    let n = g.n();
    if n < 3 || seq.len() != n {
        return false;
    }
    let distinct: BTreeSet<_> = seq.iter().copied().collect();
    distinct.len() == n
        && distinct.iter().all(|&v| (1..=n).contains(&v))
        && (0..n).all(|i| g.is_adjacent(seq[i], seq[(i + 1) % n]))
}

/// Result of a Hamiltonicity search, with the eigenvalue multiplicity that
/// governed it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamiltonOutcome {
    pub cycle: Option<Vec<Vertex>>,
    pub t: usize,
    /// Regular sets inspected before stopping.
    pub candidates: usize,
}

/// Hamilton cycle from a connected (2,4)-regular set of `L(G)`.
pub fn hamiltonian_cycle(g: &Graph) -> Result<HamiltonOutcome, StructureError> {
    hamiltonian_cycle_with(g, SolverConfig::default())
}

pub fn hamiltonian_cycle_with(
    g: &Graph,
    config: SolverConfig,
) -> Result<HamiltonOutcome, StructureError> {
    if g.n() < 3 {
        return Err(StructureError::Inapplicable("fewer than 3 vertices"));
    }
    if g.is_cycle() {
        let cycle = cycle_from_edges(g.n(), g.edges());
        return Ok(HamiltonOutcome { cycle, t: 0, candidates: 0 });
    }
    // An isolated vertex lets a cycle through all the other vertices pass
    // as a certificate in L(G).
    if g.m() < g.n() || g.min_degree() == 0 {
        return Ok(HamiltonOutcome { cycle: None, t: 0, candidates: 0 });
    }
    let (l, labels) = g.line_graph()?;
    let solver = Solver::with_config(&l, config);
    let system = solver.prepare(2, 4)?;
    first_connected(&l, &system, g.n(), |set| labels.edges_of(set))
}

/// Hamilton cycle from a connected (2,2)-regular set of the subdivision.
pub fn hamiltonian_via_subdivision(g: &Graph) -> Result<HamiltonOutcome, StructureError> {
    hamiltonian_via_subdivision_with(g, SolverConfig::default())
}

pub fn hamiltonian_via_subdivision_with(
    g: &Graph,
    config: SolverConfig,
) -> Result<HamiltonOutcome, StructureError> {
    if g.n() < 3 {
        return Err(StructureError::Inapplicable("fewer than 3 vertices"));
    }
    if g.m() < g.n() || g.min_degree() == 0 {
        return Ok(HamiltonOutcome { cycle: None, t: 0, candidates: 0 });
    }
    let (s, labels) = g.subdivision()?;
    let solver = Solver::with_config(&s, config);
    let system = solver.prepare(2, 2)?;
    first_connected(&s, &system, g.n(), |set| labels.edges_of(set))
}

fn first_connected<F>(
    host: &Graph,
    system: &crate::solver::KtSystem<'_>,
    n: usize,
    edges_of: F,
) -> Result<HamiltonOutcome, StructureError>
where
    F: Fn(&VertexSet) -> Vec<Edge>,
{
    let t = system.t();
    let mut candidates = 0;
    let mut cycle = None;
    system.search_from(&[], |cert| {
        candidates += 1;
        if induces_connected(host, &cert.set) == Ok(true) {
            cycle = cycle_from_edges(n, &edges_of(&cert.set));
            assert!(cycle.is_some(), "connected certificate does not give a Hamilton cycle");
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    })?;
    Ok(HamiltonOutcome { cycle, t, candidates })
}

/// Every efficient dominating set: exactly the (0,1)-regular sets.
pub fn efficient_dominating_sets(g: &Graph) -> Result<Vec<VertexSet>, StructureError> {
    efficient_dominating_sets_with(g, SolverConfig::default())
}

pub fn efficient_dominating_sets_with(
    g: &Graph,
    config: SolverConfig,
) -> Result<Vec<VertexSet>, StructureError> {
    let certs = Solver::with_config(g, config).enumerate(0, 1)?;
    Ok(certs.into_iter().map(|c| c.set).collect())
}

/// Every dominating induced matching, as efficient dominating sets of the
/// line graph mapped back to edges.
pub fn dominating_induced_matchings(g: &Graph) -> Result<Vec<Vec<Edge>>, StructureError> {
    dominating_induced_matchings_with(g, SolverConfig::default())
}

pub fn dominating_induced_matchings_with(
    g: &Graph,
    config: SolverConfig,
) -> Result<Vec<Vec<Edge>>, StructureError> {
    let (l, labels) = g.line_graph()?;
    let sets = efficient_dominating_sets_with(&l, config)?;
    Ok(sets.iter().map(|s| labels.edges_of(s)).collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxRegularCertificate {
    pub set: VertexSet,
    /// `−λ_n`, verified exactly to be a positive integer eigenvalue negation.
    pub tau: usize,
    pub maximum: bool,
}

/// A (κ, κ−λ_n)-regular set, which is a largest vertex set inducing a
/// κ-regular subgraph. Requires the least eigenvalue to be an integer.
pub fn max_regular_induced_certificate(
    g: &Graph,
    kappa: usize,
) -> Result<Option<MaxRegularCertificate>, StructureError> {
    max_regular_induced_certificate_with(g, kappa, SolverConfig::default())
}

pub fn max_regular_induced_certificate_with(
    g: &Graph,
    kappa: usize,
    config: SolverConfig,
) -> Result<Option<MaxRegularCertificate>, StructureError> {
    let report = spectrum(g);
    let least = report.smallest().expect("a graph has at least one eigenvalue");
    let rounded = libm::round(least.value);
    if libm::fabs(least.value - rounded) > crate::spectral::INTEGER_TOLERANCE || rounded >= 0.0 {
        return Err(StructureError::Inapplicable("the least eigenvalue is not a negative integer"));
    }
    let lambda = rounded as i64;
    let a = RationalMatrix::adjacency(g);
    if integer_eigen_multiplicity(&a, lambda).expect("square") == 0 {
        return Err(StructureError::Inapplicable("the least eigenvalue is not a negative integer"));
    }
    let tau = (-lambda) as usize;
    let found = Solver::with_config(g, config).find(kappa, kappa + tau)?;
    Ok(found.map(|c| MaxRegularCertificate { set: c.set, tau, maximum: true }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SrgParams {
    pub n: usize,
    pub p: usize,
    pub a: usize,
    pub c: usize,
}

impl SrgParams {
    pub fn is_primitive(&self) -> bool {
        self.c != 0 && self.c != self.p
    }
}

/// Strongly regular parameters, confirmed by checking that every
/// neighbourhood `N(v)` is (a,c)-regular in `G − v`.
pub fn srg_check(g: &Graph) -> Option<SrgParams> {
    let n = g.n();
    let p = g.regularity()?;
    if n < 3 {
        return None;
    }
    let mut a = None;
    let mut c = None;
    for u in g.vertices() {
        for v in u + 1..=n {
            let slot = if g.is_adjacent(u, v) { &mut a } else { &mut c };
            slot.get_or_insert(g.common_neighbors(u, v));
        }
    }
    // Complete and edgeless graphs are not counted as strongly regular.
    let (a, c) = (a?, c?);
    for v in g.vertices() {
        let (h, map) = g.delete_vertex(v).ok()?;
        let nbrs = VertexSet::new(n - 1, g.neighbors(v).iter().map(|&w| map.to_new(w).unwrap()))
            .ok()?;
        if !has_neighbor_counts(&h, &nbrs, a, c) {
            return None;
        }
    }
    Some(SrgParams { n, p, a, c })
}

/// `(p(τ−1) + c)/c`, the size of any (0,τ)-regular set in a primitive
/// strongly regular graph.
pub fn srg_stable_set_size(p: usize, tau: usize, c: usize) -> Result<Rational, StructureError> {
    if c == 0 {
        return Err(StructureError::Inapplicable("c = 0"));
    }
    let num = p as i64 * (tau as i64 - 1) + c as i64;
    Ok(Rational::new(num.into(), (c as i64).into()))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DesignError {
    #[error("no blocks")]
    NoBlocks,
    #[error("block {block} has {got} points, expected {tau}")]
    BlockSize { block: usize, got: usize, tau: usize },
    #[error("block {block} contains point {point} outside 1..={n2}")]
    PointOutOfRange { block: usize, point: usize, n2: usize },
    #[error("block {block} repeats point {point}")]
    RepeatedPoint { block: usize, point: usize },
    #[error("point {point} lies in {got} blocks, expected {s}")]
    Replication { point: usize, got: usize, s: usize },
    #[error("tau must be positive")]
    ZeroTau,
    #[error("expected {expected} blocks (one per vertex of the first graph), got {got}")]
    BlockCount { expected: usize, got: usize },
    #[error("graph {0} is not regular")]
    NotRegular(usize),
}

/// A 1-(n₂, τ, s) design: blocks of size τ over points `1..=n₂`, each point
/// in exactly `s` blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DesignBlocks {
    blocks: Vec<Vec<Vertex>>,
    points: usize,
    tau: usize,
    s: usize,
}

impl DesignBlocks {
    pub fn new(points: usize, blocks: Vec<Vec<Vertex>>) -> Result<Self, DesignError> {
        let tau = blocks.first().ok_or(DesignError::NoBlocks)?.len();
        if tau == 0 {
            return Err(DesignError::ZeroTau);
        }
        let mut count = vec![0usize; points + 1];
        for (i, b) in blocks.iter().enumerate() {
            let block = i + 1;
            if b.len() != tau {
                return Err(DesignError::BlockSize { block, got: b.len(), tau });
            }
            let mut seen = BTreeSet::new();
            for &point in b {
                if point == 0 || point > points {
                    return Err(DesignError::PointOutOfRange { block, point, n2: points });
                }
                if !seen.insert(point) {
                    return Err(DesignError::RepeatedPoint { block, point });
                }
                count[point] += 1;
            }
        }
        let s = count[1];
        if let Some(point) = (1..=points).find(|&p| count[p] != s) {
            return Err(DesignError::Replication { point, got: count[point], s });
        }
        Ok(DesignBlocks { blocks, points, tau, s })
    }

    pub fn blocks(&self) -> &[Vec<Vertex>] {
        &self.blocks
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn tau(&self) -> usize {
        self.tau
    }

    pub fn s(&self) -> usize {
        self.s
    }
}

/// `G₁ ⊕ G₂`: vertex `i` of `G₁` is joined to block `Bᵢ` of `G₂`. `G₁`
/// keeps labels `1..=n₁`; `G₂` is shifted by `n₁`. Both sides are checked
/// to be regular sets of the result, (κ₁,s) and (κ₂,τ).
pub fn design_join(g1: &Graph, g2: &Graph, design: &DesignBlocks) -> Result<Graph, StructureError> {
    let k1 = g1.regularity().ok_or(StructureError::Design(DesignError::NotRegular(1)))?;
    let k2 = g2.regularity().ok_or(StructureError::Design(DesignError::NotRegular(2)))?;
    if design.blocks.len() != g1.n() {
        return Err(StructureError::Design(DesignError::BlockCount {
            expected: g1.n(),
            got: design.blocks.len(),
        }));
    }
    if design.points != g2.n() {
        return Err(StructureError::Design(DesignError::PointOutOfRange {
            block: 0,
            point: design.points,
            n2: g2.n(),
        }));
    }
    let n1 = g1.n();
    let mut h = g1.disjoint_union(g2).edges().to_vec();
    for (i, b) in design.blocks.iter().enumerate() {
        h.extend(b.iter().map(|&p| (i + 1, n1 + p)));
    }
    let h = Graph::from_edge_list(n1 + g2.n(), h)?;
    let left = VertexSet::new(h.n(), 1..=n1)?;
    let right = left.complement();
    assert!(is_kt_regular(&h, &left, k1, design.s), "first side is not (k1,s)-regular");
    assert!(is_kt_regular(&h, &right, k2, design.tau), "second side is not (k2,tau)-regular");
    Ok(h)
}

/// `((κ₁+κ₂) ± √D)/2` with `D = (κ₂−κ₁)² + 4sτ`, kept symbolic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct JoinEigenvalues {
    pub trace: u64,
    pub radicand: u64,
}

impl JoinEigenvalues {
    pub fn sqrt_exact(&self) -> Option<u64> {
        let r = self.radicand.sqrt();
        (r * r == self.radicand).then_some(r)
    }

    /// Both values as rationals, when `D` is a perfect square.
    pub fn exact(&self) -> Option<(Rational, Rational)> {
        let r = self.sqrt_exact()? as i64;
        let t = self.trace as i64;
        let half = |x: i64| Rational::new(x.into(), 2.into());
        Some((half(t + r), half(t - r)))
    }

    pub fn plus(&self) -> f64 {
        (self.trace as f64 + libm::sqrt(self.radicand as f64)) / 2.0
    }

    pub fn minus(&self) -> f64 {
        (self.trace as f64 - libm::sqrt(self.radicand as f64)) / 2.0
    }
}

pub fn main_eigenvalues_of_join(k1: u64, k2: u64, s: u64, tau: u64) -> JoinEigenvalues {
    let d = k1.abs_diff(k2);
    JoinEigenvalues { trace: k1 + k2, radicand: d * d + 4 * s * tau }
}

/// `C_n` with `s` pendant vertices on every cycle vertex. Pendants are
/// `1..=sn` (pendants `s(i−1)+1..=si` hang from cycle vertex `i`); the
/// cycle is `sn+1..=sn+n`.
pub fn pendant_unicyclic(n: usize, s: usize) -> Result<Graph, StructureError> {
    if n < 3 {
        return Err(StructureError::Inapplicable("the cycle needs at least 3 vertices"));
    }
    if s == 0 {
        return Err(StructureError::Inapplicable("s must be positive"));
    }
    let g1 = Graph::empty(s * n)?;
    let blocks = (0..s * n).map(|i| vec![i / s + 1]).collect();
    let design = DesignBlocks::new(n, blocks).map_err(StructureError::Design)?;
    design_join(&g1, &cycle(n), &design)
}
