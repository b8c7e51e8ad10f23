//! Simple undirected graphs on the dense vertex labels `1..=n`.

mod named;
mod ops;
mod set;

use alloc::vec;
use alloc::vec::Vec;

pub use named::*;
pub use ops::{EdgeLabeling, VertexMap};
pub use set::VertexSet;

/// A vertex label, always in `1..=n`.
pub type Vertex = usize;

/// An edge `(u, v)` with `u < v`.
pub type Edge = (Vertex, Vertex);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("vertex {0} listed twice")]
    DuplicateVertex(Vertex),
    #[error("the operation needs at least one edge")]
    NoEdges,
    #[error("the vertex set is empty")]
    EmptyVertexSet,
}

/// Immutable simple graph. Edges are kept in lexicographic order and every
/// neighbour list is sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Builds a graph from an edge list. Repeated pairs (in either
    /// orientation) collapse to one edge; loops and out-of-range labels are
    /// rejected.
    pub fn from_edge_list<I>(n: usize, pairs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut edges = Vec::new();
        for (u, v) in pairs {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            edges.push(if u < v { (u, v) } else { (v, u) });
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Self::from_sorted_edges(n, edges))
    }

    /// `edges` must be sorted, deduplicated and oriented `u < v`.
    pub(crate) fn from_sorted_edges(n: usize, edges: Vec<Edge>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u - 1].push(v);
            adj[v - 1].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Self::from_edge_list(n, [])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertices(&self) -> core::ops::RangeInclusive<Vertex> {
        1..=self.n
    }

    /// Sorted neighbours of `v`.
    ///
    /// Panics if `v` is not a vertex.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v - 1]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v - 1].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn is_adjacent(&self, u: Vertex, v: Vertex) -> bool {
        u != v && self.adj[u - 1].binary_search(&v).is_ok()
    }

    /// `Some(p)` when every vertex has degree `p`.
    pub fn regularity(&self) -> Option<usize> {
        let p = self.degree(1);
        self.adj.iter().all(|l| l.len() == p).then_some(p)
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(1).iter().all(|&seen| seen)
    }

    /// Connected and 2-regular.
    pub fn is_cycle(&self) -> bool {
        self.n >= 3 && self.regularity() == Some(2) && self.is_connected()
    }

    /// Number of common neighbours of `u` and `v`.
    pub fn common_neighbors(&self, u: Vertex, v: Vertex) -> usize {
        let (a, b) = (self.neighbors(u), self.neighbors(v));
        let (mut i, mut j, mut count) = (0, 0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                core::cmp::Ordering::Less => i += 1,
                core::cmp::Ordering::Greater => j += 1,
                core::cmp::Ordering::Equal => {
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        count
    }

    /// 0/1 adjacency rows, row `i` for vertex `i + 1`.
    pub fn adjacency_rows(&self) -> Vec<Vec<u8>> {
        let mut rows = vec![vec![0u8; self.n]; self.n];
        for &(u, v) in &self.edges {
            rows[u - 1][v - 1] = 1;
            rows[v - 1][u - 1] = 1;
        }
        rows
    }

    fn component_of(&self, start: Vertex) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        let mut stack = vec![start];
        seen[start - 1] = true;
        while let Some(u) = stack.pop() {
            for &w in self.neighbors(u) {
                if !seen[w - 1] {
                    seen[w - 1] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v == 0 || v > self.n {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }
}

/// Number of neighbours of `v` that lie in `set`.
pub fn neighbors_in(g: &Graph, set: &VertexSet, v: Vertex) -> usize {
    g.neighbors(v).iter().filter(|&&w| set.contains(w)).count()
}

/// The raw neighbour-count condition: every member of `set` has `kappa`
/// neighbours in `set`, every non-member has `tau`. No convention about
/// `tau = 0` or `set = V` is applied.
pub fn has_neighbor_counts(g: &Graph, set: &VertexSet, kappa: usize, tau: usize) -> bool {
    g.vertices().all(|v| {
        let want = if set.contains(v) { kappa } else { tau };
        neighbors_in(g, set, v) == want
    })
}

/// Whether `set` is (κ,τ)-regular in `g`.
///
/// The whole vertex set counts as (κ,τ)-regular for any τ exactly when `g`
/// is κ-regular. A proper subset needs `tau >= 1`.
pub fn is_kt_regular(g: &Graph, set: &VertexSet, kappa: usize, tau: usize) -> bool {
    debug_assert_eq!(set.universe(), g.n());
    if set.len() == g.n() {
        return g.regularity() == Some(kappa);
    }
    tau >= 1 && has_neighbor_counts(g, set, kappa, tau)
}

/// Whether the subgraph induced by `set` is connected.
pub fn induces_connected(g: &Graph, set: &VertexSet) -> Result<bool, GraphError> {
    let first = *set.members().first().ok_or(GraphError::EmptyVertexSet)?;
    let mut seen = vec![false; g.n()];
    let mut stack = vec![first];
    seen[first - 1] = true;
    let mut reached = 1;
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if set.contains(w) && !seen[w - 1] {
                seen[w - 1] = true;
                reached += 1;
                stack.push(w);
            }
        }
    }
    Ok(reached == set.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(g: &Graph, members: &[usize]) -> VertexSet {
        VertexSet::new(g.n(), members.iter().copied()).unwrap()
    }

    #[test]
    fn triangle_from_edge_list() {
        let g = Graph::from_edge_list(3, [(1, 2), (2, 3), (1, 3)]).unwrap();
        assert_eq!(g.m(), 3);
        assert_eq!(g.degrees(), vec![2, 2, 2]);
    }

    #[test]
    fn duplicate_pairs_collapse() {
        let g = Graph::from_edge_list(3, [(1, 2), (2, 1), (1, 2)]).unwrap();
        assert_eq!(g.edges(), &[(1, 2)]);
        assert_eq!(g.neighbors(2), &[1]);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(Graph::from_edge_list(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::from_edge_list(3, [(1, 4)]),
            Err(GraphError::VertexOutOfRange { vertex: 4, n: 3 })
        );
        assert_eq!(
            Graph::from_edge_list(3, [(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 0, n: 3 })
        );
        assert_eq!(Graph::from_edge_list(0, []), Err(GraphError::NoVertices));
    }

    #[test]
    fn petersen_is_cubic() {
        let g = petersen();
        assert_eq!((g.n(), g.m()), (10, 15));
        assert_eq!(g.regularity(), Some(3));
        // outer cycle as drawn
        for (u, v) in [(1, 5), (5, 2), (2, 8), (8, 7), (7, 1)] {
            assert!(g.is_adjacent(u, v));
        }
    }

    #[test]
    fn ladder_degrees() {
        assert_eq!(ladder().degrees(), vec![2, 3, 2, 2, 3, 2]);
    }

    #[test]
    fn petersen_example_sets() {
        let g = petersen();
        assert!(is_kt_regular(&g, &set(&g, &[1, 2, 3, 4]), 0, 2));
        assert!(is_kt_regular(&g, &set(&g, &[5, 6, 7, 8, 9, 10]), 1, 3));
        assert!(is_kt_regular(&g, &set(&g, &[1, 2, 5, 7, 8]), 2, 1));
        assert!(!is_kt_regular(&g, &set(&g, &[1, 2, 3]), 0, 2));
    }

    #[test]
    fn triangle_singletons() {
        let g = complete(3);
        let s = set(&g, &[1]);
        assert!(is_kt_regular(&g, &s, 0, 1));
        assert!(!is_kt_regular(&g, &s, 0, 2));
    }

    #[test]
    fn whole_set_convention() {
        let g = petersen();
        let all = set(&g, &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10]);
        assert!(is_kt_regular(&g, &all, 3, 0));
        assert!(is_kt_regular(&g, &all, 3, 7));
        assert!(!is_kt_regular(&g, &all, 2, 0));
        // proper subsets never qualify with tau = 0
        let g = Graph::from_edge_list(4, [(1, 2), (3, 4)]).unwrap();
        let s = set(&g, &[1, 2]);
        assert!(has_neighbor_counts(&g, &s, 1, 0));
        assert!(!is_kt_regular(&g, &s, 1, 0));
    }

    #[test]
    fn connectivity_of_sets() {
        let g = petersen();
        assert!(induces_connected(&g, &set(&g, &[7])).unwrap());
        assert!(!induces_connected(&g, &set(&g, &[1, 2, 3, 4])).unwrap());
        assert!(induces_connected(&g, &set(&g, &[1, 5, 2, 8])).unwrap());
        assert_eq!(
            induces_connected(&g, &set(&g, &[])),
            Err(GraphError::EmptyVertexSet)
        );
    }

    #[test]
    fn common_neighbor_counts() {
        let g = petersen();
        assert_eq!(g.common_neighbors(1, 5), 0);
        assert_eq!(g.common_neighbors(1, 2), 1);
    }
}
