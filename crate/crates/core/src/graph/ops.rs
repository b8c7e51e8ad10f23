use alloc::vec::Vec;

use super::{Edge, Graph, GraphError, Vertex, VertexSet};

/// Bijection between the edges of a graph and vertices of a derived graph.
///
/// Edge number `i` (0-based, lexicographic) is vertex `offset + i + 1`. Line
/// graphs use offset 0; subdivisions use offset `n` so that original
/// vertices keep their labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeLabeling {
    offset: usize,
    edges: Vec<Edge>,
}

impl EdgeLabeling {
    fn new(offset: usize, edges: Vec<Edge>) -> Self {
        EdgeLabeling { offset, edges }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn offset(&self) -> usize {
        self.offset
    }

    /// The edge represented by `label`, if any.
    pub fn edge(&self, label: Vertex) -> Option<Edge> {
        label
            .checked_sub(self.offset + 1)
            .and_then(|i| self.edges.get(i).copied())
    }

    /// The vertex representing edge `{u, v}`.
    pub fn label(&self, u: Vertex, v: Vertex) -> Option<Vertex> {
        let e = if u < v { (u, v) } else { (v, u) };
        self.edges
            .binary_search(&e)
            .ok()
            .map(|i| i + self.offset + 1)
    }

    /// Edges represented by the members of `set`; members that are not edge
    /// labels are skipped.
    pub fn edges_of(&self, set: &VertexSet) -> Vec<Edge> {
        set.members().iter().filter_map(|&v| self.edge(v)).collect()
    }

    /// Labels of `edges`, as a set over the derived graph's vertices.
    pub fn set_of(&self, universe: usize, edges: &[Edge]) -> Option<VertexSet> {
        let labels: Option<Vec<_>> = edges.iter().map(|&(u, v)| self.label(u, v)).collect();
        VertexSet::new(universe, labels?).ok()
    }
}

/// Old-to-new label map produced by [`delete_vertex`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VertexMap {
    removed: Vertex,
    old_n: usize,
}

impl VertexMap {
    pub fn removed(&self) -> Vertex {
        self.removed
    }

    pub fn to_new(&self, old: Vertex) -> Option<Vertex> {
        if old == 0 || old > self.old_n || old == self.removed {
            None
        } else if old < self.removed {
            Some(old)
        } else {
            Some(old - 1)
        }
    }

    pub fn to_old(&self, new: Vertex) -> Vertex {
        if new < self.removed {
            new
        } else {
            new + 1
        }
    }
}

/// The line graph `L(G)`, with vertices labelled by lexicographic edge order.
pub fn line_graph(g: &Graph) -> Result<(Graph, EdgeLabeling), GraphError> {
    if g.m() == 0 {
        return Err(GraphError::NoEdges);
    }
    let labeling = EdgeLabeling::new(0, g.edges().to_vec());
    let mut edges = Vec::new();
    for v in g.vertices() {
        let incident: Vec<Vertex> = g
            .neighbors(v)
            .iter()
            .map(|&w| labeling.label(v, w).expect("incident edge exists"))
            .collect();
        for (i, &a) in incident.iter().enumerate() {
            for &b in &incident[i + 1..] {
                edges.push(if a < b { (a, b) } else { (b, a) });
            }
        }
    }
    // Two distinct edges of a simple graph share at most one endpoint.
    edges.sort_unstable();
    Ok((Graph::from_sorted_edges(g.m(), edges), labeling))
}

/// Inserts a midpoint into every edge. Original vertices keep `1..=n`;
/// the midpoint of the `i`-th edge is `n + i`.
pub fn subdivision(g: &Graph) -> Result<(Graph, EdgeLabeling), GraphError> {
    if g.m() == 0 {
        return Err(GraphError::NoEdges);
    }
    let n = g.n();
    let labeling = EdgeLabeling::new(n, g.edges().to_vec());
    let mut edges: Vec<Edge> = g
        .edges()
        .iter()
        .enumerate()
        .flat_map(|(i, &(u, v))| [(u, n + i + 1), (v, n + i + 1)])
        .collect();
    edges.sort_unstable();
    Ok((Graph::from_sorted_edges(n + g.m(), edges), labeling))
}

pub fn complement(g: &Graph) -> Graph {
    let edges = g
        .vertices()
        .flat_map(|u| (u + 1..=g.n()).map(move |v| (u, v)))
        .filter(|&(u, v)| !g.is_adjacent(u, v))
        .collect();
    Graph::from_sorted_edges(g.n(), edges)
}

/// `G − v`, relabelled onto `1..=n−1` preserving order.
pub fn delete_vertex(g: &Graph, v: Vertex) -> Result<(Graph, VertexMap), GraphError> {
    g.check_vertex(v)?;
    if g.n() == 1 {
        return Err(GraphError::NoVertices);
    }
    let map = VertexMap { removed: v, old_n: g.n() };
    let edges = g
        .edges()
        .iter()
        .filter_map(|&(a, b)| Some((map.to_new(a)?, map.to_new(b)?)))
        .collect();
    Ok((Graph::from_sorted_edges(g.n() - 1, edges), map))
}

impl Graph {
    pub fn line_graph(&self) -> Result<(Graph, EdgeLabeling), GraphError> {
        line_graph(self)
    }

    pub fn subdivision(&self) -> Result<(Graph, EdgeLabeling), GraphError> {
        subdivision(self)
    }

    pub fn complement(&self) -> Graph {
        complement(self)
    }

    pub fn delete_vertex(&self, v: Vertex) -> Result<(Graph, VertexMap), GraphError> {
        delete_vertex(self, v)
    }

    /// Disjoint union; `other`'s vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut edges = self.edges().to_vec();
        edges.extend(other.edges().iter().map(|&(u, v)| (u + shift, v + shift)));
        Graph::from_sorted_edges(self.n() + other.n(), edges)
    }
}
