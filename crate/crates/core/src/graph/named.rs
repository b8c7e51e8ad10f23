//! Small named graphs used throughout the tests and the CLI.

use alloc::vec::Vec;

use super::Graph;

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edge_list(n, edges.iter().copied()).expect("static edge list is valid")
}

/// `K_n`, `n >= 1`.
pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .collect();
    build(n, &edges)
}

/// `C_n`, `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least three vertices");
    let edges: Vec<_> = (1..=n).map(|u| (u, u % n + 1)).collect();
    build(n, &edges)
}

/// `P_n` with vertices in path order.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|u| (u, u + 1)).collect();
    build(n, &edges)
}

/// `K_{a,b}` with parts `1..=a` and `a+1..=a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges: Vec<_> = (1..=a)
        .flat_map(|u| (a + 1..=a + b).map(move |v| (u, v)))
        .collect();
    build(a + b, &edges)
}

/// The Petersen graph, labelled so that `{1,2,3,4}` is independent, the
/// outer 5-cycle is 1–5–2–8–7 and `N(1) = {5,7,9}`.
pub fn petersen() -> Graph {
    build(
        10,
        &[
            (1, 5),
            (1, 7),
            (1, 9),
            (2, 5),
            (2, 8),
            (2, 10),
            (3, 6),
            (3, 7),
            (3, 10),
            (4, 6),
            (4, 8),
            (4, 9),
            (5, 6),
            (7, 8),
            (9, 10),
        ],
    )
}

/// The octahedron `K_{2,2,2}` with antipodal pairs {1,4}, {2,5}, {3,6}.
pub fn octahedron() -> Graph {
    build(
        6,
        &[
            (1, 2),
            (1, 3),
            (1, 5),
            (1, 6),
            (2, 3),
            (2, 4),
            (2, 6),
            (3, 4),
            (3, 5),
            (4, 5),
            (4, 6),
            (5, 6),
        ],
    )
}

/// The 2×3 grid. Bottom row 1–2–3, top row 6–5–4, rungs 1–6, 2–5, 3–4.
pub fn ladder() -> Graph {
    build(6, &[(1, 2), (2, 3), (1, 6), (2, 5), (3, 4), (6, 5), (5, 4)])
}

/// A hexagon 1–2–3–4–5–6 with a hub 7 joined to 2, 3, 5 and 6.
pub fn hexagon_with_hub() -> Graph {
    build(
        7,
        &[
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 6),
            (1, 6),
            (2, 7),
            (3, 7),
            (5, 7),
            (6, 7),
        ],
    )
}
