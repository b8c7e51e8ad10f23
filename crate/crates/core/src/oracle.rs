//! Exhaustive ground truth for small graphs, plus the test corpus.
//!
//! Everything here works on adjacency bitmasks and never touches the linear
//! algebra, so it can referee the solver.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Edge, Graph, VertexSet};

/// Largest order the subset oracles accept.
pub const MAX_ORACLE_N: usize = 24;

/// Seed of the random part of the corpus.
pub const CORPUS_SEED: u64 = 0x6b74_7265_6775_6c72;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("graph has {n} vertices; the oracle handles at most {max}")]
    TooLarge { n: usize, max: usize },
}

fn masks(g: &Graph) -> Result<Vec<u32>, OracleError> {
    if g.n() > MAX_ORACLE_N {
        return Err(OracleError::TooLarge { n: g.n(), max: MAX_ORACLE_N });
    }
    Ok(g.vertices()
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << (w - 1)))
        .collect())
}

fn set_of(n: usize, mask: u32) -> VertexSet {
    let indicator: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
    VertexSet::from_indicator(&indicator)
}

/// Every (κ,τ)-regular set, found by checking all `2^n` subsets, in
/// ascending characteristic-vector order. The whole vertex set qualifies
/// iff the graph is κ-regular; proper subsets need `tau >= 1`.
pub fn brute_force_kt_sets(g: &Graph, kappa: usize, tau: usize) -> Result<Vec<VertexSet>, OracleError> {
    let adj = masks(g)?;
    let n = g.n();
    let full: u32 = (1 << n) - 1;
    let mut out = Vec::new();
    for mask in 0..=full {
        if mask != full && tau == 0 {
            continue;
        }
        let ok = (0..n).all(|i| {
            let inside = (adj[i] & mask).count_ones() as usize;
            let want = if mask >> i & 1 == 1 { kappa } else { tau };
            inside == want
        });
        if ok {
            out.push(set_of(n, mask));
        }
    }
    out.sort();
    Ok(out)
}

/// A largest vertex set inducing a κ-regular subgraph; among those, the
/// first in characteristic-vector order. Empty when nothing non-empty works.
pub fn brute_force_max_regular_induced(g: &Graph, kappa: usize) -> Result<VertexSet, OracleError> {
    let adj = masks(g)?;
    let n = g.n();
    let mut best: Option<VertexSet> = None;
    for mask in 1u32..(1u32 << n) {
        let ok = (0..n)
            .filter(|&i| mask >> i & 1 == 1)
            .all(|i| (adj[i] & mask).count_ones() as usize == kappa);
        if !ok {
            continue;
        }
        let cand = set_of(n, mask);
        best = match best {
            Some(b) if b.len() > cand.len() || (b.len() == cand.len() && b <= cand) => Some(b),
            _ => Some(cand),
        };
    }
    Ok(best.unwrap_or_else(|| VertexSet::from_indicator(&vec![false; n])))
}

/// Whether the graph has a perfect matching (plain backtracking).
pub fn has_perfect_matching(g: &Graph) -> bool {
    fn go(g: &Graph, used: &mut [bool]) -> bool {
        let Some(u) = used.iter().position(|&b| !b) else {
            return true;
        };
        used[u] = true;
        for &w in g.neighbors(u + 1) {
            if !used[w - 1] {
                used[w - 1] = true;
                if go(g, used) {
                    return true;
                }
                used[w - 1] = false;
            }
        }
        used[u] = false;
        false
    }
    g.n().is_multiple_of(2) && go(g, &mut vec![false; g.n()])
}

/// Whether the graph has a Hamilton cycle (subset dynamic programming).
pub fn is_hamiltonian(g: &Graph) -> Result<bool, OracleError> {
    let adj = masks(g)?;
    let n = g.n();
    if n < 3 {
        return Ok(false);
    }
    // reach[mask] = set of end vertices of paths from vertex 0 covering mask.
    let mut reach = vec![0u32; 1 << n];
    reach[1] = 1;
    for mask in 1u32..(1 << n) {
        if mask & 1 == 0 || reach[mask as usize] == 0 {
            continue;
        }
        let ends = reach[mask as usize];
        for v in 0..n {
            if ends >> v & 1 == 0 {
                continue;
            }
            let mut next = adj[v] & !mask;
            while next != 0 {
                let w = next.trailing_zeros();
                next &= next - 1;
                reach[(mask | 1 << w) as usize] |= 1 << w;
            }
        }
    }
    let full = (1u32 << n) - 1;
    Ok(reach[full as usize] & adj[0] != 0)
}

/// Every edge set `M` such that each edge of the graph shares an endpoint
/// with exactly one edge of `M` (an edge shares with itself), by checking
/// all edge subsets. Ascending by edge-indicator order.
pub fn brute_force_dominating_induced_matchings(g: &Graph) -> Result<Vec<Vec<Edge>>, OracleError> {
    let edges = g.edges();
    let m = edges.len();
    if m > MAX_ORACLE_N {
        return Err(OracleError::TooLarge { n: m, max: MAX_ORACLE_N });
    }
    let touches = |a: Edge, b: Edge| a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1;
    let mut found: Vec<VertexSet> = Vec::new();
    for mask in 0u32..(1u32 << m) {
        let ok = edges.iter().all(|&e| {
            (0..m).filter(|&j| mask >> j & 1 == 1 && touches(e, edges[j])).count() == 1
        });
        if ok {
            found.push(set_of(m, mask));
        }
    }
    found.sort();
    Ok(found
        .iter()
        .map(|s| s.members().iter().map(|&i| edges[i - 1]).collect())
        .collect())
}

/// Strongly regular parameters `(n, p, a, c)` by counting common neighbours
/// over all pairs. Complete and edgeless graphs are not counted.
pub fn srg_parameters(g: &Graph) -> Option<(usize, usize, usize, usize)> {
    let p = g.regularity()?;
    let mut a = None;
    let mut c = None;
    for u in g.vertices() {
        for v in u + 1..=g.n() {
            let common = g.common_neighbors(u, v);
            let slot = if g.is_adjacent(u, v) { &mut a } else { &mut c };
            match *slot {
                None => *slot = Some(common),
                Some(x) if x != common => return None,
                Some(_) => {}
            }
        }
    }
    Some((g.n(), p, a?, c?))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn is_connected_mask(adj: &[u32]) -> bool {
    let n = adj.len();
    let mut seen = 1u32;
    let mut frontier = 1u32;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = adj[v] & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen.count_ones() as usize == n
}

/// All connected graphs on exactly `n` vertices up to isomorphism, `n <= 6`.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=6).contains(&n), "connected_graphs supports 1..=6 vertices");
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let perms = permutations(n);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for subset in 0u64..(1u64 << pairs.len()) {
        let mut adj = vec![0u32; n];
        for (k, &(u, v)) in pairs.iter().enumerate() {
            if subset >> k & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        if !is_connected_mask(&adj) {
            continue;
        }
        let deg: Vec<u32> = adj.iter().map(|m| m.count_ones()).collect();
        // Canonical code: smallest edge code over orderings by non-increasing
        // degree.
        let code = perms
            .iter()
            .filter(|order| order.windows(2).all(|w| deg[w[0]] >= deg[w[1]]))
            .map(|order| {
                pairs.iter().enumerate().fold(0u64, |acc, (k, &(i, j))| {
                    if adj[order[i]] >> order[j] & 1 == 1 {
                        acc | 1 << k
                    } else {
                        acc
                    }
                })
            })
            .min()
            .expect("some ordering sorts the degrees");
        if seen.insert(code) {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|&(k, _)| code >> k & 1 == 1)
                .map(|(_, &(i, j))| (i + 1, j + 1));
            out.push(Graph::from_edge_list(n, edges).expect("valid"));
        }
    }
    out
}

/// `count` graphs on 7 or 8 vertices, each edge present with probability
/// 1/2, drawn from `seed`.
pub fn random_graphs(seed: u64, count: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(7..=8);
            let mut edges = Vec::new();
            for u in 1..=n {
                for v in u + 1..=n {
                    if rng.gen_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edge_list(n, edges).expect("valid")
        })
        .collect()
}

/// The standard corpus: all connected graphs on at most six vertices
/// followed by 200 seeded random graphs on 7–8 vertices.
pub fn corpus() -> Vec<Graph> {
    let mut out: Vec<Graph> = (1..=6).flat_map(connected_graphs).collect();
    out.extend(random_graphs(CORPUS_SEED, 200));
    out
}
