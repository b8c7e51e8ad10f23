//! Threaded enumeration: the pivot-bit tree is cut at a fixed depth and the
//! subtrees are handed out to workers. Results are merged and sorted, so
//! the output does not depend on the thread count.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use ktreg_core::solver::{KtSystem, SolveError};
use ktreg_core::KtCertificate;

/// Subtrees per worker; more than one keeps workers busy when the search
/// tree is lopsided.
const SPLIT_FACTOR: usize = 4;

fn prefixes(depth: usize) -> Vec<Vec<bool>> {
    (0..1usize << depth)
        .map(|code| (0..depth).map(|j| code >> (depth - 1 - j) & 1 == 1).collect())
        .collect()
}

pub fn enumerate(system: &KtSystem<'_>, threads: usize) -> Result<Vec<KtCertificate>, SolveError> {
    if threads <= 1 || system.shortcut().is_some() {
        return system.enumerate();
    }
    system.check_limit()?;

    let want = threads * SPLIT_FACTOR;
    let depth = (usize::BITS - (want - 1).leading_zeros()) as usize;
    let work = prefixes(depth.min(system.t()));
    let next = AtomicUsize::new(0);
    let found = Mutex::new(Vec::new());
    let failure = Mutex::new(None);
    std::thread::scope(|scope| {
        for _ in 0..threads.min(work.len()) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(prefix) = work.get(i) else { break };
                match system.collect_from(prefix) {
                    Ok(mut part) => found.lock().unwrap().append(&mut part),
                    Err(e) => {
                        failure.lock().unwrap().get_or_insert(e);
                        break;
                    }
                }
            });
        }
    });
    if let Some(e) = failure.into_inner().unwrap() {
        return Err(e);
    }
    let mut out = found.into_inner().unwrap();
    out.sort_by(|a, b| a.set.cmp(&b.set));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ktreg_core::graph::{octahedron, petersen};
    use ktreg_core::{Solver, SolverConfig};

    #[test]
    fn prefix_cover() {
        assert_eq!(prefixes(0), vec![Vec::<bool>::new()]);
        assert_eq!(prefixes(2), vec![vec![false, false], vec![false, true], vec![true, false], vec![true, true]]);
    }

    #[test]
    fn thread_count_does_not_change_output() {
        let g = petersen();
        let (l, _) = g.line_graph().unwrap();
        for (graph, k, t) in [(&g, 0, 2), (&g, 1, 3), (&l, 2, 4), (&l, 0, 2)] {
            let solver = Solver::new(graph);
            let sys = solver.prepare(k, t).unwrap();
            let one = enumerate(&sys, 1).unwrap();
            for threads in [2, 3, 8] {
                assert_eq!(enumerate(&sys, threads).unwrap(), one);
            }
        }
    }

    #[test]
    fn resource_limit_surfaces() {
        let g = octahedron();
        let solver = Solver::with_config(&g, SolverConfig { max_t: 1 });
        let sys = solver.prepare(2, 4).unwrap();
        assert!(matches!(enumerate(&sys, 4), Err(SolveError::ResourceLimit { .. })));
    }
}
