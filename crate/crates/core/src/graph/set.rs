use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::{GraphError, Vertex};

/// A subset of `1..=n`, stored as a sorted member list.
///
/// Sets over the same universe order by their characteristic vectors
/// compared lexicographically, so `{2}` sorts before `{1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    members: Vec<Vertex>,
}

impl VertexSet {
    pub fn new<I>(n: usize, members: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = Vertex>,
    {
        let mut members: Vec<Vertex> = members.into_iter().collect();
        members.sort_unstable();
        for w in members.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateVertex(w[0]));
            }
        }
        if let Some(&v) = members.iter().find(|&&v| v == 0 || v > n) {
            return Err(GraphError::VertexOutOfRange { vertex: v, n });
        }
        Ok(VertexSet { n, members })
    }

    /// The set whose characteristic vector is `indicator`.
    pub fn from_indicator(indicator: &[bool]) -> Self {
        let members = indicator
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i + 1))
            .collect();
        VertexSet { n: indicator.len(), members }
    }

    pub fn full(n: usize) -> Self {
        VertexSet { n, members: (1..=n).collect() }
    }

    /// Size of the ambient vertex set.
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[Vertex] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn indicator(&self) -> Vec<bool> {
        let mut x = vec![false; self.n];
        for &v in &self.members {
            x[v - 1] = true;
        }
        x
    }

    /// `V ∖ S`.
    pub fn complement(&self) -> Self {
        let members = (1..=self.n).filter(|&v| !self.contains(v)).collect();
        VertexSet { n: self.n, members }
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        // First vertex in the symmetric difference decides: the set lacking it
        // has a 0 there and is smaller.
        let (a, b) = (&self.members, &other.members);
        let mut i = 0;
        while i < a.len() && i < b.len() {
            match a[i].cmp(&b[i]) {
                Ordering::Equal => i += 1,
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        a.len().cmp(&b.len()).then(self.n.cmp(&other.n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_members() {
        assert_eq!(VertexSet::new(3, [1, 1]), Err(GraphError::DuplicateVertex(1)));
        assert_eq!(
            VertexSet::new(3, [4]),
            Err(GraphError::VertexOutOfRange { vertex: 4, n: 3 })
        );
        let s = VertexSet::new(5, [4, 2]).unwrap();
        assert_eq!(s.members(), &[2, 4]);
        assert_eq!(s.indicator(), vec![false, true, false, true, false]);
        assert_eq!(s.complement().members(), &[1, 3, 5]);
    }

    #[test]
    fn characteristic_order() {
        let s = |m: &[usize]| VertexSet::new(10, m.iter().copied()).unwrap();
        let mut sets = vec![
            s(&[1, 2, 3, 4]),
            s(&[1, 6, 8, 10]),
            s(&[4, 5, 7, 10]),
            s(&[2, 6, 7, 9]),
            s(&[3, 5, 8, 9]),
        ];
        sets.sort();
        let want = vec![
            s(&[4, 5, 7, 10]),
            s(&[3, 5, 8, 9]),
            s(&[2, 6, 7, 9]),
            s(&[1, 6, 8, 10]),
            s(&[1, 2, 3, 4]),
        ];
        assert_eq!(sets, want);
        assert!(s(&[1]) < s(&[1, 2]));
        assert!(s(&[]) < s(&[10]));
    }
}
