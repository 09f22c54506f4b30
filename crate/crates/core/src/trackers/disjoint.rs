//! Representative-array tracker for `ell <= k`, where components are
//! pairwise disjoint and a single vertex-to-representative map suffices.

use crate::component::ComponentTracker;
use crate::graph::SparsityParams;

pub struct DisjointTracker {
    rep: Vec<Option<usize>>,
    merge_steps: u64,
}

impl DisjointTracker {
    /// Panics unless `ell <= k`; overlapping components cannot be expressed
    /// by a representative array.
    pub fn new(n: usize, p: SparsityParams) -> Self {
        assert!(
            p.ell() <= p.k(),
            "disjoint tracker requires ell <= k, got k={}, ell={}",
            p.k(),
            p.ell()
        );
        let rep = if p.singletons_tight() {
            (0..n).map(Some).collect()
        } else {
            vec![None; n]
        };
        Self { rep, merge_steps: 0 }
    }

    pub fn representative(&self, v: usize) -> Option<usize> {
        self.rep[v]
    }
}

impl ComponentTracker for DisjointTracker {
    fn in_common(&mut self, u: usize, v: usize) -> bool {
        match (self.rep[u], self.rep[v]) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        }
    }

    fn absorb(&mut self, component: &[usize]) {
        let head = component[0];
        for &v in component {
            self.rep[v] = Some(head);
            self.merge_steps += 1;
        }
    }

    /// Reconstructs the component list by bucketing vertices on their
    /// representative, in order of first appearance.
    fn components(&self) -> Vec<Vec<usize>> {
        let n = self.rep.len();
        let mut slot: Vec<usize> = vec![usize::MAX; n];
        let mut comps: Vec<Vec<usize>> = Vec::new();
        for v in 0..n {
            if let Some(r) = self.rep[v] {
                if slot[r] == usize::MAX {
                    slot[r] = comps.len();
                    comps.push(Vec::new());
                }
                comps[slot[r]].push(v);
            }
        }
        comps
    }

    fn merge_steps(&self) -> u64 {
        self.merge_steps
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(k: usize, ell: usize) -> SparsityParams {
        SparsityParams::new(k, ell).unwrap()
    }

    #[test]
    fn fresh_tracker_has_no_shared_components() {
        let mut t = DisjointTracker::new(4, params(2, 1));
        assert!(!t.in_common(0, 1));
        // ell = k: every vertex is its own component, still no shared pairs
        let mut t = DisjointTracker::new(4, params(2, 2));
        assert!(!t.in_common(0, 1));
        assert_eq!(t.components().len(), 4);
    }

    #[test]
    fn absorb_uses_the_first_vertex_as_representative() {
        let mut t = DisjointTracker::new(5, params(1, 0));
        t.absorb(&[3, 1, 2]);
        assert_eq!(t.representative(3), Some(3));
        assert_eq!(t.representative(1), Some(3));
        assert_eq!(t.representative(2), Some(3));
        assert!(t.in_common(1, 2));
        assert!(!t.in_common(1, 0));
    }

    #[test]
    fn disjoint_absorbs_keep_distinct_representatives() {
        let mut t = DisjointTracker::new(6, params(1, 0));
        t.absorb(&[0, 1]);
        t.absorb(&[4, 5]);
        assert_ne!(t.representative(0), t.representative(4));
        assert_eq!(t.components(), vec![vec![0, 1], vec![4, 5]]);
    }

    #[test]
    #[should_panic(expected = "ell <= k")]
    fn rejects_out_of_range_parameters() {
        DisjointTracker::new(3, params(2, 3));
    }
}
