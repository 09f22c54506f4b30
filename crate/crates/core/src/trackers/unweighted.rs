//! Membership-mask tracker for unit weights.
//!
//! When weights play no role the edges can be processed grouped by an
//! arbitrarily chosen first endpoint. While edges of the current endpoint
//! `u0` are processed, `mask[v]` answers whether `u0` and `v` share a
//! component, and the mask is rebuilt only when the endpoint changes, which
//! happens at most `n` times over a run.

use crate::component::ComponentTracker;
use crate::graph::SparsityParams;

pub struct UnweightedTracker {
    comps: Vec<Vec<usize>>,
    mask: Vec<bool>,
    current: Option<usize>,
    scratch: Vec<bool>,
    recalcs: u64,
    merge_steps: u64,
}

impl UnweightedTracker {
    pub fn new(n: usize, p: SparsityParams) -> Self {
        let comps = if p.singletons_tight() {
            (0..n).map(|v| vec![v]).collect()
        } else {
            Vec::new()
        };
        Self {
            comps,
            mask: vec![false; n],
            current: None,
            scratch: vec![false; n],
            recalcs: 0,
            merge_steps: 0,
        }
    }

    /// Rebuilds the mask for a new grouping endpoint by scanning the
    /// component list; total component size is O(n), so one rebuild is O(n).
    fn recalculate(&mut self, u: usize) {
        self.recalcs += 1;
        self.mask.fill(false);
        for comp in &self.comps {
            if comp.contains(&u) {
                for &v in comp {
                    self.mask[v] = true;
                }
            }
        }
    }

    /// Number of mask rebuilds so far.
    pub fn recalc_count(&self) -> u64 {
        self.recalcs
    }
}

impl ComponentTracker for UnweightedTracker {
    fn in_common(&mut self, u: usize, v: usize) -> bool {
        if self.current != Some(u) {
            self.current = Some(u);
            self.recalculate(u);
        }
        self.mask[v]
    }

    fn absorb(&mut self, component: &[usize]) {
        for &v in component {
            self.scratch[v] = true;
        }
        let old = std::mem::take(&mut self.comps);
        let mut next = Vec::with_capacity(old.len() + 1);
        next.push(component.to_vec());
        for sub in old {
            let contained = match sub.len() {
                1 => self.scratch[sub[0]],
                _ => self.scratch[sub[0]] && self.scratch[sub[1]],
            };
            if !contained {
                next.push(sub);
            }
        }
        self.comps = next;
        // the new component contains the current endpoint, so marking it
        // keeps the mask invariant without a rebuild
        for &v in component {
            self.mask[v] = true;
            self.scratch[v] = false;
            self.merge_steps += 1;
        }
    }

    fn components(&self) -> Vec<Vec<usize>> {
        self.comps.clone()
    }

    fn merge_steps(&self) -> u64 {
        self.merge_steps
    }
}
