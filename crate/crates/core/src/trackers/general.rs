//! Pair-matrix tracker for the full parameter range.
//!
//! Maintains two structures in lockstep:
//!
//! * a [`PairMatrix`] `M` with `M[u][v] = 1` exactly when some current
//!   component contains both `u` and `v`, giving constant-time queries;
//! * the component list itself, needed to retire sub-components when a new
//!   component swallows them.
//!
//! When `ell >= k` single vertices are tight, so the matrix starts as the
//! identity and the list with all singletons; otherwise both start empty.
//!
//! `absorb` marks the new pairs with three Cartesian-product loops, walking
//! the union `U` of the retired sub-components as it grows. A pair may be
//! marked again when two retired components overlap; those redundant writes
//! are counted per call so tests can pin them against the `n + sum |U ∩ C_i|^2`
//! budget that keeps the total matrix work quadratic.

use super::matrix::PairMatrix;
use crate::component::ComponentTracker;
use crate::graph::SparsityParams;

/// Per-`absorb` instrumentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbsorbStats {
    /// Number of retired sub-components (`t`).
    pub deleted: usize,
    /// Bit writes that found the bit already set.
    pub redundant_writes: u64,
    /// `|U ∩ C_i|` for each retired component, in retirement order.
    pub overlaps: Vec<usize>,
}

pub struct GeneralTracker {
    matrix: PairMatrix,
    comps: Vec<Vec<usize>>,
    // scratch marks, cleared by revisiting the marked elements
    in_component: Vec<bool>,
    in_union: Vec<bool>,
    in_sub: Vec<bool>,
    union_list: Vec<usize>,
    writes: u64,
    merge_steps: u64,
    log: Vec<AbsorbStats>,
}

impl GeneralTracker {
    pub fn new(n: usize, p: SparsityParams) -> Self {
        let (matrix, comps) = if p.singletons_tight() {
            (PairMatrix::identity(n), (0..n).map(|v| vec![v]).collect())
        } else {
            (PairMatrix::zeros(n), Vec::new())
        };
        Self {
            matrix,
            comps,
            in_component: vec![false; n],
            in_union: vec![false; n],
            in_sub: vec![false; n],
            union_list: Vec::new(),
            writes: 0,
            merge_steps: 0,
            log: Vec::new(),
        }
    }

    pub fn pair_matrix(&self) -> &PairMatrix {
        &self.matrix
    }

    /// Instrumentation for every `absorb` call so far.
    pub fn absorb_log(&self) -> &[AbsorbStats] {
        &self.log
    }
}

fn write_bit(
    matrix: &mut PairMatrix,
    writes: &mut u64,
    stats: &mut AbsorbStats,
    row: usize,
    col: usize,
) {
    *writes += 1;
    if !matrix.set(row, col) {
        stats.redundant_writes += 1;
    }
}

impl ComponentTracker for GeneralTracker {
    fn in_common(&mut self, u: usize, v: usize) -> bool {
        self.matrix.get(u, v)
    }

    fn absorb(&mut self, component: &[usize]) {
        debug_assert!(self.union_list.is_empty());
        let mut stats = AbsorbStats {
            deleted: 0,
            redundant_writes: 0,
            overlaps: Vec::new(),
        };
        for &v in component {
            self.in_component[v] = true;
        }

        let old = std::mem::take(&mut self.comps);
        let mut next = Vec::with_capacity(old.len() + 1);
        next.push(component.to_vec());
        for sub in old {
            // two components share at most one vertex, so membership of the
            // first two elements decides containment
            let contained = match sub.len() {
                1 => self.in_component[sub[0]],
                _ => self.in_component[sub[0]] && self.in_component[sub[1]],
            };
            if !contained {
                next.push(sub);
                continue;
            }
            stats.deleted += 1;
            for &v in &sub {
                self.in_sub[v] = true;
            }
            let fresh: Vec<usize> = sub
                .iter()
                .copied()
                .filter(|&v| !self.in_union[v])
                .collect();
            stats.overlaps.push(sub.len() - fresh.len());
            // pairs between the union so far and the unseen part of sub
            for i in 0..self.union_list.len() {
                let w = self.union_list[i];
                if self.in_sub[w] {
                    continue;
                }
                for &v in &fresh {
                    write_bit(&mut self.matrix, &mut self.writes, &mut stats, w, v);
                    write_bit(&mut self.matrix, &mut self.writes, &mut stats, v, w);
                }
            }
            for &v in &fresh {
                self.in_union[v] = true;
                self.union_list.push(v);
                self.merge_steps += 1;
            }
            for &v in &sub {
                self.in_sub[v] = false;
            }
        }

        let outside: Vec<usize> = component
            .iter()
            .copied()
            .filter(|&v| !self.in_union[v])
            .collect();
        // pairs with exactly one vertex in the union
        for i in 0..self.union_list.len() {
            let w = self.union_list[i];
            for &v in &outside {
                write_bit(&mut self.matrix, &mut self.writes, &mut stats, w, v);
                write_bit(&mut self.matrix, &mut self.writes, &mut stats, v, w);
            }
        }
        // ordered pairs entirely outside the union; self-symmetrizing and
        // covers the diagonal
        for &a in &outside {
            for &b in &outside {
                write_bit(&mut self.matrix, &mut self.writes, &mut stats, a, b);
            }
        }

        self.comps = next;
        for &v in component {
            self.in_component[v] = false;
        }
        for i in 0..self.union_list.len() {
            self.in_union[self.union_list[i]] = false;
        }
        self.union_list.clear();
        self.log.push(stats);
    }

    fn components(&self) -> Vec<Vec<usize>> {
        self.comps.clone()
    }

    fn matrix_writes(&self) -> u64 {
        self.writes
    }

    fn merge_steps(&self) -> u64 {
        self.merge_steps
    }
}
