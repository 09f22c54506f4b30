//! The mutable indegree-bounded orientation maintained by the pebble games.
//!
//! An [`Orientation`] is a multi-digraph over `0..n` stored as per-vertex
//! out-lists plus an indegree array. The solvers keep every indegree at most
//! `k`; this module provides the two traversals they need, both running in a
//! single pass over the digraph:
//!
//! * [`Orientation::find_path_from_deficient`] — a multi-source breadth-first
//!   search from all vertices with spare indegree towards `{u, v}`, used to
//!   free up indegree capacity at an endpoint of a candidate edge.
//! * [`Orientation::unreached_from_deficient`] — the complement of the set
//!   reachable from the deficient vertices, used to extract a newly formed
//!   component.
//!
//! The visited marks use generation stamps so repeated traversals do not pay
//! for clearing an `O(n)` array each call.

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum OrientationError {
    #[error("path step {from} -> {to} is not an arc of the orientation")]
    ArcNotPresent { from: usize, to: usize },
    #[error("path vertex {vertex} is out of range for {n} vertices")]
    PathVertexOutOfRange { vertex: usize, n: usize },
}

/// A directed path `w0 -> w1 -> ... -> wt`, described by its vertex sequence.
///
/// Paths returned by the search start at a vertex with spare indegree and end
/// at one of the two requested endpoints, visiting each vertex once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AugmentingPath {
    vertices: Vec<usize>,
}

impl AugmentingPath {
    pub fn new(vertices: Vec<usize>) -> Self {
        Self { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// First vertex of the path (the deficient source).
    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    /// Last vertex of the path (the reached endpoint).
    pub fn end(&self) -> usize {
        *self.vertices.last().unwrap()
    }
}

/// Indegree-bounded orientation of the accepted edge set.
///
/// The structure itself does not store `k`; the bound is a contract of the
/// mutating operations that take it as an argument.
#[derive(Debug, Clone)]
pub struct Orientation {
    out: Vec<Vec<usize>>,
    indeg: Vec<usize>,
    arc_count: usize,
    // traversal scratch: stamp[v] == generation marks v as visited
    stamp: Vec<u64>,
    parent: Vec<usize>,
    queue: Vec<usize>,
    generation: u64,
    touches: u64,
    reversals: u64,
    searches: u64,
}

const NO_PARENT: usize = usize::MAX;

impl Orientation {
    pub fn new(n: usize) -> Self {
        Self {
            out: vec![Vec::new(); n],
            indeg: vec![0; n],
            arc_count: 0,
            stamp: vec![0; n],
            parent: vec![NO_PARENT; n],
            queue: Vec::with_capacity(n),
            generation: 0,
            touches: 0,
            reversals: 0,
            searches: 0,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.out.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn indegree(&self, v: usize) -> usize {
        self.indeg[v]
    }

    pub fn max_indegree(&self) -> usize {
        self.indeg.iter().copied().max().unwrap_or(0)
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    /// All arcs as `(from, to)` pairs, grouped by source vertex.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(from, outs)| outs.iter().map(move |&to| (from, to)))
    }

    /// The underlying undirected edge multiset, normalized and sorted.
    pub fn undirected_shadow(&self) -> Vec<(usize, usize)> {
        let mut shadow: Vec<(usize, usize)> = self
            .arcs()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        shadow.sort_unstable();
        shadow
    }

    /// Adds the arc `from -> to` without checking any indegree bound.
    pub fn add_arc(&mut self, from: usize, to: usize) {
        self.out[from].push(to);
        self.indeg[to] += 1;
        self.arc_count += 1;
    }

    /// Inserts the accepted edge `uv`, oriented to keep every indegree at
    /// most `k`: towards `v` if `v` has room, otherwise towards `u`.
    ///
    /// Panics if both endpoints are already at indegree `k`; callers must
    /// only invoke this once `indeg(u) + indeg(v) < 2k - ell`.
    pub fn insert_arc(&mut self, u: usize, v: usize, k: usize) {
        if self.indeg[v] < k {
            self.add_arc(u, v);
        } else {
            assert!(
                self.indeg[u] < k,
                "insert_arc: both endpoints {u} and {v} are at indegree {k}"
            );
            self.add_arc(v, u);
        }
    }

    /// Multi-source breadth-first search from every vertex `w` outside
    /// `{u, v}` with `indeg(w) < k`, stopping at the first arrival at `u` or
    /// `v`. The endpoints are only ever terminal: the search never expands
    /// arcs out of them. Returns `None` when neither endpoint is reachable.
    pub fn find_path_from_deficient(
        &mut self,
        u: usize,
        v: usize,
        k: usize,
    ) -> Option<AugmentingPath> {
        self.searches += 1;
        self.generation += 1;
        let generation = self.generation;
        self.queue.clear();
        for w in 0..self.out.len() {
            if w != u && w != v && self.indeg[w] < k {
                self.stamp[w] = generation;
                self.parent[w] = NO_PARENT;
                self.queue.push(w);
            }
        }
        self.touches += self.queue.len() as u64;
        let mut head = 0;
        while head < self.queue.len() {
            let x = self.queue[head];
            head += 1;
            for i in 0..self.out[x].len() {
                let y = self.out[x][i];
                if self.stamp[y] == generation {
                    continue;
                }
                self.stamp[y] = generation;
                self.parent[y] = x;
                self.touches += 1;
                if y == u || y == v {
                    return Some(self.collect_path(y));
                }
                self.queue.push(y);
            }
        }
        None
    }

    fn collect_path(&self, end: usize) -> AugmentingPath {
        let mut vertices = vec![end];
        let mut w = end;
        while self.parent[w] != NO_PARENT {
            w = self.parent[w];
            vertices.push(w);
        }
        vertices.reverse();
        AugmentingPath::new(vertices)
    }

    /// Vertices unreachable from the deficient set `{w not in {u, v} :
    /// indeg(w) < k}`, in ascending order. Unlike the path search, this
    /// traversal runs to completion and may pass through `u` and `v`.
    pub fn unreached_from_deficient(&mut self, u: usize, v: usize, k: usize) -> Vec<usize> {
        self.generation += 1;
        let generation = self.generation;
        self.queue.clear();
        for w in 0..self.out.len() {
            if w != u && w != v && self.indeg[w] < k {
                self.stamp[w] = generation;
                self.queue.push(w);
            }
        }
        self.touches += self.queue.len() as u64;
        let mut head = 0;
        while head < self.queue.len() {
            let x = self.queue[head];
            head += 1;
            for i in 0..self.out[x].len() {
                let y = self.out[x][i];
                if self.stamp[y] == generation {
                    continue;
                }
                self.stamp[y] = generation;
                self.touches += 1;
                self.queue.push(y);
            }
        }
        (0..self.out.len())
            .filter(|&w| self.stamp[w] != generation)
            .collect()
    }

    /// Reverses every arc of `path` in place. Interior vertices keep their
    /// indegree; the start gains one and the end loses one. On error the
    /// orientation is left unchanged.
    pub fn reverse_path(&mut self, path: &AugmentingPath) -> Result<(), OrientationError> {
        let vs = path.vertices();
        let n = self.out.len();
        for &w in vs {
            if w >= n {
                return Err(OrientationError::PathVertexOutOfRange { vertex: w, n });
            }
        }
        for i in 0..vs.len().saturating_sub(1) {
            let (a, b) = (vs[i], vs[i + 1]);
            match self.out[a].iter().position(|&x| x == b) {
                Some(pos) => {
                    self.out[a].swap_remove(pos);
                    self.out[b].push(a);
                    self.indeg[b] -= 1;
                    self.indeg[a] += 1;
                    self.reversals += 1;
                }
                None => {
                    // roll the already-flipped prefix back
                    for j in (0..i).rev() {
                        let (c, d) = (vs[j], vs[j + 1]);
                        let pos = self.out[d].iter().position(|&x| x == c).unwrap();
                        self.out[d].swap_remove(pos);
                        self.out[c].push(d);
                        self.indeg[c] -= 1;
                        self.indeg[d] += 1;
                        self.reversals -= 1;
                    }
                    return Err(OrientationError::ArcNotPresent { from: a, to: b });
                }
            }
        }
        Ok(())
    }

    /// Vertices touched by traversals so far (enqueue operations).
    pub fn touches(&self) -> u64 {
        self.touches
    }

    /// Arcs reversed so far.
    pub fn reversals(&self) -> u64 {
        self.reversals
    }

    /// Path searches started so far.
    pub fn searches(&self) -> u64 {
        self.searches
    }

    pub fn reset_counters(&mut self) {
        self.touches = 0;
        self.reversals = 0;
        self.searches = 0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The worked-example digraph: three triangles and a pendant edge,
    /// oriented with every indegree at most 2.
    pub(crate) fn merge_example_digraph() -> Orientation {
        let mut d = Orientation::new(8);
        for (from, to) in [
            (2, 0),
            (2, 1),
            (4, 1),
            (4, 3),
            (1, 0),
            (1, 3),
            (1, 5),
            (3, 7),
            (3, 6),
            (7, 6),
        ] {
            d.add_arc(from, to);
        }
        d
    }

    #[test]
    fn empty_digraph_has_no_augmenting_path() {
        let mut d = Orientation::new(3);
        assert_eq!(d.find_path_from_deficient(0, 1, 2), None);
    }

    #[test]
    fn single_arc_into_endpoint() {
        // a = 0, u = 1, v = 2, arc a -> u
        let mut d = Orientation::new(3);
        d.add_arc(0, 1);
        let path = d.find_path_from_deficient(1, 2, 1).unwrap();
        assert_eq!(path.vertices(), &[0, 1]);
    }

    #[test]
    fn saturated_core_is_unreachable() {
        // after adding the arc 4 -> 2, only vertices 5 and 7 have spare
        // indegree, and nothing is reachable from them except 6
        let mut d = merge_example_digraph();
        d.add_arc(4, 2);
        assert_eq!(d.find_path_from_deficient(4, 2, 2), None);
    }

    #[test]
    fn reverse_single_arc_swaps_indegrees() {
        let mut d = Orientation::new(2);
        d.add_arc(0, 1);
        assert_eq!((d.indegree(0), d.indegree(1)), (0, 1));
        d.reverse_path(&AugmentingPath::new(vec![0, 1])).unwrap();
        assert_eq!((d.indegree(0), d.indegree(1)), (1, 0));
        assert_eq!(d.out_neighbors(1), &[0]);
        assert_eq!(d.arc_count(), 1);
    }

    #[test]
    fn reverse_keeps_interior_indegree() {
        let mut d = Orientation::new(3);
        d.add_arc(0, 1);
        d.add_arc(1, 2);
        let before = d.indegree(1);
        d.reverse_path(&AugmentingPath::new(vec![0, 1, 2])).unwrap();
        assert_eq!(d.indegree(1), before);
        assert_eq!(d.indegree(0), 1);
        assert_eq!(d.indegree(2), 0);
    }

    #[test]
    fn double_reversal_is_identity() {
        let mut d = merge_example_digraph();
        let original: Vec<_> = {
            let mut arcs: Vec<_> = d.arcs().collect();
            arcs.sort_unstable();
            arcs
        };
        let path = AugmentingPath::new(vec![4, 3, 7, 6]);
        d.reverse_path(&path).unwrap();
        d.reverse_path(&AugmentingPath::new(vec![6, 7, 3, 4])).unwrap();
        let mut arcs: Vec<_> = d.arcs().collect();
        arcs.sort_unstable();
        assert_eq!(arcs, original);
    }

    #[test]
    fn malformed_path_is_rejected_without_side_effects() {
        let mut d = Orientation::new(3);
        d.add_arc(0, 1);
        let before = d.undirected_shadow();
        let indeg_before: Vec<_> = (0..3).map(|v| d.indegree(v)).collect();
        let err = d.reverse_path(&AugmentingPath::new(vec![0, 1, 2])).unwrap_err();
        assert_eq!(err, OrientationError::ArcNotPresent { from: 1, to: 2 });
        assert_eq!(d.undirected_shadow(), before);
        assert_eq!(
            (0..3).map(|v| d.indegree(v)).collect::<Vec<_>>(),
            indeg_before
        );
        assert_eq!(d.out_neighbors(0), &[1]);
    }

    #[test]
    fn insert_arc_prefers_room_at_v() {
        let k = 2;

        // only v has room
        let mut d = Orientation::new(3);
        d.add_arc(1, 0);
        d.add_arc(2, 0);
        d.insert_arc(0, 1, k);
        assert_eq!(d.out_neighbors(0), &[1]);

        // both have room: v is checked first
        let mut d = Orientation::new(2);
        d.insert_arc(0, 1, k);
        assert_eq!(d.out_neighbors(0), &[1]);

        // v saturated at k = 1
        let mut d = Orientation::new(3);
        d.add_arc(2, 1);
        d.insert_arc(0, 1, 1);
        assert_eq!(d.out_neighbors(1), &[0]);
        assert_eq!(d.indegree(0), 1);
    }

    #[test]
    #[should_panic(expected = "both endpoints")]
    fn insert_arc_rejects_two_saturated_endpoints() {
        let mut d = Orientation::new(4);
        d.add_arc(2, 0);
        d.add_arc(3, 1);
        d.insert_arc(0, 1, 1);
    }

    #[test]
    fn shadow_lists_each_arc_once() {
        let mut d = Orientation::new(3);
        d.add_arc(0, 1);
        d.add_arc(1, 0);
        d.add_arc(2, 1);
        assert_eq!(d.undirected_shadow(), vec![(0, 1), (0, 1), (1, 2)]);
    }
}
