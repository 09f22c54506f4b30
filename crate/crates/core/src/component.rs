//! The component-based pebble game.
//!
//! The naive game pays up to `ell + 1` path searches for every edge. Here a
//! [`ComponentTracker`] answers "do `u` and `v` already lie in a common tight
//! component?" in constant time, so rejected edges cost O(1) and the
//! expensive work is confined to the O(n) accepted edges. Together with the
//! tracker bookkeeping this yields an O(n^2 + m) solve.
//!
//! The solver is written once against the tracker interface; the three
//! implementations live in [`crate::trackers`].

use crate::graph::{sort_edges, SparsityParams, WeightedMultigraph};
use crate::orient::Orientation;

/// Incremental index over the current tight components of the accepted
/// subgraph.
///
/// Implementations must uphold one invariant: after mirroring every accepted
/// edge through [`absorb`](Self::absorb), `in_common(u, v)` is true exactly
/// when some current component contains both `u` and `v`.
pub trait ComponentTracker {
    /// Do `u` and `v` lie in a common component? May mutate internal caches.
    fn in_common(&mut self, u: usize, v: usize) -> bool;

    /// Records a newly formed component, retiring every component it
    /// swallows.
    fn absorb(&mut self, component: &[usize]);

    /// Snapshot of the current components, each a vertex list.
    fn components(&self) -> Vec<Vec<usize>>;

    /// Total pair-matrix bit writes, for trackers that maintain one.
    fn matrix_writes(&self) -> u64 {
        0
    }

    /// Total vertex-level merge work performed by `absorb`.
    fn merge_steps(&self) -> u64 {
        0
    }
}

/// Extracts the unique component formed by inserting the edge `uv`, or an
/// empty list when none formed. Must be called right after the edge's arc was
/// inserted, while `indeg(u) + indeg(v) <= 2k - ell` still holds.
///
/// When the indegree sum is strictly below `2k - ell` no tight set containing
/// both endpoints can exist and the traversal is skipped. Otherwise the set
/// `T` of vertices unreachable from the deficient set is tight whenever it
/// contains `u` and `v`, and it is exactly the new component.
pub fn find_component(
    d: &mut Orientation,
    u: usize,
    v: usize,
    p: SparsityParams,
) -> Vec<usize> {
    let sum = d.indegree(u) + d.indegree(v);
    debug_assert!(sum <= p.indegree_threshold());
    if sum < p.indegree_threshold() {
        return Vec::new();
    }
    let t = d.unreached_from_deficient(u, v, p.k());
    if t.binary_search(&u).is_ok() && t.binary_search(&v).is_ok() {
        t
    } else {
        Vec::new()
    }
}

/// Work counters accumulated over a solve.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct Counters {
    /// Vertices touched by path searches and component traversals.
    pub search_touches: u64,
    /// Arcs reversed.
    pub reversals: u64,
    /// Pair-matrix bit writes (general tracker only).
    pub matrix_writes: u64,
    /// Vertex-level tracker merge work.
    pub merge_steps: u64,
}

impl Counters {
    /// Traversal touches plus matrix writes, the quantity expected to scale
    /// quadratically in the vertex count.
    pub fn total(&self) -> u64 {
        self.search_touches + self.matrix_writes
    }
}

/// Result of a component-based solve.
#[derive(Debug, Clone)]
pub struct SolveReport {
    /// Accepted edge indices in processing order.
    pub accepted: Vec<usize>,
    pub total_weight: f64,
    /// Final components as reported by the tracker.
    pub components: Vec<Vec<usize>>,
    pub counters: Counters,
}

/// Outcome of processing one edge in the component game.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepOutcome {
    /// Index of the edge in the input graph.
    pub index: usize,
    pub accepted: bool,
    /// Path searches spent on this edge (0 for rejected edges).
    pub searches: u64,
    /// The component formed by this edge, if any.
    pub new_component: Option<Vec<usize>>,
}

/// Step-by-step driver for the component game.
pub struct ComponentGame<'a, T: ComponentTracker> {
    g: &'a WeightedMultigraph,
    p: SparsityParams,
    d: Orientation,
    tracker: &'a mut T,
    order: Vec<usize>,
    pos: usize,
    accepted: Vec<usize>,
}

impl<'a, T: ComponentTracker> ComponentGame<'a, T> {
    /// Processes edges in non-increasing weight order, skipping negative
    /// weights.
    pub fn new(g: &'a WeightedMultigraph, p: SparsityParams, tracker: &'a mut T) -> Self {
        let order = sort_edges(g)
            .into_iter()
            .filter(|&i| g.edge(i).weight >= 0.0)
            .collect();
        Self::with_order(g, p, tracker, order)
    }

    /// Processes edges in a caller-supplied order. The order must be valid
    /// for greedy acceptance (non-increasing weight); for unit weights any
    /// order qualifies, which is what the vertex-grouped unweighted mode
    /// relies on.
    pub fn with_order(
        g: &'a WeightedMultigraph,
        p: SparsityParams,
        tracker: &'a mut T,
        order: Vec<usize>,
    ) -> Self {
        Self {
            g,
            p,
            d: Orientation::new(g.vertex_count()),
            tracker,
            order,
            pos: 0,
            accepted: Vec::new(),
        }
    }

    /// Processes the next edge; `None` once all edges are done.
    pub fn step(&mut self) -> Option<StepOutcome> {
        let index = *self.order.get(self.pos)?;
        self.pos += 1;
        let e = self.g.edge(index);
        if self.tracker.in_common(e.u, e.v) {
            return Some(StepOutcome {
                index,
                accepted: false,
                searches: 0,
                new_component: None,
            });
        }
        let searches_before = self.d.searches();
        while self.d.indegree(e.u) + self.d.indegree(e.v) >= self.p.indegree_threshold() {
            let path = self
                .d
                .find_path_from_deficient(e.u, e.v, self.p.k())
                .expect("an edge outside all components admits an augmenting path");
            self.d
                .reverse_path(&path)
                .expect("search returns a path of live arcs");
        }
        self.accepted.push(index);
        self.d.insert_arc(e.u, e.v, self.p.k());
        let component = find_component(&mut self.d, e.u, e.v, self.p);
        let new_component = if component.is_empty() {
            None
        } else {
            self.tracker.absorb(&component);
            Some(component)
        };
        Some(StepOutcome {
            index,
            accepted: true,
            searches: self.d.searches() - searches_before,
            new_component,
        })
    }

    pub fn orientation(&self) -> &Orientation {
        &self.d
    }

    pub fn tracker(&self) -> &T {
        self.tracker
    }

    pub fn accepted(&self) -> &[usize] {
        &self.accepted
    }

    pub fn run(mut self) -> SolveReport {
        while self.step().is_some() {}
        let total_weight = self.g.total_weight(&self.accepted);
        SolveReport {
            accepted: self.accepted,
            total_weight,
            components: self.tracker.components(),
            counters: Counters {
                search_touches: self.d.touches(),
                reversals: self.d.reversals(),
                matrix_writes: self.tracker.matrix_writes(),
                merge_steps: self.tracker.merge_steps(),
            },
        }
    }
}

/// Computes a maximum-weight `(k, ell)`-sparse subgraph using the component
/// game with the given tracker. The accepted edge set is identical to
/// [`crate::naive::solve_naive`] on the same edge order.
pub fn solve_component<T: ComponentTracker>(
    g: &WeightedMultigraph,
    p: SparsityParams,
    tracker: &mut T,
) -> SolveReport {
    ComponentGame::new(g, p, tracker).run()
}
