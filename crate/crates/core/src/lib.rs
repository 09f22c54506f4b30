//! Maximum-weight and maximum-size `(k, ell)`-sparse subgraphs of loopless
//! multigraphs.
//!
//! A graph is `(k, ell)`-sparse when every vertex subset `X` induces at most
//! `max(k|X| - ell, 0)` edges; the sparse edge sets of a fixed graph form a
//! matroid, so a greedy sweep over the edges in non-increasing weight order
//! computes a maximum-weight sparse subgraph. The interesting part is
//! deciding, per edge, whether the accepted set stays sparse. Two solvers do
//! so through a `k`-indegree-bounded orientation of the accepted edges:
//!
//! * [`naive::solve_naive`] — augmenting-path test per edge, O(nm) total;
//! * [`component::solve_component`] — keeps an index of the current tight
//!   components so rejected edges cost O(1), O(n^2 + m) total. The index is
//!   pluggable; see [`trackers`] for the three implementations.
//!
//! [`oracle`] holds brute-force reference implementations (subset-enumeration
//! sparsity checks, component enumeration, a greedy solver with the
//! brute-force independence test) used to verify the solvers on small
//! instances.
//!
//! Parameter ranges with well-known special cases: `(1, 1)` forests, `(1, 0)`
//! pseudoforests, `(2, 3)` generically rigid bar-joint frameworks in the
//! plane, `(k, k)` decompositions into `k` edge-disjoint spanning trees.

pub mod component;
pub mod graph;
pub mod naive;
pub mod oracle;
pub mod orient;
pub mod trackers;

pub use component::{
    find_component, solve_component, ComponentGame, ComponentTracker, Counters, SolveReport,
    StepOutcome,
};
pub use graph::{
    group_edges_by_endpoint, sort_edges, Edge, GraphError, InvalidParams, SparsityParams,
    WeightedMultigraph,
};
pub use naive::{solve_naive, try_accept, NaiveGame, NaiveSolution};
pub use orient::{AugmentingPath, Orientation, OrientationError};
pub use trackers::{DisjointTracker, GeneralTracker, PairMatrix, UnweightedTracker};
