//! Brute-force reference implementations used to verify the solvers.
//!
//! Everything here is deliberately naive: sparsity is decided by enumerating
//! all vertex subsets, components by filtering maximal tight subsets, and the
//! greedy solver re-runs the subset check per candidate edge. Hard guards on
//! the vertex count keep the enumeration honest instead of silently slow.

use crate::graph::{sort_edges, SparsityParams, WeightedMultigraph};
use thiserror::Error;

/// Vertex limit for the subset-enumeration checks.
pub const MAX_ENUM_VERTICES: usize = 20;
/// Vertex limit for component enumeration (stores one block list per call).
pub const MAX_COMPONENT_VERTICES: usize = 16;

#[derive(Debug, Error, PartialEq)]
pub enum OracleError {
    #[error("graph has {n} vertices; the exhaustive oracle supports at most {limit}")]
    TooManyVertices { n: usize, limit: usize },
    #[error("component enumeration requires a ({k},{ell})-sparse graph")]
    NotSparse { k: usize, ell: usize },
}

fn guard(n: usize, limit: usize) -> Result<(), OracleError> {
    if n > limit {
        Err(OracleError::TooManyVertices { n, limit })
    } else {
        Ok(())
    }
}

/// Edge multiplicities between vertex pairs, symmetric.
fn multiplicity_table(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<u32>> {
    let mut mult = vec![vec![0u32; n]; n];
    for &(u, v) in edges {
        mult[u][v] += 1;
        mult[v][u] += 1;
    }
    mult
}

/// Induced edge counts for every vertex subset, indexed by bitmask.
///
/// Computed incrementally: a subset's count is its count without the lowest
/// vertex plus that vertex's multiplicities into the rest, so the whole table
/// costs O(2^n * n).
fn induced_counts(n: usize, mult: &[Vec<u32>]) -> Vec<u32> {
    let mut counts = vec![0u32; 1usize << n];
    for mask in 1..(1usize << n) {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        let mut count = counts[rest];
        let mut bits = rest;
        while bits != 0 {
            let b = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            count += mult[low][b];
        }
        counts[mask] = count;
    }
    counts
}

fn sparse_by_enumeration(n: usize, mult: &[Vec<u32>], p: SparsityParams) -> bool {
    let counts = induced_counts(n, mult);
    for (mask, &count) in counts.iter().enumerate().skip(1) {
        let size = mask.count_ones() as usize;
        if count as usize > p.max_edges(size) {
            return false;
        }
    }
    true
}

fn endpoint_pairs(g: &WeightedMultigraph) -> Vec<(usize, usize)> {
    g.edges().iter().map(|e| (e.u, e.v)).collect()
}

/// Checks the sparsity condition over all vertex subsets.
pub fn is_sparse(g: &WeightedMultigraph, p: SparsityParams) -> Result<bool, OracleError> {
    let n = g.vertex_count();
    guard(n, MAX_ENUM_VERTICES)?;
    let mult = multiplicity_table(n, &endpoint_pairs(g));
    Ok(sparse_by_enumeration(n, &mult, p))
}

/// Sparse with exactly `max(k*n - ell, 0)` edges.
pub fn is_tight(g: &WeightedMultigraph, p: SparsityParams) -> Result<bool, OracleError> {
    Ok(is_sparse(g, p)? && g.edge_count() == p.max_edges(g.vertex_count()))
}

/// Contains a tight subgraph on the full vertex set, decided by running the
/// greedy oracle with the weights ignored and comparing the rank against
/// `max(k*n - ell, 0)`.
pub fn is_spanning(g: &WeightedMultigraph, p: SparsityParams) -> Result<bool, OracleError> {
    let n = g.vertex_count();
    guard(n, MAX_ENUM_VERTICES)?;
    let mut mult = vec![vec![0u32; n]; n];
    let mut rank = 0usize;
    for e in g.edges() {
        mult[e.u][e.v] += 1;
        mult[e.v][e.u] += 1;
        if sparse_by_enumeration(n, &mult, p) {
            rank += 1;
        } else {
            mult[e.u][e.v] -= 1;
            mult[e.v][e.u] -= 1;
        }
    }
    Ok(rank == p.max_edges(n))
}

/// All inclusion-maximal vertex sets inducing a tight subgraph, each sorted
/// ascending. Singletons count exactly when `ell >= k`. The result is checked
/// against the structural fact that two components share at most one vertex.
pub fn enumerate_components(
    g: &WeightedMultigraph,
    p: SparsityParams,
) -> Result<Vec<Vec<usize>>, OracleError> {
    let n = g.vertex_count();
    guard(n, MAX_COMPONENT_VERTICES)?;
    let mult = multiplicity_table(n, &endpoint_pairs(g));
    if !sparse_by_enumeration(n, &mult, p) {
        return Err(OracleError::NotSparse { k: p.k(), ell: p.ell() });
    }
    let counts = induced_counts(n, &mult);
    let mut blocks: Vec<usize> = (1..(1usize << n))
        .filter(|&mask| {
            let size = mask.count_ones() as usize;
            counts[mask] as usize == p.max_edges(size)
        })
        .collect();
    // descending size, so any strict superset of a block precedes it
    blocks.sort_by_key(|mask| std::cmp::Reverse(mask.count_ones()));
    let mut maximal: Vec<usize> = Vec::new();
    for mask in blocks {
        if !maximal.iter().any(|&c| mask & c == mask) {
            maximal.push(mask);
        }
    }
    maximal.sort_unstable();
    let components: Vec<Vec<usize>> = maximal
        .iter()
        .map(|&mask| (0..n).filter(|&v| mask & (1 << v) != 0).collect())
        .collect();
    for (i, &a) in maximal.iter().enumerate() {
        for &b in &maximal[i + 1..] {
            assert!(
                (a & b).count_ones() <= 1,
                "maximal blocks may share at most one vertex"
            );
        }
    }
    Ok(components)
}

/// Greedy solver with the brute-force independence test: processes the edges
/// in the same order as the pebble games (non-increasing weight, stable ties,
/// negative weights skipped) and accepts an edge exactly when the accepted
/// set stays sparse.
pub fn solve_greedy_oracle(
    g: &WeightedMultigraph,
    p: SparsityParams,
) -> Result<Vec<usize>, OracleError> {
    let n = g.vertex_count();
    guard(n, MAX_ENUM_VERTICES)?;
    let mut mult = vec![vec![0u32; n]; n];
    let mut accepted = Vec::new();
    for idx in sort_edges(g) {
        let e = g.edge(idx);
        if e.weight < 0.0 {
            continue;
        }
        mult[e.u][e.v] += 1;
        mult[e.v][e.u] += 1;
        if sparse_by_enumeration(n, &mult, p) {
            accepted.push(idx);
        } else {
            mult[e.u][e.v] -= 1;
            mult[e.v][e.u] -= 1;
        }
    }
    Ok(accepted)
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            self.parent[x] = self.find(self.parent[x]);
        }
        self.parent[x]
    }

    fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        self.parent[rx] = ry;
        true
    }
}

/// Kruskal-style maximum-weight spanning forest over the same deterministic
/// edge order as the solvers. Independent of the orientation machinery; used
/// to cross-check the `(1,1)` case.
pub fn max_weight_spanning_forest(g: &WeightedMultigraph) -> (Vec<usize>, f64) {
    let mut uf = UnionFind::new(g.vertex_count());
    let mut accepted = Vec::new();
    for idx in sort_edges(g) {
        let e = g.edge(idx);
        if e.weight < 0.0 {
            continue;
        }
        if uf.union(e.u, e.v) {
            accepted.push(idx);
        }
    }
    let weight = g.total_weight(&accepted);
    (accepted, weight)
}

/// True when every pair of distinct vertex sets shares at most one vertex.
pub fn pairwise_intersections_at_most_one(components: &[Vec<usize>]) -> bool {
    max_pairwise_intersection(components) <= 1
}

/// True when the vertex sets are pairwise disjoint.
pub fn pairwise_disjoint(components: &[Vec<usize>]) -> bool {
    max_pairwise_intersection(components) == 0
}

fn max_pairwise_intersection(components: &[Vec<usize>]) -> usize {
    let sorted: Vec<Vec<usize>> = components
        .iter()
        .map(|c| {
            let mut c = c.clone();
            c.sort_unstable();
            c
        })
        .collect();
    let mut max = 0;
    for (i, a) in sorted.iter().enumerate() {
        for b in &sorted[i + 1..] {
            let mut count = 0;
            let (mut x, mut y) = (0, 0);
            while x < a.len() && y < b.len() {
                match a[x].cmp(&b[y]) {
                    std::cmp::Ordering::Less => x += 1,
                    std::cmp::Ordering::Greater => y += 1,
                    std::cmp::Ordering::Equal => {
                        count += 1;
                        x += 1;
                        y += 1;
                    }
                }
            }
            max = max.max(count);
        }
    }
    max
}

/// Component-size budget: since each component is tight and no edge is
/// induced by two of them, `k * sum(|C_i|) <= |F| + ell * |C|` holds, which
/// implies the coarser `sum(|C_i|) <= |F|/k + 2|C|`.
pub fn component_sizes_within_budget(
    components: &[Vec<usize>],
    accepted_edges: usize,
    p: SparsityParams,
) -> bool {
    let total: usize = components.iter().map(|c| c.len()).sum();
    p.k() * total <= accepted_edges + p.ell() * components.len()
}
