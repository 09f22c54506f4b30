//! Input graph representation and edge-ordering helpers.
//!
//! A [`WeightedMultigraph`] is an immutable loopless multigraph over dense
//! vertex ids `0..n`. Parallel edges are allowed and kept as individual
//! entries; weights are arbitrary finite reals.

use thiserror::Error;

/// A single weighted edge of a [`WeightedMultigraph`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub weight: f64,
}

#[derive(Debug, Error, PartialEq)]
pub enum GraphError {
    #[error("edge {index} is a loop at vertex {vertex}")]
    LoopEdge { index: usize, vertex: usize },
    #[error("edge {index} references vertex {vertex}, but the graph has {n} vertices")]
    VertexOutOfRange { index: usize, vertex: usize, n: usize },
    #[error("edge {index} has a non-finite weight")]
    NonFiniteWeight { index: usize },
}

/// Immutable loopless multigraph with real edge weights.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedMultigraph {
    n: usize,
    edges: Vec<Edge>,
}

impl WeightedMultigraph {
    /// Builds a graph from `(u, v, weight)` triples, validating that every
    /// edge is loopless, in range, and finitely weighted.
    pub fn new(n: usize, edges: Vec<(usize, usize, f64)>) -> Result<Self, GraphError> {
        let mut out = Vec::with_capacity(edges.len());
        for (index, (u, v, weight)) in edges.into_iter().enumerate() {
            if u == v {
                return Err(GraphError::LoopEdge { index, vertex: u });
            }
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(GraphError::VertexOutOfRange { index, vertex, n });
                }
            }
            if !weight.is_finite() {
                return Err(GraphError::NonFiniteWeight { index });
            }
            out.push(Edge { u, v, weight });
        }
        Ok(Self { n, edges: out })
    }

    /// Builds a unit-weight graph from endpoint pairs.
    pub fn unit(n: usize, pairs: &[(usize, usize)]) -> Result<Self, GraphError> {
        Self::new(n, pairs.iter().map(|&(u, v)| (u, v, 1.0)).collect())
    }

    /// Returns a copy of this graph with every weight replaced by 1.
    pub fn with_unit_weights(&self) -> Self {
        Self {
            n: self.n,
            edges: self
                .edges
                .iter()
                .map(|e| Edge { weight: 1.0, ..*e })
                .collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge(&self, index: usize) -> Edge {
        self.edges[index]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Sum of the weights of the given edges.
    pub fn total_weight(&self, indices: &[usize]) -> f64 {
        indices.iter().map(|&i| self.edges[i].weight).sum()
    }
}

#[derive(Debug, Error, PartialEq)]
#[error("sparsity parameters require 0 <= ell < 2k, got k={k}, ell={ell}")]
pub struct InvalidParams {
    pub k: usize,
    pub ell: usize,
}

/// The pair `(k, ell)` defining the sparsity condition: every vertex subset
/// `X` may induce at most `max(k|X| - ell, 0)` edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SparsityParams {
    k: usize,
    ell: usize,
}

impl SparsityParams {
    /// Validates `0 <= ell < 2k`. Note that `k = 0` is always rejected.
    pub fn new(k: usize, ell: usize) -> Result<Self, InvalidParams> {
        if ell < 2 * k {
            Ok(Self { k, ell })
        } else {
            Err(InvalidParams { k, ell })
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    /// The indegree-sum threshold `2k - ell` (always >= 1). An edge `uv` can
    /// be inserted once `indeg(u) + indeg(v)` drops below this value.
    pub fn indegree_threshold(&self) -> usize {
        2 * self.k - self.ell
    }

    /// `max(k*n - ell, 0)`, the edge count of a tight graph on `n` vertices.
    pub fn max_edges(&self, n: usize) -> usize {
        (self.k * n).saturating_sub(self.ell)
    }

    /// True when a single vertex already forms a tight block (`ell >= k`),
    /// which decides the singleton initialization of component trackers.
    pub fn singletons_tight(&self) -> bool {
        self.ell >= self.k
    }
}

/// Edge indices in non-increasing weight order; ties keep input order.
pub fn sort_edges(g: &WeightedMultigraph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.edge_count()).collect();
    // weights are validated finite, so partial_cmp never fails
    order.sort_by(|&a, &b| g.edge(b).weight.partial_cmp(&g.edge(a).weight).unwrap());
    order
}

/// Edge indices bucketed by first endpoint, keeping input order inside each
/// bucket. This is the processing order required by the unweighted tracker.
pub fn group_edges_by_endpoint(g: &WeightedMultigraph) -> Vec<usize> {
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut counts = vec![0usize; n + 1];
    for e in g.edges() {
        counts[e.u + 1] += 1;
    }
    for i in 0..n {
        counts[i + 1] += counts[i];
    }
    let mut order = vec![0usize; m];
    for (idx, e) in g.edges().iter().enumerate() {
        order[counts[e.u]] = idx;
        counts[e.u] += 1;
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_bad_ids() {
        assert_eq!(
            WeightedMultigraph::new(3, vec![(1, 1, 1.0)]),
            Err(GraphError::LoopEdge { index: 0, vertex: 1 })
        );
        assert_eq!(
            WeightedMultigraph::new(3, vec![(0, 3, 1.0)]),
            Err(GraphError::VertexOutOfRange { index: 0, vertex: 3, n: 3 })
        );
        assert_eq!(
            WeightedMultigraph::new(3, vec![(0, 1, f64::NAN)]),
            Err(GraphError::NonFiniteWeight { index: 0 })
        );
    }

    #[test]
    fn allows_parallel_edges() {
        let g = WeightedMultigraph::new(2, vec![(0, 1, 1.0), (0, 1, 2.0), (1, 0, 3.0)]).unwrap();
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn param_validation() {
        assert!(SparsityParams::new(2, 3).is_ok());
        assert!(SparsityParams::new(1, 0).is_ok());
        assert!(SparsityParams::new(3, 5).is_ok());
        assert!(SparsityParams::new(2, 4).is_err());
        assert!(SparsityParams::new(0, 0).is_err());
    }

    #[test]
    fn max_edges_saturates() {
        let p = SparsityParams::new(2, 3).unwrap();
        assert_eq!(p.max_edges(1), 0);
        assert_eq!(p.max_edges(4), 5);
        assert_eq!(p.max_edges(0), 0);
    }

    #[test]
    fn sort_orders_by_descending_weight() {
        let g = WeightedMultigraph::new(3, vec![(0, 1, 1.0), (1, 2, 5.0), (0, 2, 3.0)]).unwrap();
        assert_eq!(sort_edges(&g), vec![1, 2, 0]);
    }

    #[test]
    fn sort_ties_keep_input_order() {
        let g = WeightedMultigraph::new(3, vec![(0, 1, 2.0), (1, 2, 2.0), (0, 2, 2.0)]).unwrap();
        assert_eq!(sort_edges(&g), vec![0, 1, 2]);

        let g = WeightedMultigraph::new(3, vec![(0, 1, 3.0), (1, 2, 1.0), (0, 2, 3.0)]).unwrap();
        assert_eq!(sort_edges(&g), vec![0, 2, 1]);
    }

    #[test]
    fn grouping_buckets_by_first_endpoint() {
        let g = WeightedMultigraph::unit(4, &[(2, 0), (0, 1), (2, 3)]).unwrap();
        assert_eq!(group_edges_by_endpoint(&g), vec![1, 0, 2]);
    }

    #[test]
    fn grouping_is_stable() {
        let g = WeightedMultigraph::unit(4, &[(0, 1), (2, 0), (2, 3)]).unwrap();
        assert_eq!(group_edges_by_endpoint(&g), vec![0, 1, 2]);

        let g = WeightedMultigraph::unit(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(group_edges_by_endpoint(&g), vec![0, 1, 2]);
    }
}
