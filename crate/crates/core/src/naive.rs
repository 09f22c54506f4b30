//! The classical O(nm) augmenting-path pebble game.
//!
//! Every edge, accepted or not, pays for up to `ell + 1` path searches. The
//! component-based solver in [`crate::component`] avoids that cost for
//! rejected edges; this version stays as the correctness baseline and
//! differential-test partner.

use crate::graph::{sort_edges, SparsityParams, WeightedMultigraph};
use crate::orient::Orientation;

/// Attempts to make room for the edge `uv`: while the endpoint indegrees sum
/// to at least `2k - ell`, searches for a path from a deficient vertex into
/// `{u, v}` and reverses it. Returns whether the edge can be accepted.
///
/// On rejection, reversals already performed are kept; they leave the
/// orientation valid for the same accepted edge set. The loop runs at most
/// `ell + 1` times, since each reversal lowers `indeg(u) + indeg(v)` by one.
pub fn try_accept(d: &mut Orientation, u: usize, v: usize, p: SparsityParams) -> bool {
    while d.indegree(u) + d.indegree(v) >= p.indegree_threshold() {
        match d.find_path_from_deficient(u, v, p.k()) {
            Some(path) => d
                .reverse_path(&path)
                .expect("search returns a path of live arcs"),
            None => return false,
        }
    }
    true
}

/// Outcome of processing one edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeOutcome {
    /// Index of the edge in the input graph.
    pub index: usize,
    pub accepted: bool,
    /// Path searches spent on this edge.
    pub searches: u64,
}

/// Result of a full naive run.
#[derive(Debug)]
pub struct NaiveSolution {
    /// Accepted edge indices in processing order.
    pub accepted: Vec<usize>,
    pub orientation: Orientation,
}

/// Step-by-step driver for the naive game, exposing the intermediate state
/// so tests can verify invariants after every edge.
pub struct NaiveGame<'g> {
    g: &'g WeightedMultigraph,
    p: SparsityParams,
    d: Orientation,
    order: Vec<usize>,
    pos: usize,
    accepted: Vec<usize>,
}

impl<'g> NaiveGame<'g> {
    pub fn new(g: &'g WeightedMultigraph, p: SparsityParams) -> Self {
        let order = sort_edges(g)
            .into_iter()
            .filter(|&i| g.edge(i).weight >= 0.0)
            .collect();
        Self {
            g,
            p,
            d: Orientation::new(g.vertex_count()),
            order,
            pos: 0,
            accepted: Vec::new(),
        }
    }

    /// Processes the next edge; `None` once all edges are done.
    pub fn step(&mut self) -> Option<EdgeOutcome> {
        let index = *self.order.get(self.pos)?;
        self.pos += 1;
        let e = self.g.edge(index);
        let searches_before = self.d.searches();
        let accepted = try_accept(&mut self.d, e.u, e.v, self.p);
        if accepted {
            self.accepted.push(index);
            self.d.insert_arc(e.u, e.v, self.p.k());
        }
        Some(EdgeOutcome {
            index,
            accepted,
            searches: self.d.searches() - searches_before,
        })
    }

    pub fn orientation(&self) -> &Orientation {
        &self.d
    }

    pub fn accepted(&self) -> &[usize] {
        &self.accepted
    }

    pub fn params(&self) -> SparsityParams {
        self.p
    }

    pub fn run(mut self) -> NaiveSolution {
        while self.step().is_some() {}
        NaiveSolution {
            accepted: self.accepted,
            orientation: self.d,
        }
    }
}

/// Computes a maximum-weight `(k, ell)`-sparse subgraph of `g`, returning the
/// accepted edge indices and the final orientation.
pub fn solve_naive(g: &WeightedMultigraph, p: SparsityParams) -> NaiveSolution {
    NaiveGame::new(g, p).run()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::WeightedMultigraph;
    use crate::oracle;

    fn params(k: usize, ell: usize) -> SparsityParams {
        SparsityParams::new(k, ell).unwrap()
    }

    fn k4() -> WeightedMultigraph {
        WeightedMultigraph::unit(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    /// Largest sparse edge subset by direct enumeration of all subsets.
    fn brute_force_max_sparse_size(g: &WeightedMultigraph, p: SparsityParams) -> usize {
        let m = g.edge_count();
        let mut best = 0;
        for mask in 0..(1usize << m) {
            let edges: Vec<(usize, usize, f64)> = (0..m)
                .filter(|&i| mask & (1 << i) != 0)
                .map(|i| {
                    let e = g.edge(i);
                    (e.u, e.v, e.weight)
                })
                .collect();
            let count = edges.len();
            let sub = WeightedMultigraph::new(g.vertex_count(), edges).unwrap();
            if count > best && oracle::is_sparse(&sub, p).unwrap() {
                best = count;
            }
        }
        best
    }

    #[test]
    fn single_edge_is_accepted() {
        let g = WeightedMultigraph::unit(2, &[(0, 1)]).unwrap();
        let sol = solve_naive(&g, params(1, 1));
        assert_eq!(sol.accepted, vec![0]);
    }

    #[test]
    fn k4_yields_five_edges_for_2_3() {
        let g = k4();
        let p = params(2, 3);
        assert_eq!(brute_force_max_sparse_size(&g, p), 5);
        let sol = solve_naive(&g, p);
        assert_eq!(sol.accepted.len(), 5);
        assert_eq!(sol.orientation.max_indegree() <= 2, true);
    }

    #[test]
    fn weighted_triangle_keeps_the_two_heaviest() {
        let g = WeightedMultigraph::new(3, vec![(0, 1, 5.0), (1, 2, 3.0), (2, 0, 1.0)]).unwrap();
        let sol = solve_naive(&g, params(1, 1));
        assert_eq!(sol.accepted, vec![0, 1]);
        let (_, forest_weight) = oracle::max_weight_spanning_forest(&g);
        assert_eq!(g.total_weight(&sol.accepted), forest_weight);
        assert_eq!(forest_weight, 8.0);
    }

    #[test]
    fn try_accept_on_empty_orientation_needs_no_search() {
        let mut d = Orientation::new(4);
        assert!(try_accept(&mut d, 0, 1, params(2, 3)));
        assert_eq!(d.searches(), 0);
    }

    #[test]
    fn try_accept_rejects_a_sixth_edge_on_a_tight_k4_minus_edge() {
        let g = WeightedMultigraph::unit(4, &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let p = params(2, 3);
        let mut sol = solve_naive(&g, p);
        assert_eq!(sol.accepted.len(), 5);
        assert!(!try_accept(&mut sol.orientation, 0, 1, p));
        // the failed attempt must leave a valid orientation of the same set
        assert_eq!(sol.orientation.max_indegree() <= 2, true);
        assert_eq!(sol.orientation.arc_count(), 5);
    }

    #[test]
    fn search_count_stays_within_ell_plus_one() {
        let g = k4();
        let p = params(2, 3);
        let mut game = NaiveGame::new(&g, p);
        while let Some(outcome) = game.step() {
            assert!(outcome.searches <= (p.ell() + 1) as u64);
        }
    }

    #[test]
    fn negative_edges_are_skipped() {
        let g = WeightedMultigraph::new(3, vec![(0, 1, 2.0), (1, 2, -1.0)]).unwrap();
        let sol = solve_naive(&g, params(1, 1));
        assert_eq!(sol.accepted, vec![0]);
    }

    #[test]
    fn orientation_shadow_matches_accepted_edges() {
        let g = k4();
        let sol = solve_naive(&g, params(2, 3));
        let mut expected: Vec<(usize, usize)> = sol
            .accepted
            .iter()
            .map(|&i| {
                let e = g.edge(i);
                (e.u.min(e.v), e.u.max(e.v))
            })
            .collect();
        expected.sort_unstable();
        assert_eq!(sol.orientation.undirected_shadow(), expected);
    }
}
