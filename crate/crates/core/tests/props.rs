//! Property tests over randomly generated multigraphs.

use kl_sparse::{
    solve_component, solve_naive, AugmentingPath, GeneralTracker, SparsityParams,
    WeightedMultigraph,
};
use proptest::prelude::*;

#[derive(Debug, Clone)]
struct GraphCase {
    n: usize,
    edges: Vec<(usize, usize, f64)>,
}

fn graph_case(max_n: usize, max_m: usize) -> impl Strategy<Value = GraphCase> {
    (2..=max_n).prop_flat_map(move |n| {
        let edge = (0..n, 0..n - 1, 0u32..8).prop_map(move |(u, x, w)| {
            // avoid loops by shifting the second endpoint past the first
            let v = if x >= u { x + 1 } else { x };
            (u, v, w as f64)
        });
        proptest::collection::vec(edge, 0..=max_m)
            .prop_map(move |edges| GraphCase { n, edges })
    })
}

fn params() -> impl Strategy<Value = SparsityParams> {
    (1usize..=3)
        .prop_flat_map(|k| (Just(k), 0..2 * k))
        .prop_map(|(k, ell)| SparsityParams::new(k, ell).unwrap())
}

proptest! {
    /// Reversing a found augmenting path twice restores the arc multiset.
    #[test]
    fn path_reversal_is_an_involution(case in graph_case(8, 16), p in params(), u in 0usize..8, v in 0usize..8) {
        let g = WeightedMultigraph::new(case.n, case.edges).unwrap();
        let mut sol = solve_naive(&g, p);
        let (u, v) = (u % case.n, v % case.n);
        prop_assume!(u != v);
        let d = &mut sol.orientation;
        let before: Vec<_> = { let mut a: Vec<_> = d.arcs().collect(); a.sort_unstable(); a };
        if let Some(path) = d.find_path_from_deficient(u, v, p.k()) {
            d.reverse_path(&path).unwrap();
            let reversed: Vec<usize> = path.vertices().iter().rev().copied().collect();
            d.reverse_path(&AugmentingPath::new(reversed)).unwrap();
            let after: Vec<_> = { let mut a: Vec<_> = d.arcs().collect(); a.sort_unstable(); a };
            prop_assert_eq!(before, after);
        }
    }

    /// Both solvers accept identical edge sets, keep every indegree within
    /// k, and orient exactly the accepted edges.
    #[test]
    fn solvers_agree_and_respect_the_indegree_bound(case in graph_case(8, 20), p in params()) {
        let g = WeightedMultigraph::new(case.n, case.edges).unwrap();
        let naive = solve_naive(&g, p);
        let mut tracker = GeneralTracker::new(case.n, p);
        let report = solve_component(&g, p, &mut tracker);
        prop_assert_eq!(&report.accepted, &naive.accepted);
        prop_assert!(naive.orientation.max_indegree() <= p.k());
        prop_assert!(report.accepted.len() <= p.max_edges(case.n));
        prop_assert!(tracker.pair_matrix().is_symmetric());

        let mut expected: Vec<(usize, usize)> = naive
            .accepted
            .iter()
            .map(|&i| { let e = g.edge(i); (e.u.min(e.v), e.u.max(e.v)) })
            .collect();
        expected.sort_unstable();
        prop_assert_eq!(naive.orientation.undirected_shadow(), expected);
    }
}
