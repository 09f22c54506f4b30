//! Benchmark harness: generates random multigraphs over a size sweep, runs
//! the selected solvers, and emits one CSV row per run with wall time and
//! work counters. The counters are the interesting part: the component
//! algorithm's traversal touches and matrix writes should scale with n^2
//! while the naive algorithm's touches scale with n*m.

use crate::gen::random_multigraph;
use crate::report::{resolve_tracker, Algorithm, RunError, TrackerChoice};
use kl_sparse::{
    group_edges_by_endpoint, solve_naive, ComponentGame, ComponentTracker, Counters,
    DisjointTracker, GeneralTracker, SparsityParams, UnweightedTracker, WeightedMultigraph,
};
use std::io::Write;
use std::time::Instant;

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub params: SparsityParams,
    pub sizes: Vec<usize>,
    /// Average edges per vertex; each sweep point uses `m = density * n`.
    pub densities: Vec<usize>,
    pub seed: u64,
    pub algorithms: Vec<Algorithm>,
    pub tracker: TrackerChoice,
    pub unweighted: bool,
}

pub const CSV_HEADER: &str = "n,m,k,ell,algorithm,tracker,seed,accepted,weight,wall_ms,search_touches,reversals,matrix_writes,merge_steps,total_counter";

fn mix_seed(seed: u64, n: usize, density: usize) -> u64 {
    seed ^ (n as u64).wrapping_mul(0x9e3779b97f4a7c15)
        ^ (density as u64).wrapping_mul(0xd1b54a32d192ed03)
}

struct RunRow {
    accepted: usize,
    weight: f64,
    wall_ms: f64,
    counters: Counters,
}

fn run_component<T: ComponentTracker>(
    g: &WeightedMultigraph,
    p: SparsityParams,
    tracker: &mut T,
    grouped: bool,
) -> RunRow {
    let start = Instant::now();
    let report = if grouped {
        let order = group_edges_by_endpoint(g);
        ComponentGame::with_order(g, p, tracker, order).run()
    } else {
        ComponentGame::new(g, p, tracker).run()
    };
    RunRow {
        accepted: report.accepted.len(),
        weight: report.total_weight,
        wall_ms: start.elapsed().as_secs_f64() * 1e3,
        counters: report.counters,
    }
}

/// Runs the sweep, writing CSV to `out`.
pub fn run_bench<W: Write>(config: &BenchConfig, out: &mut W) -> Result<(), RunError> {
    let p = config.params;
    writeln!(out, "{CSV_HEADER}").expect("write bench output");
    for &n in &config.sizes {
        for &density in &config.densities {
            let m = n * density;
            let seed = mix_seed(config.seed, n, density);
            let g = random_multigraph(n, m, seed);
            let g = if config.unweighted { g.with_unit_weights() } else { g };
            for &algorithm in &config.algorithms {
                let (row, tracker_name) = match algorithm {
                    Algorithm::Naive => {
                        let start = Instant::now();
                        let sol = solve_naive(&g, p);
                        (
                            RunRow {
                                accepted: sol.accepted.len(),
                                weight: g.total_weight(&sol.accepted),
                                wall_ms: start.elapsed().as_secs_f64() * 1e3,
                                counters: Counters {
                                    search_touches: sol.orientation.touches(),
                                    reversals: sol.orientation.reversals(),
                                    matrix_writes: 0,
                                    merge_steps: 0,
                                },
                            },
                            "none",
                        )
                    }
                    Algorithm::Component => {
                        let (resolved, name) =
                            resolve_tracker(config.tracker, p, config.unweighted, &g)?;
                        let row = match resolved {
                            TrackerChoice::General => {
                                run_component(&g, p, &mut GeneralTracker::new(n, p), false)
                            }
                            TrackerChoice::Disjoint => {
                                run_component(&g, p, &mut DisjointTracker::new(n, p), false)
                            }
                            TrackerChoice::Unweighted => {
                                run_component(&g, p, &mut UnweightedTracker::new(n, p), true)
                            }
                            TrackerChoice::Auto => unreachable!(),
                        };
                        (row, name)
                    }
                    Algorithm::Oracle => {
                        // subset enumeration is pointless at bench sizes
                        continue;
                    }
                };
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},{},{:.3},{},{},{},{},{}",
                    n,
                    m,
                    p.k(),
                    p.ell(),
                    algorithm.name(),
                    tracker_name,
                    seed,
                    row.accepted,
                    row.weight,
                    row.wall_ms,
                    row.counters.search_touches,
                    row.counters.reversals,
                    row.counters.matrix_writes,
                    row.counters.merge_steps,
                    row.counters.total(),
                )
                .expect("write bench output");
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bench_emits_one_row_per_configuration() {
        let config = BenchConfig {
            params: SparsityParams::new(2, 3).unwrap(),
            sizes: vec![20, 40],
            densities: vec![4],
            seed: 7,
            algorithms: vec![Algorithm::Naive, Algorithm::Component],
            tracker: TrackerChoice::Auto,
            unweighted: false,
        };
        let mut buf = Vec::new();
        run_bench(&config, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], CSV_HEADER);
        assert_eq!(lines.len(), 1 + 2 * 2);
        for line in &lines[1..] {
            assert_eq!(line.split(',').count(), CSV_HEADER.split(',').count());
        }
    }

    #[test]
    fn naive_and_component_rows_agree_on_the_result() {
        let config = BenchConfig {
            params: SparsityParams::new(2, 3).unwrap(),
            sizes: vec![30],
            densities: vec![6],
            seed: 3,
            algorithms: vec![Algorithm::Naive, Algorithm::Component],
            tracker: TrackerChoice::Auto,
            unweighted: false,
        };
        let mut buf = Vec::new();
        run_bench(&config, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let rows: Vec<Vec<&str>> = text.lines().skip(1).map(|l| l.split(',').collect()).collect();
        assert_eq!(rows.len(), 2);
        // accepted count and weight columns match across algorithms
        assert_eq!(rows[0][7], rows[1][7]);
        assert_eq!(rows[0][8], rows[1][8]);
    }
}
