//! Solver dispatch and report rendering for the command line.
//!
//! The text report uses one record per line (`edge <index> <u> <v> <w>`,
//! `component <v...>`, `stat <name> <value>`) so that outputs of different
//! algorithms on the same input are directly comparable. The JSON report
//! carries the same data.

use kl_sparse::{
    group_edges_by_endpoint, oracle, solve_naive, ComponentGame, ComponentTracker, Counters,
    DisjointTracker, GeneralTracker, SparsityParams, UnweightedTracker, WeightedMultigraph,
};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Naive,
    Component,
    Oracle,
}

impl Algorithm {
    pub fn name(&self) -> &'static str {
        match self {
            Algorithm::Naive => "naive",
            Algorithm::Component => "component",
            Algorithm::Oracle => "oracle",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum TrackerChoice {
    Auto,
    General,
    Disjoint,
    Unweighted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    Sparse,
    Tight,
    Spanning,
}

impl CheckKind {
    pub fn name(&self) -> &'static str {
        match self {
            CheckKind::Sparse => "sparse",
            CheckKind::Tight => "tight",
            CheckKind::Spanning => "spanning",
        }
    }
}

#[derive(Debug, Error)]
pub enum RunError {
    #[error("tracker 'disjoint' requires ell <= k, got k={k}, ell={ell}")]
    DisjointRange { k: usize, ell: usize },
    #[error("tracker 'unweighted' requires --unweighted or an input with all weights equal")]
    UnweightedTrackerNeedsUnitWeights,
    #[error("--components is not available with --algorithm naive")]
    ComponentsUnavailable,
    #[error(transparent)]
    Oracle(#[from] oracle::OracleError),
}

#[derive(Debug, Clone, Copy)]
pub struct RunOptions {
    pub params: SparsityParams,
    pub algorithm: Algorithm,
    pub tracker: TrackerChoice,
    pub unweighted: bool,
    pub components: bool,
    pub stats: bool,
}

#[derive(Debug, Serialize)]
pub struct ReportEdge {
    pub index: usize,
    pub u: usize,
    pub v: usize,
    pub weight: f64,
}

#[derive(Debug, Serialize)]
pub struct StatsReport {
    pub algorithm: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tracker: Option<&'static str>,
    pub search_touches: u64,
    pub reversals: u64,
    pub matrix_writes: u64,
    pub merge_steps: u64,
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub ell: usize,
    pub accepted: usize,
    pub weight: f64,
    pub edges: Vec<ReportEdge>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub components: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stats: Option<StatsReport>,
}

#[derive(Debug, Serialize)]
pub struct CheckReport {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub ell: usize,
    pub check: &'static str,
    pub result: bool,
}

/// Resolves `auto` to a concrete tracker and validates the choice.
pub fn resolve_tracker(
    choice: TrackerChoice,
    p: SparsityParams,
    unweighted: bool,
    g: &WeightedMultigraph,
) -> Result<(TrackerChoice, &'static str), RunError> {
    let resolved = match choice {
        TrackerChoice::Auto => {
            if unweighted {
                TrackerChoice::Unweighted
            } else if p.ell() <= p.k() {
                TrackerChoice::Disjoint
            } else {
                TrackerChoice::General
            }
        }
        other => other,
    };
    match resolved {
        TrackerChoice::Disjoint if p.ell() > p.k() => {
            return Err(RunError::DisjointRange { k: p.k(), ell: p.ell() })
        }
        TrackerChoice::Unweighted if !unweighted => {
            let mut weights = g.edges().iter().map(|e| e.weight);
            if let Some(first) = weights.next() {
                if weights.any(|w| w != first) {
                    return Err(RunError::UnweightedTrackerNeedsUnitWeights);
                }
            }
        }
        _ => {}
    }
    let name = match resolved {
        TrackerChoice::General => "general",
        TrackerChoice::Disjoint => "disjoint",
        TrackerChoice::Unweighted => "unweighted",
        TrackerChoice::Auto => unreachable!(),
    };
    Ok((resolved, name))
}

struct SolveOutput {
    accepted: Vec<usize>,
    components: Option<Vec<Vec<usize>>>,
    counters: Counters,
}

fn solve_with_tracker<T: ComponentTracker>(
    g: &WeightedMultigraph,
    p: SparsityParams,
    tracker: &mut T,
    grouped: bool,
) -> SolveOutput {
    let report = if grouped {
        let order = group_edges_by_endpoint(g);
        ComponentGame::with_order(g, p, tracker, order).run()
    } else {
        ComponentGame::new(g, p, tracker).run()
    };
    SolveOutput {
        accepted: report.accepted,
        components: Some(report.components),
        counters: report.counters,
    }
}

/// Runs the selected algorithm on `g` and assembles the report.
pub fn run(g: &WeightedMultigraph, opts: &RunOptions) -> Result<RunReport, RunError> {
    let p = opts.params;
    let unit_graph;
    let g = if opts.unweighted {
        unit_graph = g.with_unit_weights();
        &unit_graph
    } else {
        g
    };

    let (output, algorithm, tracker_name) = match opts.algorithm {
        Algorithm::Naive => {
            if opts.components {
                return Err(RunError::ComponentsUnavailable);
            }
            let sol = solve_naive(g, p);
            let counters = Counters {
                search_touches: sol.orientation.touches(),
                reversals: sol.orientation.reversals(),
                matrix_writes: 0,
                merge_steps: 0,
            };
            (
                SolveOutput { accepted: sol.accepted, components: None, counters },
                Algorithm::Naive,
                None,
            )
        }
        Algorithm::Component => {
            let (resolved, name) = resolve_tracker(opts.tracker, p, opts.unweighted, g)?;
            let n = g.vertex_count();
            let output = match resolved {
                TrackerChoice::General => {
                    solve_with_tracker(g, p, &mut GeneralTracker::new(n, p), false)
                }
                TrackerChoice::Disjoint => {
                    solve_with_tracker(g, p, &mut DisjointTracker::new(n, p), false)
                }
                TrackerChoice::Unweighted => {
                    solve_with_tracker(g, p, &mut UnweightedTracker::new(n, p), true)
                }
                TrackerChoice::Auto => unreachable!(),
            };
            (output, Algorithm::Component, Some(name))
        }
        Algorithm::Oracle => {
            let accepted = oracle::solve_greedy_oracle(g, p)?;
            let components = if opts.components {
                let sub = WeightedMultigraph::new(
                    g.vertex_count(),
                    accepted
                        .iter()
                        .map(|&i| {
                            let e = g.edge(i);
                            (e.u, e.v, e.weight)
                        })
                        .collect(),
                )
                .expect("accepted edges form a valid graph");
                Some(oracle::enumerate_components(&sub, p)?)
            } else {
                None
            };
            (
                SolveOutput { accepted, components, counters: Counters::default() },
                Algorithm::Oracle,
                None,
            )
        }
    };

    let edges = output
        .accepted
        .iter()
        .map(|&index| {
            let e = g.edge(index);
            ReportEdge { index, u: e.u, v: e.v, weight: e.weight }
        })
        .collect();
    Ok(RunReport {
        n: g.vertex_count(),
        m: g.edge_count(),
        k: p.k(),
        ell: p.ell(),
        accepted: output.accepted.len(),
        weight: g.total_weight(&output.accepted),
        edges,
        components: if opts.components { output.components } else { None },
        stats: opts.stats.then(|| StatsReport {
            algorithm: algorithm.name(),
            tracker: tracker_name,
            search_touches: output.counters.search_touches,
            reversals: output.counters.reversals,
            matrix_writes: output.counters.matrix_writes,
            merge_steps: output.counters.merge_steps,
        }),
    })
}

/// Sparse/tight/spanning checks via the component solver on unit weights.
/// Acceptance is order-independent, so the solver accepts all `m` edges
/// exactly when the input itself is sparse.
pub fn check(
    g: &WeightedMultigraph,
    p: SparsityParams,
    kind: CheckKind,
) -> Result<CheckReport, RunError> {
    let unit = g.with_unit_weights();
    let n = unit.vertex_count();
    let rank = if p.ell() <= p.k() {
        let mut tracker = DisjointTracker::new(n, p);
        ComponentGame::new(&unit, p, &mut tracker).run().accepted.len()
    } else {
        let mut tracker = GeneralTracker::new(n, p);
        ComponentGame::new(&unit, p, &mut tracker).run().accepted.len()
    };
    let result = match kind {
        CheckKind::Sparse => rank == unit.edge_count(),
        CheckKind::Tight => rank == unit.edge_count() && unit.edge_count() == p.max_edges(n),
        CheckKind::Spanning => rank == p.max_edges(n),
    };
    Ok(CheckReport {
        n,
        m: g.edge_count(),
        k: p.k(),
        ell: p.ell(),
        check: kind.name(),
        result,
    })
}

pub fn render_run_text(report: &RunReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("n {}\n", report.n));
    out.push_str(&format!("m {}\n", report.m));
    out.push_str(&format!("k {}\n", report.k));
    out.push_str(&format!("ell {}\n", report.ell));
    out.push_str(&format!("accepted {}\n", report.accepted));
    out.push_str(&format!("weight {}\n", report.weight));
    for e in &report.edges {
        out.push_str(&format!("edge {} {} {} {}\n", e.index, e.u, e.v, e.weight));
    }
    if let Some(components) = &report.components {
        for c in components {
            let ids: Vec<String> = c.iter().map(|v| v.to_string()).collect();
            out.push_str(&format!("component {}\n", ids.join(" ")));
        }
    }
    if let Some(stats) = &report.stats {
        out.push_str(&format!("algorithm {}\n", stats.algorithm));
        if let Some(tracker) = stats.tracker {
            out.push_str(&format!("tracker {}\n", tracker));
        }
        out.push_str(&format!("stat search_touches {}\n", stats.search_touches));
        out.push_str(&format!("stat reversals {}\n", stats.reversals));
        out.push_str(&format!("stat matrix_writes {}\n", stats.matrix_writes));
        out.push_str(&format!("stat merge_steps {}\n", stats.merge_steps));
    }
    out
}

pub fn render_check_text(report: &CheckReport) -> String {
    format!(
        "{}: {}\n",
        report.check,
        if report.result { "yes" } else { "no" }
    )
}
