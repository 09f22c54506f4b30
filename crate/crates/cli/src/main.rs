use std::fs::File;
use std::io::{self, BufRead, BufReader, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use kl_sparse::SparsityParams;
use kl_sparse_cli::bench::{run_bench, BenchConfig};
use kl_sparse_cli::io::parse_edge_list;
use kl_sparse_cli::report::{
    check, render_check_text, render_run_text, run, Algorithm, CheckKind, RunOptions,
    TrackerChoice,
};

/// Maximum-weight (k,l)-sparse subgraph solver.
///
/// Reads an edge list (first non-comment line "n m", then m lines "u v [w]"
/// with 0-based vertex ids, '#' starts a comment) and prints the accepted
/// edges of a maximum-weight (k,l)-sparse subgraph, optionally with the final
/// tight components and work counters.
///
/// With --bench, ignores the input and times the solvers on random
/// multigraphs: for each size n, m = density * n edges pick their endpoints
/// independently and uniformly (loops resampled), with weights uniform in
/// [0,1). The sweep is deterministic for a fixed --seed.
#[derive(Debug, Parser)]
#[command(name = "klsparse", version)]
struct Cli {
    /// Input edge-list file; '-' or omitted reads stdin
    input: Option<PathBuf>,

    /// Sparsity parameter k (>= 1)
    #[arg(long)]
    k: usize,

    /// Sparsity parameter ell, 0 <= ell < 2k
    #[arg(long)]
    ell: usize,

    /// Solver to run; --bench defaults to both naive and component
    #[arg(long, value_enum)]
    algorithm: Option<Algorithm>,

    /// Component tracker (component algorithm only)
    #[arg(long, value_enum, default_value_t = TrackerChoice::Auto)]
    tracker: TrackerChoice,

    /// Ignore weights: solve with unit weights, processing edges grouped by
    /// first endpoint with the unweighted tracker
    #[arg(long)]
    unweighted: bool,

    /// Print the final tight components
    #[arg(long)]
    components: bool,

    /// Print work counters
    #[arg(long)]
    stats: bool,

    /// Check a property of the input instead of solving
    #[arg(long, value_enum)]
    check: Option<CheckKind>,

    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,

    /// Run the benchmark sweep instead of solving an input
    #[arg(long)]
    bench: bool,

    /// RNG seed for --bench
    #[arg(long, default_value_t = 1)]
    seed: u64,

    /// Comma-separated vertex counts for --bench
    #[arg(long, value_delimiter = ',', default_value = "1000,2000,4000")]
    sizes: Vec<usize>,

    /// Comma-separated edge densities (m/n) for --bench
    #[arg(long, value_delimiter = ',', default_value = "8")]
    densities: Vec<usize>,
}

fn read_input(path: &Option<PathBuf>) -> io::Result<Box<dyn BufRead>> {
    match path {
        Some(p) if p.as_os_str() != "-" => Ok(Box::new(BufReader::new(File::open(p)?))),
        _ => {
            let mut buf = String::new();
            io::stdin().read_to_string(&mut buf)?;
            Ok(Box::new(io::Cursor::new(buf)))
        }
    }
}

fn real_main() -> Result<(), String> {
    let cli = Cli::parse();
    let params =
        SparsityParams::new(cli.k, cli.ell).map_err(|e| e.to_string())?;

    if cli.bench {
        let config = BenchConfig {
            params,
            sizes: cli.sizes.clone(),
            densities: cli.densities.clone(),
            seed: cli.seed,
            algorithms: match cli.algorithm {
                Some(a) => vec![a],
                None => vec![Algorithm::Naive, Algorithm::Component],
            },
            tracker: cli.tracker,
            unweighted: cli.unweighted,
        };
        return run_bench(&config, &mut io::stdout().lock()).map_err(|e| e.to_string());
    }

    let reader = read_input(&cli.input).map_err(|e| format!("cannot read input: {e}"))?;
    let graph = parse_edge_list(reader).map_err(|e| e.to_string())?;

    if let Some(kind) = cli.check {
        let report = check(&graph, params, kind).map_err(|e| e.to_string())?;
        if cli.json {
            println!("{}", serde_json::to_string_pretty(&report).unwrap());
        } else {
            print!("{}", render_check_text(&report));
        }
        return Ok(());
    }

    let opts = RunOptions {
        params,
        algorithm: cli.algorithm.unwrap_or(Algorithm::Component),
        tracker: cli.tracker,
        unweighted: cli.unweighted,
        components: cli.components,
        stats: cli.stats,
    };
    let report = run(&graph, &opts).map_err(|e| e.to_string())?;
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        print!("{}", render_run_text(&report));
    }
    Ok(())
}

fn main() -> ExitCode {
    match real_main() {
        Ok(()) => ExitCode::SUCCESS,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::FAILURE
        }
    }
}
