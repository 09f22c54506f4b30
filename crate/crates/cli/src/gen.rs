//! Reproducible random multigraph generation for benchmarks and randomized
//! tests.
//!
//! Each edge picks its endpoints independently and uniformly, resampling
//! loops, so parallel edges occur naturally. The RNG is a seeded ChaCha
//! stream: the same seed yields the same graph on every platform.

use kl_sparse::WeightedMultigraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_pairs(n: usize, m: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    assert!(n >= 2 || m == 0, "need at least two vertices to place an edge");
    (0..m)
        .map(|_| loop {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u != v {
                return (u, v);
            }
        })
        .collect()
}

/// Random multigraph with uniform weights in `[0, 1)`.
pub fn random_multigraph(n: usize, m: usize, seed: u64) -> WeightedMultigraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges = random_pairs(n, m, &mut rng)
        .into_iter()
        .map(|(u, v)| (u, v, rng.gen::<f64>()))
        .collect();
    WeightedMultigraph::new(n, edges).unwrap()
}

/// Random multigraph with integer-valued weights drawn from `0..levels`,
/// guaranteeing duplicate weights and exact floating-point sums.
pub fn random_multigraph_quantized(
    n: usize,
    m: usize,
    levels: u32,
    seed: u64,
) -> WeightedMultigraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges = random_pairs(n, m, &mut rng)
        .into_iter()
        .map(|(u, v)| (u, v, rng.gen_range(0..levels) as f64))
        .collect();
    WeightedMultigraph::new(n, edges).unwrap()
}
