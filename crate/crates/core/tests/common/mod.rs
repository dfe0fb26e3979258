#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use powspec::groups::LabeledGraph;
use powspec::UniversalParams;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `k / 8` with `|k| <= 32`: sums and small multiples stay exact in binary64.
pub fn dyadic(rng: &mut ChaCha8Rng) -> f64 {
    rng.gen_range(-32i32..=32) as f64 / 8.0
}

pub fn random_params(rng: &mut ChaCha8Rng) -> UniversalParams {
    let mut alpha = dyadic(rng);
    while alpha == 0.0 {
        alpha = dyadic(rng);
    }
    UniversalParams::new(alpha, dyadic(rng), dyadic(rng), dyadic(rng)).unwrap()
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, density: f64) -> LabeledGraph {
    let mut g = LabeledGraph::unlabeled(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(density) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Elementwise comparison of two descending lists.
pub fn max_gap(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len(), "length mismatch");
    a.iter().zip(b).fold(0.0, |m, (x, y)| m.max((x - y).abs()))
}
