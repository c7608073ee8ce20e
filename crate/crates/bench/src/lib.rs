//! Workload generators shared by the benchmarks.

use lse_core::{Graph, GraphBuilder};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Preferential-attachment graph: each new node links to `m` existing nodes
/// chosen with probability proportional to their degree.
pub fn preferential_attachment(n: usize, m: usize, seed: u64) -> Graph {
    assert!(n > m && m >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut builder = GraphBuilder::new();
    // every edge endpoint, so uniform picks are degree-weighted
    let mut endpoints: Vec<usize> = Vec::new();
    for i in 0..=m {
        for j in 0..i {
            builder.add_edge(&j.to_string(), &i.to_string());
            endpoints.extend([i, j]);
        }
    }
    for v in m + 1..n {
        let mut targets = Vec::with_capacity(m);
        while targets.len() < m {
            let t = endpoints[rng.gen_range(0..endpoints.len())];
            if !targets.contains(&t) {
                targets.push(t);
            }
        }
        for t in targets {
            builder.add_edge(&v.to_string(), &t.to_string());
            endpoints.extend([v, t]);
        }
    }
    builder.build().expect("non-empty graph")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_is_deterministic() {
        let a = preferential_attachment(200, 3, 7);
        let b = preferential_attachment(200, 3, 7);
        assert_eq!(a, b);
        assert_eq!(a.node_count(), 200);
        assert_eq!(a.edge_count(), 6 + 196 * 3);
    }
}
