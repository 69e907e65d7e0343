//! Head-to-head on a synthetic community graph: the partitioning method
//! should find clusters at least as good as the PageRank baseline.

use lmc::{appr_sweep, build_w, local_motif_cluster, ApprParams, ClusterConfig, Duplicates, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `k` communities of `size` nodes; dense inside, sparse across.
fn communities(k: usize, size: usize, p_in: f64, p_out: f64, rng: &mut ChaCha8Rng) -> Graph {
    let n = k * size;
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let p = if a / size == b / size { p_in } else { p_out };
            if rng.gen_bool(p) {
                edges.push((a, b, 1));
            }
        }
    }
    Graph::from_edges(n, edges, Duplicates::KeepFirst)
}

#[test]
fn partitioning_beats_baseline_on_communities() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let g = communities(25, 30, 0.3, 0.004, &mut rng);
    let w = build_w(&g);
    let cfg = ClusterConfig { beta: 20, ..Default::default() };
    let seeds = rand::seq::index::sample(&mut rng, g.n(), 12).into_vec();
    let (mut ours, mut base) = (0.0, 0.0);
    for &s in &seeds {
        ours += local_motif_cluster(&g, s, &cfg).unwrap().phi_mu();
        base += appr_sweep(&w, s, &ApprParams::<f64>::default()).phi_mu();
    }
    let k = seeds.len() as f64;
    let (ours, base) = (ours / k, base / k);
    assert!(ours <= base, "mean phi {ours:.4} vs baseline {base:.4}");
    assert!(ours < 0.2, "mean phi {ours:.4}");
}
