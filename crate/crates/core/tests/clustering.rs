use lmc::audit::global_motif_cut;
use lmc::{enumerate_triangles, local_motif_cluster, ClusterConfig, Graph, ModelKind, MotifConductance};
use lmc_oracle::{brute_triangles, cliques, mask, motif_count, random_graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn small_cfg(kind: ModelKind, rng_seed: u64) -> ClusterConfig {
    ClusterConfig {
        reps_alpha: 2,
        beta: 8,
        model_kind: kind,
        rng_seed,
        min_ball_size: Some(20),
        ..Default::default()
    }
}

/// Checks a reported result against a whole-graph recount.
fn check_against_recount(g: &Graph, seed: usize, cfg: &ClusterConfig) {
    let r = local_motif_cluster(g, seed, cfg).unwrap();
    assert!(r.cluster.contains(&seed));
    assert!(r.cluster.windows(2).all(|w| w[0] < w[1]));
    let tris = brute_triangles(g);
    let count = motif_count(&tris, &mask(g.n(), &r.cluster));
    if r.degenerate {
        assert_eq!(r.phi, MotifConductance::SENTINEL);
        return;
    }
    assert_eq!(r.phi, MotifConductance::new(count.cut as i64, count.inside as i64));
    let all = enumerate_triangles(g, &vec![true; g.n()]);
    let audit = global_motif_cut(g, &all, &r.cluster);
    assert_eq!((audit.cut, audit.inside, audit.outside), (count.cut, count.inside, count.outside));
}

#[test]
fn results_match_whole_graph_recount() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for i in 0..40u64 {
        let n = rng.gen_range(20..120);
        let g = random_graph(n, rng.gen_range(0.03..0.2), &mut rng);
        let kind = if i % 2 == 0 { ModelKind::Graph } else { ModelKind::Hypergraph };
        check_against_recount(&g, rng.gen_range(0..n), &small_cfg(kind, i));
    }
}

#[test]
fn planted_cliques_are_recovered() {
    let g = cliques(&[8, 8, 8], &[(7, 8), (15, 16), (0, 23)]);
    for kind in [ModelKind::Graph, ModelKind::Hypergraph] {
        for seed in [0, 9, 20] {
            let cfg = ClusterConfig {
                min_ball_size: None,
                first_layers: 2,
                reps_alpha: 1,
                beta: 20,
                model_kind: kind,
                ..Default::default()
            };
            let r = local_motif_cluster(&g, seed, &cfg).unwrap();
            let base = seed / 8 * 8;
            assert_eq!(r.cluster, (base..base + 8).collect::<Vec<_>>(), "{kind:?} seed {seed}");
            assert_eq!(r.phi_mu(), 0.0);
        }
    }
}

#[test]
fn same_config_same_cluster() {
    let g = random_graph(150, 0.08, &mut ChaCha8Rng::seed_from_u64(2));
    for kind in [ModelKind::Graph, ModelKind::Hypergraph] {
        let cfg = small_cfg(kind, 42);
        let a = local_motif_cluster(&g, 5, &cfg).unwrap();
        let b = local_motif_cluster(&g, 5, &cfg).unwrap();
        assert_eq!(a.cluster, b.cluster);
        assert_eq!(a.phi, b.phi);
    }
}

#[test]
fn more_repetitions_never_hurt() {
    let g = random_graph(100, 0.1, &mut ChaCha8Rng::seed_from_u64(6));
    let few = ClusterConfig { beta: 3, ..small_cfg(ModelKind::Graph, 0) };
    let many = ClusterConfig { beta: 12, ..small_cfg(ModelKind::Graph, 0) };
    let a = local_motif_cluster(&g, 0, &few).unwrap();
    let b = local_motif_cluster(&g, 0, &many).unwrap();
    assert!(b.phi <= a.phi);
}

#[test]
fn degenerate_seeds() {
    // Node 3 is isolated, nodes 4..8 form a separate path.
    let edges = [(0, 1, 1), (1, 2, 1), (0, 2, 1), (4, 5, 1), (5, 6, 1), (6, 7, 1)];
    let g = Graph::from_edges(8, edges, lmc::Duplicates::KeepFirst);
    for seed in [3, 6] {
        let r = local_motif_cluster(&g, seed, &ClusterConfig::default()).unwrap();
        assert!(r.degenerate);
        assert_eq!(r.cluster, vec![seed]);
        assert_eq!(r.phi_mu(), 1.0);
    }
}

#[test]
fn zero_time_limit_still_runs_one_partitioning() {
    let g = random_graph(80, 0.15, &mut ChaCha8Rng::seed_from_u64(9));
    let cfg = ClusterConfig {
        time_limit: std::time::Duration::ZERO,
        ..small_cfg(ModelKind::Graph, 0)
    };
    let r = local_motif_cluster(&g, 0, &cfg).unwrap();
    assert!(r.timed_out);
    assert!(!r.degenerate);
}

#[test]
fn invalid_config_is_rejected() {
    let g = cliques(&[4], &[]);
    let cfg = ClusterConfig { epsilon_range: (0.5, 0.1), ..Default::default() };
    assert!(local_motif_cluster(&g, 0, &cfg).is_err());
}
