use lmc::ball::{induced_closed_hood, Ball};
use lmc::graph::{edge_cut, max_block_weight, Duplicates};
use lmc::model::{build_model, ModelKind, MotifModel};
use lmc::motif::enumerate_triangles;
use lmc::partition::{bipartition, bipartition_graph, enforce_consistency, PartitionerConfig};
use lmc::{Bipartition, Graph};
use lmc_oracle::{exhaustive_min_cut, random_graph};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn model_of(g: &Graph, members: Vec<usize>, kind: ModelKind) -> MotifModel {
    let ball = Ball {
        seed: members[0],
        layers: 0,
        frontier_complete: false,
        closed_hood: induced_closed_hood(g, &members),
        members,
    };
    let mc = enumerate_triangles(&ball.closed_hood.graph, &ball.closed_hood.s_mask());
    build_model(kind, &ball, &mc, g.n() as i64)
}

/// Model over a random ball of `s` nodes in a random graph.
fn random_model(rng: &mut ChaCha8Rng, n: usize, s: usize, kind: ModelKind) -> MotifModel {
    let p = rng.gen_range(0.2..0.5);
    let g = random_graph(n, p, rng);
    let members = rand::seq::index::sample(rng, n, s).into_vec();
    model_of(&g, members, kind)
}

fn assert_valid(model: &MotifModel, p: &Bipartition) {
    let l_max = max_block_weight(model.n() as i64, p.epsilon) as usize;
    let [a, b] = p.block_sizes();
    assert!(a <= l_max && b <= l_max, "sizes {a}/{b} exceed {l_max}");
    assert_eq!(p.cut, model.cut(&p.block));
}

#[test]
fn two_triangles_with_a_bridge() {
    let edges = [(0, 1, 1), (1, 2, 1), (0, 2, 1), (3, 4, 1), (4, 5, 1), (3, 5, 1), (2, 3, 1)];
    let g = Graph::from_edges(6, edges, Duplicates::KeepFirst);
    let p = bipartition_graph(&g, &PartitionerConfig::with_epsilon(0.03, 7)).unwrap();
    assert_eq!(p.cut, 1);
    assert_eq!(p.block_sizes(), [3, 3]);
    let opt = exhaustive_min_cut(6, 3, |b| edge_cut(&g, b)).unwrap();
    assert_eq!(opt, 1);
}

#[test]
fn single_edge() {
    let g = Graph::from_edges(2, [(0, 1, 4)], Duplicates::KeepFirst);
    let p = bipartition_graph(&g, &PartitionerConfig::with_epsilon(0.1, 0)).unwrap();
    assert_eq!(p.cut, 4);
    assert_eq!(p.block_sizes(), [1, 1]);
}

#[test]
fn single_node_is_rejected() {
    let g = Graph::from_edges(1, [], Duplicates::KeepFirst);
    assert!(bipartition_graph(&g, &PartitionerConfig::default()).is_err());
}

#[test]
fn beats_random_balanced_partitions() {
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    let mut tried = 0;
    while tried < 10 {
        let model = random_model(&mut rng, 24, 19, ModelKind::Graph);
        if model.n() != 20 || !model.has_motifs() {
            continue;
        }
        tried += 1;
        let ours = bipartition(&model, &PartitionerConfig::with_epsilon(0.5, tried)).unwrap();
        assert_valid(&model, &ours);
        let l_max = max_block_weight(20, 0.5) as usize;
        let mut best_random = i64::MAX;
        let mut nodes: Vec<usize> = (0..20).collect();
        for _ in 0..1000 {
            nodes.shuffle(&mut rng);
            let k = rng.gen_range(20 - l_max..=l_max);
            let mut block = vec![0u8; 20];
            for &v in &nodes[..k] {
                block[v] = 1;
            }
            best_random = best_random.min(model.cut(&block));
        }
        assert!(ours.cut <= best_random, "partitioner {} vs random {best_random}", ours.cut);
    }
}

#[test]
fn near_optimal_on_small_models() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (mut total, mut close) = (0, 0);
    for i in 0..100u64 {
        let kind = if i % 2 == 0 { ModelKind::Graph } else { ModelKind::Hypergraph };
        let s = rng.gen_range(3..=15);
        let model = random_model(&mut rng, 20, s, kind);
        let eps = rng.gen_range(0.05..0.9);
        let p = bipartition(&model, &PartitionerConfig::with_epsilon(eps, i)).unwrap();
        assert_valid(&model, &p);
        let l_max = max_block_weight(model.n() as i64, eps) as usize;
        let opt = exhaustive_min_cut(model.n(), l_max, |b| model.cut(b)).unwrap();
        assert!(p.cut >= opt);
        total += 1;
        if 2 * p.cut <= 3 * opt {
            close += 1;
        }
    }
    assert!(close * 10 >= total * 9, "{close}/{total} within 1.5x of optimum");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn consistency_moves_at_most_the_seed(seed: u64, s in 2usize..20) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let kind = if seed % 2 == 0 { ModelKind::Graph } else { ModelKind::Hypergraph };
        let model = random_model(&mut rng, 30, s, kind);
        let block: Vec<u8> = (0..model.n()).map(|_| rng.gen_range(0..2)).collect();
        let p = Bipartition { cut: model.cut(&block), block, epsilon: 0.5 };
        let fixed = enforce_consistency(&model, p.clone());
        prop_assert_ne!(fixed.block[model.seed_local], fixed.block[model.t_local]);
        let changed: Vec<usize> = (0..model.n()).filter(|&v| fixed.block[v] != p.block[v]).collect();
        prop_assert!(changed.len() <= 1);
        prop_assert!(changed.iter().all(|&v| v == model.seed_local));
        prop_assert_eq!(fixed.cut, model.cut(&fixed.block));
    }

    #[test]
    fn output_is_balanced_and_cut_is_exact(seed: u64, s in 2usize..40, eps in 0.01f64..1.0) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let kind = if seed % 2 == 0 { ModelKind::Graph } else { ModelKind::Hypergraph };
        let model = random_model(&mut rng, 60, s, kind);
        let p = bipartition(&model, &PartitionerConfig::with_epsilon(eps, seed)).unwrap();
        assert_valid(&model, &p);
        prop_assert!(p.both_blocks_nonempty());
    }
}
