use lmc::ball::{induced_closed_hood, Ball};
use lmc::local_search::label_prop_refine;
use lmc::model::{build_graph_model, eval_motif_conductance, MotifModel};
use lmc::motif::enumerate_triangles;
use lmc::partition::{bipartition, enforce_consistency, PartitionerConfig};
use lmc::Bipartition;
use lmc_oracle::{random_consistent_block, random_graph};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_model(rng: &mut ChaCha8Rng) -> MotifModel {
    let n = rng.gen_range(10..60);
    let g = random_graph(n, rng.gen_range(0.1..0.4), rng);
    let s = rng.gen_range(2..n.min(30));
    let members = rand::seq::index::sample(rng, n, s).into_vec();
    let ball = Ball {
        seed: members[0],
        layers: 0,
        frontier_complete: false,
        closed_hood: induced_closed_hood(&g, &members),
        members,
    };
    let mc = enumerate_triangles(&ball.closed_hood.graph, &ball.closed_hood.s_mask());
    build_graph_model(&ball, &mc, n as i64)
}

/// True if no single movable node can flip to strictly lower conductance.
fn is_flip_optimal(model: &MotifModel, block: &[u8]) -> bool {
    let current = eval_motif_conductance(model, block);
    let mut b = block.to_vec();
    (0..model.n())
        .filter(|&v| v != model.seed_local && v != model.t_local)
        .all(|v| {
            b[v] ^= 1;
            let phi = eval_motif_conductance(model, &b);
            b[v] ^= 1;
            phi >= current
        })
}

fn start(model: &MotifModel, rng: &mut ChaCha8Rng, from_partitioner: bool) -> Bipartition {
    if from_partitioner {
        let p = bipartition(model, &PartitionerConfig::with_epsilon(rng.gen_range(0.05..0.9), rng.gen())).unwrap();
        enforce_consistency(model, p)
    } else {
        let block = random_consistent_block(model.n(), model.seed_local, model.t_local, rng);
        Bipartition { cut: model.cut(&block), block, epsilon: 0.5 }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn never_worsens_and_reports_exact_values(seed: u64, rounds in 1usize..6, from_partitioner: bool) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let model = random_model(&mut rng);
        let p = start(&model, &mut rng, from_partitioner);
        let before = eval_motif_conductance(&model, &p.block);
        let out = label_prop_refine(&model, &p, rounds, rng.gen());
        prop_assert!(out.phi <= before);
        prop_assert_eq!(out.phi, eval_motif_conductance(&model, &out.partition.block));
        prop_assert_eq!(out.partition.cut, model.cut(&out.partition.block));
        prop_assert_eq!(out.partition.block[model.seed_local], p.block[model.seed_local]);
        prop_assert_eq!(out.partition.block[model.t_local], p.block[model.t_local]);
        prop_assert!(out.rounds <= rounds);
        if out.converged {
            prop_assert!(is_flip_optimal(&model, &out.partition.block));
        }
    }
}

#[test]
fn converges_to_flip_optimum_without_cap() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let model = random_model(&mut rng);
        let p = start(&model, &mut rng, false);
        let out = label_prop_refine(&model, &p, usize::MAX, rng.gen());
        assert!(out.converged);
        assert!(is_flip_optimal(&model, &out.partition.block));
    }
}

#[test]
fn same_seed_same_outcome() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let model = random_model(&mut rng);
    let p = start(&model, &mut rng, false);
    let a = label_prop_refine(&model, &p, 3, 99);
    let b = label_prop_refine(&model, &p, 3, 99);
    assert_eq!(a.partition, b.partition);
    assert_eq!(a.phi, b.phi);
}

#[test]
fn zero_rounds_is_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let model = random_model(&mut rng);
    let p = start(&model, &mut rng, false);
    let out = label_prop_refine(&model, &p, 0, 1);
    assert_eq!(out.partition.block, p.block);
    assert_eq!(out.phi, eval_motif_conductance(&model, &p.block));
    assert!(!out.converged);
}
