use lmc::ball::grow_ball;
use lmc_oracle::{adjacency_matrix, bfs_distances, random_graph};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #[test]
    fn ball_is_the_bfs_radius(
        n in 1usize..60,
        p in 0.02f64..0.3,
        graph_seed: u64,
        layers in 1usize..5,
        seed_pick: usize,
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(graph_seed);
        let g = random_graph(n, p, &mut rng);
        let seed = seed_pick % n;
        let ball = grow_ball(&g, seed, layers, None);
        let dist = bfs_distances(&g, seed);
        let mut expected: Vec<usize> = (0..n).filter(|&v| dist[v] <= layers).collect();
        let mut got = ball.members.clone();
        got.sort_unstable();
        expected.sort_unstable();
        prop_assert_eq!(got, expected);
        prop_assert_eq!(ball.members[0], seed);

        let reachable = dist.iter().filter(|&&d| d != usize::MAX).count();
        prop_assert_eq!(ball.frontier_complete, ball.len() == reachable);
    }

    #[test]
    fn minimum_size_adds_whole_layers(
        n in 1usize..80,
        p in 0.02f64..0.15,
        graph_seed: u64,
        min in 1usize..60,
        seed_pick: usize,
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(graph_seed);
        let g = random_graph(n, p, &mut rng);
        let seed = seed_pick % n;
        let ball = grow_ball(&g, seed, 1, Some(min));
        let dist = bfs_distances(&g, seed);
        let depth = ball.layers;
        let within = |r: usize| dist.iter().filter(|&&d| d <= r).count();
        prop_assert_eq!(ball.len(), within(depth));
        // Stops at the first depth >= 1 that is large enough or exhausts the component.
        let reachable = dist.iter().filter(|&&d| d != usize::MAX).count();
        prop_assert!(ball.len() >= min || ball.len() == reachable);
        if depth > 1 {
            prop_assert!(within(depth - 1) < min);
        }
    }

    #[test]
    fn closed_hood_is_induced(
        n in 1usize..50,
        p in 0.05f64..0.4,
        graph_seed: u64,
        seed_pick: usize,
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(graph_seed);
        let g = random_graph(n, p, &mut rng);
        let ball = grow_ball(&g, seed_pick % n, 1, None);
        let hood = &ball.closed_hood;
        let adj = adjacency_matrix(&g);
        let l2g = &hood.local_to_global;
        prop_assert_eq!(hood.s_len, ball.len());
        prop_assert_eq!(&l2g[..hood.s_len], &ball.members[..]);
        let boundary = &l2g[hood.s_len..];
        prop_assert!(boundary.windows(2).all(|w| w[0] < w[1]));
        for &b in boundary {
            prop_assert!(ball.members.iter().any(|&m| adj[m][b]));
        }
        for a in 0..l2g.len() {
            for b in 0..l2g.len() {
                prop_assert_eq!(hood.graph.has_edge(a, b), adj[l2g[a]][l2g[b]]);
            }
        }
    }
}
