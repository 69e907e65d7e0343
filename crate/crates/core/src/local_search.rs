//! Label-propagation local search on the graph model that moves single
//! nodes across the cut whenever that lowers motif conductance.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Bipartition, Graph, Weight};
use crate::model::MotifModel;
use crate::scalar::MotifConductance;

/// Moves between from-scratch recomputations in debug builds.
const AUDIT_INTERVAL: usize = 64;

#[derive(Clone, Debug)]
pub struct LabelPropOutcome {
    pub partition: Bipartition,
    pub phi: MotifConductance,
    pub rounds: usize,
    /// True if the search stopped at a local optimum rather than the round
    /// cap: the last round visited every movable node and moved none.
    pub converged: bool,
}

struct State<'a> {
    graph: &'a Graph,
    volume: &'a [Weight],
    side: u8,
    cut: Weight,
    cluster_volume: Weight,
}

impl State<'_> {
    fn phi(&self) -> MotifConductance {
        MotifConductance::new(self.cut, self.cluster_volume)
    }

    /// `(cut, cluster volume)` after moving `v` to the other block.
    fn after_move(&self, v: usize, block: &[u8]) -> (Weight, Weight) {
        let own = block[v];
        let (mut same, mut other) = (0, 0);
        for (w, c) in self.graph.edges_of(v) {
            if block[w] == own {
                same += c;
            } else {
                other += c;
            }
        }
        let cut = self.cut - other + same;
        let vol = if own == self.side {
            self.cluster_volume - self.volume[v]
        } else {
            self.cluster_volume + self.volume[v]
        };
        (cut, vol)
    }
}

/// Refines a consistent partition of a graph-kind model. Each round visits
/// all nodes except the seed and `t` in a fresh random order and moves a
/// node when that strictly lowers motif conductance, or leaves it unchanged
/// and a fair coin says so. Rounds without any strict improvement are
/// followed by one round with coin moves disabled; the search stops once a
/// round moves nothing, or after `max_rounds` rounds.
///
/// Panics if the model is not graph-kind or the partition is inconsistent.
pub fn label_prop_refine(
    model: &MotifModel,
    p: &Bipartition,
    max_rounds: usize,
    rng_seed: u64,
) -> LabelPropOutcome {
    let graph = model
        .as_graph()
        .expect("label propagation runs on the graph model");
    let (u, t) = (model.seed_local, model.t_local);
    let mut block = p.block.clone();
    assert_ne!(block[u], block[t], "partition must be consistent");
    let side = block[u];
    let cluster_volume = (0..model.n())
        .filter(|&v| block[v] == side)
        .map(|v| model.volume[v])
        .sum();
    let mut state = State {
        graph,
        volume: &model.volume,
        side,
        cut: p.cut,
        cluster_volume,
    };
    debug_assert_eq!(state.cut, model.cut(&block));

    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let mut order: Vec<usize> = (0..model.n()).filter(|&v| v != u && v != t).collect();
    let mut rounds = 0;
    let mut converged = false;
    let mut allow_ties = true;
    let mut moves = 0usize;

    while rounds < max_rounds {
        rounds += 1;
        order.shuffle(&mut rng);
        let mut strict = 0usize;
        let mut ties = 0usize;
        for &v in &order {
            let (cut, vol) = state.after_move(v, &block);
            let current = state.phi();
            let candidate = MotifConductance::new(cut, vol);
            let take = if candidate < current {
                strict += 1;
                true
            } else if candidate == current && allow_ties && rng.gen_bool(0.5) {
                ties += 1;
                true
            } else {
                false
            };
            if take {
                block[v] ^= 1;
                state.cut = cut;
                state.cluster_volume = vol;
                moves += 1;
                if cfg!(debug_assertions) && moves.is_multiple_of(AUDIT_INTERVAL) {
                    assert_eq!(state.cut, model.cut(&block));
                    let vol: Weight = (0..model.n())
                        .filter(|&v| block[v] == side)
                        .map(|v| model.volume[v])
                        .sum();
                    assert_eq!(state.cluster_volume, vol);
                }
            }
        }
        if strict == 0 && ties == 0 {
            converged = true;
            break;
        }
        allow_ties = strict > 0;
    }

    let phi = state.phi();
    LabelPropOutcome {
        partition: Bipartition {
            block,
            epsilon: p.epsilon,
            cut: state.cut,
        },
        phi,
        rounds,
        converged,
    }
}
