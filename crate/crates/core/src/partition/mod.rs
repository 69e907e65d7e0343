//! Multilevel two-way partitioner for the graph and hypergraph models.
//!
//! Coarsening contracts matched node pairs until the level is small or stops
//! shrinking, the coarsest level is split by repeated BFS region growing, and
//! every level on the way back up is refined with boundary FM. Cut is edge-cut
//! for graphs and cut-net for hypergraphs; balance is
//! `c(V_i) <= (1 + epsilon) * ceil(c(V) / 2)`.

mod fm;
mod graph;
mod hyper;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{max_block_weight, Bipartition, Graph, Hypergraph, Weight};
use crate::model::{ModelStructure, MotifModel};

pub(crate) use fm::{fm_refine, hill_climb, GainTracker};

#[derive(Clone, Debug)]
pub struct PartitionerConfig {
    pub epsilon: f64,
    /// Coarsening stops once a level has at most this many nodes.
    pub coarsening_limit: usize,
    pub init_tries: usize,
    pub fm_max_passes: usize,
    pub rng_seed: u64,
}

impl Default for PartitionerConfig {
    fn default() -> Self {
        PartitionerConfig {
            epsilon: 0.03,
            coarsening_limit: 60,
            init_tries: 10,
            fm_max_passes: 5,
            rng_seed: 0,
        }
    }
}

impl PartitionerConfig {
    pub fn with_epsilon(epsilon: f64, rng_seed: u64) -> Self {
        PartitionerConfig {
            epsilon,
            rng_seed,
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.epsilon.is_nan() || self.epsilon <= 0.0 {
            return Err(Error::Config("epsilon must be positive".into()));
        }
        if self.coarsening_limit < 4 {
            return Err(Error::Config("coarsening limit must be at least 4".into()));
        }
        if self.init_tries == 0 {
            return Err(Error::Config("at least one initial partitioning try is required".into()));
        }
        Ok(())
    }
}

/// One level of the multilevel hierarchy.
pub(crate) trait Level: Sized {
    type Gains<'a>: GainTracker
    where
        Self: 'a;

    fn n(&self) -> usize;
    fn node_weight(&self, v: usize) -> Weight;
    fn total_weight(&self) -> Weight;
    fn for_each_neighbor(&self, v: usize, f: impl FnMut(usize));
    /// Contracts a matching built by visiting nodes in `order`. Returns the
    /// coarse level and the fine-to-coarse node map.
    fn coarsen(&self, order: &[usize], max_node_weight: Weight) -> (Self, Vec<usize>);
    fn cut(&self, block: &[u8]) -> Weight;
    fn gains<'a>(&'a self, block: &[u8]) -> Self::Gains<'a>;
}

/// Splits the model into two blocks. All model nodes count with weight 1.
pub fn bipartition(model: &MotifModel, cfg: &PartitionerConfig) -> Result<Bipartition> {
    match &model.structure {
        ModelStructure::Graph(g) => bipartition_graph(g, cfg),
        ModelStructure::Hypergraph(h) => bipartition_hypergraph(h, cfg),
    }
}

/// Minimizes the edge-cut of a graph under the balance constraint, using the
/// graph's own node weights.
pub fn bipartition_graph(g: &Graph, cfg: &PartitionerConfig) -> Result<Bipartition> {
    multilevel(&graph::GraphLevel::new(g), cfg)
}

/// Minimizes the cut-net of a hypergraph under the balance constraint.
pub fn bipartition_hypergraph(h: &Hypergraph, cfg: &PartitionerConfig) -> Result<Bipartition> {
    multilevel(&hyper::HyperLevel::new(h), cfg)
}

/// Puts the seed on the side opposite to `t`. Only the seed may move.
pub fn enforce_consistency(model: &MotifModel, mut p: Bipartition) -> Bipartition {
    let (u, t) = (model.seed_local, model.t_local);
    if p.block[u] == p.block[t] {
        p.block[u] ^= 1;
        p.cut = model.cut(&p.block);
    }
    p
}

fn multilevel<L: Level>(fine: &L, cfg: &PartitionerConfig) -> Result<Bipartition> {
    cfg.validate()?;
    let n = fine.n();
    if n < 2 {
        return Err(Error::Config("cannot bipartition fewer than two nodes".into()));
    }
    let total = fine.total_weight();
    let l_max = max_block_weight(total, cfg.epsilon);
    if 2 * l_max < total {
        return Err(Error::BalanceInfeasible { limit: l_max, total });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.rng_seed);
    let max_node_weight = ((3 * total) / (2 * cfg.coarsening_limit as Weight)).max(1);

    let mut hierarchy: Vec<(L, Vec<usize>)> = Vec::new();
    loop {
        let current = hierarchy.last().map_or(fine, |(l, _)| l);
        if current.n() <= cfg.coarsening_limit {
            break;
        }
        let mut order: Vec<usize> = (0..current.n()).collect();
        order.shuffle(&mut rng);
        let (coarse, map) = current.coarsen(&order, max_node_weight);
        let shrunk_enough = (coarse.n() as f64) < 0.95 * current.n() as f64;
        let smaller = coarse.n() < current.n();
        if smaller {
            hierarchy.push((coarse, map));
        }
        if !shrunk_enough {
            break;
        }
    }

    let coarsest = hierarchy.last().map_or(fine, |(l, _)| l);
    let mut block = initial_partition(coarsest, l_max, cfg, &mut rng);

    for i in (0..hierarchy.len()).rev() {
        let finer = if i == 0 { fine } else { &hierarchy[i - 1].0 };
        let map = &hierarchy[i].1;
        block = map.iter().map(|&c| block[c]).collect();
        fm_refine(finer, &mut block, l_max, cfg.fm_max_passes);
    }
    hill_climb(fine, &mut block, l_max);

    let cut = fine.cut(&block);
    Ok(Bipartition {
        block,
        epsilon: cfg.epsilon,
        cut,
    })
}

fn initial_partition<L: Level>(
    level: &L,
    l_max: Weight,
    cfg: &PartitionerConfig,
    rng: &mut ChaCha8Rng,
) -> Vec<u8> {
    let mut best: Option<((Weight, Weight), Vec<u8>)> = None;
    for _ in 0..cfg.init_tries {
        let mut block = grow_region(level, rng);
        fm_refine(level, &mut block, l_max, cfg.fm_max_passes);
        let key = (fm::overload(level, &block, l_max), level.cut(&block));
        if best.as_ref().is_none_or(|(k, _)| key < *k) {
            best = Some((key, block));
        }
    }
    best.expect("at least one try").1
}

/// BFS region growing from a random node: block 0 is grown until it holds
/// half of the total weight. Disconnected levels restart from random
/// unvisited nodes.
fn grow_region<L: Level>(level: &L, rng: &mut ChaCha8Rng) -> Vec<u8> {
    let n = level.n();
    let target = (level.total_weight() + 1) / 2;
    let mut block = vec![1u8; n];
    let mut visited = vec![false; n];
    let mut restarts: Vec<usize> = (0..n).collect();
    restarts.shuffle(rng);
    let mut restarts = restarts.into_iter();
    let mut queue = std::collections::VecDeque::new();
    let start = rng.gen_range(0..n);
    visited[start] = true;
    queue.push_back(start);
    let mut weight = 0;
    let mut grown = 0usize;
    while weight < target && grown + 1 < n {
        let v = match queue.pop_front() {
            Some(v) => v,
            None => match restarts.by_ref().find(|&v| !visited[v]) {
                Some(v) => {
                    visited[v] = true;
                    v
                }
                None => break,
            },
        };
        block[v] = 0;
        weight += level.node_weight(v);
        grown += 1;
        level.for_each_neighbor(v, |w| {
            if !visited[w] {
                visited[w] = true;
                queue.push_back(w);
            }
        });
    }
    if grown == 0 {
        block[start] = 0;
    }
    block
}
