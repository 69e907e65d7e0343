//! The end-to-end local clustering loop: several balls around the seed,
//! several randomized partitions per ball, best motif conductance wins.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ball::grow_ball;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::local_search::label_prop_refine;
use crate::model::{build_model, eval_motif_conductance, ModelKind};
use crate::motif::enumerate_triangles;
use crate::partition::{bipartition, enforce_consistency, PartitionerConfig};
use crate::scalar::MotifConductance;

#[derive(Clone, Debug)]
pub struct ClusterConfig {
    /// Number of balls built around the seed.
    pub reps_alpha: usize,
    /// Partitionings per ball.
    pub beta: usize,
    pub model_kind: ModelKind,
    /// Imbalance is drawn uniformly from `[lo, hi]` for every partitioning.
    pub epsilon_range: (f64, f64),
    pub lp_max_rounds: usize,
    pub time_limit: Duration,
    pub rng_seed: u64,
    /// BFS depth of the first ball; ball `i` (1-based) uses
    /// `first_layers + i - 1` layers.
    pub first_layers: usize,
    /// The last ball grows whole layers until it has at least this many
    /// nodes. `None` disables the growth.
    pub min_ball_size: Option<usize>,
}

impl Default for ClusterConfig {
    fn default() -> Self {
        ClusterConfig {
            reps_alpha: 3,
            beta: 80,
            model_kind: ModelKind::Graph,
            epsilon_range: (0.05, 0.90),
            lp_max_rounds: 3,
            time_limit: Duration::from_secs(3600),
            rng_seed: 0,
            first_layers: 1,
            min_ball_size: Some(100),
        }
    }
}

impl ClusterConfig {
    pub fn validate(&self) -> Result<()> {
        let (lo, hi) = self.epsilon_range;
        if self.reps_alpha == 0 || self.beta == 0 {
            return Err(Error::Config("alpha and beta must be at least 1".into()));
        }
        if !(lo > 0.0 && lo <= hi) {
            return Err(Error::Config(format!("invalid epsilon range [{lo}, {hi}]")));
        }
        if self.first_layers == 0 {
            return Err(Error::Config("balls need at least one layer".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct PhaseTimings {
    pub ball: Duration,
    pub enumeration: Duration,
    pub model: Duration,
    pub partition: Duration,
    pub local_search: Duration,
}

impl PhaseTimings {
    pub fn total(&self) -> Duration {
        self.ball + self.enumeration + self.model + self.partition + self.local_search
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BallStats {
    pub layers: usize,
    pub size: usize,
    pub motifs: usize,
}

#[derive(Clone, Debug)]
pub struct ClusterResult {
    /// Cluster members as global node IDs, ascending.
    pub cluster: Vec<usize>,
    pub phi: MotifConductance,
    pub degenerate: bool,
    pub timings: PhaseTimings,
    pub balls: Vec<BallStats>,
    /// True if the time limit cut the repetitions short.
    pub timed_out: bool,
}

impl ClusterResult {
    pub fn phi_mu(&self) -> f64 {
        self.phi.to_f64()
    }

    pub fn size(&self) -> usize {
        self.cluster.len()
    }

    fn degenerate(seed: usize, timings: PhaseTimings, balls: Vec<BallStats>, timed_out: bool) -> Self {
        ClusterResult {
            cluster: vec![seed],
            phi: MotifConductance::SENTINEL,
            degenerate: true,
            timings,
            balls,
            timed_out,
        }
    }
}

/// Independent random stream for ball `i`, partitioning `j`.
fn stream(rng_seed: u64, i: usize, j: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    rng.set_stream(((i as u64) << 32) | j as u64);
    rng
}

fn timed<T>(slot: &mut Duration, f: impl FnOnce() -> T) -> T {
    let start = Instant::now();
    let out = f();
    *slot += start.elapsed();
    out
}

/// Finds a cluster around `seed` with low triangle-motif conductance.
pub fn local_motif_cluster(g: &Graph, seed: usize, cfg: &ClusterConfig) -> Result<ClusterResult> {
    cfg.validate()?;
    if seed >= g.n() {
        return Err(Error::SeedOutOfRange { node: seed, n: g.n() });
    }
    let start = Instant::now();
    let total_weight = g.total_node_weight();
    let mut timings = PhaseTimings::default();
    let mut balls = Vec::with_capacity(cfg.reps_alpha);
    let mut best: Option<(MotifConductance, Vec<usize>, bool)> = None;
    let mut partitions_done = 0usize;
    let mut timed_out = false;

    'balls: for i in 1..=cfg.reps_alpha {
        let layers = cfg.first_layers + i - 1;
        let min_size = if i == cfg.reps_alpha { cfg.min_ball_size } else { None };
        let ball = timed(&mut timings.ball, || grow_ball(g, seed, layers, min_size));
        let hood = &ball.closed_hood;
        let mc = timed(&mut timings.enumeration, || {
            enumerate_triangles(&hood.graph, &hood.s_mask())
        });
        balls.push(BallStats {
            layers: ball.layers,
            size: ball.len(),
            motifs: mc.len(),
        });
        if mc.is_empty() {
            continue;
        }
        if ball.frontier_complete {
            let mut cluster = ball.members.clone();
            cluster.sort_unstable();
            return Ok(ClusterResult {
                cluster,
                phi: MotifConductance::ZERO,
                degenerate: false,
                timings,
                balls,
                timed_out: false,
            });
        }
        let model = timed(&mut timings.model, || {
            build_model(cfg.model_kind, &ball, &mc, total_weight)
        });

        for j in 1..=cfg.beta {
            if partitions_done > 0 && start.elapsed() > cfg.time_limit {
                timed_out = true;
                break 'balls;
            }
            let mut rng = stream(cfg.rng_seed, i, j);
            let (lo, hi) = cfg.epsilon_range;
            let epsilon = if lo < hi { rng.gen_range(lo..=hi) } else { lo };
            let pcfg = PartitionerConfig::with_epsilon(epsilon, rng.gen());
            let p = timed(&mut timings.partition, || bipartition(&model, &pcfg))?;
            let p = enforce_consistency(&model, p);
            partitions_done += 1;
            let (block, phi) = if model.kind() == ModelKind::Graph {
                let lp_seed = rng.gen();
                let out = timed(&mut timings.local_search, || {
                    label_prop_refine(&model, &p, cfg.lp_max_rounds, lp_seed)
                });
                (out.partition.block, out.phi)
            } else {
                let phi = eval_motif_conductance(&model, &p.block);
                (p.block, phi)
            };
            if best.as_ref().is_none_or(|(b, _, _)| phi < *b) {
                let degenerate = phi.is_degenerate();
                best = Some((phi, model.cluster_members(&block), degenerate));
            }
        }
    }

    Ok(match best {
        Some((phi, cluster, degenerate)) => ClusterResult {
            cluster,
            phi,
            degenerate,
            timings,
            balls,
            timed_out,
        },
        None => ClusterResult::degenerate(seed, timings, balls, timed_out),
    })
}
