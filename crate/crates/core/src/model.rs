//! Graph and hypergraph models of the motif distribution around a ball.
//!
//! Both models have node set `S ∪ {t}`: local IDs `0..|S|` are the ball
//! members (same IDs as in the closed hood) and `|S|` is the node `t` into
//! which the complement of the ball is contracted.
//!
//! For a partition `(C, C̄)` with the seed in `C` and `t` in `C̄`, the motif
//! conductance of `C` in the input graph is `cut / vol(C)`, where `cut` is the
//! edge-cut (graph model) or cut-net (hypergraph model) and `vol(C)` is the
//! weighted degree (graph model) or weighted net degree (hypergraph model)
//! of `C`. This holds as long as `d_mu(S) <= d_mu(S̄)`.

use std::io::Write;

use crate::ball::Ball;
use crate::error::Result;
use crate::graph::{cut_net, edge_cut, Duplicates, Graph, Hypergraph, Weight};
use crate::io::{write_hmetis, write_metis};
use crate::motif::MotifCollection;
use crate::scalar::MotifConductance;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModelKind {
    Graph,
    Hypergraph,
}

impl std::str::FromStr for ModelKind {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "graph" => Ok(ModelKind::Graph),
            "hypergraph" => Ok(ModelKind::Hypergraph),
            other => Err(crate::error::Error::Config(format!(
                "unknown model kind `{other}`"
            ))),
        }
    }
}

/// The partitionable structure. Node weights here are all 1: the
/// partitioner works on the unweighted view.
#[derive(Clone, Debug)]
pub enum ModelStructure {
    Graph(Graph),
    Hypergraph(Hypergraph),
}

#[derive(Clone, Debug)]
pub struct MotifModel {
    pub structure: ModelStructure,
    /// True node weights; the last entry is `c(S̄)`.
    pub node_weight: Vec<Weight>,
    pub seed_local: usize,
    pub t_local: usize,
    /// Global ID of each ball member, indexed by local ID.
    pub members: Vec<usize>,
    /// Per-node volume in the model's basis (weighted degree or weighted net
    /// degree).
    pub volume: Vec<Weight>,
    /// Volume of the whole ball in the model's basis.
    pub volume_s: Weight,
    pub motif_count: usize,
}

impl MotifModel {
    pub fn kind(&self) -> ModelKind {
        match self.structure {
            ModelStructure::Graph(_) => ModelKind::Graph,
            ModelStructure::Hypergraph(_) => ModelKind::Hypergraph,
        }
    }

    pub fn n(&self) -> usize {
        self.t_local + 1
    }

    pub fn has_motifs(&self) -> bool {
        self.motif_count > 0
    }

    pub fn as_graph(&self) -> Option<&Graph> {
        match &self.structure {
            ModelStructure::Graph(g) => Some(g),
            ModelStructure::Hypergraph(_) => None,
        }
    }

    pub fn as_hypergraph(&self) -> Option<&Hypergraph> {
        match &self.structure {
            ModelStructure::Hypergraph(h) => Some(h),
            ModelStructure::Graph(_) => None,
        }
    }

    /// Edge-cut or cut-net of `block`, recomputed from scratch.
    pub fn cut(&self, block: &[u8]) -> Weight {
        match &self.structure {
            ModelStructure::Graph(g) => edge_cut(g, block),
            ModelStructure::Hypergraph(h) => cut_net(h, block),
        }
    }

    /// Ball members (global IDs) on the seed's side of `block`.
    pub fn cluster_members(&self, block: &[u8]) -> Vec<usize> {
        let side = block[self.seed_local];
        let mut c: Vec<usize> = (0..self.t_local)
            .filter(|&v| block[v] == side)
            .map(|v| self.members[v])
            .collect();
        c.sort_unstable();
        c
    }

    /// Writes the model as METIS (graph kind) or hMETIS (hypergraph kind),
    /// with the true node weights.
    pub fn write_debug<W: Write>(&self, out: W) -> Result<()> {
        match &self.structure {
            ModelStructure::Graph(g) => {
                write_metis(&g.clone().with_node_weights(self.node_weight.clone()), out)
            }
            ModelStructure::Hypergraph(h) => {
                write_hmetis(&h.clone().with_node_weights(self.node_weight.clone()), out)
            }
        }
    }
}

/// Maps closed-hood local IDs to model IDs: members keep their ID, the
/// boundary collapses onto `t`.
fn to_model(v: usize, s_len: usize) -> usize {
    v.min(s_len)
}

fn true_node_weights(ball: &Ball, total_weight: Weight) -> Vec<Weight> {
    let hood = &ball.closed_hood;
    let mut w: Vec<Weight> = (0..hood.s_len).map(|v| hood.graph.node_weight(v)).collect();
    let in_s: Weight = w.iter().sum();
    w.push(total_weight - in_s);
    w
}

/// Contracts the motif-weighted graph onto `S ∪ {t}`: each pair of nodes of
/// a motif contributes 1 to the edge between their images, pairs that both
/// map to `t` are dropped.
///
/// `total_node_weight` is `c(V)` of the input graph.
pub fn build_graph_model(ball: &Ball, mc: &MotifCollection, total_node_weight: Weight) -> MotifModel {
    let s_len = ball.closed_hood.s_len;
    let n = s_len + 1;
    let mut pairs = Vec::with_capacity(mc.len() * 3);
    for occ in mc.occurrences() {
        for (i, &a) in occ.iter().enumerate() {
            for &b in &occ[i + 1..] {
                let (a, b) = (to_model(a, s_len), to_model(b, s_len));
                if a != b {
                    pairs.push((a, b, 1));
                }
            }
        }
    }
    let graph = Graph::from_edges(n, pairs, Duplicates::Sum);
    let volume: Vec<Weight> = (0..n).map(|v| graph.weighted_degree(v)).collect();
    let volume_s = volume[..s_len].iter().sum();
    MotifModel {
        structure: ModelStructure::Graph(graph),
        node_weight: true_node_weights(ball, total_node_weight),
        seed_local: 0,
        t_local: s_len,
        members: ball.closed_hood.local_to_global[..s_len].to_vec(),
        volume,
        volume_s,
        motif_count: mc.len(),
    }
}

/// One net per motif: its pins inside `S`, plus `t` if it leaves `S`.
/// Parallel nets are merged with summed weight.
pub fn build_hypergraph_model(
    ball: &Ball,
    mc: &MotifCollection,
    total_node_weight: Weight,
) -> MotifModel {
    let s_len = ball.closed_hood.s_len;
    let n = s_len + 1;
    let nets = mc.occurrences().map(|occ| {
        let mut pins: Vec<usize> = occ.iter().map(|&v| to_model(v, s_len)).collect();
        pins.dedup();
        (pins, 1)
    });
    let h = Hypergraph::from_nets(n, nets);
    let volume: Vec<Weight> = (0..n).map(|v| h.weighted_net_degree(v)).collect();
    let volume_s = volume[..s_len].iter().sum();
    MotifModel {
        structure: ModelStructure::Hypergraph(h),
        node_weight: true_node_weights(ball, total_node_weight),
        seed_local: 0,
        t_local: s_len,
        members: ball.closed_hood.local_to_global[..s_len].to_vec(),
        volume,
        volume_s,
        motif_count: mc.len(),
    }
}

pub fn build_model(
    kind: ModelKind,
    ball: &Ball,
    mc: &MotifCollection,
    total_node_weight: Weight,
) -> MotifModel {
    match kind {
        ModelKind::Graph => build_graph_model(ball, mc, total_node_weight),
        ModelKind::Hypergraph => build_hypergraph_model(ball, mc, total_node_weight),
    }
}

/// Motif conductance of the seed's block, computed inside the model.
///
/// The partition must be consistent (seed and `t` apart). A cluster that
/// touches no motif has zero volume and yields the degenerate sentinel.
pub fn eval_motif_conductance(model: &MotifModel, block: &[u8]) -> MotifConductance {
    assert_eq!(block.len(), model.n());
    debug_assert_ne!(block[model.seed_local], block[model.t_local]);
    let side = block[model.seed_local];
    let volume: Weight = (0..model.n())
        .filter(|&v| block[v] == side)
        .map(|v| model.volume[v])
        .sum();
    MotifConductance::new(model.cut(block), volume)
}
