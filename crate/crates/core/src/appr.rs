//! Baseline: global triangle-weighted graph, approximate personalized
//! PageRank from the seed, and a sweep cut over the result.

use std::collections::VecDeque;

use num_traits::Float;
use rustc_hash::{FxHashMap, FxHashSet};

use crate::graph::{Duplicates, Graph, Weight};
use crate::motif::enumerate_triangles;
use crate::scalar::MotifConductance;

/// `g` reweighted so that each edge counts the triangles it lies in. Edges
/// in no triangle are dropped.
#[derive(Clone, Debug)]
pub struct WeightedMotifGraph {
    graph: Graph,
    wdeg: Vec<Weight>,
    total_volume: Weight,
    triangles: usize,
}

impl WeightedMotifGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn weighted_degree(&self, v: usize) -> Weight {
        self.wdeg[v]
    }

    pub fn total_volume(&self) -> Weight {
        self.total_volume
    }

    pub fn triangle_count(&self) -> usize {
        self.triangles
    }
}

pub fn build_w(g: &Graph) -> WeightedMotifGraph {
    let all = vec![true; g.n()];
    let mc = enumerate_triangles(g, &all);
    let pairs = mc
        .occurrences()
        .flat_map(|t| [(t[0], t[1], 1), (t[0], t[2], 1), (t[1], t[2], 1)]);
    let graph = Graph::from_edges(g.n(), pairs, Duplicates::Sum);
    let wdeg: Vec<Weight> = (0..graph.n()).map(|v| graph.weighted_degree(v)).collect();
    WeightedMotifGraph {
        total_volume: wdeg.iter().sum(),
        wdeg,
        graph,
        triangles: mc.len(),
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ApprParams<T> {
    /// Probability of following an edge rather than returning to the seed.
    pub teleport_alpha: T,
    /// Residual tolerance per unit of weighted degree.
    pub eps: T,
}

impl<T: Float> Default for ApprParams<T> {
    fn default() -> Self {
        ApprParams {
            teleport_alpha: T::from(0.98).unwrap(),
            eps: T::from(1e-4).unwrap(),
        }
    }
}

/// Sparse approximate PageRank and its leftover residual.
#[derive(Clone, Debug)]
pub struct Ppr<T> {
    pub p: FxHashMap<usize, T>,
    pub r: FxHashMap<usize, T>,
    pub pushes: usize,
}

/// Pushes residual mass from the seed until every node satisfies
/// `r(v) < eps * d_W(v)`. Each push keeps `(1 - alpha) r(v)` at `v`, spreads
/// `alpha r(v) / 2` to the neighbors in proportion to edge weight and leaves
/// the rest as residual. The seed must have positive degree in `W`.
pub fn approximate_ppr<T: Float>(w: &WeightedMotifGraph, seed: usize, params: &ApprParams<T>) -> Ppr<T> {
    assert!(w.wdeg[seed] > 0, "seed has no motif neighbors");
    let alpha = params.teleport_alpha;
    let half = T::from(0.5).unwrap();
    let deg = |v: usize| T::from(w.wdeg[v]).unwrap();
    let mut p: FxHashMap<usize, T> = FxHashMap::default();
    let mut r: FxHashMap<usize, T> = FxHashMap::default();
    r.insert(seed, T::one());
    let mut queue = VecDeque::from([seed]);
    let mut queued: FxHashSet<usize> = FxHashSet::default();
    queued.insert(seed);
    let mut pushes = 0;

    while let Some(v) = queue.pop_front() {
        queued.remove(&v);
        let rv = r[&v];
        let dv = deg(v);
        if rv < params.eps * dv {
            continue;
        }
        pushes += 1;
        let pv = p.entry(v).or_insert_with(T::zero);
        *pv = *pv + (T::one() - alpha) * rv;
        r.insert(v, alpha * rv * half);
        let spread = alpha * rv * half / dv;
        for (x, c) in w.graph.edges_of(v) {
            let rx = r.entry(x).or_insert_with(T::zero);
            *rx = *rx + spread * T::from(c).unwrap();
            if *rx >= params.eps * deg(x) && queued.insert(x) {
                queue.push_back(x);
            }
        }
        if r[&v] >= params.eps * dv && queued.insert(v) {
            queue.push_back(v);
        }
    }
    Ppr { p, r, pushes }
}

#[derive(Clone, Debug)]
pub struct ApprResult {
    /// Best sweep prefix, ascending node IDs.
    pub cluster: Vec<usize>,
    pub phi: MotifConductance,
    pub degenerate: bool,
    pub support: usize,
    pub pushes: usize,
}

impl ApprResult {
    pub fn phi_mu(&self) -> f64 {
        self.phi.to_f64()
    }

    fn degenerate(seed: usize) -> Self {
        ApprResult {
            cluster: vec![seed],
            phi: MotifConductance::SENTINEL,
            degenerate: true,
            support: 0,
            pushes: 0,
        }
    }
}

/// Orders the support of `p` by `p(v) / d_W(v)`, descending, ties by ID.
pub fn sweep_order<T: Float>(w: &WeightedMotifGraph, p: &FxHashMap<usize, T>) -> Vec<usize> {
    let mut order: Vec<(T, usize)> = p
        .iter()
        .filter(|(_, &pv)| pv > T::zero())
        .map(|(&v, &pv)| (pv / T::from(w.wdeg[v]).unwrap(), v))
        .collect();
    order.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap().then(a.1.cmp(&b.1)));
    order.into_iter().map(|(_, v)| v).collect()
}

/// Conductance in `W` of every prefix of `order`, computed incrementally.
/// Prefixes covering the whole volume get the degenerate value.
pub fn sweep_profile(w: &WeightedMotifGraph, order: &[usize]) -> Vec<MotifConductance> {
    let mut inside: FxHashSet<usize> = FxHashSet::default();
    let (mut cut, mut vol) = (0, 0);
    let mut out = Vec::with_capacity(order.len());
    for &v in order {
        let internal: Weight = w
            .graph
            .edges_of(v)
            .filter(|(x, _)| inside.contains(x))
            .map(|(_, c)| c)
            .sum();
        inside.insert(v);
        cut += w.wdeg[v] - 2 * internal;
        vol += w.wdeg[v];
        out.push(MotifConductance::new(cut, vol.min(w.total_volume - vol)));
    }
    out
}

/// Runs the full baseline query for one seed on a prebuilt `W`.
pub fn appr_sweep<T: Float>(w: &WeightedMotifGraph, seed: usize, params: &ApprParams<T>) -> ApprResult {
    if seed >= w.n() || w.wdeg[seed] == 0 {
        return ApprResult::degenerate(seed);
    }
    let ppr = approximate_ppr(w, seed, params);
    let order = sweep_order(w, &ppr.p);
    let profile = sweep_profile(w, &order);
    let mut best: Option<(MotifConductance, usize)> = None;
    for (i, phi) in profile.iter().enumerate() {
        if phi.is_degenerate() {
            continue;
        }
        if best.is_none_or(|(b, _)| *phi < b) {
            best = Some((*phi, i + 1));
        }
    }
    match best {
        Some((phi, len)) => {
            let mut cluster = order[..len].to_vec();
            cluster.sort_unstable();
            ApprResult {
                cluster,
                phi,
                degenerate: false,
                support: order.len(),
                pushes: ppr.pushes,
            }
        }
        None => ApprResult {
            support: order.len(),
            pushes: ppr.pushes,
            ..ApprResult::degenerate(seed)
        },
    }
}
