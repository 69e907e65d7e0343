//! Graph levels: heavy-edge matching and edge-cut gains.

use std::borrow::Cow;

use super::{GainTracker, Level};
use crate::graph::{edge_cut, Graph, Weight};

pub(crate) struct GraphLevel<'g> {
    graph: Cow<'g, Graph>,
    total: Weight,
}

impl<'g> GraphLevel<'g> {
    pub(crate) fn new(g: &'g Graph) -> Self {
        GraphLevel {
            total: g.total_node_weight(),
            graph: Cow::Borrowed(g),
        }
    }
}

impl<'g> Level for GraphLevel<'g> {
    type Gains<'a>
        = EdgeGains<'a>
    where
        Self: 'a;

    fn n(&self) -> usize {
        self.graph.n()
    }

    fn node_weight(&self, v: usize) -> Weight {
        self.graph.node_weight(v)
    }

    fn total_weight(&self) -> Weight {
        self.total
    }

    fn for_each_neighbor(&self, v: usize, mut f: impl FnMut(usize)) {
        for &w in self.graph.neighbors(v) {
            f(w);
        }
    }

    /// Heavy-edge matching: each unmatched node pairs with the unmatched
    /// neighbor behind its heaviest edge (ties to the smaller ID), subject to
    /// the coarse weight cap. Leftover nodes without edges are paired among
    /// themselves so edgeless regions still shrink.
    fn coarsen(&self, order: &[usize], max_node_weight: Weight) -> (Self, Vec<usize>) {
        let g = &*self.graph;
        let n = g.n();
        let mut mate = vec![usize::MAX; n];
        let mut lonely: Option<usize> = None;
        for &v in order {
            if mate[v] != usize::MAX {
                continue;
            }
            let wv = g.node_weight(v);
            let mut best: Option<(Weight, usize)> = None;
            for (w, c) in g.edges_of(v) {
                if mate[w] != usize::MAX || wv + g.node_weight(w) > max_node_weight {
                    continue;
                }
                if best.is_none_or(|(bc, bw)| c > bc || (c == bc && w < bw)) {
                    best = Some((c, w));
                }
            }
            match best {
                Some((_, w)) => {
                    mate[v] = w;
                    mate[w] = v;
                }
                None if g.degree(v) == 0 => match lonely.take() {
                    Some(u) if g.node_weight(u) + wv <= max_node_weight => {
                        mate[u] = v;
                        mate[v] = u;
                    }
                    Some(u) => {
                        mate[u] = u;
                        lonely = Some(v);
                    }
                    None => lonely = Some(v),
                },
                None => mate[v] = v,
            }
        }
        if let Some(u) = lonely {
            mate[u] = u;
        }

        let mut map = vec![usize::MAX; n];
        let mut coarse_n = 0;
        for v in 0..n {
            if map[v] == usize::MAX {
                map[v] = coarse_n;
                map[mate[v]] = coarse_n;
                coarse_n += 1;
            }
        }
        let coarse = g.contract(&map, coarse_n);
        (
            GraphLevel {
                total: self.total,
                graph: Cow::Owned(coarse),
            },
            map,
        )
    }

    fn cut(&self, block: &[u8]) -> Weight {
        edge_cut(&self.graph, block)
    }

    fn gains<'a>(&'a self, block: &[u8]) -> EdgeGains<'a> {
        EdgeGains::new(&self.graph, block)
    }
}

/// Tracks, per node, the weight of edges leaving its block.
pub(crate) struct EdgeGains<'a> {
    graph: &'a Graph,
    external: Vec<Weight>,
    wdeg: Vec<Weight>,
    cut: Weight,
}

impl<'a> EdgeGains<'a> {
    fn new(graph: &'a Graph, block: &[u8]) -> Self {
        let n = graph.n();
        let mut external = vec![0; n];
        let mut wdeg = vec![0; n];
        let mut twice_cut = 0;
        for v in 0..n {
            for (w, c) in graph.edges_of(v) {
                wdeg[v] += c;
                if block[v] != block[w] {
                    external[v] += c;
                    twice_cut += c;
                }
            }
        }
        EdgeGains {
            graph,
            external,
            wdeg,
            cut: twice_cut / 2,
        }
    }
}

impl GainTracker for EdgeGains<'_> {
    fn gain(&self, v: usize) -> Weight {
        2 * self.external[v] - self.wdeg[v]
    }

    fn cut(&self) -> Weight {
        self.cut
    }

    fn is_boundary(&self, v: usize) -> bool {
        self.external[v] > 0
    }

    fn apply(&mut self, v: usize, block: &mut [u8], touched: &mut Vec<usize>) {
        let from = block[v];
        self.cut -= self.gain(v);
        for (w, c) in self.graph.edges_of(v) {
            if block[w] == from {
                self.external[w] += c;
            } else {
                self.external[w] -= c;
            }
            touched.push(w);
        }
        self.external[v] = self.wdeg[v] - self.external[v];
        block[v] ^= 1;
    }
}
