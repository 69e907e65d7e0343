//! Hypergraph levels: pin-overlap matching and cut-net gains driven by
//! per-net pin counts.

use std::borrow::Cow;

use super::{GainTracker, Level};
use crate::graph::{cut_net, Hypergraph, Weight};

/// Nets larger than this are ignored when rating contraction partners.
const RATING_NET_LIMIT: usize = 1000;

pub(crate) struct HyperLevel<'h> {
    hypergraph: Cow<'h, Hypergraph>,
    total: Weight,
}

impl<'h> HyperLevel<'h> {
    pub(crate) fn new(h: &'h Hypergraph) -> Self {
        HyperLevel {
            total: h.total_node_weight(),
            hypergraph: Cow::Borrowed(h),
        }
    }
}

impl<'h> Level for HyperLevel<'h> {
    type Gains<'a>
        = NetGains<'a>
    where
        Self: 'a;

    fn n(&self) -> usize {
        self.hypergraph.n()
    }

    fn node_weight(&self, v: usize) -> Weight {
        self.hypergraph.node_weight(v)
    }

    fn total_weight(&self) -> Weight {
        self.total
    }

    fn for_each_neighbor(&self, v: usize, mut f: impl FnMut(usize)) {
        let h = &*self.hypergraph;
        for &e in h.incident_nets(v) {
            for &x in h.pins(e) {
                if x != v {
                    f(x);
                }
            }
        }
    }

    /// Pairs each unmatched node with the unmatched node maximizing
    /// `sum w(e) / (|e| - 1)` over shared nets (ties to the smaller ID).
    fn coarsen(&self, order: &[usize], max_node_weight: Weight) -> (Self, Vec<usize>) {
        let h = &*self.hypergraph;
        let n = h.n();
        let mut mate = vec![usize::MAX; n];
        let mut score = vec![0f64; n];
        let mut seen: Vec<usize> = Vec::new();
        let mut lonely: Option<usize> = None;
        for &v in order {
            if mate[v] != usize::MAX {
                continue;
            }
            let wv = h.node_weight(v);
            for &e in h.incident_nets(v) {
                let pins = h.pins(e);
                if pins.len() > RATING_NET_LIMIT {
                    continue;
                }
                let r = h.net_weight(e) as f64 / (pins.len() - 1) as f64;
                for &x in pins {
                    if x == v || mate[x] != usize::MAX || wv + h.node_weight(x) > max_node_weight {
                        continue;
                    }
                    if score[x] == 0.0 {
                        seen.push(x);
                    }
                    score[x] += r;
                }
            }
            let mut best: Option<(f64, usize)> = None;
            for &x in &seen {
                if best.is_none_or(|(bs, bx)| score[x] > bs || (score[x] == bs && x < bx)) {
                    best = Some((score[x], x));
                }
            }
            for &x in &seen {
                score[x] = 0.0;
            }
            seen.clear();
            match best {
                Some((_, x)) => {
                    mate[v] = x;
                    mate[x] = v;
                }
                None if h.incident_nets(v).is_empty() => match lonely.take() {
                    Some(u) if h.node_weight(u) + wv <= max_node_weight => {
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
        let mut vwgt = Vec::new();
        for v in 0..n {
            if map[v] == usize::MAX {
                map[v] = coarse_n;
                let mut w = h.node_weight(v);
                if mate[v] != v {
                    map[mate[v]] = coarse_n;
                    w += h.node_weight(mate[v]);
                }
                vwgt.push(w);
                coarse_n += 1;
            }
        }
        let nets = h
            .nets()
            .map(|(pins, w)| (pins.iter().map(|&p| map[p]).collect::<Vec<_>>(), w));
        let coarse = Hypergraph::from_nets(coarse_n, nets).with_node_weights(vwgt);
        (
            HyperLevel {
                total: self.total,
                hypergraph: Cow::Owned(coarse),
            },
            map,
        )
    }

    fn cut(&self, block: &[u8]) -> Weight {
        cut_net(&self.hypergraph, block)
    }

    fn gains<'a>(&'a self, block: &[u8]) -> NetGains<'a> {
        NetGains::new(&self.hypergraph, block)
    }
}

/// Pin counts per net and block, and the resulting move gains.
pub(crate) struct NetGains<'a> {
    h: &'a Hypergraph,
    pin_count: Vec<[u32; 2]>,
    gain: Vec<Weight>,
    cut: Weight,
}

impl<'a> NetGains<'a> {
    fn new(h: &'a Hypergraph, block: &[u8]) -> Self {
        let mut pin_count = vec![[0u32; 2]; h.net_count()];
        let mut cut = 0;
        for e in 0..h.net_count() {
            for &p in h.pins(e) {
                pin_count[e][block[p] as usize] += 1;
            }
            if pin_count[e][0] > 0 && pin_count[e][1] > 0 {
                cut += h.net_weight(e);
            }
        }
        let gain = (0..h.n())
            .map(|v| {
                let from = block[v] as usize;
                h.incident_nets(v)
                    .iter()
                    .map(|&e| {
                        let w = h.net_weight(e);
                        let pc = pin_count[e];
                        let mut g = 0;
                        if pc[from] == 1 {
                            g += w;
                        }
                        if pc[1 - from] == 0 {
                            g -= w;
                        }
                        g
                    })
                    .sum()
            })
            .collect();
        NetGains {
            h,
            pin_count,
            gain,
            cut,
        }
    }
}

impl GainTracker for NetGains<'_> {
    fn gain(&self, v: usize) -> Weight {
        self.gain[v]
    }

    fn cut(&self) -> Weight {
        self.cut
    }

    fn is_boundary(&self, v: usize) -> bool {
        self.h
            .incident_nets(v)
            .iter()
            .any(|&e| self.pin_count[e][0] > 0 && self.pin_count[e][1] > 0)
    }

    fn apply(&mut self, v: usize, block: &mut [u8], touched: &mut Vec<usize>) {
        let from = block[v] as usize;
        let to = 1 - from;
        self.cut -= self.gain[v];
        for &e in self.h.incident_nets(v) {
            let w = self.h.net_weight(e);
            let pins = self.h.pins(e);
            // `block[v]` still reads `from` during the scans below.
            match self.pin_count[e][to] {
                0 => {
                    for &x in pins.iter().filter(|&&x| x != v) {
                        self.gain[x] += w;
                        touched.push(x);
                    }
                }
                1 => {
                    if let Some(&x) = pins.iter().find(|&&x| block[x] as usize == to) {
                        self.gain[x] -= w;
                        touched.push(x);
                    }
                }
                _ => {}
            }
            self.pin_count[e][from] -= 1;
            self.pin_count[e][to] += 1;
            match self.pin_count[e][from] {
                0 => {
                    for &x in pins.iter().filter(|&&x| x != v) {
                        self.gain[x] -= w;
                        touched.push(x);
                    }
                }
                1 => {
                    if let Some(&x) = pins
                        .iter()
                        .find(|&&x| x != v && block[x] as usize == from)
                    {
                        self.gain[x] += w;
                        touched.push(x);
                    }
                }
                _ => {}
            }
        }
        self.gain[v] = -self.gain[v];
        block[v] = to as u8;
    }
}
