//! Compressed graph and hypergraph representations, and the bipartition type
//! shared by the partitioner, the local search and the evaluators.

use rustc_hash::FxHashMap;

/// Node and edge weights. Integer so cut arithmetic is exact.
pub type Weight = i64;

/// How [`Graph::from_edges`] treats repeated edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Duplicates {
    /// Keep one copy with the weight of its first occurrence.
    KeepFirst,
    /// Merge into one edge whose weight is the sum.
    Sum,
}

/// Undirected graph in CSR form. No self-loops, no parallel edges, sorted
/// symmetric adjacency.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    xadj: Vec<usize>,
    adjncy: Vec<usize>,
    adjwgt: Vec<Weight>,
    vwgt: Vec<Weight>,
}

impl Graph {
    /// Builds a graph on `n` nodes from undirected edges. Self-loops are
    /// dropped, `(u, v)` and `(v, u)` denote the same edge.
    ///
    /// Panics if an endpoint is `>= n` or a weight is not positive.
    pub fn from_edges<I>(n: usize, edges: I, duplicates: Duplicates) -> Self
    where
        I: IntoIterator<Item = (usize, usize, Weight)>,
    {
        let mut arcs: Vec<(usize, usize, Weight)> = Vec::new();
        for (u, v, w) in edges {
            assert!(u < n && v < n, "edge ({u}, {v}) out of range for n = {n}");
            assert!(w > 0, "edge weight must be positive");
            if u == v {
                continue;
            }
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            arcs.push((a, b, w));
        }
        // Stable sort keeps the first occurrence first among equal pairs.
        arcs.sort_by_key(|&(a, b, _)| (a, b));
        let mut merged: Vec<(usize, usize, Weight)> = Vec::with_capacity(arcs.len());
        for (a, b, w) in arcs {
            match merged.last_mut() {
                Some(last) if last.0 == a && last.1 == b => {
                    if duplicates == Duplicates::Sum {
                        last.2 += w;
                    }
                }
                _ => merged.push((a, b, w)),
            }
        }

        let mut degree = vec![0usize; n];
        for &(a, b, _) in &merged {
            degree[a] += 1;
            degree[b] += 1;
        }
        let mut xadj = vec![0usize; n + 1];
        for v in 0..n {
            xadj[v + 1] = xadj[v] + degree[v];
        }
        let mut fill = xadj[..n].to_vec();
        let mut adjncy = vec![0usize; 2 * merged.len()];
        let mut adjwgt = vec![0; 2 * merged.len()];
        // `merged` is sorted by (a, b), so every list receives its entries in
        // ascending order: first the smaller neighbors (as `b`), then the
        // larger ones (as `a`). Two sweeps keep that order.
        for &(a, b, w) in &merged {
            adjncy[fill[b]] = a;
            adjwgt[fill[b]] = w;
            fill[b] += 1;
        }
        for &(a, b, w) in &merged {
            adjncy[fill[a]] = b;
            adjwgt[fill[a]] = w;
            fill[a] += 1;
        }
        Graph {
            xadj,
            adjncy,
            adjwgt,
            vwgt: vec![1; n],
        }
    }

    /// Builds a graph directly from CSR arrays that already satisfy the
    /// invariants. Checked in debug builds.
    pub(crate) fn from_csr_unchecked(
        xadj: Vec<usize>,
        adjncy: Vec<usize>,
        adjwgt: Vec<Weight>,
        vwgt: Vec<Weight>,
    ) -> Self {
        let g = Graph {
            xadj,
            adjncy,
            adjwgt,
            vwgt,
        };
        debug_assert!(g.check_invariants().is_ok(), "{:?}", g.check_invariants());
        g
    }

    /// Merges all nodes with the same `map` value into one node of a graph
    /// on `coarse_n` nodes. Node weights and parallel edge weights are
    /// summed; edges inside a group disappear.
    pub fn contract(&self, map: &[usize], coarse_n: usize) -> Graph {
        assert_eq!(map.len(), self.n());
        let mut start = vec![0usize; coarse_n + 1];
        for &c in map {
            start[c + 1] += 1;
        }
        for c in 0..coarse_n {
            start[c + 1] += start[c];
        }
        let mut fill = start.clone();
        let mut members = vec![0usize; self.n()];
        for (v, &c) in map.iter().enumerate() {
            members[fill[c]] = v;
            fill[c] += 1;
        }

        let mut slot = vec![usize::MAX; coarse_n];
        let mut xadj = Vec::with_capacity(coarse_n + 1);
        let mut adjncy: Vec<usize> = Vec::with_capacity(self.adjncy.len());
        let mut adjwgt: Vec<Weight> = Vec::with_capacity(self.adjncy.len());
        let mut vwgt = vec![0; coarse_n];
        let mut row: Vec<(usize, Weight)> = Vec::new();
        xadj.push(0);
        for c in 0..coarse_n {
            row.clear();
            for &v in &members[start[c]..start[c + 1]] {
                vwgt[c] += self.vwgt[v];
                for (w, ew) in self.edges_of(v) {
                    let cw = map[w];
                    if cw == c {
                        continue;
                    }
                    if slot[cw] == usize::MAX {
                        slot[cw] = row.len();
                        row.push((cw, ew));
                    } else {
                        row[slot[cw]].1 += ew;
                    }
                }
            }
            for &(cw, _) in &row {
                slot[cw] = usize::MAX;
            }
            row.sort_unstable_by_key(|&(cw, _)| cw);
            adjncy.extend(row.iter().map(|&(cw, _)| cw));
            adjwgt.extend(row.iter().map(|&(_, ew)| ew));
            xadj.push(adjncy.len());
        }
        Graph::from_csr_unchecked(xadj, adjncy, adjwgt, vwgt)
    }

    pub fn with_node_weights(mut self, vwgt: Vec<Weight>) -> Self {
        assert_eq!(vwgt.len(), self.n());
        assert!(vwgt.iter().all(|&w| w >= 0), "node weights must be nonnegative");
        self.vwgt = vwgt;
        self
    }

    pub fn n(&self) -> usize {
        self.xadj.len() - 1
    }

    /// Number of undirected edges.
    pub fn m(&self) -> usize {
        self.adjncy.len() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.xadj[v + 1] - self.xadj[v]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjncy[self.xadj[v]..self.xadj[v + 1]]
    }

    pub fn neighbor_weights(&self, v: usize) -> &[Weight] {
        &self.adjwgt[self.xadj[v]..self.xadj[v + 1]]
    }

    /// `(neighbor, edge weight)` pairs of `v`.
    pub fn edges_of(&self, v: usize) -> impl Iterator<Item = (usize, Weight)> + '_ {
        self.neighbors(v)
            .iter()
            .copied()
            .zip(self.neighbor_weights(v).iter().copied())
    }

    /// Every undirected edge once, as `(u, v, w)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, Weight)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.edges_of(u)
                .filter(move |&(v, _)| u < v)
                .map(move |(v, w)| (u, v, w))
        })
    }

    pub fn weighted_degree(&self, v: usize) -> Weight {
        self.neighbor_weights(v).iter().sum()
    }

    pub fn node_weight(&self, v: usize) -> Weight {
        self.vwgt[v]
    }

    pub fn node_weights(&self) -> &[Weight] {
        &self.vwgt
    }

    pub fn total_node_weight(&self) -> Weight {
        self.vwgt.iter().sum()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    pub fn edge_weight(&self, u: usize, v: usize) -> Option<Weight> {
        let k = self.neighbors(u).binary_search(&v).ok()?;
        Some(self.neighbor_weights(u)[k])
    }

    pub fn has_unit_edge_weights(&self) -> bool {
        self.adjwgt.iter().all(|&w| w == 1)
    }

    pub fn has_unit_node_weights(&self) -> bool {
        self.vwgt.iter().all(|&w| w == 1)
    }

    /// Verifies the structural invariants, returning a description of the
    /// first violation.
    pub fn check_invariants(&self) -> Result<(), String> {
        let n = self.n();
        if self.adjncy.len() != self.adjwgt.len() || self.vwgt.len() != n {
            return Err("array length mismatch".into());
        }
        if !self.adjncy.len().is_multiple_of(2) {
            return Err("odd number of adjacency entries".into());
        }
        for u in 0..n {
            let nbrs = self.neighbors(u);
            for (k, &v) in nbrs.iter().enumerate() {
                if v >= n {
                    return Err(format!("neighbor {v} of {u} out of range"));
                }
                if v == u {
                    return Err(format!("self-loop at {u}"));
                }
                if k > 0 && nbrs[k - 1] >= v {
                    return Err(format!("adjacency of {u} not strictly ascending"));
                }
                if self.edge_weight(v, u) != Some(self.neighbor_weights(u)[k]) {
                    return Err(format!("edge ({u}, {v}) not symmetric"));
                }
            }
        }
        Ok(())
    }
}

/// Undirected hypergraph with weighted nets, stored as net→pins and
/// node→nets incidence arrays.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    net_ptr: Vec<usize>,
    pins: Vec<usize>,
    net_wgt: Vec<Weight>,
    node_ptr: Vec<usize>,
    incident: Vec<usize>,
    vwgt: Vec<Weight>,
}

impl Hypergraph {
    /// Builds a hypergraph on `n` unit-weight nodes. Pins within a net are
    /// sorted and deduplicated, nets left with fewer than two pins are
    /// dropped (they can never be cut), and parallel nets are merged with
    /// summed weight. Nets are stored in lexicographic pin order.
    ///
    /// Panics on an out-of-range pin or a non-positive weight.
    pub fn from_nets<I>(n: usize, nets: I) -> Self
    where
        I: IntoIterator<Item = (Vec<usize>, Weight)>,
    {
        let mut merged: FxHashMap<Vec<usize>, Weight> = FxHashMap::default();
        for (mut pins, w) in nets {
            assert!(w > 0, "net weight must be positive");
            assert!(pins.iter().all(|&p| p < n), "pin out of range for n = {n}");
            pins.sort_unstable();
            pins.dedup();
            if pins.len() < 2 {
                continue;
            }
            *merged.entry(pins).or_insert(0) += w;
        }
        let mut nets: Vec<(Vec<usize>, Weight)> = merged.into_iter().collect();
        nets.sort_unstable();
        Self::from_canonical_nets(n, nets, vec![1; n])
    }

    fn from_canonical_nets(n: usize, nets: Vec<(Vec<usize>, Weight)>, vwgt: Vec<Weight>) -> Self {
        let mut net_ptr = Vec::with_capacity(nets.len() + 1);
        net_ptr.push(0);
        let mut pins = Vec::new();
        let mut net_wgt = Vec::with_capacity(nets.len());
        let mut node_deg = vec![0usize; n];
        for (p, w) in &nets {
            for &v in p {
                node_deg[v] += 1;
            }
            pins.extend_from_slice(p);
            net_ptr.push(pins.len());
            net_wgt.push(*w);
        }
        let mut node_ptr = vec![0usize; n + 1];
        for v in 0..n {
            node_ptr[v + 1] = node_ptr[v] + node_deg[v];
        }
        let mut fill = node_ptr[..n].to_vec();
        let mut incident = vec![0usize; pins.len()];
        for e in 0..nets.len() {
            for &v in &pins[net_ptr[e]..net_ptr[e + 1]] {
                incident[fill[v]] = e;
                fill[v] += 1;
            }
        }
        Hypergraph {
            net_ptr,
            pins,
            net_wgt,
            node_ptr,
            incident,
            vwgt,
        }
    }

    pub fn with_node_weights(mut self, vwgt: Vec<Weight>) -> Self {
        assert_eq!(vwgt.len(), self.n());
        assert!(vwgt.iter().all(|&w| w >= 0), "node weights must be nonnegative");
        self.vwgt = vwgt;
        self
    }

    pub fn n(&self) -> usize {
        self.node_ptr.len() - 1
    }

    pub fn net_count(&self) -> usize {
        self.net_wgt.len()
    }

    pub fn pin_count(&self) -> usize {
        self.pins.len()
    }

    pub fn pins(&self, e: usize) -> &[usize] {
        &self.pins[self.net_ptr[e]..self.net_ptr[e + 1]]
    }

    pub fn net_weight(&self, e: usize) -> Weight {
        self.net_wgt[e]
    }

    /// Nets containing `v`.
    pub fn incident_nets(&self, v: usize) -> &[usize] {
        &self.incident[self.node_ptr[v]..self.node_ptr[v + 1]]
    }

    /// `(pins, weight)` of every net.
    pub fn nets(&self) -> impl Iterator<Item = (&[usize], Weight)> + '_ {
        (0..self.net_count()).map(move |e| (self.pins(e), self.net_wgt[e]))
    }

    /// Summed weight of the nets containing `v`.
    pub fn weighted_net_degree(&self, v: usize) -> Weight {
        self.incident_nets(v).iter().map(|&e| self.net_wgt[e]).sum()
    }

    pub fn node_weight(&self, v: usize) -> Weight {
        self.vwgt[v]
    }

    pub fn node_weights(&self) -> &[Weight] {
        &self.vwgt
    }

    pub fn total_node_weight(&self) -> Weight {
        self.vwgt.iter().sum()
    }

    pub fn check_invariants(&self) -> Result<(), String> {
        for e in 0..self.net_count() {
            let p = self.pins(e);
            if p.len() < 2 {
                return Err(format!("net {e} has fewer than two pins"));
            }
            if p.windows(2).any(|w| w[0] >= w[1]) {
                return Err(format!("net {e} has unsorted or duplicate pins"));
            }
            if p.iter().any(|&v| v >= self.n()) {
                return Err(format!("net {e} has a pin out of range"));
            }
            if self.net_wgt[e] <= 0 {
                return Err(format!("net {e} has non-positive weight"));
            }
        }
        Ok(())
    }
}

/// Two-way partition. `block[v]` is 0 or 1.
#[derive(Clone, Debug, PartialEq)]
pub struct Bipartition {
    pub block: Vec<u8>,
    /// Imbalance parameter the partition was computed for.
    pub epsilon: f64,
    /// Edge-cut (graph) or cut-net (hypergraph) weight.
    pub cut: Weight,
}

impl Bipartition {
    pub fn block_sizes(&self) -> [usize; 2] {
        block_sizes(&self.block)
    }

    pub fn both_blocks_nonempty(&self) -> bool {
        let [a, b] = self.block_sizes();
        a > 0 && b > 0
    }
}

pub(crate) fn block_sizes(block: &[u8]) -> [usize; 2] {
    let ones = block.iter().filter(|&&b| b == 1).count();
    [block.len() - ones, ones]
}

/// Largest block weight allowed for a two-way partition of total weight
/// `total` under imbalance `epsilon`: `(1 + epsilon) * ceil(total / 2)`.
pub fn max_block_weight(total: Weight, epsilon: f64) -> Weight {
    let half = (total + 1) / 2;
    ((1.0 + epsilon) * half as f64).floor() as Weight
}

/// Total weight of edges whose endpoints lie in different blocks.
pub fn edge_cut(g: &Graph, block: &[u8]) -> Weight {
    assert_eq!(block.len(), g.n());
    g.edges()
        .filter(|&(u, v, _)| block[u] != block[v])
        .map(|(_, _, w)| w)
        .sum()
}

/// Total weight of nets with pins in both blocks.
pub fn cut_net(h: &Hypergraph, block: &[u8]) -> Weight {
    assert_eq!(block.len(), h.n());
    h.nets()
        .filter(|(pins, _)| {
            let first = block[pins[0]];
            pins[1..].iter().any(|&p| block[p] != first)
        })
        .map(|(_, w)| w)
        .sum()
}
