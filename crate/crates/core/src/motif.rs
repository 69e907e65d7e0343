//! Exact triangle enumeration on the closed neighborhood of a ball.

use crate::graph::Graph;

/// Motif occurrences as flat pin lists of a fixed arity, plus the motif
/// degree `d_mu(v)` of every node of the enumeration arena.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MotifCollection {
    arity: usize,
    pins: Vec<usize>,
    motif_degree: Vec<u64>,
}

impl MotifCollection {
    /// Builds a collection from occurrences over `n` nodes. Each occurrence
    /// is stored sorted.
    pub fn from_occurrences<I>(n: usize, arity: usize, occurrences: I) -> Self
    where
        I: IntoIterator<Item = Vec<usize>>,
    {
        assert!(arity >= 2);
        let mut pins = Vec::new();
        let mut motif_degree = vec![0u64; n];
        for mut occ in occurrences {
            assert_eq!(occ.len(), arity);
            occ.sort_unstable();
            for &v in &occ {
                motif_degree[v] += 1;
            }
            pins.extend(occ);
        }
        MotifCollection {
            arity,
            pins,
            motif_degree,
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.pins.len() / self.arity
    }

    pub fn is_empty(&self) -> bool {
        self.pins.is_empty()
    }

    pub fn occurrences(&self) -> std::slice::ChunksExact<'_, usize> {
        self.pins.chunks_exact(self.arity)
    }

    pub fn motif_degree(&self, v: usize) -> u64 {
        self.motif_degree[v]
    }

    pub fn motif_degrees(&self) -> &[u64] {
        &self.motif_degree
    }

    /// `d_mu(nodes)`: summed motif degree of a node set.
    pub fn motif_degree_of_set(&self, nodes: impl IntoIterator<Item = usize>) -> u64 {
        nodes.into_iter().map(|v| self.motif_degree[v]).sum()
    }
}

/// Lists every triangle of `g` with at least one node where `in_s` is true,
/// each exactly once, as ascending triples in lexicographic order.
///
/// Nodes are ranked by `(degree, id)`. For each node `v`, the neighbors of
/// lower rank are marked; for each marked `w`, the lower-ranked neighbors of
/// `w` that are also marked close a triangle. A triangle is found only at its
/// highest-ranked node, through its middle node.
pub fn enumerate_triangles(g: &Graph, in_s: &[bool]) -> MotifCollection {
    let n = g.n();
    assert_eq!(in_s.len(), n);
    let below = |a: usize, b: usize| (g.degree(a), a) < (g.degree(b), b);

    // Lower-ranked neighbor lists.
    let mut low_ptr = Vec::with_capacity(n + 1);
    low_ptr.push(0);
    let mut low = Vec::with_capacity(g.m());
    for v in 0..n {
        low.extend(g.neighbors(v).iter().copied().filter(|&w| below(w, v)));
        low_ptr.push(low.len());
    }
    let lower = |v: usize| &low[low_ptr[v]..low_ptr[v + 1]];

    let mut mark = vec![usize::MAX; n];
    let mut triples: Vec<[usize; 3]> = Vec::new();
    for v in 0..n {
        let lv = lower(v);
        if lv.len() < 2 {
            continue;
        }
        for &w in lv {
            mark[w] = v;
        }
        for &w in lv {
            for &x in lower(w) {
                if mark[x] == v && (in_s[v] || in_s[w] || in_s[x]) {
                    let mut t = [x, w, v];
                    t.sort_unstable();
                    triples.push(t);
                }
            }
        }
    }
    triples.sort_unstable();

    let mut motif_degree = vec![0u64; n];
    let mut pins = Vec::with_capacity(3 * triples.len());
    for t in &triples {
        for &v in t {
            motif_degree[v] += 1;
        }
        pins.extend_from_slice(t);
    }
    MotifCollection {
        arity: 3,
        pins,
        motif_degree,
    }
}

/// Counts all triangles of `g`.
pub fn count_triangles(g: &Graph) -> usize {
    enumerate_triangles(g, &vec![true; g.n()]).len()
}
