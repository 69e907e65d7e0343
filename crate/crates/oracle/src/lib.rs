//! Slow, obviously-correct reference computations used by the test suites.
//!
//! Nothing here calls into the clustering pipeline beyond reading graph
//! edges: triangles come from an adjacency matrix, distances from a plain
//! BFS, and optimal partitions from full enumeration.

use std::collections::VecDeque;

use lmc::graph::{Duplicates, Graph, Weight};
use rand::Rng;

/// Erdos-Renyi graph with unit weights.
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.push((a, b, 1));
            }
        }
    }
    Graph::from_edges(n, edges, Duplicates::KeepFirst)
}

/// `k`-cliques on consecutive ID ranges, plus `extra` edges.
pub fn cliques(sizes: &[usize], extra: &[(usize, usize)]) -> Graph {
    let mut edges = Vec::new();
    let mut base = 0;
    for &k in sizes {
        for a in base..base + k {
            for b in a + 1..base + k {
                edges.push((a, b, 1));
            }
        }
        base += k;
    }
    edges.extend(extra.iter().map(|&(a, b)| (a, b, 1)));
    Graph::from_edges(base, edges, Duplicates::KeepFirst)
}

pub fn adjacency_matrix(g: &Graph) -> Vec<Vec<bool>> {
    let mut m = vec![vec![false; g.n()]; g.n()];
    for (a, b, _) in g.edges() {
        m[a][b] = true;
        m[b][a] = true;
    }
    m
}

/// Every triangle `a < b < c`, by checking all triples.
pub fn brute_triangles(g: &Graph) -> Vec<[usize; 3]> {
    let adj = adjacency_matrix(g);
    let n = g.n();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if !adj[a][b] {
                continue;
            }
            for c in b + 1..n {
                if adj[a][c] && adj[b][c] {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

pub fn touching(tris: &[[usize; 3]], in_s: &[bool]) -> Vec<[usize; 3]> {
    tris.iter().copied().filter(|t| t.iter().any(|&v| in_s[v])).collect()
}

/// BFS distances from `src`; `usize::MAX` for unreachable nodes.
pub fn bfs_distances(g: &Graph, src: usize) -> Vec<usize> {
    let adj = adjacency_matrix(g);
    let mut dist = vec![usize::MAX; g.n()];
    dist[src] = 0;
    let mut q = VecDeque::from([src]);
    while let Some(v) = q.pop_front() {
        for w in 0..g.n() {
            if adj[v][w] && dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                q.push_back(w);
            }
        }
    }
    dist
}

/// Motif cut and motif degrees of a node set, straight from the triangle
/// list.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MotifCount {
    pub cut: u64,
    pub inside: u64,
    pub outside: u64,
}

impl MotifCount {
    /// `cut / min(inside, outside)`, or `1` when the minimum is zero.
    pub fn phi(&self) -> f64 {
        let den = self.inside.min(self.outside);
        if den == 0 {
            1.0
        } else {
            self.cut as f64 / den as f64
        }
    }

    /// `cut / inside`, or `1` when `inside` is zero.
    pub fn phi_inside(&self) -> f64 {
        if self.inside == 0 {
            1.0
        } else {
            self.cut as f64 / self.inside as f64
        }
    }
}

pub fn motif_count(tris: &[[usize; 3]], in_cluster: &[bool]) -> MotifCount {
    let mut c = MotifCount {
        cut: 0,
        inside: 0,
        outside: 0,
    };
    for t in tris {
        let k = t.iter().filter(|&&v| in_cluster[v]).count() as u64;
        if k == 1 || k == 2 {
            c.cut += 1;
        }
        c.inside += k;
        c.outside += 3 - k;
    }
    c
}

pub fn mask(n: usize, nodes: &[usize]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &v in nodes {
        m[v] = true;
    }
    m
}

/// Pair co-occurrence counts over `tris`, after mapping every node through
/// `map`. Pairs that collapse onto one node are dropped. Keys are ordered.
pub fn pair_counts(tris: &[[usize; 3]], map: impl Fn(usize) -> usize) -> Vec<((usize, usize), Weight)> {
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for t in tris {
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let (a, b) = (map(t[i]), map(t[j]));
            if a != b {
                pairs.push((a.min(b), a.max(b)));
            }
        }
    }
    pairs.sort_unstable();
    let mut out: Vec<((usize, usize), Weight)> = Vec::new();
    for p in pairs {
        match out.last_mut() {
            Some((q, w)) if *q == p => *w += 1,
            _ => out.push((p, 1)),
        }
    }
    out
}

/// Minimum of `cut` over all two-block assignments of `n` unit-weight nodes
/// with both blocks nonempty and at most `l_max` nodes each.
pub fn exhaustive_min_cut(n: usize, l_max: usize, cut: impl Fn(&[u8]) -> Weight) -> Option<Weight> {
    assert!(n <= 24, "too many nodes for full enumeration");
    let mut best = None;
    let mut block = vec![0u8; n];
    // Fixing node 0 in block 0 visits each unordered split once.
    for bits in 0u32..(1 << (n - 1)) {
        let ones = bits.count_ones() as usize;
        if ones == 0 || ones > l_max || n - ones > l_max {
            continue;
        }
        for (v, b) in block.iter_mut().enumerate().skip(1) {
            *b = ((bits >> (v - 1)) & 1) as u8;
        }
        block[0] = 0;
        let c = cut(&block);
        if best.is_none_or(|b| c < b) {
            best = Some(c);
        }
    }
    best
}

/// Edge cut from an explicit edge list.
pub fn edge_list_cut(edges: &[(usize, usize, Weight)], block: &[u8]) -> Weight {
    edges
        .iter()
        .filter(|&&(a, b, _)| block[a] != block[b])
        .map(|&(_, _, w)| w)
        .sum()
}

/// Cut-net from an explicit net list.
pub fn net_list_cut(nets: &[(Vec<usize>, Weight)], block: &[u8]) -> Weight {
    nets.iter()
        .filter(|(pins, _)| pins.iter().any(|&p| block[p] != block[pins[0]]))
        .map(|&(_, w)| w)
        .sum()
}

/// Random two-block assignment with `u` and `t` apart.
pub fn random_consistent_block<R: Rng>(n: usize, u: usize, t: usize, rng: &mut R) -> Vec<u8> {
    let mut block: Vec<u8> = (0..n).map(|_| rng.gen_range(0..2)).collect();
    block[u] = 0;
    block[t] = 1;
    block
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_has_four_triangles() {
        let g = cliques(&[4], &[]);
        assert_eq!(brute_triangles(&g).len(), 4);
    }

    #[test]
    fn exhaustive_cut_on_path() {
        let edges = vec![(0, 1, 1), (1, 2, 5), (2, 3, 1)];
        assert_eq!(exhaustive_min_cut(4, 2, |b| edge_list_cut(&edges, b)), Some(2));
        assert_eq!(exhaustive_min_cut(4, 3, |b| edge_list_cut(&edges, b)), Some(1));
    }
}
