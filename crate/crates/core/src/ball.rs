//! Ball selection around the seed by fixed-depth breadth-first search, and
//! extraction of the subgraph induced by the ball's closed neighborhood.

use rustc_hash::{FxHashMap, FxHashSet};

use crate::graph::Graph;

/// Subgraph of `G` induced by `N[S]`, with local IDs.
///
/// Local IDs `0..s_len` are the members of `S` in the order they were given;
/// the boundary `N(S) \ S` follows in ascending global order.
#[derive(Clone, Debug)]
pub struct ClosedHood {
    pub graph: Graph,
    pub local_to_global: Vec<usize>,
    pub global_to_local: FxHashMap<usize, usize>,
    pub s_len: usize,
}

impl ClosedHood {
    pub fn in_s(&self, local: usize) -> bool {
        local < self.s_len
    }

    /// Membership mask of `S` over local IDs.
    pub fn s_mask(&self) -> Vec<bool> {
        (0..self.graph.n()).map(|v| v < self.s_len).collect()
    }

    pub fn boundary_len(&self) -> usize {
        self.graph.n() - self.s_len
    }
}

#[derive(Clone, Debug)]
pub struct Ball {
    pub seed: usize,
    /// Number of BFS layers actually included, after any minimum-size growth.
    pub layers: usize,
    /// Members of `S` in BFS order, seed first.
    pub members: Vec<usize>,
    /// True iff the BFS exhausted the seed's component, i.e. `N[S] = S`.
    pub frontier_complete: bool,
    pub closed_hood: ClosedHood,
}

impl Ball {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Collects all nodes within `layers` BFS hops of `seed`. When `min_size` is
/// set, whole additional layers are added while the ball is smaller than
/// `min_size` and the component is not exhausted.
pub fn grow_ball(g: &Graph, seed: usize, layers: usize, min_size: Option<usize>) -> Ball {
    assert!(seed < g.n(), "seed {seed} out of range");
    assert!(layers >= 1, "at least one layer is required");

    let mut visited: FxHashSet<usize> = FxHashSet::default();
    visited.insert(seed);
    let mut members = vec![seed];
    let mut frontier = vec![seed];
    let mut depth = 0;

    let next_layer = |frontier: &[usize], visited: &mut FxHashSet<usize>| {
        let mut next = Vec::new();
        for &v in frontier {
            for &w in g.neighbors(v) {
                if visited.insert(w) {
                    next.push(w);
                }
            }
        }
        next
    };

    let mut next = next_layer(&frontier, &mut visited);
    loop {
        let wants_more = depth < layers || min_size.is_some_and(|min| members.len() < min);
        if !wants_more || next.is_empty() {
            break;
        }
        depth += 1;
        members.extend_from_slice(&next);
        frontier = next;
        next = next_layer(&frontier, &mut visited);
    }

    let frontier_complete = next.is_empty();
    let closed_hood = induced_closed_hood(g, &members);
    Ball {
        seed,
        layers: depth,
        members,
        frontier_complete,
        closed_hood,
    }
}

/// Subgraph induced by `N[members]`, including edges between boundary nodes.
pub fn induced_closed_hood(g: &Graph, members: &[usize]) -> ClosedHood {
    assert!(!members.is_empty(), "ball must not be empty");
    let mut global_to_local: FxHashMap<usize, usize> = FxHashMap::default();
    let mut local_to_global = Vec::with_capacity(members.len());
    for &v in members {
        if let std::collections::hash_map::Entry::Vacant(e) = global_to_local.entry(v) {
            e.insert(local_to_global.len());
            local_to_global.push(v);
        }
    }
    let s_len = local_to_global.len();

    let mut boundary: Vec<usize> = Vec::new();
    for &v in &local_to_global[..s_len] {
        for &w in g.neighbors(v) {
            if let std::collections::hash_map::Entry::Vacant(e) = global_to_local.entry(w) {
                e.insert(usize::MAX);
                boundary.push(w);
            }
        }
    }
    boundary.sort_unstable();
    for w in boundary {
        global_to_local.insert(w, local_to_global.len());
        local_to_global.push(w);
    }

    let n = local_to_global.len();
    let mut xadj = Vec::with_capacity(n + 1);
    xadj.push(0);
    let mut adjncy = Vec::new();
    let mut adjwgt = Vec::new();
    let mut vwgt = Vec::with_capacity(n);
    let mut row: Vec<(usize, i64)> = Vec::new();
    for &gv in &local_to_global {
        row.clear();
        row.extend(
            g.edges_of(gv)
                .filter_map(|(gw, w)| global_to_local.get(&gw).map(|&lw| (lw, w))),
        );
        row.sort_unstable_by_key(|&(lw, _)| lw);
        adjncy.extend(row.iter().map(|&(lw, _)| lw));
        adjwgt.extend(row.iter().map(|&(_, w)| w));
        xadj.push(adjncy.len());
        vwgt.push(g.node_weight(gv));
    }
    let graph = Graph::from_csr_unchecked(xadj, adjncy, adjwgt, vwgt);
    ClosedHood {
        graph,
        local_to_global,
        global_to_local,
        s_len,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Duplicates;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i, 1)), Duplicates::KeepFirst)
    }

    #[test]
    fn star_from_center() {
        let g = Graph::from_edges(6, (1..6).map(|i| (0, i, 1)), Duplicates::KeepFirst);
        let b = grow_ball(&g, 0, 1, None);
        assert_eq!(b.len(), 6);
        assert!(b.frontier_complete);
        assert_eq!(b.closed_hood.boundary_len(), 0);
    }

    #[test]
    fn path_levels() {
        let g = path(10);
        let b = grow_ball(&g, 0, 2, None);
        assert_eq!(b.members, vec![0, 1, 2]);
        assert!(!b.frontier_complete);
        assert_eq!(b.closed_hood.local_to_global, vec![0, 1, 2, 3]);
        assert_eq!(b.layers, 2);
    }

    #[test]
    fn min_size_adds_whole_layers_until_exhausted() {
        let g = path(10);
        let b = grow_ball(&g, 0, 1, Some(4));
        assert_eq!(b.len(), 4);
        assert_eq!(b.layers, 3);
        let b = grow_ball(&g, 0, 1, Some(100));
        assert_eq!(b.len(), 10);
        assert!(b.frontier_complete);
    }

    #[test]
    fn isolated_seed() {
        let g = Graph::from_edges(3, [(1, 2, 1)], Duplicates::KeepFirst);
        let b = grow_ball(&g, 0, 3, Some(100));
        assert_eq!(b.members, vec![0]);
        assert!(b.frontier_complete);
        assert_eq!(b.layers, 0);
    }

    #[test]
    fn hood_of_triangle_node() {
        let g = Graph::from_edges(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)], Duplicates::KeepFirst);
        let h = induced_closed_hood(&g, &[1]);
        assert_eq!(h.graph.n(), 3);
        assert_eq!(h.graph.m(), 3);
        assert_eq!(h.local_to_global, vec![1, 0, 2]);
        for (l, &gv) in h.local_to_global.iter().enumerate() {
            assert_eq!(h.global_to_local[&gv], l);
        }
    }

    #[test]
    fn hood_of_everything_is_the_graph() {
        let g = path(5);
        let all: Vec<usize> = (0..5).collect();
        let h = induced_closed_hood(&g, &all);
        assert_eq!(h.graph, g);
    }
}
