//! Whole-graph checks for clusters returned by the local pipeline.

use crate::graph::Graph;
use crate::motif::MotifCollection;
use crate::scalar::MotifConductance;

/// Motif cut and motif degrees of `cluster` and its complement, counted over
/// all triangles of `g`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GlobalMotifCut {
    pub cut: u64,
    pub inside: u64,
    pub outside: u64,
}

impl GlobalMotifCut {
    /// `cut / min(inside, outside)`.
    pub fn conductance(&self) -> MotifConductance {
        MotifConductance::new(self.cut as i64, self.inside.min(self.outside) as i64)
    }

    /// True if the cluster side is no heavier than the rest, which is when
    /// the local models measure the same quantity as the global definition.
    pub fn cluster_is_smaller_side(&self) -> bool {
        self.inside <= self.outside
    }
}

/// Evaluates `cluster` against precomputed global triangles `all`.
pub fn global_motif_cut(g: &Graph, all: &MotifCollection, cluster: &[usize]) -> GlobalMotifCut {
    let mut mark = vec![false; g.n()];
    for &v in cluster {
        mark[v] = true;
    }
    let mut cut = 0;
    let (mut inside, mut outside) = (0, 0);
    for occ in all.occurrences() {
        let k = occ.iter().filter(|&&v| mark[v]).count() as u64;
        if k > 0 && k < occ.len() as u64 {
            cut += 1;
        }
        inside += k;
        outside += occ.len() as u64 - k;
    }
    GlobalMotifCut { cut, inside, outside }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Duplicates;
    use crate::motif::enumerate_triangles;

    #[test]
    fn bowtie() {
        // Two triangles sharing node 2.
        let g = Graph::from_edges(
            5,
            [(0, 1, 1), (0, 2, 1), (1, 2, 1), (2, 3, 1), (2, 4, 1), (3, 4, 1)],
            Duplicates::KeepFirst,
        );
        let all = enumerate_triangles(&g, &[true; 5]);
        let c = global_motif_cut(&g, &all, &[0, 1]);
        assert_eq!(c, GlobalMotifCut { cut: 1, inside: 2, outside: 4 });
        assert_eq!(c.conductance().to_f64(), 0.5);
        assert!(c.cluster_is_smaller_side());
    }
}
