//! Local clustering by motif conductance.
//!
//! Around a seed node the pipeline grows a BFS ball, enumerates the
//! triangles touching it, contracts everything outside the ball into a single
//! node, and bipartitions the resulting graph or hypergraph model many times
//! under random balance constraints. The block holding the seed with the
//! lowest triangle-motif conductance is the answer.
//!
//! ```
//! use lmc::{local_motif_cluster, ClusterConfig, Duplicates, Graph};
//!
//! // Two 4-cliques joined by the edge 3-4.
//! let mut edges = Vec::new();
//! for base in [0, 4] {
//!     for a in base..base + 4 {
//!         for b in a + 1..base + 4 {
//!             edges.push((a, b, 1));
//!         }
//!     }
//! }
//! edges.push((3, 4, 1));
//! let g = Graph::from_edges(8, edges, Duplicates::KeepFirst);
//! let cfg = ClusterConfig { reps_alpha: 1, beta: 10, min_ball_size: None, ..Default::default() };
//! let r = local_motif_cluster(&g, 0, &cfg).unwrap();
//! assert_eq!(r.cluster, vec![0, 1, 2, 3]);
//! assert_eq!(r.phi_mu(), 0.0);
//! ```

pub mod appr;
pub mod audit;
pub mod ball;
pub mod bench;
pub mod driver;
pub mod error;
pub mod graph;
pub mod io;
pub mod local_search;
pub mod model;
pub mod motif;
pub mod partition;
pub mod scalar;

pub use appr::{appr_sweep, build_w, ApprParams, ApprResult, WeightedMotifGraph};
pub use ball::{grow_ball, Ball, ClosedHood};
pub use driver::{local_motif_cluster, ClusterConfig, ClusterResult};
pub use error::{Error, Result};
pub use graph::{Bipartition, Duplicates, Graph, Hypergraph, Weight};
pub use io::{load_graph, GraphFormat, LoadedGraph};
pub use model::{build_model, eval_motif_conductance, ModelKind, MotifModel};
pub use motif::{enumerate_triangles, MotifCollection};
pub use scalar::{MotifConductance, Scalar};

/// Floating-point conductance, the type reported by the CLI.
pub type Phi = f64;

/// Exact conductance.
pub type ExactPhi = num_rational::Rational64;
