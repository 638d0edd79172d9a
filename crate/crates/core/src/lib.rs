//! Distinctiveness centrality for weighted, optionally directed graphs.
//!
//! The crate computes the five distinctiveness metrics D1 to D5 together
//! with their analytic bounds, a set of classic baseline centralities for
//! comparison, rank statistics, a Barabási–Albert generator and a handful of
//! embedded reference networks.
//!
//! ```
//! use distinctiveness::{builtin_dataset, Dataset, Direction, Distinctiveness};
//!
//! let g = builtin_dataset(Dataset::ToyUndirected);
//! let d1 = Distinctiveness::new(&g, 1.0, Direction::Undirected).unwrap().d1();
//! assert!((d1.get("B").unwrap() - 5.882).abs() < 5e-4);
//! ```

pub mod baselines;
pub mod centrality;
pub mod datasets;
pub mod error;
pub mod graph;
pub mod io;
pub mod metrics;
pub mod profile;
pub mod stats;

pub use baselines::{compute_baseline, BaselineId, BaselineSpec};
pub use centrality::{CentralityVector, MetricKind};
pub use datasets::{barabasi_albert, builtin_dataset, builtin_dataset_by_name, Dataset, GeneratorParams};
pub use error::{Error, Result};
pub use graph::{build_graph, BuildReport, Graph, GraphBuilder};
pub use metrics::{
    bounds, compute, normalize, BoundsRecord, Direction, Distinctiveness, MetricId, MetricSpec,
};
pub use profile::{profile, validate, DegreeProfile, ValidationReport};
pub use stats::{correlation_sweep, rank, spearman, CorrelationSweep, Peer, RankVector, TieRule};
