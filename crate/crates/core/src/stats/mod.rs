//! Rankings, Spearman correlation and correlation-versus-alpha sweeps.

mod rank;
mod spearman;
mod sweep;

pub use rank::{rank, rank_scores, RankVector, TieRule, TIE_REL_EPS};
pub use spearman::{pearson, spearman, spearman_ranks};
pub use sweep::{
    correlation_sweep, sweep_peers, CorrelationSweep, Peer, SweepEvent, SweepEventKind, SweepRow,
};
