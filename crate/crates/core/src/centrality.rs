//! Per-node score vectors shared by every metric family.

use std::fmt;
use std::sync::Arc;

use crate::baselines::BaselineSpec;
use crate::metrics::MetricSpec;

/// Which computation produced a [`CentralityVector`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MetricKind {
    Distinctiveness(MetricSpec),
    Baseline(BaselineSpec),
}

impl fmt::Display for MetricKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MetricKind::Distinctiveness(s) => s.fmt(f),
            MetricKind::Baseline(b) => b.fmt(f),
        }
    }
}

/// One score per graph node, in graph node order.
#[derive(Debug, Clone, PartialEq)]
pub struct CentralityVector {
    kind: MetricKind,
    labels: Arc<[String]>,
    scores: Vec<f64>,
    isolates: Vec<usize>,
    normalized: bool,
}

impl CentralityVector {
    pub(crate) fn new(
        kind: MetricKind,
        labels: Arc<[String]>,
        scores: Vec<f64>,
        isolates: Vec<usize>,
    ) -> Self {
        debug_assert_eq!(labels.len(), scores.len());
        CentralityVector {
            kind,
            labels,
            scores,
            isolates,
            normalized: false,
        }
    }

    /// Builds a vector from externally supplied scores, e.g. for ranking
    /// arbitrary data.
    pub fn from_scores(kind: MetricKind, labels: Arc<[String]>, scores: Vec<f64>) -> Self {
        assert_eq!(labels.len(), scores.len(), "one score per label");
        Self::new(kind, labels, scores, Vec::new())
    }

    pub fn kind(&self) -> &MetricKind {
        &self.kind
    }

    pub fn labels(&self) -> &Arc<[String]> {
        &self.labels
    }

    pub fn scores(&self) -> &[f64] {
        &self.scores
    }

    pub fn len(&self) -> usize {
        self.scores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scores.is_empty()
    }

    pub fn get(&self, label: &str) -> Option<f64> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|i| self.scores[i])
    }

    /// Node indices scored 0 because they have no incident edge.
    pub fn isolate_indices(&self) -> &[usize] {
        &self.isolates
    }

    pub fn isolates(&self) -> impl Iterator<Item = &str> {
        self.isolates.iter().map(|&i| self.labels[i].as_str())
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    pub(crate) fn into_normalized(mut self, scores: Vec<f64>) -> Self {
        self.scores = scores;
        self.normalized = true;
        self
    }

    /// Column name used in result tables, e.g. `d1@2`, `d3_in@1_norm`, `wbtw`.
    pub fn column_name(&self) -> String {
        let mut name = self.kind.to_string();
        if self.normalized {
            name.push_str("_norm");
        }
        name
    }
}
