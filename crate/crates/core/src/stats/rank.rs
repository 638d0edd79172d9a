use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::centrality::CentralityVector;
use crate::error::{Error, Result};

/// Scores closer than this (relative) are treated as tied, so that sums that
/// agree in exact arithmetic but differ in the last bits share a rank.
pub const TIE_REL_EPS: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TieRule {
    /// `k` tied items share the best rank; the next item skips `k` places.
    Competition,
    /// Tied items share the mean of the positions they occupy.
    Average,
}

impl fmt::Display for TieRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TieRule::Competition => "competition",
            TieRule::Average => "average",
        })
    }
}

impl FromStr for TieRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "competition" | "min" | "competition-min" => Ok(TieRule::Competition),
            "average" | "mean" => Ok(TieRule::Average),
            _ => Err(Error::UnknownMetric(format!("tie rule {s}"))),
        }
    }
}

/// Descending ranks (1 = highest score).
#[derive(Debug, Clone, PartialEq)]
pub struct RankVector {
    pub rule: TieRule,
    pub labels: Arc<[String]>,
    pub ranks: Vec<f64>,
}

impl RankVector {
    pub fn get(&self, label: &str) -> Option<f64> {
        self.labels.iter().position(|l| l == label).map(|i| self.ranks[i])
    }
}

pub(crate) fn tied(a: f64, b: f64) -> bool {
    a == b || (a - b).abs() <= TIE_REL_EPS * a.abs().max(b.abs())
}

/// Ranks `scores` in descending order under `rule`.
pub fn rank_scores(scores: &[f64], rule: TieRule) -> Vec<f64> {
    let mut order: Vec<usize> = (0..scores.len()).collect();
    order.sort_by(|&a, &b| scores[b].total_cmp(&scores[a]).then(a.cmp(&b)));
    let mut ranks = vec![0.0; scores.len()];
    let mut start = 0;
    while start < order.len() {
        let head = scores[order[start]];
        let mut end = start + 1;
        while end < order.len() && tied(head, scores[order[end]]) {
            end += 1;
        }
        let r = match rule {
            TieRule::Competition => (start + 1) as f64,
            TieRule::Average => (start + 1 + end) as f64 / 2.0,
        };
        for &i in &order[start..end] {
            ranks[i] = r;
        }
        start = end;
    }
    ranks
}

pub fn rank(vector: &CentralityVector, rule: TieRule) -> RankVector {
    RankVector {
        rule,
        labels: Arc::clone(vector.labels()),
        ranks: rank_scores(vector.scores(), rule),
    }
}
