use std::collections::HashMap;
use std::sync::Arc;

use super::rank::{rank_scores, TieRule};
use crate::centrality::CentralityVector;
use crate::error::{Error, Result};

/// Pearson correlation; `None` when either input has zero variance.
pub fn pearson(x: &[f64], y: &[f64]) -> Option<f64> {
    assert_eq!(x.len(), y.len());
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (a, b) in x.iter().zip(y) {
        let (dx, dy) = (a - mx, b - my);
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if sxx == 0.0 || syy == 0.0 {
        return None;
    }
    Some((sxy / (sxx * syy).sqrt()).clamp(-1.0, 1.0))
}

/// Spearman's rho on already computed average ranks.
pub fn spearman_ranks(x: &[f64], y: &[f64]) -> Option<f64> {
    pearson(x, y)
}

/// Spearman rank correlation (Pearson on average-tie ranks).
///
/// The vectors may list nodes in different orders; they are aligned by label.
pub fn spearman(x: &CentralityVector, y: &CentralityVector) -> Result<f64> {
    let n = x.len();
    if n != y.len() {
        return Err(Error::NodeSetMismatch(format!("{} vs {} nodes", n, y.len())));
    }
    if n < 3 {
        return Err(Error::TooFewNodes(n));
    }
    let y_scores: Vec<f64> = if Arc::ptr_eq(x.labels(), y.labels()) || x.labels() == y.labels() {
        y.scores().to_vec()
    } else {
        let pos: HashMap<&str, usize> = y
            .labels()
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();
        x.labels()
            .iter()
            .map(|l| {
                pos.get(l.as_str())
                    .map(|&i| y.scores()[i])
                    .ok_or_else(|| Error::NodeSetMismatch(format!("`{l}` missing from {}", y.kind())))
            })
            .collect::<Result<_>>()?
    };
    let rx = rank_scores(x.scores(), TieRule::Average);
    let ry = rank_scores(&y_scores, TieRule::Average);
    if rx.iter().all(|&r| r == rx[0]) {
        return Err(Error::ConstantRanking(x.kind().to_string()));
    }
    pearson(&rx, &ry).ok_or_else(|| Error::ConstantRanking(y.kind().to_string()))
}
