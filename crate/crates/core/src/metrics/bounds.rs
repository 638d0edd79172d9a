//! Analytic lower/upper bounds and bound-based normalisation.
//!
//! Bounds hold for undirected graphs without isolates and with all weights
//! in `[m, M]`, `m >= 1`. The D3 pair is a loose envelope, not attainable.

use super::{check_alpha, Direction, MetricId};
use crate::centrality::{CentralityVector, MetricKind};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundsRecord {
    pub metric: MetricId,
    pub alpha: f64,
    pub n: usize,
    pub min_weight: f64,
    pub max_weight: f64,
    pub lower: f64,
    pub upper: f64,
}

impl BoundsRecord {
    pub fn contains(&self, score: f64, rel_tol: f64) -> bool {
        let slack = rel_tol * self.lower.abs().max(self.upper.abs()).max(1.0);
        score >= self.lower - slack && score <= self.upper + slack
    }
}

/// Degree threshold above which a neighbour contributes negatively to D1/D2:
/// `(n-1)^(1/α)`.
pub fn negative_contribution_threshold(n: usize, alpha: f64) -> f64 {
    ((n as f64) - 1.0).powf(1.0 / alpha)
}

/// Analytic `(lower, upper)` for `metric` on an `n`-node graph with weights in
/// `[min_weight, max_weight]`.
pub fn bounds(
    metric: MetricId,
    n: usize,
    min_weight: f64,
    max_weight: f64,
    alpha: f64,
) -> Result<BoundsRecord> {
    if n < 2 {
        return Err(Error::InvalidBoundsParams(format!("n = {n} (need n >= 2)")));
    }
    if !(min_weight.is_finite() && max_weight.is_finite() && min_weight > 0.0 && min_weight <= max_weight)
    {
        return Err(Error::InvalidBoundsParams(format!(
            "weights m = {min_weight}, M = {max_weight} (need 0 < m <= M)"
        )));
    }
    check_alpha(alpha, false)?;

    let (m, big_m) = (min_weight, max_weight);
    let nf = n as f64;
    let n1 = nf - 1.0;
    let n2 = nf - 2.0;
    let log_n1 = n1.log10();

    let (lower, upper) = match metric {
        MetricId::D1 => ((1.0 - alpha) * big_m * n1 * log_n1, big_m * n1 * log_n1),
        MetricId::D2 => ((1.0 - alpha) * n1 * log_n1, n1 * log_n1),
        MetricId::D3 => {
            // Smallest possible log argument of a single term.
            let ratio = (n2 * big_m + m) / (n2 * big_m.powf(alpha) + 1.0);
            let lower = if n2 * (big_m.powf(alpha) - big_m) < m - 1.0 {
                // ratio > 1: every term is positive, one term is the minimum.
                m * ratio.log10()
            } else {
                n1 * big_m * ratio.log10()
            };
            let upper = n1 * big_m * (nf * n1 * big_m / 2.0).log10();
            (lower, upper)
        }
        MetricId::D4 => (m / (1.0 + n2 * (big_m / m).powf(alpha)), n1 * big_m),
        MetricId::D5 => (1.0 / n1.powf(alpha), n1),
    };

    Ok(BoundsRecord {
        metric,
        alpha,
        n,
        min_weight,
        max_weight,
        lower,
        upper,
    })
}

/// Maps each score to `(score - lower) / (upper - lower)`. Isolates stay 0.
pub fn normalize(vector: &CentralityVector, bounds: &BoundsRecord) -> Result<CentralityVector> {
    let spec = match vector.kind() {
        MetricKind::Distinctiveness(spec) => *spec,
        other => {
            return Err(Error::BoundsMismatch(format!(
                "{other} is not a distinctiveness metric"
            )))
        }
    };
    if vector.is_normalized() {
        return Err(Error::BoundsMismatch("vector is already normalized".into()));
    }
    if spec.direction != Direction::Undirected {
        return Err(Error::BoundsMismatch(
            "analytic bounds cover undirected graphs only".into(),
        ));
    }
    if spec.metric != bounds.metric || spec.alpha != bounds.alpha {
        return Err(Error::BoundsMismatch(format!(
            "vector is {spec}, bounds are for {}@{}",
            bounds.metric, bounds.alpha
        )));
    }
    if bounds.n != vector.len() {
        return Err(Error::BoundsMismatch(format!(
            "bounds computed for n = {}, vector has {} nodes",
            bounds.n,
            vector.len()
        )));
    }
    let span = bounds.upper - bounds.lower;
    if span == 0.0 {
        return Err(Error::DegenerateBounds(bounds.lower));
    }
    let isolates = vector.isolate_indices();
    let scores = vector
        .scores()
        .iter()
        .enumerate()
        .map(|(i, &s)| {
            if isolates.contains(&i) {
                0.0
            } else {
                (s - bounds.lower) / span
            }
        })
        .collect();
    Ok(vector.clone().into_normalized(scores))
}
