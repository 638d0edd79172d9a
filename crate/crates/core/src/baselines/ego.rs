//! Burt's structural-hole measures on the ego network.
//!
//! With `p_ij = w_ij / s_i` the share of `i`'s tie strength invested in `j`:
//!
//! * constraint `c(i) = Σ_j (p_ij + Σ_q p_iq · p_qj)²`
//! * effective size `E(i) = Σ_j (1 - Σ_q p_iq · w_jq / max_k w_jk)`
//!
//! Unweighted mode sets every weight to 1, under which effective size
//! reduces to `n - 2t/n` for `n` alters sharing `t` ties.

use super::{require_undirected, vector, BaselineId};
use crate::centrality::CentralityVector;
use crate::error::Result;
use crate::graph::Graph;

fn tie(graph: &Graph, u: usize, v: usize, weighted: bool) -> f64 {
    match graph.weight(u, v) {
        Some(w) if weighted => w,
        Some(_) => 1.0,
        None => 0.0,
    }
}

fn strength(graph: &Graph, u: usize, weighted: bool) -> f64 {
    if weighted {
        graph.neighbors(u).map(|(_, w)| w).sum()
    } else {
        graph.degree(u) as f64
    }
}

pub fn burt_constraint(graph: &Graph, weighted: bool) -> Result<CentralityVector> {
    require_undirected(graph, "constraint")?;
    let n = graph.node_count();
    let strengths: Vec<f64> = (0..n).map(|i| strength(graph, i, weighted)).collect();
    let share = |u: usize, v: usize| {
        if strengths[u] == 0.0 {
            0.0
        } else {
            tie(graph, u, v, weighted) / strengths[u]
        }
    };
    let scores = (0..n)
        .map(|i| {
            graph
                .neighbors(i)
                .map(|(j, _)| {
                    let indirect: f64 = graph.neighbors(i).map(|(q, _)| share(i, q) * share(q, j)).sum();
                    let local = share(i, j) + indirect;
                    local * local
                })
                .sum()
        })
        .collect();
    Ok(vector(graph, BaselineId::Constraint, weighted, scores))
}

pub fn effective_size(graph: &Graph, weighted: bool) -> Result<CentralityVector> {
    require_undirected(graph, "effective size")?;
    let n = graph.node_count();
    let strengths: Vec<f64> = (0..n).map(|i| strength(graph, i, weighted)).collect();
    let max_tie: Vec<f64> = (0..n)
        .map(|i| {
            graph
                .neighbors(i)
                .map(|(_, w)| if weighted { w } else { 1.0 })
                .fold(0.0, f64::max)
        })
        .collect();
    let scores = (0..n)
        .map(|i| {
            graph
                .neighbors(i)
                .map(|(j, _)| {
                    let redundancy: f64 = graph
                        .neighbors(i)
                        .map(|(q, _)| {
                            tie(graph, i, q, weighted) / strengths[i] * tie(graph, j, q, weighted)
                                / max_tie[j]
                        })
                        .sum();
                    1.0 - redundancy
                })
                .sum()
        })
        .collect();
    Ok(vector(graph, BaselineId::EffectiveSize, weighted, scores))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::datasets::{builtin_dataset, Dataset};
    use crate::graph::build_graph;

    fn near(a: Option<f64>, b: f64, tol: f64) -> bool {
        (a.unwrap() - b).abs() <= tol
    }

    #[test]
    fn toy_constraint() {
        let g = builtin_dataset(Dataset::ToyUndirected);
        let c = burt_constraint(&g, false).unwrap();
        assert_eq!(c.get("E"), Some(1.0));
        assert_eq!(c.get("F"), Some(1.0));
        assert!(near(c.get("B"), 0.406, 5e-4));
        assert!(near(c.get("A"), 0.5, 1e-12));
        let c = burt_constraint(&g, true).unwrap();
        assert!(near(c.get("A"), 0.592, 5e-4));
    }

    #[test]
    fn k2_constraint_is_one() {
        let g = build_graph([("a", "b", 7.0)], false).unwrap().0;
        for weighted in [false, true] {
            assert_eq!(burt_constraint(&g, weighted).unwrap().scores(), &[1.0, 1.0]);
        }
    }

    #[test]
    fn open_ego_constraint_is_inverse_degree() {
        let edges: Vec<_> = (0..5).map(|k| ("h".to_string(), format!("l{k}"), 1.0)).collect();
        let g = build_graph(edges, false).unwrap().0;
        assert!(near(burt_constraint(&g, false).unwrap().get("h"), 0.2, 1e-15));
        assert_eq!(effective_size(&g, false).unwrap().get("h"), Some(5.0));
    }

    #[test]
    fn toy_effective_size() {
        let g = builtin_dataset(Dataset::ToyUndirected);
        let e = effective_size(&g, false).unwrap();
        assert!(near(e.get("B"), 3.5, 1e-12));
        assert!(near(e.get("A"), 2.0, 1e-12));
        assert!(near(e.get("C"), 1.0, 1e-12));
        let e = effective_size(&g, true).unwrap();
        assert!(near(e.get("B"), 3.636, 5e-4));
        assert!(near(e.get("C"), 1.6, 1e-12));
    }
}
