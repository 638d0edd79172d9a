use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{BuildReport, Graph, GraphBuilder};

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn fields(line: &str) -> Vec<&str> {
    if line.contains('\t') {
        line.split('\t').map(str::trim).collect()
    } else {
        line.split_whitespace().collect()
    }
}

/// Parses a tab-separated edge list.
///
/// Format, one record per line:
///
/// ```text
/// undirected            optional directive, first significant line only
/// # comment
/// A\tB\t2               source, target, weight (\t is a tab)
/// A\tC                  weight defaults to 1
/// Z                     a lone label declares a node (possibly isolated)
/// ```
///
/// Fields are split on tabs; lines without a tab are split on whitespace.
/// Weights use `.` as the decimal separator regardless of locale.
pub fn parse_edge_list(text: &str) -> Result<(Graph, BuildReport)> {
    let mut builder: Option<GraphBuilder> = None;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if builder.is_none() {
            match line {
                "directed" | "undirected" => {
                    builder = Some(GraphBuilder::new(line == "directed"));
                    continue;
                }
                _ if fields(line).len() == 1 => {
                    return Err(parse_error(lineno, format!("unknown directive `{line}`")));
                }
                _ => builder = Some(GraphBuilder::new(false)),
            }
        }
        let b = builder.as_mut().expect("initialised above");
        let f = fields(line);
        match f.as_slice() {
            [label] => {
                if *label == "directed" || *label == "undirected" {
                    return Err(parse_error(lineno, "direction directive must be the first line"));
                }
                b.isolate(label).map_err(|e| parse_error(lineno, e.to_string()))?;
            }
            [source, target] | [source, target, ""] => {
                b.edge(source, target, 1.0)
                    .map_err(|e| parse_error(lineno, e.to_string()))?;
            }
            [source, target, weight] => {
                let w = weight
                    .parse::<f64>()
                    .map_err(|_| parse_error(lineno, format!("weight `{weight}` is not a number")))?;
                b.edge(source, target, w)
                    .map_err(|e| parse_error(lineno, e.to_string()))?;
            }
            _ => {
                return Err(parse_error(
                    lineno,
                    format!("expected `source<TAB>target[<TAB>weight]`, got {} fields", f.len()),
                ))
            }
        }
    }
    builder.ok_or(Error::EmptyEdgeList)?.build()
}

fn format_weight(w: f64) -> String {
    if w.fract() == 0.0 && w.abs() < 1e15 {
        format!("{}", w as i64)
    } else {
        format!("{w}")
    }
}

/// Writes `graph` in the format read by [`parse_edge_list`]. Isolated nodes
/// are emitted as single-label lines so a round trip preserves them.
pub fn write_edge_list(graph: &Graph) -> String {
    let mut out = String::new();
    out.push_str(if graph.is_directed() { "directed\n" } else { "undirected\n" });
    for i in 0..graph.node_count() {
        if graph.is_isolated(i) {
            let _ = writeln!(out, "{}", graph.label(i));
        }
    }
    for (u, v, w) in graph.edges() {
        let _ = writeln!(out, "{}\t{}\t{}", graph.label(u), graph.label(v), format_weight(w));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::datasets::{builtin_dataset, Dataset};

    #[test]
    fn default_weight_and_direction() {
        let (g, _) = parse_edge_list("A\tB").unwrap();
        assert!(!g.is_directed());
        assert_eq!(g.weight(0, 1), Some(1.0));
        let (g, _) = parse_edge_list("directed\nA B 2.5\n").unwrap();
        assert!(g.is_directed());
        assert_eq!(g.weight(0, 1), Some(2.5));
        assert_eq!(g.weight(1, 0), None);
    }

    #[test]
    fn rejects_with_line_numbers() {
        let err = parse_edge_list("A\tB\t-1").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }), "{err}");
        let err = parse_edge_list("# c\nA\tB\t1\nA\tC\tx").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
        let err = parse_edge_list("bidirected\nA\tB").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }), "{err}");
        let err = parse_edge_list("A\tB\nundirected").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        assert!(parse_edge_list("A\tB\t1,5").is_err());
        assert!(parse_edge_list("A\tB\t1\t2").is_err());
        assert_eq!(parse_edge_list("# nothing\n").unwrap_err(), Error::EmptyEdgeList);
    }

    #[test]
    fn declared_isolates_survive_round_trip() {
        let (g, report) = parse_edge_list("undirected\nZ\nA\tB\t3\n").unwrap();
        assert_eq!(report.isolates, vec!["Z".to_string()]);
        let (h, _) = parse_edge_list(&write_edge_list(&g)).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn datasets_round_trip() {
        for d in Dataset::ALL {
            let g = builtin_dataset(d);
            let (h, _) = parse_edge_list(&write_edge_list(&g)).unwrap();
            assert_eq!(g, h, "{d}");
        }
    }
}
