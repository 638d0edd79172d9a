//! Reader for the small subset of GEXF 1.x needed to load static weighted
//! graphs: `<node id label>`, `<edge source target weight>` and the graph's
//! `defaultedgetype`. Everything else is skipped and reported as a warning.

use std::collections::{BTreeSet, HashMap};

use roxmltree::{Document, Node};

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

#[derive(Debug, Clone)]
pub struct GexfGraph {
    pub graph: Graph,
    /// One entry per kind of ignored feature, sorted.
    pub warnings: Vec<String>,
}

fn child<'a, 'i>(node: Node<'a, 'i>, name: &str) -> Option<Node<'a, 'i>> {
    node.children().find(|c| c.is_element() && c.tag_name().name() == name)
}

fn elements<'a, 'i>(node: Node<'a, 'i>, name: &'a str) -> impl Iterator<Item = Node<'a, 'i>> + 'a {
    node.children()
        .filter(move |c| c.is_element() && c.tag_name().name() == name)
}

fn note_extras(node: Node<'_, '_>, allowed: &[&str], warnings: &mut BTreeSet<String>) {
    for a in node.attributes() {
        if !allowed.contains(&a.name()) {
            warnings.insert(format!(
                "ignored attribute `{}` on <{}>",
                a.name(),
                node.tag_name().name()
            ));
        }
    }
    for c in node.children().filter(|c| c.is_element()) {
        let what = match c.tag_name().name() {
            "nodes" | "edges" => "hierarchy (nested nodes/edges)".to_string(),
            "attvalues" => "attribute values".to_string(),
            "spells" => "dynamics (spells)".to_string(),
            "parents" => "hierarchy (parents)".to_string(),
            other => format!("<{other}> element"),
        };
        let prefix = match c.tag_name().namespace() {
            Some(ns) if ns.contains("viz") => "visual attributes".to_string(),
            _ => what,
        };
        warnings.insert(format!("ignored {prefix} inside <{}>", node.tag_name().name()));
    }
}

pub fn parse_gexf_minimal(text: &str) -> Result<GexfGraph> {
    let doc = Document::parse(text).map_err(|e| Error::Gexf(e.to_string()))?;
    let root = doc.root_element();
    if root.tag_name().name() != "gexf" {
        return Err(Error::Gexf(format!(
            "root element is <{}>, expected <gexf>",
            root.tag_name().name()
        )));
    }
    let graph_el = child(root, "graph").ok_or_else(|| Error::Gexf("missing <graph>".into()))?;
    let mut warnings = BTreeSet::new();
    for c in root.children().filter(|c| c.is_element()) {
        if !matches!(c.tag_name().name(), "graph" | "meta") {
            warnings.insert(format!("ignored <{}> element", c.tag_name().name()));
        }
    }

    let directed = match graph_el.attribute("defaultedgetype").unwrap_or("undirected") {
        "directed" => true,
        "undirected" => false,
        "mutual" => {
            warnings.insert("defaultedgetype `mutual` read as undirected".into());
            false
        }
        other => return Err(Error::Gexf(format!("unknown defaultedgetype `{other}`"))),
    };
    if graph_el.attribute("mode") == Some("dynamic") {
        warnings.insert("dynamic mode ignored; graph read as static".into());
    }
    for c in graph_el.children().filter(|c| c.is_element()) {
        if !matches!(c.tag_name().name(), "nodes" | "edges") {
            warnings.insert(format!("ignored <{}> element inside <graph>", c.tag_name().name()));
        }
    }

    let mut builder = GraphBuilder::new(directed);
    let mut ids: HashMap<String, usize> = HashMap::new();
    let mut pending: Vec<(String, String)> = Vec::new();
    if let Some(nodes) = child(graph_el, "nodes") {
        for n in elements(nodes, "node") {
            let id = n
                .attribute("id")
                .ok_or_else(|| Error::Gexf("<node> without id".into()))?;
            let label = n.attribute("label").filter(|l| !l.is_empty()).unwrap_or(id);
            note_extras(n, &["id", "label"], &mut warnings);
            pending.push((id.to_owned(), label.to_owned()));
        }
    }
    // Labels name nodes only when they are unique; otherwise fall back to ids.
    let unique: BTreeSet<&str> = pending.iter().map(|(_, l)| l.as_str()).collect();
    let use_labels = unique.len() == pending.len();
    if !use_labels {
        warnings.insert("node labels are not unique; using node ids".into());
    }
    for (id, label) in &pending {
        if ids.contains_key(id) {
            return Err(Error::Gexf(format!("duplicate node id `{id}`")));
        }
        let idx = builder.node(if use_labels { label } else { id })?;
        ids.insert(id.clone(), idx);
    }

    if let Some(edges) = child(graph_el, "edges") {
        for e in elements(edges, "edge") {
            let endpoint = |attr: &str| -> Result<usize> {
                let id = e
                    .attribute(attr)
                    .ok_or_else(|| Error::Gexf(format!("<edge> without {attr}")))?;
                ids.get(id)
                    .copied()
                    .ok_or_else(|| Error::Gexf(format!("edge {attr} `{id}` is not a declared node")))
            };
            let (u, v) = (endpoint("source")?, endpoint("target")?);
            let weight = match e.attribute("weight") {
                None => 1.0,
                Some(w) => w
                    .trim()
                    .parse::<f64>()
                    .map_err(|_| Error::Gexf(format!("edge weight `{w}` is not a number")))?,
            };
            if let Some(t) = e.attribute("type") {
                let same = (t == "directed") == directed;
                if !same {
                    warnings.insert(format!("per-edge type `{t}` ignored; using graph default"));
                }
            }
            note_extras(
                e,
                &["id", "source", "target", "weight", "type", "label"],
                &mut warnings,
            );
            builder.edge_by_index(u, v, weight)?;
        }
    }

    let (graph, _) = builder.build()?;
    Ok(GexfGraph {
        graph,
        warnings: warnings.into_iter().collect(),
    })
}
