//! Graph export: adjacency rows, Graphviz DOT, and JSON edge lists.

use serde::{Deserialize, Serialize};

use crate::connection::ConnectionSet;
use crate::error::{Error, Result};
use crate::group::{AbelianGroup, GroupElement};
use crate::json::to_json;

/// Undirected edges `{g, g + c}` with `g` before `g + c` in canonical order.
pub fn edges(c: &ConnectionSet) -> Vec<(GroupElement, GroupElement)> {
    let group = c.group();
    let mut out = Vec::new();
    for g in group.elements() {
        for s in c.iter() {
            let h = &g + s;
            if group.index_of(&g) < group.index_of(&h) {
                out.push((g.clone(), h));
            }
        }
    }
    out.sort();
    out
}

/// One line of space-separated 0/1 entries per vertex.
pub fn to_adjacency(c: &ConnectionSet) -> String {
    let group = c.group();
    let mut out = String::new();
    for g in group.elements() {
        let row: Vec<&str> = group
            .elements()
            .map(|h| if c.contains(&(&h - &g)) { "1" } else { "0" })
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn to_dot(c: &ConnectionSet) -> String {
    let mut out = format!("graph \"X({}, C)\" {{\n", c.group());
    for g in c.group().elements() {
        out.push_str(&format!("  \"{g}\";\n"));
    }
    for (g, h) in edges(c) {
        out.push_str(&format!("  \"{g}\" -- \"{h}\";\n"));
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    group: String,
    set: Vec<Vec<u64>>,
    edges: Vec<[Vec<u64>; 2]>,
}

/// `{group, set, edges}` with elements as coordinate arrays.
pub fn to_json_graph(c: &ConnectionSet) -> String {
    let doc = GraphJson {
        group: c.group().to_string(),
        set: c.iter().map(|g| g.coords().to_vec()).collect(),
        edges: edges(c)
            .into_iter()
            .map(|(g, h)| [g.coords().to_vec(), h.coords().to_vec()])
            .collect(),
    };
    to_json(&doc)
}

/// Reads back a document written by [`to_json_graph`].
pub fn from_json_graph(text: &str) -> Result<ConnectionSet> {
    let parse_err = |reason: String| Error::Parse {
        what: "graph json",
        input: text.chars().take(80).collect(),
        reason,
    };
    let doc: GraphJson = serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))?;
    let group: AbelianGroup = doc.group.parse()?;
    let set = doc
        .set
        .into_iter()
        .map(|coords| group.element(coords))
        .collect::<Result<Vec<_>>>()?;
    let c = ConnectionSet::new(&group, set)?;
    for [g, h] in doc.edges {
        let (g, h) = (group.element(g)?, group.element(h)?);
        if !c.contains(&(&h - &g)) {
            return Err(parse_err(format!("edge {g} -- {h} is not generated by the connection set")));
        }
    }
    Ok(c)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Adjacency,
    Dot,
    Json,
}

impl std::str::FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "adjacency" => Ok(ExportFormat::Adjacency),
            "dot" => Ok(ExportFormat::Dot),
            "json" => Ok(ExportFormat::Json),
            _ => Err(Error::Parse {
                what: "export format",
                input: s.to_string(),
                reason: "expected adjacency, dot or json".into(),
            }),
        }
    }
}

pub fn export(c: &ConnectionSet, format: ExportFormat) -> String {
    match format {
        ExportFormat::Adjacency => to_adjacency(c),
        ExportFormat::Dot => to_dot(c),
        ExportFormat::Json => to_json_graph(c),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(g: &str, s: &str) -> ConnectionSet {
        ConnectionSet::parse(&g.parse().unwrap(), s).unwrap()
    }

    #[test]
    fn single_edge_dot() {
        let dot = to_dot(&set("Z2", "{1}"));
        assert_eq!(dot, "graph \"X(Z2, C)\" {\n  \"(0)\";\n  \"(1)\";\n  \"(0)\" -- \"(1)\";\n}\n");
    }

    #[test]
    fn four_cycle_adjacency() {
        assert_eq!(to_adjacency(&set("Z4", "{1,3}")), "0 1 0 1\n1 0 1 0\n0 1 0 1\n1 0 1 0\n");
    }

    #[test]
    fn edge_count_is_half_the_degree_sum() {
        let c = set("Z6", "{1,5,3}");
        assert_eq!(edges(&c).len(), 9);
        assert!(edges(&ConnectionSet::empty(&"Z3".parse().unwrap())).is_empty());
    }

    #[test]
    fn json_round_trip() {
        let c = set("Z4xZ3", "{(2,0),(1,1),(3,2)}");
        let text = to_json_graph(&c);
        assert_eq!(from_json_graph(&text).unwrap(), c);
        assert!(from_json_graph("{}").is_err());
        let forged = text.replacen("\"edges\": [", "\"edges\": [\n    [[0,0],[0,1]],", 1);
        assert!(from_json_graph(&forged).is_err());
    }

    #[test]
    fn formats_parse() {
        assert_eq!("DOT".parse::<ExportFormat>().unwrap(), ExportFormat::Dot);
        assert!("png".parse::<ExportFormat>().is_err());
    }
}
