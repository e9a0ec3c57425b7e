use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::{Graph, GraphError};

/// JSON adjacency form: `{"n": 4, "edges": [[0, 1], ...]}` with `i < j`, ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl Graph {
    pub fn to_edge_list(&self) -> EdgeList {
        EdgeList {
            n: self.n,
            edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn from_edge_list(list: &EdgeList) -> Result<Graph, GraphError> {
        let edges: Vec<_> = list.edges.iter().map(|&[u, v]| (u, v)).collect();
        Graph::from_edges(list.n, &edges)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_edge_list()).expect("edge list serializes")
    }

    pub fn from_json(text: &str) -> Result<Graph, GraphError> {
        let list: EdgeList =
            serde_json::from_str(text).map_err(|e| GraphError::Json(e.to_string()))?;
        Graph::from_edge_list(&list)
    }

    /// Graphviz text. Nodes are emitted in index order and each edge once,
    /// lower endpoint first; `labels` attaches the stored element labels.
    pub fn to_dot(&self, labels: bool) -> String {
        let mut out = String::from("graph G {\n");
        let names = self.labels.as_ref().filter(|_| labels);
        for v in 0..self.n {
            match names {
                Some(names) => {
                    let _ = writeln!(out, "  \"{v}\" [label=\"{}\"];", escape(&names[v]));
                }
                None if self.degree(v) == 0 => {
                    let _ = writeln!(out, "  \"{v}\";");
                }
                None => {}
            }
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  \"{u}\" -- \"{v}\";");
        }
        out.push_str("}\n");
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
