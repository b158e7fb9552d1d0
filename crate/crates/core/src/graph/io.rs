use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

/// Wire form `{ "n": 3, "edges": [[0, 1]], "labels": ["a", "b", "c"] }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.vertex_count(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            labels: g.labels().map(<[String]>::to_vec),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(j: GraphJson) -> Result<Graph> {
        for &[u, v] in &j.edges {
            if u >= v {
                return Err(Error::Graph(format!("edge [{u}, {v}] must satisfy i < j")));
            }
        }
        let edges: Vec<_> = j.edges.iter().map(|&[u, v]| (u, v)).collect();
        let g = Graph::from_edges(j.n, &edges)?;
        match j.labels {
            Some(l) => g.with_labels(l),
            None => Ok(g),
        }
    }
}

impl Graph {
    pub fn to_json(&self) -> GraphJson {
        GraphJson::from(self)
    }

    pub fn from_json_str(s: &str) -> Result<Graph> {
        serde_json::from_str::<GraphJson>(s)?.try_into()
    }

    /// Undirected DOT with vertex labels.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph {} {{", dot_id(name));
        for u in 0..self.vertex_count() {
            let _ = writeln!(out, "  {u} [label={}];", dot_id(&self.label(u)));
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}

fn dot_id(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}
