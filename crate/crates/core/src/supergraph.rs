//! Power graph and order supergraphs of a finite group.
//!
//! In `S(G)` two distinct elements are adjacent when one order divides the
//! other. `S*(G)` drops the identity and `S**(G)` drops every dominating
//! vertex of `S(G)`. Deleted vertices are compacted away, and the
//! `element_of` map keeps track of which group element each vertex is.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphJson};
use crate::group::FiniteGroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Variant {
    Power,
    Supergraph,
    ProperSupergraph,
    ReducedSupergraph,
}

impl Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Power => "power",
            Variant::Supergraph => "supergraph",
            Variant::ProperSupergraph => "proper",
            Variant::ReducedSupergraph => "reduced",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "power" | "P" => Variant::Power,
            "supergraph" | "S" => Variant::Supergraph,
            "proper" | "properSupergraph" | "S*" => Variant::ProperSupergraph,
            "reduced" | "reducedSupergraph" | "S**" => Variant::ReducedSupergraph,
            _ => {
                return Err(Error::Argument(format!(
                    "unknown variant {s:?} (expected power, supergraph, proper or reduced)"
                )))
            }
        })
    }
}

/// A graph whose vertices are group elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGroupGraph {
    pub graph: Graph,
    /// Group element index of each vertex, ascending.
    pub element_of: Vec<usize>,
    /// Element order of each vertex.
    pub order_of: Vec<u64>,
    pub variant: Variant,
}

/// JSON form: the graph schema plus per-vertex elements and orders.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledGroupGraphJson {
    #[serde(flatten)]
    pub graph: GraphJson,
    pub elements: Vec<String>,
    pub orders: Vec<u64>,
    pub variant: Variant,
}

impl LabeledGroupGraph {
    pub fn to_json(&self) -> LabeledGroupGraphJson {
        LabeledGroupGraphJson {
            graph: self.graph.to_json(),
            elements: self
                .graph
                .labels()
                .map(<[String]>::to_vec)
                .unwrap_or_default(),
            orders: self.order_of.clone(),
            variant: self.variant,
        }
    }
}

fn divides_either(a: u64, b: u64) -> bool {
    a.is_multiple_of(b) || b.is_multiple_of(a)
}

/// Divisibility graph restricted to the listed elements.
fn divisibility_graph(g: &FiniteGroup, keep: Vec<usize>, variant: Variant) -> LabeledGroupGraph {
    let orders: Vec<u64> = keep.iter().map(|&x| g.element_orders()[x]).collect();
    let mut graph = Graph::new(keep.len());
    for i in 0..keep.len() {
        for j in i + 1..keep.len() {
            if divides_either(orders[i], orders[j]) {
                graph.add_edge(i, j);
            }
        }
    }
    let labels = keep.iter().map(|&x| g.label(x).to_string()).collect();
    LabeledGroupGraph {
        graph: graph.with_labels(labels).expect("one label per vertex"),
        element_of: keep,
        order_of: orders,
        variant,
    }
}

pub fn order_supergraph(g: &FiniteGroup) -> LabeledGroupGraph {
    divisibility_graph(g, (0..g.order()).collect(), Variant::Supergraph)
}

pub fn proper_supergraph(g: &FiniteGroup) -> LabeledGroupGraph {
    let keep = (0..g.order()).filter(|&x| x != g.identity()).collect();
    divisibility_graph(g, keep, Variant::ProperSupergraph)
}

/// `S**(G)`: the dominating vertices of `S(G)` are found by scanning
/// adjacency, not from the exponent.
pub fn reduced_supergraph(g: &FiniteGroup) -> LabeledGroupGraph {
    let s = order_supergraph(g);
    let dom = dominating_vertices(&s);
    let keep = (0..g.order())
        .filter(|x| dom.binary_search(x).is_err())
        .collect();
    divisibility_graph(g, keep, Variant::ReducedSupergraph)
}

/// `x ~ y` iff `x in <y>` or `y in <x>`.
pub fn power_graph(g: &FiniteGroup) -> LabeledGroupGraph {
    let n = g.order();
    let mut member = vec![false; n * n];
    for x in 0..n {
        for y in g.cyclic_subgroup(x) {
            member[x * n + y] = true;
        }
    }
    let mut graph = Graph::new(n);
    for x in 0..n {
        for y in x + 1..n {
            if member[x * n + y] || member[y * n + x] {
                graph.add_edge(x, y);
            }
        }
    }
    LabeledGroupGraph {
        graph: graph
            .with_labels(g.labels().to_vec())
            .expect("one label per element"),
        element_of: (0..n).collect(),
        order_of: g.element_orders().to_vec(),
        variant: Variant::Power,
    }
}

pub fn build_variant(g: &FiniteGroup, variant: Variant) -> LabeledGroupGraph {
    match variant {
        Variant::Power => power_graph(g),
        Variant::Supergraph => order_supergraph(g),
        Variant::ProperSupergraph => proper_supergraph(g),
        Variant::ReducedSupergraph => reduced_supergraph(g),
    }
}

/// Dominating vertices of `s`, as group element indices.
pub fn dominating_vertices(s: &LabeledGroupGraph) -> Vec<usize> {
    s.graph
        .dominating_vertices()
        .into_iter()
        .map(|v| s.element_of[v])
        .collect()
}

/// Whether `S(G)` has a dominating vertex other than the identity, decided
/// from element orders: some element has order `exp(G)`.
pub fn is_dominatable(g: &FiniteGroup) -> bool {
    g.order() > 1 && g.attains_exponent()
}
