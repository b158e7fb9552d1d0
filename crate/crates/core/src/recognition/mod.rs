//! Line graph and complement-of-line-graph recognition by forbidden induced
//! subgraph search.

mod catalog;
mod roots;

use serde::{Deserialize, Serialize};

use crate::graph::{are_isomorphic_within, contains_induced, Embedding, Graph, GraphJson};

pub use catalog::{ForbiddenCatalog, ForbiddenGraph};
pub use roots::{
    brute_force_root_search, root_graph_for_clique_union, DEFAULT_ROOT_SEARCH_BUDGET,
    MAX_ROOT_TARGET,
};

/// Vertex cap for the isomorphism check that validates a root witness.
pub const ROOT_VERIFY_CAP: usize = 256;

/// A forbidden catalog member found as an induced subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    /// 1-based catalog index.
    pub index: usize,
    pub embedding: Embedding,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecognitionVerdict {
    pub is_member: bool,
    pub witness: Option<Witness>,
    /// For line graph verdicts a graph `H` with `L(H)` isomorphic to the
    /// input; for complement verdicts one with `L(H)` isomorphic to the
    /// input's complement. Only attached after the isomorphism is checked.
    pub root_witness: Option<Graph>,
}

/// `{ "isMember": bool, "forbiddenIndex": int?, "embedding": [..]?, "rootWitness": graph? }`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VerdictJson {
    pub is_member: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub forbidden_index: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub embedding: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root_witness: Option<GraphJson>,
}

impl RecognitionVerdict {
    pub fn to_json(&self) -> VerdictJson {
        VerdictJson {
            is_member: self.is_member,
            forbidden_index: self.witness.as_ref().map(|w| w.index),
            embedding: self.witness.as_ref().map(|w| w.embedding.0.clone()),
            root_witness: self.root_witness.as_ref().map(Graph::to_json),
        }
    }
}

fn first_forbidden<'a>(
    g: &Graph,
    patterns: impl Iterator<Item = (usize, &'a Graph)>,
) -> Option<Witness> {
    patterns
        .filter_map(|(index, p)| {
            contains_induced(g, p).map(|embedding| Witness { index, embedding })
        })
        .next()
}

/// A clique-union root for `target`, kept only if its line graph really is
/// isomorphic to `target`.
fn verified_clique_root(target: &Graph) -> Option<Graph> {
    let root = root_graph_for_clique_union(target)?;
    let cap = ROOT_VERIFY_CAP.max(target.vertex_count());
    are_isomorphic_within(&root.line_graph(), target, cap)
        .unwrap_or(false)
        .then_some(root)
}

/// Decides whether `g` is the line graph of some graph.
pub fn is_line_graph(g: &Graph) -> RecognitionVerdict {
    let catalog = ForbiddenCatalog::get();
    let witness = first_forbidden(g, catalog.members().iter().map(|m| (m.index, &m.graph)));
    let is_member = witness.is_none();
    RecognitionVerdict {
        is_member,
        root_witness: if is_member {
            verified_clique_root(g)
        } else {
            None
        },
        witness,
    }
}

/// Decides whether `g` is the complement of a line graph by searching for
/// the complemented catalog members directly in `g`.
pub fn is_complement_of_line_graph(g: &Graph) -> RecognitionVerdict {
    let catalog = ForbiddenCatalog::get();
    let witness = first_forbidden(
        g,
        catalog.members().iter().map(|m| (m.index, &m.complement)),
    );
    let is_member = witness.is_none();
    RecognitionVerdict {
        is_member,
        root_witness: if is_member {
            verified_clique_root(&g.complement())
        } else {
            None
        },
        witness,
    }
}

/// Re-checks a verdict's witness against the catalog, independently of the
/// search that produced it.
pub fn witness_is_valid(host: &Graph, witness: &Witness, complemented: bool) -> bool {
    ForbiddenCatalog::get()
        .member(witness.index)
        .is_some_and(|m| {
            let pattern = if complemented {
                &m.complement
            } else {
                &m.graph
            };
            witness.embedding.is_induced(host, pattern)
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;
    use crate::supergraph::order_supergraph;

    fn s_of(spec: &str) -> Graph {
        order_supergraph(&spec.parse::<GroupSpec>().unwrap().build().unwrap()).graph
    }

    #[test]
    fn claw_is_not_a_line_graph() {
        let v = is_line_graph(&Graph::star(3));
        assert!(!v.is_member);
        let w = v.witness.unwrap();
        assert_eq!(w.index, 1);
        assert!(witness_is_valid(&Graph::star(3), &w, false));
    }

    #[test]
    fn complete_graphs_are_line_graphs() {
        for n in 0..=10 {
            let v = is_line_graph(&Graph::complete(n));
            assert!(v.is_member, "K_{n}");
            let root = v.root_witness.unwrap();
            assert!(are_isomorphic_within(&root.line_graph(), &Graph::complete(n), 16).unwrap());
        }
    }

    #[test]
    fn s_z6_is_not_a_line_graph() {
        let g = s_of("Z6");
        let v = is_line_graph(&g);
        assert!(!v.is_member);
        let w = v.witness.unwrap();
        assert_eq!(w.index, 3);
        assert!(witness_is_valid(&g, &w, false));
        let labels: Vec<String> = w.embedding.0.iter().map(|&u| g.label(u)).collect();
        assert!(labels.contains(&"e".to_string()), "{labels:?}");
    }

    #[test]
    fn complement_examples() {
        let z6 = is_complement_of_line_graph(&s_of("Z6"));
        assert!(z6.is_member);
        let s3 = is_complement_of_line_graph(&s_of("S3"));
        assert!(!s3.is_member);
        assert_eq!(s3.witness.as_ref().unwrap().index, 1);
        assert!(witness_is_valid(
            &s_of("S3"),
            s3.witness.as_ref().unwrap(),
            true
        ));
        assert!(!is_complement_of_line_graph(&Graph::star(3).complement()).is_member);
    }

    #[test]
    fn complement_root_for_complete_graph() {
        // K_n is the complement of L(nK_2)
        let v = is_complement_of_line_graph(&Graph::complete(5));
        assert!(v.is_member);
        let root = v.root_witness.unwrap();
        assert_eq!((root.vertex_count(), root.edge_count()), (10, 5));
    }

    #[test]
    fn null_graph_is_a_line_graph() {
        let v = is_line_graph(&Graph::null());
        assert!(v.is_member);
        assert!(v.root_witness.unwrap().is_null());
        assert!(is_complement_of_line_graph(&Graph::null()).is_member);
    }

    #[test]
    fn verdict_json() {
        let v = is_line_graph(&Graph::star(3));
        let s = serde_json::to_value(v.to_json()).unwrap();
        assert_eq!(s["isMember"], false);
        assert_eq!(s["forbiddenIndex"], 1);
        assert_eq!(s["embedding"].as_array().unwrap().len(), 4);
        assert!(s.get("rootWitness").is_none());
        let v = is_line_graph(&Graph::complete(2));
        let s = serde_json::to_value(v.to_json()).unwrap();
        assert_eq!(s["rootWitness"]["n"], 3);
    }
}
