//! Root graphs: graphs `H` with `L(H)` isomorphic to a given graph.

use crate::error::{Error, Result};
use crate::graph::{are_isomorphic, Graph, DEFAULT_ISOMORPHISM_CAP};

/// Largest target (vertex count) accepted by [`brute_force_root_search`].
pub const MAX_ROOT_TARGET: usize = 10;

/// Largest number of candidate edge sets the brute-force search may visit.
pub const DEFAULT_ROOT_SEARCH_BUDGET: u128 = 20_000_000;

/// For a disjoint union of cliques `K_{n_1} ∪ ... ∪ K_{n_k}`, the star
/// forest `K_{1,n_1} ∪ ... ∪ K_{1,n_k}`; `None` for anything else.
pub fn root_graph_for_clique_union(g: &Graph) -> Option<Graph> {
    g.clique_sizes().map(|sizes| Graph::star_forest(&sizes))
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Exhaustive root search. Tries every graph with `|V(g)|` edges and no
/// isolated vertices on `2..=max_vertices` vertices, fewest vertices first
/// and edge sets in lexicographic order, returning the first `H` with
/// `L(H)` isomorphic to `g`.
pub fn brute_force_root_search(g: &Graph, max_vertices: usize) -> Result<Option<Graph>> {
    let m = g.vertex_count();
    if m == 0 {
        return Ok(Some(Graph::null()));
    }
    if m > MAX_ROOT_TARGET.min(DEFAULT_ISOMORPHISM_CAP) {
        return Err(Error::Capacity(format!(
            "root search target has {m} vertices, limit is {MAX_ROOT_TARGET}"
        )));
    }
    // with no isolated vertices a root has at most 2m vertices
    let max_vertices = max_vertices.min(2 * m);
    let work: u128 = (2..=max_vertices as u128)
        .map(|v| binomial(v * (v - 1) / 2, m as u128))
        .sum();
    if work > DEFAULT_ROOT_SEARCH_BUDGET {
        return Err(Error::Capacity(format!(
            "root search over {work} edge sets exceeds budget {DEFAULT_ROOT_SEARCH_BUDGET}"
        )));
    }

    let mut target_deg = g.degrees();
    target_deg.sort_unstable();
    let target_edges = g.edge_count();

    for v in 2..=max_vertices {
        let pairs: Vec<(usize, usize)> = (0..v)
            .flat_map(|a| (a + 1..v).map(move |b| (a, b)))
            .collect();
        if pairs.len() < m {
            continue;
        }
        let mut pick: Vec<usize> = (0..m).collect();
        let mut deg = vec![0usize; v];
        loop {
            deg.iter_mut().for_each(|d| *d = 0);
            for &i in &pick {
                deg[pairs[i].0] += 1;
                deg[pairs[i].1] += 1;
            }
            let line_edges: usize = deg.iter().map(|&d| d * d.saturating_sub(1) / 2).sum();
            if deg.iter().all(|&d| d > 0) && line_edges == target_edges {
                let mut line_deg: Vec<usize> = pick
                    .iter()
                    .map(|&i| deg[pairs[i].0] + deg[pairs[i].1] - 2)
                    .collect();
                line_deg.sort_unstable();
                if line_deg == target_deg {
                    let edges: Vec<_> = pick.iter().map(|&i| pairs[i]).collect();
                    let h = Graph::from_edges(v, &edges)?;
                    if are_isomorphic(&h.line_graph(), g)? {
                        return Ok(Some(h));
                    }
                }
            }
            // next m-combination of pair indices
            let Some(i) = (0..m).rev().find(|&i| pick[i] < pairs.len() - m + i) else {
                break;
            };
            pick[i] += 1;
            for j in i + 1..m {
                pick[j] = pick[j - 1] + 1;
            }
        }
    }
    Ok(None)
}
