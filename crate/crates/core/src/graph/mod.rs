//! Simple undirected graphs on `0..n` with bitset adjacency rows.

mod io;
mod search;

use std::fmt;

use crate::error::{Error, Result};

pub use io::GraphJson;
pub use search::{
    are_isomorphic, are_isomorphic_within, contains_induced, Embedding, DEFAULT_ISOMORPHISM_CAP,
};

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(WORD);
        Graph {
            n,
            words,
            adj: vec![0; n * words],
            labels: None,
        }
    }

    /// The vertex-empty graph.
    pub fn null() -> Self {
        Self::new(0)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Graph(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::Graph(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::Graph(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.adj[u * self.words + v / WORD] |= 1 << (v % WORD);
        self.adj[v * self.words + u / WORD] |= 1 << (u % WORD);
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn is_null(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.words + v / WORD] >> (v % WORD) & 1 == 1
    }

    pub(crate) fn row(&self, u: usize) -> &[u64] {
        &self.adj[u * self.words..(u + 1) * self.words]
    }

    pub(crate) fn word_count(&self) -> usize {
        self.words
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.row(u))
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| {
                self.neighbors(u)
                    .filter(move |&v| v > u)
                    .map(move |v| (u, v))
            })
            .collect()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of `u`, falling back to its index.
    pub fn label(&self, u: usize) -> String {
        match &self.labels {
            Some(l) => l[u].clone(),
            None => u.to_string(),
        }
    }

    fn label_vec(&self) -> Vec<String> {
        (0..self.n).map(|u| self.label(u)).collect()
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Vertices adjacent to every other vertex.
    pub fn dominating_vertices(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&u| self.degree(u) + 1 == self.n)
            .collect()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g.labels = self.labels.clone();
        g
    }

    /// Disjoint union; vertices of `gs[i]` follow those of `gs[i-1]`.
    pub fn disjoint_union(gs: &[Graph]) -> Graph {
        let total = gs.iter().map(|g| g.n).sum();
        let mut out = Graph::new(total);
        let mut offset = 0;
        for g in gs {
            for (u, v) in g.edges() {
                out.add_edge(u + offset, v + offset);
            }
            offset += g.n;
        }
        if gs.iter().any(|g| g.labels.is_some()) {
            out.labels = Some(gs.iter().flat_map(Graph::label_vec).collect());
        }
        out
    }

    /// Join: disjoint union plus every edge between `a` and `b`.
    pub fn join(a: &Graph, b: &Graph) -> Graph {
        let mut out = Graph::disjoint_union(&[a.clone(), b.clone()]);
        for u in 0..a.n {
            for v in 0..b.n {
                out.add_edge(u, a.n + v);
            }
        }
        out
    }

    /// Subgraph induced by `vs`, keeping the order of `vs`.
    pub fn induced_subgraph(&self, vs: &[usize]) -> Result<Graph> {
        let mut seen = vec![false; self.n];
        for &v in vs {
            if v >= self.n {
                return Err(Error::Argument(format!(
                    "vertex {v} out of range for graph on {} vertices",
                    self.n
                )));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::Argument(format!("vertex {v} listed twice")));
            }
        }
        let mut out = Graph::new(vs.len());
        for (i, &u) in vs.iter().enumerate() {
            for (j, &v) in vs.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    out.add_edge(i, j);
                }
            }
        }
        if let Some(l) = &self.labels {
            out.labels = Some(vs.iter().map(|&v| l[v].clone()).collect());
        }
        Ok(out)
    }

    /// Line graph: one vertex per edge (in [`Graph::edges`] order), labelled
    /// `u-v` by its endpoints; two are adjacent when the edges share an
    /// endpoint.
    pub fn line_graph(&self) -> Graph {
        let edges = self.edges();
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            incident[u].push(i);
            incident[v].push(i);
        }
        let mut out = Graph::new(edges.len());
        for at in &incident {
            for (k, &i) in at.iter().enumerate() {
                for &j in &at[k + 1..] {
                    out.add_edge(i, j);
                }
            }
        }
        out.labels = Some(
            edges
                .iter()
                .map(|&(u, v)| format!("{}-{}", self.label(u), self.label(v)))
                .collect(),
        );
        out
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn complete_bipartite(m: usize, n: usize) -> Graph {
        Graph::join(&Graph::new(m), &Graph::new(n))
    }

    /// `K_{1,n}` with the centre at vertex 0.
    pub fn star(n: usize) -> Graph {
        Graph::complete_bipartite(1, n)
    }

    pub fn path(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 1..n {
            g.add_edge(u - 1, u);
        }
        g
    }

    /// `C_n` for `n >= 3`; smaller `n` gives a path.
    pub fn cycle(n: usize) -> Graph {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.add_edge(0, n - 1);
        }
        g
    }

    pub fn star_forest(leaves: &[usize]) -> Graph {
        Graph::disjoint_union(&leaves.iter().map(|&k| Graph::star(k)).collect::<Vec<_>>())
    }

    /// If every component is a clique, their sizes in component order.
    pub fn clique_sizes(&self) -> Option<Vec<usize>> {
        let comps = self.components();
        comps
            .iter()
            .all(|c| c.iter().all(|&u| self.degree(u) + 1 == c.len()))
            .then(|| comps.iter().map(Vec::len).collect())
    }
}

/// Iterates the set bits of a bitset row.
pub(crate) fn bits(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(wi * WORD + b)
        })
    })
}
