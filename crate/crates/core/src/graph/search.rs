//! Induced-subgraph and isomorphism search by backtracking.
//!
//! Pattern vertices are placed one at a time, most-constrained first. The
//! candidate set for the next pattern vertex is the intersection of the host
//! rows (or their complements) of the already-placed vertices, so every
//! partial map is already an induced embedding. Host vertices that are twins
//! are interchangeable, and only the lowest unused member of a twin class is
//! ever tried.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{bits, Graph, WORD};
use crate::error::{Error, Result};

/// Largest graph [`are_isomorphic`] accepts.
pub const DEFAULT_ISOMORPHISM_CAP: usize = 16;

/// Injective map from pattern vertices to host vertices; `0[i]` is the image
/// of pattern vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Embedding(pub Vec<usize>);

impl Embedding {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Checks injectivity and that adjacency and non-adjacency are both
    /// preserved.
    pub fn is_induced(&self, host: &Graph, pattern: &Graph) -> bool {
        let m = &self.0;
        if m.len() != pattern.vertex_count() || m.iter().any(|&v| v >= host.vertex_count()) {
            return false;
        }
        for i in 0..m.len() {
            for j in i + 1..m.len() {
                if m[i] == m[j] || pattern.has_edge(i, j) != host.has_edge(m[i], m[j]) {
                    return false;
                }
            }
        }
        true
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Induced,
    Isomorphism,
}

/// For each host vertex, the next-lower member of its twin class.
fn twin_predecessors(host: &Graph) -> Vec<Option<usize>> {
    let n = host.vertex_count();
    let mut prev = vec![None; n];
    let mut open: HashMap<&[u64], Vec<usize>> = HashMap::new();
    let mut closed: HashMap<Vec<u64>, Vec<usize>> = HashMap::new();
    for u in 0..n {
        open.entry(host.row(u)).or_default().push(u);
        let mut row = host.row(u).to_vec();
        row[u / WORD] |= 1 << (u % WORD);
        closed.entry(row).or_default().push(u);
    }
    // a vertex cannot have both a true twin and a false twin, so the
    // nontrivial classes of the two relations are disjoint
    for class in closed.values().chain(open.values()) {
        for w in class.windows(2) {
            prev[w[1]] = Some(w[0]);
        }
    }
    prev
}

/// Placement order: greedily the vertex with most already-placed
/// neighbours, ties broken by degree then index.
fn placement_order(pattern: &Graph) -> Vec<usize> {
    let p = pattern.vertex_count();
    let deg = pattern.degrees();
    let mut placed = vec![false; p];
    let mut order = Vec::with_capacity(p);
    for _ in 0..p {
        let next = (0..p)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let links = order.iter().filter(|&&u| pattern.has_edge(u, v)).count();
                (links, deg[v], std::cmp::Reverse(v))
            })
            .expect("unplaced vertex remains");
        placed[next] = true;
        order.push(next);
    }
    order
}

struct Search<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    mode: Mode,
    order: Vec<usize>,
    host_deg: Vec<usize>,
    pattern_deg: Vec<usize>,
    twin_prev: Vec<Option<usize>>,
    used: Vec<bool>,
    map: Vec<usize>,
    full_mask: Vec<u64>,
}

impl<'a> Search<'a> {
    fn new(host: &'a Graph, pattern: &'a Graph, mode: Mode) -> Self {
        let h = host.vertex_count();
        let words = host.word_count();
        let mut full_mask = vec![u64::MAX; words];
        if !h.is_multiple_of(WORD) {
            full_mask[words - 1] = (1u64 << (h % WORD)) - 1;
        }
        Search {
            host,
            pattern,
            mode,
            order: placement_order(pattern),
            host_deg: host.degrees(),
            pattern_deg: pattern.degrees(),
            twin_prev: twin_predecessors(host),
            used: vec![false; h],
            map: vec![usize::MAX; pattern.vertex_count()],
            full_mask,
        }
    }

    fn candidates(&self, depth: usize) -> Vec<u64> {
        let pv = self.order[depth];
        let mut cand = self.full_mask.clone();
        for &q in &self.order[..depth] {
            let row = self.host.row(self.map[q]);
            let adjacent = self.pattern.has_edge(pv, q);
            for (c, &r) in cand.iter_mut().zip(row) {
                *c &= if adjacent { r } else { !r };
            }
        }
        cand
    }

    fn run(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let pv = self.order[depth];
        let need = self.pattern_deg[pv];
        let cand = self.candidates(depth);
        for v in bits(&cand) {
            if self.used[v] {
                continue;
            }
            let fits = match self.mode {
                Mode::Induced => self.host_deg[v] >= need,
                Mode::Isomorphism => self.host_deg[v] == need,
            };
            if !fits || self.twin_prev[v].is_some_and(|w| !self.used[w]) {
                continue;
            }
            self.used[v] = true;
            self.map[pv] = v;
            if self.run(depth + 1) {
                return true;
            }
            self.used[v] = false;
        }
        self.map[pv] = usize::MAX;
        false
    }
}

/// Some induced embedding of `pattern` into `host`, if one exists.
pub fn contains_induced(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    if pattern.vertex_count() > host.vertex_count() {
        return None;
    }
    let mut s = Search::new(host, pattern, Mode::Induced);
    s.run(0).then_some(Embedding(s.map))
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    are_isomorphic_within(a, b, DEFAULT_ISOMORPHISM_CAP)
}

/// Isomorphism test refusing graphs with more than `cap` vertices.
pub fn are_isomorphic_within(a: &Graph, b: &Graph, cap: usize) -> Result<bool> {
    let n = a.vertex_count();
    if n.max(b.vertex_count()) > cap {
        return Err(Error::Capacity(format!(
            "isomorphism test on {} and {} vertices exceeds cap {cap}",
            n,
            b.vertex_count()
        )));
    }
    if n != b.vertex_count() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    let (mut da, mut db) = (a.degrees(), b.degrees());
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(false);
    }
    Ok(Search::new(b, a, Mode::Isomorphism).run(0))
}
