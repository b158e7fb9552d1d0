//! The nine minimal non-line graphs.
//!
//! A graph is a line graph exactly when none of these occurs as an induced
//! subgraph (Beineke, 1970). They are listed in ascending vertex count with
//! the claw first, so the first hit during recognition is also a smallest
//! one. Members 1, 3, 5 and 6 are the shapes that show up inside order
//! supergraphs (claw, `K_5 - e`, `K_4` with a pendant path hung off an
//! edge, `K_2 ∨ 2K_2`) and keep their conventional positions; the order of
//! the other five is this crate's own.

use std::sync::LazyLock;

use crate::graph::Graph;

pub struct ForbiddenGraph {
    /// 1-based position in the catalog.
    pub index: usize,
    pub name: &'static str,
    pub graph: Graph,
    pub complement: Graph,
}

pub struct ForbiddenCatalog {
    members: Vec<ForbiddenGraph>,
}

/// (name, vertex count, edges)
type Pattern = (&'static str, usize, &'static [(usize, usize)]);

const PATTERNS: [Pattern; 9] = [
    ("claw K_{1,3}", 4, &[(0, 1), (0, 2), (0, 3)]),
    (
        "K_{2,3} plus an edge",
        5,
        &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 4)],
    ),
    (
        "K_5 - e",
        5,
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (1, 2),
            (1, 3),
            (1, 4),
            (2, 3),
            (2, 4),
        ],
    ),
    (
        "diamond with a pendant at each tip",
        6,
        &[(0, 1), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (4, 5)],
    ),
    (
        "K_4 with a triangle and pendant on one edge",
        6,
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (1, 2),
            (1, 3),
            (1, 5),
            (2, 3),
            (2, 5),
            (4, 5),
        ],
    ),
    (
        "K_2 join 2K_2",
        6,
        &[
            (0, 1),
            (0, 2),
            (0, 5),
            (1, 2),
            (1, 3),
            (1, 4),
            (1, 5),
            (2, 5),
            (3, 4),
            (3, 5),
            (4, 5),
        ],
    ),
    (
        "C_5 plus a vertex on three consecutive vertices",
        6,
        &[
            (0, 1),
            (0, 4),
            (0, 5),
            (1, 2),
            (1, 5),
            (2, 3),
            (2, 5),
            (3, 4),
        ],
    ),
    (
        "two diamonds sharing an edge",
        6,
        &[
            (0, 2),
            (0, 3),
            (0, 4),
            (0, 5),
            (1, 2),
            (1, 3),
            (2, 3),
            (3, 4),
            (4, 5),
        ],
    ),
    (
        "wheel W_5",
        6,
        &[
            (0, 1),
            (0, 4),
            (0, 5),
            (1, 2),
            (1, 5),
            (2, 3),
            (2, 5),
            (3, 4),
            (3, 5),
            (4, 5),
        ],
    ),
];

static CATALOG: LazyLock<ForbiddenCatalog> = LazyLock::new(|| ForbiddenCatalog {
    members: PATTERNS
        .iter()
        .enumerate()
        .map(|(i, &(name, n, edges))| {
            let graph = Graph::from_edges(n, edges).expect("catalog edges are valid");
            ForbiddenGraph {
                index: i + 1,
                name,
                complement: graph.complement(),
                graph,
            }
        })
        .collect(),
});

impl ForbiddenCatalog {
    pub fn get() -> &'static ForbiddenCatalog {
        &CATALOG
    }

    pub fn members(&self) -> &[ForbiddenGraph] {
        &self.members
    }

    /// Member by 1-based index.
    pub fn member(&self, index: usize) -> Option<&ForbiddenGraph> {
        index.checked_sub(1).and_then(|i| self.members.get(i))
    }
}
