//! Reference computations for the integration tests. Nothing here calls the
//! library's own predicates: element orders come from repeated
//! multiplication and line graphs are recognized by Krausz partitions.

#![allow(dead_code)]

use ordergraph::{FiniteGroup, Graph};

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn is_prime_power_or_one(n: u64) -> bool {
    prime_factors(n).len() <= 1
}

pub fn is_square_free(n: u64) -> bool {
    (2..=n)
        .take_while(|p| p * p <= n)
        .all(|p| !n.is_multiple_of(p * p))
}

pub struct Facts {
    pub order: usize,
    pub identity: usize,
    pub orders: Vec<u64>,
}

impl Facts {
    pub fn of(g: &FiniteGroup) -> Facts {
        let identity = (0..g.order())
            .find(|&e| (0..g.order()).all(|x| g.mul(e, x) == x))
            .expect("group has an identity");
        let orders = (0..g.order())
            .map(|x| {
                let (mut y, mut k) = (x, 1);
                while y != identity {
                    y = g.mul(y, x);
                    k += 1;
                }
                k
            })
            .collect();
        Facts {
            order: g.order(),
            identity,
            orders,
        }
    }

    pub fn primes(&self) -> Vec<u64> {
        prime_factors(self.order as u64)
    }

    pub fn eppo(&self) -> bool {
        self.orders.iter().all(|&o| is_prime_power_or_one(o))
    }

    pub fn p_group(&self) -> bool {
        self.primes().len() <= 1
    }

    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1, |acc, &o| {
            let (mut a, mut b) = (acc, o);
            while b != 0 {
                (a, b) = (b, a % b);
            }
            acc / a * o
        })
    }

    pub fn dominatable(&self) -> bool {
        self.order > 1 && self.orders.contains(&self.exponent())
    }

    pub fn is_z6(&self) -> bool {
        self.order == 6 && self.orders.contains(&6)
    }
}

/// Is there a set of cliques partitioning the edges with every vertex in at
/// most two of them?
pub fn krausz_line_graph(g: &Graph) -> bool {
    let n = g.vertex_count();
    let mut used = vec![vec![false; n]; n];
    let mut load = vec![0u8; n];
    krausz(g, &mut used, &mut load)
}

fn krausz(g: &Graph, used: &mut [Vec<bool>], load: &mut [u8]) -> bool {
    let Some((u, v)) = g.edges().into_iter().find(|&(u, v)| !used[u][v]) else {
        return true;
    };
    if load[u] == 2 || load[v] == 2 {
        return false;
    }
    // candidates that can join a clique with u and v through unused edges
    let extra: Vec<usize> = (0..g.vertex_count())
        .filter(|&w| w != u && w != v)
        .filter(|&w| g.has_edge(u, w) && g.has_edge(v, w) && !used[u][w] && !used[v][w])
        .collect();
    for mask in 0u32..(1 << extra.len()) {
        let mut clique = vec![u, v];
        clique.extend(
            (0..extra.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| extra[i]),
        );
        let ok = clique.iter().enumerate().all(|(i, &a)| {
            load[a] < 2
                && clique[i + 1..]
                    .iter()
                    .all(|&b| g.has_edge(a, b) && !used[a.min(b)][a.max(b)])
        });
        if !ok {
            continue;
        }
        set(&clique, used, load, true);
        if krausz(g, used, load) {
            return true;
        }
        set(&clique, used, load, false);
    }
    false
}

fn set(clique: &[usize], used: &mut [Vec<bool>], load: &mut [u8], on: bool) {
    for (i, &a) in clique.iter().enumerate() {
        if on {
            load[a] += 1;
        } else {
            load[a] -= 1;
        }
        for &b in &clique[i + 1..] {
            used[a.min(b)][a.max(b)] = on;
        }
    }
}

pub fn has_induced_claw(g: &Graph) -> bool {
    let n = g.vertex_count();
    (0..n).any(|c| {
        let nb: Vec<usize> = g.neighbors(c).collect();
        nb.iter().enumerate().any(|(i, &a)| {
            nb[i + 1..].iter().enumerate().any(|(j, &b)| {
                !g.has_edge(a, b)
                    && nb[i + 1 + j + 1..]
                        .iter()
                        .any(|&d| !g.has_edge(a, d) && !g.has_edge(b, d))
            })
        })
    })
}
