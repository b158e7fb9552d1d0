//! Finite groups backed by a dense Cayley table.
//!
//! Every group in the toolkit, whether built from a family presentation or
//! read from a table file, ends up as a [`FiniteGroup`]: an `n x n` table of
//! element indices plus the identity and a display label per element. Element
//! orders are computed once at construction, since every predicate downstream
//! is a function of them.

mod families;
mod spec;
mod table;

use std::collections::{BTreeMap, BTreeSet};

use crate::arith;
use crate::error::{Axiom, Error, Result};

pub use spec::{GroupSpec, MAX_PERMUTATION_DEGREE};
pub use table::parse_table;

/// Largest table size on which associativity is checked by default.
pub const DEFAULT_ASSOCIATIVITY_BOUND: usize = 256;

/// Largest group order any constructor will build.
pub const MAX_GROUP_ORDER: usize = 2048;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    identity: usize,
    labels: Vec<String>,
    orders: Vec<u64>,
}

/// Multiset of element orders of a group.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OrderProfile {
    pub counts: BTreeMap<u64, usize>,
}

impl OrderProfile {
    /// The set of distinct element orders.
    pub fn order_set(&self) -> BTreeSet<u64> {
        self.counts.keys().copied().collect()
    }

    pub fn count(&self, order: u64) -> usize {
        self.counts.get(&order).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }
}

impl FiniteGroup {
    /// Builds a group from a row-major table, validating closure, identity,
    /// inverses and (for `n <= assoc_bound`) associativity.
    pub fn from_table(
        table: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
        assoc_bound: usize,
    ) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::Validation {
                axiom: Axiom::Identity,
                detail: "empty table has no identity".into(),
            });
        }
        if n > MAX_GROUP_ORDER {
            return Err(Error::Capacity(format!(
                "group order {n} exceeds limit {MAX_GROUP_ORDER}"
            )));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Validation {
                    axiom: Axiom::Closure,
                    detail: format!("row {i} has {} entries, expected {n}", row.len()),
                });
            }
            for (j, &x) in row.iter().enumerate() {
                if x >= n {
                    return Err(Error::Validation {
                        axiom: Axiom::Closure,
                        detail: format!("entry ({i}, {j}) = {x} is not an element index"),
                    });
                }
                flat.push(x as u32);
            }
        }
        let labels = match labels {
            Some(l) if l.len() != n => {
                return Err(Error::Argument(format!(
                    "{} labels supplied for {n} elements",
                    l.len()
                )))
            }
            Some(l) => l,
            None => (0..n).map(|i| i.to_string()).collect(),
        };
        Self::from_flat(n, flat, labels, assoc_bound)
    }

    pub(crate) fn from_flat(
        n: usize,
        table: Vec<u32>,
        labels: Vec<String>,
        assoc_bound: usize,
    ) -> Result<Self> {
        debug_assert_eq!(table.len(), n * n);
        let at = |i: usize, j: usize| table[i * n + j] as usize;

        let identity = (0..n)
            .find(|&e| (0..n).all(|j| at(e, j) == j && at(j, e) == j))
            .ok_or_else(|| Error::Validation {
                axiom: Axiom::Identity,
                detail: "no element acts as a two-sided identity".into(),
            })?;

        for i in 0..n {
            let right: Vec<usize> = (0..n).filter(|&j| at(i, j) == identity).collect();
            if right.len() != 1 {
                return Err(Error::Validation {
                    axiom: Axiom::Inverses,
                    detail: format!(
                        "element {i} has {} right inverses, expected exactly one",
                        right.len()
                    ),
                });
            }
            let j = right[0];
            if at(j, i) != identity {
                return Err(Error::Validation {
                    axiom: Axiom::Inverses,
                    detail: format!("right inverse {j} of element {i} is not a left inverse"),
                });
            }
        }

        if n <= assoc_bound {
            for i in 0..n {
                for j in 0..n {
                    let ij = at(i, j);
                    for k in 0..n {
                        if at(ij, k) != at(i, at(j, k)) {
                            return Err(Error::Validation {
                                axiom: Axiom::Associativity,
                                detail: format!("(x{i} x{j}) x{k} != x{i} (x{j} x{k})"),
                            });
                        }
                    }
                }
            }
        }

        let mut group = FiniteGroup {
            order: n,
            table,
            identity,
            labels,
            orders: Vec::new(),
        };
        group.orders = (0..n)
            .map(|x| group.compute_order(x))
            .collect::<Result<_>>()?;
        Ok(group)
    }

    fn compute_order(&self, x: usize) -> Result<u64> {
        let mut k = 1;
        let mut y = x;
        while y != self.identity {
            y = self.mul(y, x);
            k += 1;
            if k > self.order {
                // only reachable for non-associative tables above the check bound
                return Err(Error::Validation {
                    axiom: Axiom::Associativity,
                    detail: format!("powers of element {x} never reach the identity"),
                });
            }
        }
        Ok(k as u64)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order)
            .find(|&b| self.mul(a, b) == self.identity)
            .expect("validated group has inverses")
    }

    pub fn pow(&self, a: usize, k: u64) -> usize {
        let k = k % self.orders[a];
        (0..k).fold(self.identity, |acc, _| self.mul(acc, a))
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn table_row(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.table[a * self.order..(a + 1) * self.order]
            .iter()
            .map(|&x| x as usize)
    }

    /// Order of element `x`: the least `k >= 1` with `x^k = e`.
    pub fn element_order(&self, x: usize) -> Result<u64> {
        self.orders.get(x).copied().ok_or_else(|| {
            Error::Argument(format!(
                "element index {x} out of range for group of order {}",
                self.order
            ))
        })
    }

    /// Element orders indexed by element.
    pub fn element_orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1, |acc, &o| arith::lcm(acc, o))
    }

    pub fn order_profile(&self) -> OrderProfile {
        let mut counts = BTreeMap::new();
        for &o in &self.orders {
            *counts.entry(o).or_insert(0) += 1;
        }
        OrderProfile { counts }
    }

    /// Primes dividing `|G|`, ascending.
    pub fn prime_divisors(&self) -> Vec<u64> {
        arith::prime_divisors(self.order as u64)
    }

    pub fn is_eppo(&self) -> bool {
        self.orders.iter().all(|&o| arith::is_prime_power_or_one(o))
    }

    /// `|G|` is a prime power; the trivial group counts.
    pub fn is_p_group(&self) -> bool {
        arith::is_prime_power_or_one(self.order as u64)
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.commute(a, b)))
    }

    /// Nilpotency via the coprime-order criterion: elements of coprime
    /// orders commute.
    pub fn is_nilpotent(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| {
            (a + 1..n)
                .all(|b| arith::gcd(self.orders[a], self.orders[b]) != 1 || self.commute(a, b))
        })
    }

    /// `G` is cyclic of order 6. The only groups of order 6 are `Z_6` and
    /// `S_3`, and only `Z_6` has an element of order 6.
    pub fn is_cyclic_of_order_six(&self) -> bool {
        self.order == 6 && self.orders.contains(&6)
    }

    /// Whether some element has order `exp(G)`.
    pub fn attains_exponent(&self) -> bool {
        let exp = self.exponent();
        self.orders.contains(&exp)
    }

    /// Elements of the cyclic subgroup generated by `x`, in power order
    /// starting from the identity.
    pub fn cyclic_subgroup(&self, x: usize) -> Vec<usize> {
        let mut out = vec![self.identity];
        let mut y = x;
        while y != self.identity {
            out.push(y);
            y = self.mul(y, x);
        }
        out
    }

    /// Direct product `self x other`; element `(a, b)` has index `a * |other| + b`.
    pub fn direct_product(&self, other: &FiniteGroup) -> Result<FiniteGroup> {
        let (m, k) = (self.order, other.order);
        let n = m
            .checked_mul(k)
            .filter(|&n| n <= MAX_GROUP_ORDER)
            .ok_or_else(|| {
                Error::Capacity(format!(
                    "product order {m}x{k} exceeds limit {MAX_GROUP_ORDER}"
                ))
            })?;
        let mut table = Vec::with_capacity(n * n);
        for a1 in 0..m {
            for b1 in 0..k {
                for a2 in 0..m {
                    let a = self.mul(a1, a2);
                    for b2 in 0..k {
                        table.push((a * k + other.mul(b1, b2)) as u32);
                    }
                }
            }
        }
        let mut labels = Vec::with_capacity(n);
        for a in 0..m {
            for b in 0..k {
                labels.push(format!("({},{})", self.labels[a], other.labels[b]));
            }
        }
        // both factors were validated, so the product is a group
        FiniteGroup::from_flat(n, table, labels, 0)
    }
}
