//! Cayley tables for the named families, built straight from their
//! presentations.

use super::{FiniteGroup, DEFAULT_ASSOCIATIVITY_BOUND};
use crate::error::Result;

fn power_label(gen: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => gen.to_string(),
        _ => format!("{gen}^{k}"),
    }
}

fn word_label(parts: &[String]) -> String {
    let s: String = parts.concat();
    if s.is_empty() {
        "e".into()
    } else {
        s
    }
}

/// Groups of the form `<a> ⋊ <b>` with elements `a^k b^s`, `s in {0,1}`,
/// index `s * m + k`. `b^-1 a b = a^r` and `b^2 = a^square`.
fn metacyclic(m: usize, r: usize, square: usize, gens: (&str, &str)) -> Result<FiniteGroup> {
    let n = 2 * m;
    let mut table = Vec::with_capacity(n * n);
    // b a^j = a^(r j) b since b a b^-1 = a^r when r^2 = 1 mod m
    for s in 0..2 {
        for i in 0..m {
            for t in 0..2 {
                for j in 0..m {
                    let j_conj = if s == 1 { (r * j) % m } else { j };
                    let mut k = (i + j_conj) % m;
                    let mut u = s + t;
                    if u == 2 {
                        k = (k + square) % m;
                        u = 0;
                    }
                    table.push((u * m + k) as u32);
                }
            }
        }
    }
    let labels = (0..n)
        .map(|idx| {
            let (s, k) = (idx / m, idx % m);
            let b = if s == 1 {
                gens.1.to_string()
            } else {
                String::new()
            };
            word_label(&[power_label(gens.0, k), b])
        })
        .collect();
    FiniteGroup::from_flat(n, table, labels, DEFAULT_ASSOCIATIVITY_BOUND)
}

pub(super) fn cyclic(n: usize) -> Result<FiniteGroup> {
    let table = (0..n)
        .flat_map(|i| (0..n).map(move |j| ((i + j) % n) as u32))
        .collect();
    let labels = (0..n).map(|k| word_label(&[power_label("a", k)])).collect();
    FiniteGroup::from_flat(n, table, labels, DEFAULT_ASSOCIATIVITY_BOUND)
}

/// `D_{2n} = <x, y | x^n = y^2 = e, y x y^-1 = x^-1>`.
pub(super) fn dihedral(n: usize) -> Result<FiniteGroup> {
    metacyclic(n, n - 1, 0, ("x", "y"))
}

/// `Q_{4n} = <a, b | a^{2n} = e, a^n = b^2, b^-1 a b = a^-1>`.
pub(super) fn dicyclic(n: usize) -> Result<FiniteGroup> {
    let m = 2 * n;
    metacyclic(m, m - 1, n, ("a", "b"))
}

/// `SD_{8n} = <a, b | a^{4n} = b^2 = e, b^-1 a b = a^{2n-1}>`.
pub(super) fn semidihedral(n: usize) -> Result<FiniteGroup> {
    let m = 4 * n;
    metacyclic(m, 2 * n - 1, 0, ("a", "b"))
}

/// All permutations of `0..degree` in lexicographic order (identity first).
fn permutations(degree: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut p: Vec<u8> = (0..degree as u8).collect();
    loop {
        out.push(p.clone());
        // next lexicographic permutation
        let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
            break;
        };
        let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
    out
}

fn is_even(p: &[u8]) -> bool {
    let inversions = (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    inversions % 2 == 0
}

fn cycle_notation(p: &[u8]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] as usize == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push((x + 1).to_string());
            x = p[x] as usize;
        }
        out.push('(');
        out.push_str(&cycle.join(" "));
        out.push(')');
    }
    if out.is_empty() {
        "e".into()
    } else {
        out
    }
}

/// Permutation group on the given elements; `x * y` applies `y` first.
fn permutation_group(perms: Vec<Vec<u8>>) -> Result<FiniteGroup> {
    use std::collections::HashMap;
    let n = perms.len();
    let index: HashMap<&[u8], usize> = perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.as_slice(), i))
        .collect();
    let mut table = Vec::with_capacity(n * n);
    let mut buf = vec![0u8; perms.first().map_or(0, Vec::len)];
    for p in &perms {
        for q in &perms {
            for (k, slot) in buf.iter_mut().enumerate() {
                *slot = p[q[k] as usize];
            }
            table.push(index[buf.as_slice()] as u32);
        }
    }
    let labels = perms.iter().map(|p| cycle_notation(p)).collect();
    FiniteGroup::from_flat(n, table, labels, DEFAULT_ASSOCIATIVITY_BOUND)
}

pub(super) fn symmetric(degree: usize) -> Result<FiniteGroup> {
    permutation_group(permutations(degree))
}

pub(super) fn alternating(degree: usize) -> Result<FiniteGroup> {
    permutation_group(
        permutations(degree)
            .into_iter()
            .filter(|p| is_even(p))
            .collect(),
    )
}
