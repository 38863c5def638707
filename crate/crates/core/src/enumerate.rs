//! Isomorphism-free enumeration of small graphs by brute-force canonical
//! forms.
//!
//! The canonical code of a graph is the minimum, over all vertex orderings,
//! of its upper-triangle adjacency bits read in graph6 column order as a
//! binary number (first bit most significant).

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest order for the built-in enumeration.
pub const ENUMERATION_GUARD: usize = 7;

/// Largest order [`canonical_code`] accepts (`C(11, 2) = 55` bits).
pub const CANONICAL_MAX_ORDER: usize = 11;

fn pair_bits(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Minimum column-order adjacency code over all relabellings.
///
/// The search fixes labels `0, 1, 2, …` in turn; fixing label `j` fixes the
/// next `j` bits of the code, so any branch whose prefix already exceeds the
/// best code found is abandoned.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.order();
    assert!(n <= CANONICAL_MAX_ORDER, "canonical codes support order <= {CANONICAL_MAX_ORDER}");
    let total = pair_bits(n);
    let mut best: Option<u64> = None;
    let mut order = Vec::with_capacity(n);
    search(g, &mut order, VertexSet::EMPTY, 0, total, &mut best);
    best.unwrap_or(0)
}

fn search(g: &Graph, order: &mut Vec<usize>, used: VertexSet, prefix: u64, total: usize, best: &mut Option<u64>) {
    let depth = order.len();
    if depth == g.order() {
        if best.is_none_or(|b| prefix < b) {
            *best = Some(prefix);
        }
        return;
    }
    let len = pair_bits(depth + 1);
    for v in g.vertices().difference(used).iter() {
        let mut next = prefix;
        for &u in order.iter() {
            next = next << 1 | g.has_edge(u, v) as u64;
        }
        if let Some(b) = *best {
            if next > b >> (total - len) {
                continue;
            }
        }
        order.push(v);
        search(g, order, used.union(VertexSet::singleton(v)), next, total, best);
        order.pop();
    }
}

/// The graph of order `n` whose column-order code is `code`.
pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let total = pair_bits(n);
    let mut g = Graph::empty(n);
    let mut t = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> (total - 1 - t) & 1 == 1 {
                g.add_edge(i, j).expect("in range");
            }
            t += 1;
        }
    }
    g
}

/// Canonical relabelling of `g`.
pub fn canonical_form(g: &Graph) -> Graph {
    graph_from_code(g.order(), canonical_code(g))
}

/// Canonical codes of all graphs of order `n`, connected or not.
///
/// Every graph of order `m + 1` is a graph of order `m` plus one vertex, so
/// each level extends every representative of the previous level by every
/// possible neighbourhood and keeps the distinct canonical codes.
fn all_codes(n: usize) -> BTreeSet<u64> {
    let mut level: BTreeSet<u64> = BTreeSet::from([0]);
    for m in 1..n {
        let mut next = BTreeSet::new();
        for &code in &level {
            let base = graph_from_code(m, code);
            for nbrs in 0..1u64 << m {
                let mut g = Graph::empty(m + 1);
                for (u, v) in base.edges() {
                    g.add_edge(u, v).expect("in range");
                }
                for u in VertexSet(nbrs).iter() {
                    g.add_edge(u, m).expect("in range");
                }
                next.insert(canonical_code(&g));
            }
        }
        level = next;
    }
    if n == 0 {
        BTreeSet::new()
    } else {
        level
    }
}

fn check_guard(n: usize) -> Result<()> {
    if n > ENUMERATION_GUARD {
        return Err(Error::GuardExceeded {
            what: "built-in enumeration (use an external graph6 stream)",
            n,
            guard: ENUMERATION_GUARD,
        });
    }
    Ok(())
}

/// One canonical representative of every graph of order `n`, in ascending
/// canonical-code order.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    check_guard(n)?;
    Ok(all_codes(n).into_iter().map(|c| graph_from_code(n, c)).collect())
}

/// One canonical representative of every connected graph of order `n`.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_graphs(n)?.into_iter().filter(Graph::is_connected).collect())
}
