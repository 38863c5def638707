//! Maximum-cardinality matching in general graphs.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest order accepted by [`brute_force_max_matching_size`].
pub const BRUTE_FORCE_GUARD: usize = 12;

/// A set of vertex-disjoint edges, each stored as `(u, v)` with `u < v`,
/// sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    pub edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// True iff edges are present in `g` and pairwise disjoint.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let mut covered = VertexSet::EMPTY;
        self.edges.iter().all(|&(u, v)| {
            let ok = g.has_edge(u, v) && !covered.contains(u) && !covered.contains(v);
            covered.insert(u);
            covered.insert(v);
            ok
        })
    }
}

/// Edmonds' blossom algorithm, `O(n³)`. Exposed vertices are processed in
/// ascending order and neighbours are scanned in ascending order, so the
/// returned matching is deterministic.
pub fn max_matching(g: &Graph) -> Matching {
    let mut search = BlossomSearch::new(g);
    for root in 0..g.order() {
        if search.mate[root].is_none() {
            if let Some(end) = search.find_augmenting_path(root) {
                search.augment(end);
            }
        }
    }
    let edges = search
        .mate
        .iter()
        .enumerate()
        .filter_map(|(v, m)| m.filter(|&u| v < u).map(|u| (v, u)))
        .collect();
    Matching { edges }
}

struct BlossomSearch<'g> {
    g: &'g Graph,
    mate: Vec<Option<usize>>,
    parent: Vec<Option<usize>>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
}

impl<'g> BlossomSearch<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.order();
        BlossomSearch {
            g,
            mate: vec![None; n],
            parent: vec![None; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.order()];
        loop {
            a = self.base[a];
            seen[a] = true;
            match self.mate[a] {
                Some(m) => a = self.parent[m].expect("matched outer vertex has a tree parent"),
                None => break,
            }
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b].expect("root reached first from a")].expect("tree parent");
        }
    }

    fn mark_path(&mut self, mut v: usize, blossom_base: usize, mut child: usize) {
        while self.base[v] != blossom_base {
            let m = self.mate[v].expect("inner path vertex is matched");
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[m]] = true;
            self.parent[v] = Some(child);
            child = m;
            v = self.parent[m].expect("tree parent");
        }
    }

    fn find_augmenting_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.order();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = None);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for to in self.g.neighbors(v).iter() {
                if self.base[v] == self.base[to] || self.mate[v] == Some(to) {
                    continue;
                }
                let outer = to == root || self.mate[to].is_some_and(|m| self.parent[m].is_some());
                if outer {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to].is_none() {
                    self.parent[to] = Some(v);
                    match self.mate[to] {
                        None => return Some(to),
                        Some(m) => {
                            self.used[m] = true;
                            queue.push_back(m);
                        }
                    }
                }
            }
        }
        None
    }

    fn augment(&mut self, end: usize) {
        let mut v = Some(end);
        while let Some(x) = v {
            let pv = self.parent[x].expect("augmenting path vertex has a parent");
            let next = self.mate[pv];
            self.mate[x] = Some(pv);
            self.mate[pv] = Some(x);
            v = next;
        }
    }
}

/// True iff `g` has a perfect matching. Odd orders answer `false` without
/// running the search.
pub fn has_perfect_matching(g: &Graph) -> bool {
    g.order().is_multiple_of(2) && 2 * max_matching(g).len() == g.order()
}

/// Maximum matching size by exhaustive search: the lowest free vertex is
/// either left unmatched or matched to each free neighbour in turn.
pub fn brute_force_max_matching_size(g: &Graph) -> Result<usize> {
    if g.order() > BRUTE_FORCE_GUARD {
        return Err(Error::GuardExceeded {
            what: "brute-force matching",
            n: g.order(),
            guard: BRUTE_FORCE_GUARD,
        });
    }
    fn search(g: &Graph, free: VertexSet, found: usize, best: &mut usize) {
        *best = (*best).max(found);
        if found + free.len() / 2 <= *best {
            return;
        }
        let Some(v) = free.first() else { return };
        let rest = free.difference(VertexSet::singleton(v));
        for u in g.neighbors(v).intersection(rest).iter() {
            search(g, rest.difference(VertexSet::singleton(u)), found + 1, best);
        }
        search(g, rest, found, best);
    }
    let mut best = 0;
    search(g, g.vertices(), 0, &mut best);
    Ok(best)
}
