//! Simple undirected graphs on vertices `0..n` stored as dense bitset rows.
//!
//! Every vertex set in this crate is a [`VertexSet`], a 64-bit mask, which is
//! why orders are capped at [`MAX_ORDER`].

use std::collections::VecDeque;
use std::fmt;
use std::ops::Range;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported order.
pub const MAX_ORDER: usize = 64;

/// A set of vertices of a graph with at most [`MAX_ORDER`] vertices.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{0, 1, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_ORDER, "order {n} exceeds {MAX_ORDER}");
        if n == MAX_ORDER {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn range(r: Range<usize>) -> Self {
        VertexSet(VertexSet::full(r.end).0 & !VertexSet::full(r.start).0)
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_ORDER && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(v)
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let members = Vec::<usize>::deserialize(d)?;
        if let Some(&v) = members.iter().find(|&&v| v >= MAX_ORDER) {
            return Err(serde::de::Error::custom(format!("vertex {v} exceeds {MAX_ORDER}")));
        }
        Ok(members.into_iter().collect())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A simple undirected graph: no loops, no multi-edges.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

/// A graph assembled from parts, with the vertex range each part occupies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assembled {
    pub graph: Graph,
    pub blocks: Vec<Range<usize>>,
}

/// Connected components of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentDecomposition {
    pub blocks: Vec<VertexSet>,
    pub odd_count: usize,
    pub total_count: usize,
}

impl Graph {
    /// `n` isolated vertices (the graph `nK₁`).
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_ORDER, "order {n} exceeds {MAX_ORDER}");
        Graph { n, rows: vec![0; n] }
    }

    /// The complete graph `Kₙ`.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        let all = VertexSet::full(n).0;
        for (v, row) in g.rows.iter_mut().enumerate() {
            *row = all & !(1u64 << v);
        }
        g
    }

    /// The cycle `Cₙ` for `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut g = Graph::empty(n);
        for v in 0..n {
            g.set_edge(v, (v + 1) % n);
        }
        g
    }

    /// The path `Pₙ`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.set_edge(v - 1, v);
        }
        g
    }

    /// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`.
    pub fn petersen() -> Self {
        let mut g = Graph::empty(10);
        for i in 0..5 {
            g.set_edge(i, (i + 1) % 5);
            g.set_edge(i, i + 5);
            g.set_edge(5 + i, 5 + (i + 2) % 5);
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge { n, max: MAX_ORDER });
        }
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, checking symmetry and loops.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge { n, max: MAX_ORDER });
        }
        let all = VertexSet::full(n).0;
        for (u, &row) in rows.iter().enumerate() {
            if row & !all != 0 {
                return Err(Error::InvalidGraph(format!("row {u} has bits beyond order {n}")));
            }
            if row >> u & 1 == 1 {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            for v in VertexSet(row).iter() {
                if rows[v] >> u & 1 == 0 {
                    return Err(Error::InvalidGraph(format!("edge {u}-{v} is not symmetric")));
                }
            }
        }
        Ok(Graph { n, rows })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u] >> v & 1 == 1
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { v, n: self.n })
        } else {
            Ok(())
        }
    }

    fn set_edge(&mut self, u: usize, v: usize) {
        self.rows[u] |= 1u64 << v;
        self.rows[v] |= 1u64 << u;
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
        }
        self.set_edge(u, v);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.rows[u] &= !(1u64 << v);
        self.rows[v] &= !(1u64 << u);
        Ok(())
    }

    /// A copy of the graph with the edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut g = self.clone();
        g.add_edge(u, v)?;
        Ok(g)
    }

    /// Neighbourhood of `v`. Panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.rows[v])
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.rows[v].count_ones() as usize)
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.count_ones() as usize).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet(self.rows[u] & !VertexSet::full(u + 1).0)
                .iter()
                .map(move |v| (u, v))
        })
    }

    /// Pairs `(u, v)` with `u < v` that are not edges.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| ((u + 1)..self.n).filter(move |&v| !self.has_edge(u, v)).map(move |v| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Adjacency matrix as dense rows of 0.0 / 1.0.
    pub fn adjacency_matrix(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|u| (0..self.n).map(|v| if self.has_edge(u, v) { 1.0 } else { 0.0 }).collect())
            .collect()
    }

    /// Induced subgraph on `keep`, relabelled in ascending order. The returned
    /// map sends each new label to its original label.
    pub fn induced_subgraph(&self, keep: VertexSet) -> Result<(Graph, Vec<usize>)> {
        if let Some(v) = keep.difference(self.vertices()).first() {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        let map = keep.to_vec();
        let rows = map
            .iter()
            .map(|&old| {
                map.iter()
                    .enumerate()
                    .filter(|&(_, &w)| self.has_edge(old, w))
                    .fold(0u64, |acc, (i, _)| acc | 1u64 << i)
            })
            .collect();
        Ok((Graph { n: map.len(), rows }, map))
    }

    /// `G - S`, with the new-to-original label map.
    pub fn delete_vertices(&self, removed: VertexSet) -> Result<(Graph, Vec<usize>)> {
        if let Some(v) = removed.difference(self.vertices()).first() {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        self.induced_subgraph(self.vertices().difference(removed))
    }

    /// Component of `start` inside the vertex set `within`.
    fn flood(&self, start: usize, within: u64) -> u64 {
        let mut comp = 1u64 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0u64;
            for v in VertexSet(frontier).iter() {
                next |= self.rows[v];
            }
            next &= within & !comp;
            comp |= next;
            frontier = next;
        }
        comp
    }

    /// Components of the subgraph induced by `within`, as vertex sets in the
    /// original labelling, ordered by smallest member.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut remaining = within.0 & VertexSet::full(self.n).0;
        let mut blocks = Vec::new();
        while remaining != 0 {
            let start = remaining.trailing_zeros() as usize;
            let comp = self.flood(start, remaining);
            remaining &= !comp;
            blocks.push(VertexSet(comp));
        }
        blocks
    }

    /// `o(G - S)`: number of odd components after removing `removed`.
    pub fn odd_components_without(&self, removed: VertexSet) -> usize {
        self.components_within(self.vertices().difference(removed))
            .into_iter()
            .filter(|c| c.len() % 2 == 1)
            .count()
    }

    pub fn components(&self) -> ComponentDecomposition {
        let blocks = self.components_within(self.vertices());
        let odd_count = blocks.iter().filter(|b| b.len() % 2 == 1).count();
        ComponentDecomposition {
            total_count: blocks.len(),
            odd_count,
            blocks,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.flood(0, VertexSet::full(self.n).0).count_ones() as usize == self.n
    }

    /// Vertex connectivity κ. `κ(Kₙ) = n - 1`; otherwise the minimum over
    /// non-adjacent pairs of the number of internally vertex-disjoint paths.
    pub fn vertex_connectivity(&self) -> usize {
        if self.is_complete() {
            return self.n.saturating_sub(1);
        }
        if !self.is_connected() {
            return 0;
        }
        let mut best = self.min_degree();
        let mut net = VertexFlowNetwork::new(self);
        for (s, t) in self.non_edges() {
            if best == 0 {
                break;
            }
            best = best.min(net.max_disjoint_paths(s, t, best));
        }
        best
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

/// Split-vertex flow network: vertex `v` becomes `v_in = 2v -> v_out = 2v+1`
/// with unit capacity, and each edge `uv` becomes `u_out -> v_in`,
/// `v_out -> u_in` with capacity `n`.
struct VertexFlowNetwork {
    nodes: usize,
    cap: Vec<Vec<i32>>,
    flow: Vec<Vec<i32>>,
    adj: Vec<Vec<usize>>,
}

impl VertexFlowNetwork {
    fn new(g: &Graph) -> Self {
        let nodes = 2 * g.order();
        let big = g.order() as i32;
        let mut cap = vec![vec![0; nodes]; nodes];
        let mut adj = vec![Vec::new(); nodes];
        let mut link = |a: usize, b: usize, c: i32, cap: &mut Vec<Vec<i32>>| {
            cap[a][b] = c;
            adj[a].push(b);
            adj[b].push(a);
        };
        for v in 0..g.order() {
            link(2 * v, 2 * v + 1, 1, &mut cap);
        }
        for (u, v) in g.edges() {
            link(2 * u + 1, 2 * v, big, &mut cap);
            link(2 * v + 1, 2 * u, big, &mut cap);
        }
        VertexFlowNetwork {
            nodes,
            flow: vec![vec![0; nodes]; nodes],
            cap,
            adj,
        }
    }

    /// Internally vertex-disjoint `s`–`t` paths, stopping once `limit` is hit.
    fn max_disjoint_paths(&mut self, s: usize, t: usize, limit: usize) -> usize {
        for row in &mut self.flow {
            row.iter_mut().for_each(|f| *f = 0);
        }
        let (source, sink) = (2 * s + 1, 2 * t);
        let mut total = 0;
        let mut parent = vec![usize::MAX; self.nodes];
        while total < limit {
            parent.iter_mut().for_each(|p| *p = usize::MAX);
            parent[source] = source;
            let mut queue = VecDeque::from([source]);
            while let Some(a) = queue.pop_front() {
                if a == sink {
                    break;
                }
                for &b in &self.adj[a] {
                    if parent[b] == usize::MAX && self.cap[a][b] - self.flow[a][b] > 0 {
                        parent[b] = a;
                        queue.push_back(b);
                    }
                }
            }
            if parent[sink] == usize::MAX {
                break;
            }
            // every augmenting path crosses a unit vertex arc, so push 1
            let mut b = sink;
            while b != source {
                let a = parent[b];
                self.flow[a][b] += 1;
                self.flow[b][a] -= 1;
                b = a;
            }
            total += 1;
        }
        total
    }
}

/// Disjoint union of `parts`, relabelled consecutively.
pub fn disjoint_union(parts: &[Graph]) -> Assembled {
    let n: usize = parts.iter().map(Graph::order).sum();
    let mut graph = Graph::empty(n);
    let mut blocks = Vec::with_capacity(parts.len());
    let mut offset = 0;
    for part in parts {
        for (u, v) in part.edges() {
            graph.set_edge(offset + u, offset + v);
        }
        blocks.push(offset..offset + part.order());
        offset += part.order();
    }
    Assembled { graph, blocks }
}

/// Sequential join `G₁ ∨ G₂ ∨ … ∨ Gₛ`: the disjoint union plus every pair
/// between consecutive parts. Non-consecutive parts stay unjoined.
pub fn sequential_join(parts: &[Graph]) -> Result<Assembled> {
    if parts.is_empty() {
        return Err(Error::EmptyJoin);
    }
    let Assembled { mut graph, blocks } = disjoint_union(parts);
    for pair in blocks.windows(2) {
        for u in pair[0].clone() {
            for v in pair[1].clone() {
                graph.set_edge(u, v);
            }
        }
    }
    Ok(Assembled { graph, blocks })
}
