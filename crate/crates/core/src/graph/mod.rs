//! Simple undirected graphs on at most [`MAX_ORDER`] vertices, stored as
//! per-vertex bitsets.
//!
//! Everything downstream (biclique enumeration, obstruction checks, the
//! preimage search) leans on cheap neighborhood intersections, so adjacency
//! rows are single `u128` words and [`VertexSet`] is `Copy`.

mod canon;
mod generate;
mod graph6;
pub mod named;

use std::collections::VecDeque;
use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub};

use crate::error::{Error, Result};

pub use canon::{canonical_form, canonical_labeling, isomorphic, CanonicalForm, MAX_CANON_ORDER};
pub use generate::{
    connected_graphs_brute_force, enumerate_connected_graphs, one_vertex_extensions, MAX_GENERATION_ORDER,
};
pub use graph6::{parse_graph6, read_graph6_lines, write_graph6, Graph6Line};

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_ORDER: usize = 128;

/// A set of vertex ids `0..MAX_ORDER`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u128) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ORDER);
        if n == MAX_ORDER {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u128 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_ORDER && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u128 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u128 << v);
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u128 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u128 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
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

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl BitAndAssign for VertexSet {
    fn bitand_assign(&mut self, rhs: VertexSet) {
        self.0 &= rhs.0;
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitOrAssign for VertexSet {
    fn bitor_assign(&mut self, rhs: VertexSet) {
        self.0 |= rhs.0;
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> VertexSet {
        VertexSet(!self.0)
    }
}

pub struct VertexIter(u128);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

/// A finite simple undirected graph on vertices `0..order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::TooSmall { order, min: 1 });
        }
        if order > MAX_ORDER {
            return Err(Error::Capability {
                what: "graph order",
                requested: order,
                limit: MAX_ORDER,
            });
        }
        Ok(Graph {
            adj: vec![VertexSet::EMPTY; order],
        })
    }

    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(order)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows. Rows must be symmetric and loop-free.
    pub fn from_adjacency(rows: Vec<VertexSet>) -> Result<Self> {
        let g = Graph { adj: rows };
        let n = g.order();
        if n == 0 {
            return Err(Error::TooSmall { order: 0, min: 1 });
        }
        if n > MAX_ORDER {
            return Err(Error::Capability {
                what: "graph order",
                requested: n,
                limit: MAX_ORDER,
            });
        }
        let all = VertexSet::full(n);
        for v in 0..n {
            let row = g.adj[v];
            if !row.is_subset(all) {
                return Err(Error::InvalidGraph(format!("row {v} names a vertex >= {n}")));
            }
            if row.contains(v) {
                return Err(Error::InvalidGraph(format!("self-loop at {v}")));
            }
            if let Some(u) = row.iter().find(|&u| !g.adj[u].contains(v)) {
                return Err(Error::InvalidGraph(format!("edge {v}-{u} is not symmetric")));
            }
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidGraph(format!("self-loop at {u}")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Open neighborhood `N(v)`.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighborhood `N[v]`.
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|r| r.len()).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|r| r.len()).min().unwrap_or(0)
    }

    pub fn adjacency_rows(&self) -> &[VertexSet] {
        &self.adj
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| (self.adj[u] - VertexSet::full(u + 1)).iter().map(move |v| (u, v)))
    }

    /// True iff every vertex of `s` is adjacent to every other vertex of `s`.
    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| (s.without(v)).is_subset(self.adj[v]))
    }

    /// The subgraph induced by `s`, relabelled so that the i-th smallest
    /// member of `s` becomes vertex i. Also returns that member list.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<(Graph, Vec<usize>)> {
        let members = s.to_vec();
        if let Some(&v) = members.iter().find(|&&v| v >= self.order()) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            });
        }
        let mut h = Graph::empty(members.len())?;
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    h.adj[i].insert(j);
                    h.adj[j].insert(i);
                }
            }
        }
        Ok((h, members))
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.order();
        let image: VertexSet = perm.iter().copied().collect();
        if perm.len() != n || image != VertexSet::full(n) {
            return Err(Error::InvalidGraph(format!(
                "relabelling {perm:?} is not a permutation of 0..{n}"
            )));
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for (u, v) in self.edges() {
            adj[perm[u]].insert(perm[v]);
            adj[perm[v]].insert(perm[u]);
        }
        Ok(Graph { adj })
    }

    /// BFS distances from `source` restricted to `allowed`; `None` marks
    /// unreachable vertices.
    fn bfs_within(&self, source: VertexSet, allowed: VertexSet) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        let mut queue = VecDeque::new();
        for s in source & allowed {
            dist[s] = Some(0);
            queue.push_back(s);
        }
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            for w in self.adj[u] & allowed {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Shortest-path distances from every vertex of `sources`.
    pub fn distances_from_set(&self, sources: VertexSet) -> Vec<Option<usize>> {
        self.bfs_within(sources, self.vertices())
    }

    pub fn distances_from(&self, source: usize) -> Result<Vec<Option<usize>>> {
        self.check_vertex(source)?;
        Ok(self.distances_from_set(VertexSet::singleton(source)))
    }

    /// Length of a shortest `u`-`v` path; `None` when no path exists.
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<usize>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.distances_from_set(VertexSet::singleton(u))[v])
    }

    /// All-pairs distance matrix.
    pub fn distance_matrix(&self) -> Vec<Vec<Option<usize>>> {
        (0..self.order())
            .map(|v| self.distances_from_set(VertexSet::singleton(v)))
            .collect()
    }

    /// Vertices reachable from `start` without leaving `allowed`.
    pub fn component_within(&self, start: usize, allowed: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start) & allowed;
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for u in frontier {
                next |= self.adj[u];
            }
            frontier = next & (allowed - seen);
            seen |= frontier;
        }
        seen
    }

    /// True iff the subgraph induced by `s` is connected (the empty set is not).
    pub fn is_connected_within(&self, s: VertexSet) -> bool {
        match s.first() {
            Some(v) => self.component_within(v, s) == s,
            None => false,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertices())
    }

    /// First cut vertex in id order, if any. Only meaningful for connected graphs.
    pub fn cut_vertex(&self) -> Option<usize> {
        let all = self.vertices();
        if self.order() <= 2 {
            return None;
        }
        (0..self.order()).find(|&v| !self.is_connected_within(all.without(v)))
    }

    /// 2-connectivity with the convention that K1 and K2 count as 2-connected.
    pub fn is_biconnected(&self) -> bool {
        self.is_connected() && self.cut_vertex().is_none()
    }

    /// Checks that the graph is connected with at least `min` vertices.
    pub fn require_connected(&self, min: usize) -> Result<()> {
        if self.order() < min {
            return Err(Error::TooSmall {
                order: self.order(),
                min,
            });
        }
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; ", write_graph6(self))?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&write_graph6(self))
    }
}
