//! Simple undirected graphs on the vertex range `0..n`.
//!
//! Adjacency is stored as a dense bit matrix: row `v` is the neighbourhood of
//! `v` packed into 64-bit words. Graphs at the scale this crate works with
//! (tens of vertices, occasionally a few hundred) fit comfortably.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitset::{words_for, VertexSet, WORD};
use crate::error::GraphError;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        let stride = words_for(n);
        Graph { n, stride, bits: vec![0; stride * n] }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from per-vertex neighbour rows packed into single words.
    /// Rows must be symmetric and loop-free; `n <= 64`.
    pub fn from_mask_rows(rows: &[u64]) -> Self {
        let n = rows.len();
        assert!(n <= WORD);
        let mut g = Graph::new(n);
        for (v, &row) in rows.iter().enumerate() {
            g.bits[v * g.stride..(v + 1) * g.stride].copy_from_slice(&[row][..g.stride]);
        }
        debug_assert!(g.check_invariants().is_ok());
        g
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn edge_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.stride + v / WORD] >> (v % WORD) & 1 == 1
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.stride..(v + 1) * self.stride]
    }

    /// All rows as single words. Panics above 64 vertices.
    pub fn mask_rows(&self) -> Vec<u64> {
        assert!(self.n <= WORD, "mask rows need at most 64 vertices");
        (0..self.n).map(|v| self.bits[v * self.stride]).collect()
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_words(self.n, self.row(v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.vertices().map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.add_edge(u, v);
        Ok(())
    }

    /// Adds `uv`. Panics on a loop or an out-of-range endpoint.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n, "bad edge {u}-{v} in graph on {} vertices", self.n);
        self.bits[u * self.stride + v / WORD] |= 1 << (v % WORD);
        self.bits[v * self.stride + u / WORD] |= 1 << (u % WORD);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.bits[u * self.stride + v / WORD] &= !(1 << (v % WORD));
        self.bits[v * self.stride + u / WORD] &= !(1 << (u % WORD));
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices().flat_map(move |u| {
            self.neighbors(u).iter().filter(move |&v| v > u).map(move |v| (u, v)).collect::<Vec<_>>()
        })
    }

    pub fn check_invariants(&self) -> Result<(), String> {
        for u in self.vertices() {
            if self.has_edge(u, u) {
                return Err(format!("loop at {u}"));
            }
            for v in self.neighbors(u).iter() {
                if v >= self.n {
                    return Err(format!("neighbour {v} of {u} out of range"));
                }
                if !self.has_edge(v, u) {
                    return Err(format!("asymmetric edge {u}->{v}"));
                }
            }
        }
        Ok(())
    }

    pub fn complement(&self) -> Graph {
        let mut h = Graph::new(self.n);
        for u in self.vertices() {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    h.add_edge(u, v);
                }
            }
        }
        h
    }

    /// The subgraph induced on `s`, relabelled by rank within `s`.
    pub fn induced(&self, s: &VertexSet) -> Graph {
        self.induced_ordered(&s.to_vec())
    }

    /// The subgraph induced on `order`, where `order[i]` becomes vertex `i`.
    pub fn induced_ordered(&self, order: &[usize]) -> Graph {
        let mut h = Graph::new(order.len());
        for (i, &u) in order.iter().enumerate() {
            for (j, &v) in order.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    h.add_edge(i, j);
                }
            }
        }
        h
    }

    /// Subgraph induced on a mask of vertices; `n <= 64`.
    pub fn induced_mask(&self, mask: u64) -> Graph {
        self.induced(&VertexSet::from_mask(self.n, mask))
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        if !is_permutation(perm, self.n) {
            return Err(GraphError::NotAPermutation(self.n));
        }
        let mut h = Graph::new(self.n);
        for (u, v) in self.edges() {
            h.add_edge(perm[u], perm[v]);
        }
        Ok(h)
    }

    /// Replaces every vertex `v` by `parts[v]`. Parts of adjacent vertices are
    /// joined completely; parts of non-adjacent vertices stay anticomplete.
    pub fn substitute(&self, parts: &[Graph]) -> Result<Graph, GraphError> {
        if parts.len() != self.n {
            return Err(GraphError::PartCount { parts: parts.len(), n: self.n });
        }
        let mut offsets = Vec::with_capacity(self.n + 1);
        let mut total = 0;
        for p in parts {
            offsets.push(total);
            total += p.n();
        }
        let mut h = Graph::new(total);
        for (v, p) in parts.iter().enumerate() {
            for (a, b) in p.edges() {
                h.add_edge(offsets[v] + a, offsets[v] + b);
            }
        }
        for (u, v) in self.edges() {
            for a in 0..parts[u].n() {
                for b in 0..parts[v].n() {
                    h.add_edge(offsets[u] + a, offsets[v] + b);
                }
            }
        }
        Ok(h)
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut h = Graph::new(self.n + other.n);
        for (u, v) in self.edges() {
            h.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            h.add_edge(self.n + u, self.n + v);
        }
        h
    }

    /// Disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut h = self.disjoint_union(other);
        for u in 0..self.n {
            for v in 0..other.n {
                h.add_edge(u, self.n + v);
            }
        }
        h
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|u| s.iter().all(|v| u == v || self.has_edge(u, v)))
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|u| !s.intersects_words(self.row(u)))
    }

    /// Connected components of the subgraph induced on `within`, ordered by least vertex.
    pub fn components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut left = within.clone();
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let mut comp = VertexSet::new(self.n);
            let mut queue = VecDeque::from([start]);
            left.remove(start);
            comp.insert(start);
            while let Some(u) = queue.pop_front() {
                let mut next = left.clone();
                next.intersect_words(self.row(u));
                for w in next.iter() {
                    left.remove(w);
                    comp.insert(w);
                    queue.push_back(w);
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&VertexSet::full(self.n))
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// BFS distances from `root`; unreachable vertices get `None`.
    pub fn distances(&self, root: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[root] = Some(0);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for w in self.neighbors(u).iter() {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// A shortest path from `from` to `to` using only vertices of `allowed`
    /// (the endpoints must be in `allowed`).
    pub fn shortest_path_within(&self, from: usize, to: usize, allowed: &VertexSet) -> Option<Vec<usize>> {
        let mut parent = vec![usize::MAX; self.n];
        parent[from] = from;
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            if u == to {
                let mut path = vec![to];
                let mut cur = to;
                while cur != from {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for w in self.neighbors(u).iter() {
                if allowed.contains(w) && parent[w] == usize::MAX {
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// A proper 2-colouring, or `None` when the graph has an odd cycle.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut side = vec![u8::MAX; self.n];
        for s in self.vertices() {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u).iter() {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        queue.push_back(w);
                    } else if side[w] == side[u] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Edge-list text: first line `n`, then one `u v` pair per line.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (first_line, header) =
            lines.next().ok_or(GraphError::EdgeList { line: 1, reason: "missing vertex count".into() })?;
        let n: usize = header
            .parse()
            .map_err(|_| GraphError::EdgeList { line: first_line, reason: format!("bad vertex count {header:?}") })?;
        let mut g = Graph::new(n);
        for (line, l) in lines {
            let parts: Vec<&str> = l.split_whitespace().collect();
            let parse = |s: &str| {
                s.parse::<usize>().map_err(|_| GraphError::EdgeList { line, reason: format!("bad vertex {s:?}") })
            };
            if parts.len() != 2 {
                return Err(GraphError::EdgeList { line, reason: "expected two vertices".into() });
            }
            let (u, v) = (parse(parts[0])?, parse(parts[1])?);
            g.try_add_edge(u, v).map_err(|e| GraphError::EdgeList { line, reason: e.to_string() })?;
        }
        Ok(g)
    }
}

pub(crate) fn is_permutation(perm: &[usize], n: usize) -> bool {
    if perm.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return false;
        }
        seen[p] = true;
    }
    true
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        GraphRepr { n: self.n, edges: self.edges().collect() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = GraphRepr::deserialize(deserializer)?;
        Graph::from_edges(repr.n, repr.edges).map_err(serde::de::Error::custom)
    }
}
