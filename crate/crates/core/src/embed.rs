//! Induced-subgraph containment by backtracking over candidate bitsets.

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// An injective map from pattern vertices to host vertices; `map[i]` is the
/// image of pattern vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    /// Checks injectivity and that adjacency is preserved in both directions.
    pub fn is_induced(&self, pattern: &Graph, host: &Graph) -> bool {
        if self.map.len() != pattern.n() || self.map.iter().any(|&v| v >= host.n()) {
            return false;
        }
        let mut seen = VertexSet::new(host.n());
        for &v in &self.map {
            if seen.contains(v) {
                return false;
            }
            seen.insert(v);
        }
        (0..pattern.n())
            .all(|a| (a + 1..pattern.n()).all(|b| pattern.has_edge(a, b) == host.has_edge(self.map[a], self.map[b])))
    }
}

/// Finds an induced copy of `pattern` in `host`. Pattern vertices are placed
/// in order and host candidates tried in increasing order, so the result is
/// the lexicographically least embedding.
pub fn is_induced_subgraph(pattern: &Graph, host: &Graph) -> Option<Embedding> {
    let k = pattern.n();
    if k > host.n() {
        return None;
    }
    if k == 0 {
        return Some(Embedding { map: Vec::new() });
    }
    let host_deg = host.degrees();
    let pat_deg = pattern.degrees();
    let mut map = Vec::with_capacity(k);
    let mut used = VertexSet::new(host.n());
    if extend(pattern, host, &pat_deg, &host_deg, &mut map, &mut used) {
        Some(Embedding { map })
    } else {
        None
    }
}

fn extend(
    pattern: &Graph,
    host: &Graph,
    pat_deg: &[usize],
    host_deg: &[usize],
    map: &mut Vec<usize>,
    used: &mut VertexSet,
) -> bool {
    let next = map.len();
    if next == pattern.n() {
        return true;
    }
    let mut cand = VertexSet::full(host.n());
    cand.difference_with(used);
    for (a, &img) in map.iter().enumerate() {
        let row = host.neighbors(img);
        if pattern.has_edge(a, next) {
            cand.intersect_with(&row);
        } else {
            cand.difference_with(&row);
        }
        if cand.is_empty() {
            return false;
        }
    }
    for v in cand.iter() {
        if host_deg[v] < pat_deg[next] {
            continue;
        }
        map.push(v);
        used.insert(v);
        if extend(pattern, host, pat_deg, host_deg, map, used) {
            return true;
        }
        used.remove(v);
        map.pop();
    }
    false
}
