//! Canonical labelling by colour refinement and individualisation.
//!
//! The search explores every leaf of the individualisation tree except for two
//! safe cuts: vertices of the target cell that are twins of an already tried
//! vertex (the transposition is an automorphism fixing the current partition),
//! and nodes whose already-fixed prefix of the adjacency code is worse than the
//! best leaf so far. The canonical form is the leaf with the greatest code.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::graph::Graph;
use crate::graph6::write_graph6;

/// Isomorphism-invariant key: the graph6 text of the canonical form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.as_str())
    }
}

impl Serialize for CanonicalCode {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

pub fn canonical_code(g: &Graph) -> CanonicalCode {
    CanonicalCode(write_graph6(&canonical_form(g)).into_bytes())
}

pub fn canonical_form(g: &Graph) -> Graph {
    g.induced_ordered(&canonical_labeling(g))
}

/// `order[i]` is the vertex of `g` placed at position `i` of the canonical form.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n <= 1 {
        return (0..n).collect();
    }
    let mut colors = vec![0usize; n];
    refine(g, &mut colors);
    let mut search = Search { g, best_code: None, best_order: Vec::new() };
    search.descend(colors);
    search.best_order
}

/// Refines `colors` (cell indices, dense from 0) to the coarsest equitable
/// partition finer than it. Cells are renumbered by the sorted order of
/// (old colour, neighbour counts per cell), which depends only on structure.
fn refine(g: &Graph, colors: &mut [usize]) -> usize {
    let n = g.n();
    let mut k = colors.iter().max().map_or(0, |&m| m + 1);
    let mut order: Vec<usize> = (0..n).collect();
    loop {
        let mut sig = vec![0u32; n * k];
        for u in 0..n {
            for v in g.neighbors(u).iter() {
                sig[u * k + colors[v]] += 1;
            }
        }
        let key = |v: usize| (colors[v], &sig[v * k..(v + 1) * k]);
        order.sort_by(|&a, &b| key(a).cmp(&key(b)));
        let mut next = vec![0usize; n];
        let mut groups = 0;
        for i in 0..n {
            if i > 0 && key(order[i]) != key(order[i - 1]) {
                groups += 1;
            }
            next[order[i]] = groups;
        }
        groups += 1;
        colors.copy_from_slice(&next);
        if groups == k {
            return k;
        }
        k = groups;
    }
}

fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    (0..g.n()).all(|w| w == u || w == v || g.has_edge(u, w) == g.has_edge(v, w))
}

struct Search<'a> {
    g: &'a Graph,
    best_code: Option<Vec<u64>>,
    best_order: Vec<usize>,
}

/// Bit `t` of the code is the adjacency of the `t`-th pair in column order:
/// (0,1), (0,2), (1,2), (0,3), ...
fn code_bits(g: &Graph, order: &[usize], columns: usize) -> Vec<u64> {
    let pairs = columns * columns.saturating_sub(1) / 2;
    let mut words = vec![0u64; pairs.div_ceil(64)];
    let mut t = 0;
    for j in 1..columns {
        for i in 0..j {
            if g.has_edge(order[i], order[j]) {
                words[t / 64] |= 1 << (63 - t % 64);
            }
            t += 1;
        }
    }
    words
}

fn compare_prefix(a: &[u64], b: &[u64], bits: usize) -> Ordering {
    let full = bits / 64;
    match a[..full].cmp(&b[..full]) {
        Ordering::Equal => {}
        other => return other,
    }
    let rest = bits % 64;
    if rest == 0 {
        return Ordering::Equal;
    }
    let mask = !0u64 << (64 - rest);
    (a[full] & mask).cmp(&(b[full] & mask))
}

impl Search<'_> {
    fn descend(&mut self, colors: Vec<usize>) {
        let n = self.g.n();
        let mut cells: Vec<Vec<usize>> = vec![Vec::new(); n];
        for v in 0..n {
            cells[colors[v]].push(v);
        }
        let k = cells.iter().take_while(|c| !c.is_empty()).count();
        cells.truncate(k);

        let fixed = cells.iter().take_while(|c| c.len() == 1).count();
        if let Some(best) = &self.best_code {
            if fixed >= 2 {
                let prefix: Vec<usize> = cells[..fixed].iter().map(|c| c[0]).collect();
                let partial = code_bits(self.g, &prefix, fixed);
                if compare_prefix(&partial, best, fixed * (fixed - 1) / 2) == Ordering::Less {
                    return;
                }
            }
        }

        if k == n {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let code = code_bits(self.g, &order, n);
            if self.best_code.as_ref().is_none_or(|b| code > *b) {
                self.best_code = Some(code);
                self.best_order = order;
            }
            return;
        }

        let target = cells.iter().position(|c| c.len() > 1).expect("non-discrete partition");
        let cell = &cells[target];
        let mut tried: Vec<usize> = Vec::new();
        for &v in cell {
            if tried.iter().any(|&u| are_twins(self.g, u, v)) {
                continue;
            }
            tried.push(v);
            let mut child = colors.clone();
            for c in child.iter_mut() {
                if *c > target {
                    *c += 1;
                }
            }
            for &w in cell {
                if w != v {
                    child[w] = target + 1;
                }
            }
            refine(self.g, &mut child);
            self.descend(child);
        }
    }
}
