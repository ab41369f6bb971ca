//! Induced cycles and the hereditary classes defined by them.
//!
//! All cycle searches share one depth-first walk over induced paths. A cycle
//! is reported from its least vertex `s`, in the direction whose second
//! vertex is smaller than its last, so each induced cycle is seen once.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::error::SolveError;
use crate::graph::Graph;
use crate::invariants::{greedy_coloring, Coloring};

pub const DEFAULT_CYCLE_CAP: usize = 1_000_000;
pub const DEFAULT_PERFECT_CAP: usize = 64;

/// Calls `visit` on every induced cycle of the subgraph induced on `allowed`
/// whose length lies in `min_len..=max_len`.
pub fn visit_induced_cycles<F>(
    g: &Graph,
    allowed: &VertexSet,
    min_len: usize,
    max_len: usize,
    mut visit: F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let min_len = min_len.max(3);
    if max_len < min_len {
        return ControlFlow::Continue(());
    }
    for s in allowed.iter() {
        // Vertices above s only; s is the least vertex of every cycle found here.
        let mut above = allowed.clone();
        for v in 0..=s {
            above.remove(v);
        }
        let s_nbrs = g.neighbors(s);
        let mut path = vec![s];
        let firsts = above.intersection(&s_nbrs);
        for p1 in firsts.iter() {
            path.push(p1);
            let blocked = VertexSet::new(g.n());
            walk(g, &above, &s_nbrs, &blocked, &mut path, min_len, max_len, &mut visit)?;
            path.pop();
        }
    }
    ControlFlow::Continue(())
}

/// `blocked` is the union of closed neighbourhoods of the inner path vertices
/// before the last one; extensions must avoid it to keep the path induced.
#[allow(clippy::too_many_arguments)]
fn walk<F>(
    g: &Graph,
    above: &VertexSet,
    s_nbrs: &VertexSet,
    blocked: &VertexSet,
    path: &mut Vec<usize>,
    min_len: usize,
    max_len: usize,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let last = *path.last().unwrap();
    let p1 = path[1];
    let mut cand = above.clone();
    cand.intersect_words(g.row(last));
    cand.difference_with(blocked);
    for &v in &path[1..] {
        cand.remove(v);
    }
    let len_if_closed = path.len() + 1;
    for u in cand.iter() {
        if s_nbrs.contains(u) {
            if u > p1 && len_if_closed >= min_len && len_if_closed <= max_len {
                path.push(u);
                let r = visit(path);
                path.pop();
                r?;
            }
        } else if len_if_closed < max_len {
            let mut next_blocked = blocked.clone();
            next_blocked.union_with(&g.neighbors(last));
            next_blocked.insert(last);
            path.push(u);
            walk(g, above, s_nbrs, &next_blocked, path, min_len, max_len, visit)?;
            path.pop();
        }
    }
    ControlFlow::Continue(())
}

/// Consecutive vertices adjacent, all other pairs non-adjacent, length ≥ 3, no repeats.
pub fn is_induced_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 3 || cycle.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let set = VertexSet::from_vertices(g.n(), cycle.iter().copied());
    if set.len() != k {
        return false;
    }
    (0..k).all(|i| {
        (i + 1..k).all(|j| {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            g.has_edge(cycle[i], cycle[j]) == consecutive
        })
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HoleReport {
    pub cycles: Vec<Vec<usize>>,
    pub truncated: bool,
}

impl HoleReport {
    pub fn lengths(&self) -> Vec<usize> {
        self.cycles.iter().map(Vec::len).collect()
    }
}

pub fn enumerate_induced_cycles(g: &Graph, min_len: usize, max_len: usize) -> HoleReport {
    enumerate_induced_cycles_capped(g, min_len, max_len, DEFAULT_CYCLE_CAP)
}

pub fn enumerate_induced_cycles_capped(g: &Graph, min_len: usize, max_len: usize, cap: usize) -> HoleReport {
    let mut cycles = Vec::new();
    let mut truncated = false;
    let _ = visit_induced_cycles(g, &VertexSet::full(g.n()), min_len, max_len, |c| {
        if cycles.len() == cap {
            truncated = true;
            return ControlFlow::Break(());
        }
        cycles.push(c.to_vec());
        ControlFlow::Continue(())
    });
    HoleReport { cycles, truncated }
}

fn first_cycle_where<P>(g: &Graph, min_len: usize, pred: P) -> Option<Vec<usize>>
where
    P: Fn(&[usize]) -> bool,
{
    let mut found = None;
    let _ = visit_induced_cycles(g, &VertexSet::full(g.n()), min_len, g.n(), |c| {
        if pred(c) {
            found = Some(c.to_vec());
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    found
}

/// A hole of length at least 5, if any.
pub fn has_long_hole(g: &Graph) -> Option<Vec<usize>> {
    first_cycle_where(g, 5, |_| true)
}

pub fn find_odd_hole(g: &Graph) -> Option<Vec<usize>> {
    first_cycle_where(g, 5, |c| c.len() % 2 == 1)
}

pub fn find_even_hole(g: &Graph) -> Option<Vec<usize>> {
    first_cycle_where(g, 4, |c| c.len() % 2 == 0)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ChordalVerdict {
    /// `elimination_order[0]` is eliminated first; each vertex is simplicial
    /// among the vertices eliminated after it.
    Chordal {
        elimination_order: Vec<usize>,
    },
    NotChordal {
        hole: Vec<usize>,
    },
}

impl ChordalVerdict {
    pub fn is_chordal(&self) -> bool {
        matches!(self, ChordalVerdict::Chordal { .. })
    }
}

/// Maximum cardinality search followed by a perfect-elimination check.
pub fn is_chordal(g: &Graph) -> ChordalVerdict {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut numbered = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).filter(|&v| !numbered[v]).max_by_key(|&v| (weight[v], std::cmp::Reverse(v))).unwrap();
        numbered[v] = true;
        visit.push(v);
        for w in g.neighbors(v).iter() {
            if !numbered[w] {
                weight[w] += 1;
            }
        }
    }
    let elimination_order: Vec<usize> = visit.into_iter().rev().collect();
    let mut pos = vec![0; n];
    for (i, &v) in elimination_order.iter().enumerate() {
        pos[v] = i;
    }
    let perfect = elimination_order.iter().all(|&v| {
        let later: Vec<usize> = g.neighbors(v).iter().filter(|&w| pos[w] > pos[v]).collect();
        let Some(&parent) = later.iter().min_by_key(|&&w| pos[w]) else { return true };
        later.iter().all(|&w| w == parent || g.has_edge(parent, w))
    });
    if perfect {
        return ChordalVerdict::Chordal { elimination_order };
    }
    ChordalVerdict::NotChordal { hole: find_hole(g).expect("a graph without a perfect elimination order has a hole") }
}

/// Some hole (induced cycle of length ≥ 4): for a vertex `v` with non-adjacent
/// neighbours `a`, `b`, a shortest `a`–`b` path avoiding the rest of `N[v]`
/// closes an induced cycle through `v`.
pub fn find_hole(g: &Graph) -> Option<Vec<usize>> {
    for v in g.vertices() {
        let nbrs = g.neighbors(v).to_vec();
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                if g.has_edge(a, b) {
                    continue;
                }
                let mut allowed = VertexSet::full(g.n());
                allowed.difference_with(&g.neighbors(v));
                allowed.remove(v);
                allowed.insert(a);
                allowed.insert(b);
                if let Some(p) = g.shortest_path_within(a, b, &allowed) {
                    let mut hole = vec![v];
                    hole.extend(p);
                    return Some(hole);
                }
            }
        }
    }
    None
}

/// Every induced cycle has length exactly 4.
pub fn is_chordal_bipartite(g: &Graph) -> bool {
    chordal_bipartite_violation(g).is_none()
}

fn chordal_bipartite_violation(g: &Graph) -> Option<Vec<usize>> {
    first_cycle_where(g, 3, |c| c.len() != 4)
}

pub fn is_weakly_chordal(g: &Graph) -> bool {
    has_long_hole(g).is_none() && has_long_hole(&g.complement()).is_none()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Acyclic,
    AllEven,
    AllOdd,
    Mixed,
}

pub fn parity_class(g: &Graph) -> Parity {
    parity_with_witness(g).0
}

/// Parity tag plus, when mixed, one odd and one even induced cycle.
pub fn parity_with_witness(g: &Graph) -> (Parity, Option<(Vec<usize>, Vec<usize>)>) {
    let mut odd: Option<Vec<usize>> = None;
    let mut even: Option<Vec<usize>> = None;
    let _ = visit_induced_cycles(g, &VertexSet::full(g.n()), 3, g.n(), |c| {
        let slot = if c.len() % 2 == 1 { &mut odd } else { &mut even };
        if slot.is_none() {
            *slot = Some(c.to_vec());
        }
        if odd.is_some() && even.is_some() {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    match (odd, even) {
        (None, None) => (Parity::Acyclic, None),
        (Some(_), None) => (Parity::AllOdd, None),
        (None, Some(_)) => (Parity::AllEven, None),
        (Some(o), Some(e)) => (Parity::Mixed, Some((o, e))),
    }
}

/// First vertex whose neighbourhood is the union of two cliques, i.e. whose
/// neighbourhood induces a bipartite subgraph of the complement.
pub fn find_bisimplicial(g: &Graph) -> Option<usize> {
    find_bisimplicial_within(g, &VertexSet::full(g.n()))
}

fn find_bisimplicial_within(g: &Graph, alive: &VertexSet) -> Option<usize> {
    alive.iter().find(|&v| {
        let nbhd = g.neighbors(v).intersection(alive);
        g.induced(&nbhd).complement().is_bipartite()
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BisimplicialError {
    #[error("no bisimplicial vertex in the remaining subgraph on {} vertices", .stuck.len())]
    NoBisimplicialVertex { stuck: VertexSet },
}

/// Peels bisimplicial vertices one at a time and colours greedily in reverse
/// peeling order. Each vertex sees at most two cliques of earlier-coloured
/// neighbours, so at most `2ω − 1` colours are used.
pub fn bisimplicial_elimination_coloring(g: &Graph) -> Result<Coloring, BisimplicialError> {
    let mut alive = VertexSet::full(g.n());
    let mut removal = Vec::with_capacity(g.n());
    while !alive.is_empty() {
        let Some(v) = find_bisimplicial_within(g, &alive) else {
            return Err(BisimplicialError::NoBisimplicialVertex { stuck: alive });
        };
        alive.remove(v);
        removal.push(v);
    }
    removal.reverse();
    Ok(greedy_coloring(g, &removal).expect("removal order is a permutation"))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "vertices")]
pub enum Witness {
    /// An induced cycle of the graph.
    Hole(Vec<usize>),
    /// Vertices whose complement-induced subgraph is this cycle.
    Antihole(Vec<usize>),
    /// An odd and an even induced cycle.
    CyclePair(Vec<usize>, Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum PerfectVerdict {
    Perfect,
    Imperfect(Witness),
}

impl PerfectVerdict {
    pub fn is_perfect(&self) -> bool {
        matches!(self, PerfectVerdict::Perfect)
    }
}

/// No odd hole and no odd antihole, both of length at least 5.
pub fn is_perfect(g: &Graph) -> Result<PerfectVerdict, SolveError> {
    is_perfect_capped(g, DEFAULT_PERFECT_CAP)
}

pub fn is_perfect_capped(g: &Graph, cap: usize) -> Result<PerfectVerdict, SolveError> {
    if g.n() > cap {
        return Err(SolveError::CapExceeded { n: g.n(), cap });
    }
    Ok(perfect_verdict(g))
}

pub(crate) fn perfect_verdict(g: &Graph) -> PerfectVerdict {
    if g.n() < 5 {
        return PerfectVerdict::Perfect;
    }
    if let Some(c) = find_odd_hole(g) {
        return PerfectVerdict::Imperfect(Witness::Hole(c));
    }
    if let Some(c) = find_odd_hole(&g.complement()) {
        return PerfectVerdict::Imperfect(Witness::Antihole(c));
    }
    PerfectVerdict::Perfect
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flag {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Flag {
    fn from_hole(hole: Option<Vec<usize>>) -> Flag {
        Flag { holds: hole.is_none(), witness: hole.map(Witness::Hole) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFlags {
    pub chordal: Flag,
    pub chordal_bipartite: Flag,
    pub long_hole_free: Flag,
    pub weakly_chordal: Flag,
    pub same_parity: Flag,
    pub parity: Parity,
    pub even_hole_free: Flag,
    pub odd_hole_free: Flag,
    pub perfect: Flag,
}

pub fn classify(g: &Graph) -> ClassFlags {
    let complement = g.complement();
    let chordal = match is_chordal(g) {
        ChordalVerdict::Chordal { .. } => Flag { holds: true, witness: None },
        ChordalVerdict::NotChordal { hole } => Flag { holds: false, witness: Some(Witness::Hole(hole)) },
    };
    let long_hole = has_long_hole(g);
    let weakly_chordal = match (&long_hole, has_long_hole(&complement)) {
        (Some(h), _) => Flag { holds: false, witness: Some(Witness::Hole(h.clone())) },
        (None, Some(a)) => Flag { holds: false, witness: Some(Witness::Antihole(a)) },
        (None, None) => Flag { holds: true, witness: None },
    };
    let (parity, pair) = parity_with_witness(g);
    let perfect = match perfect_verdict(g) {
        PerfectVerdict::Perfect => Flag { holds: true, witness: None },
        PerfectVerdict::Imperfect(w) => Flag { holds: false, witness: Some(w) },
    };
    ClassFlags {
        chordal,
        chordal_bipartite: Flag::from_hole(chordal_bipartite_violation(g)),
        long_hole_free: Flag::from_hole(long_hole),
        weakly_chordal,
        same_parity: Flag { holds: parity != Parity::Mixed, witness: pair.map(|(o, e)| Witness::CyclePair(o, e)) },
        parity,
        even_hole_free: Flag::from_hole(find_even_hole(g)),
        odd_hole_free: Flag::from_hole(find_odd_hole(g)),
        perfect,
    }
}
