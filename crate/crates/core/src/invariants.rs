//! Exact clique number, chromatic number, stability number and clique cover
//! number, each with a certificate.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{GraphError, SolveError};
use crate::graph::{is_permutation, Graph};

/// Resource limits for the exponential solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub vertex_cap: usize,
    pub timeout: Option<Duration>,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { vertex_cap: 128, timeout: None }
    }
}

impl Limits {
    pub fn with_timeout(timeout: Duration) -> Self {
        Limits { timeout: Some(timeout), ..Limits::default() }
    }

    pub(crate) fn check_cap(&self, n: usize) -> Result<(), SolveError> {
        if n > self.vertex_cap {
            Err(SolveError::CapExceeded { n, cap: self.vertex_cap })
        } else {
            Ok(())
        }
    }
}

/// Wall-clock deadline polled every few thousand search nodes.
#[derive(Debug, Clone)]
pub(crate) struct Deadline {
    at: Option<Instant>,
    ticks: u32,
}

impl Deadline {
    pub(crate) fn new(timeout: Option<Duration>) -> Self {
        Deadline { at: timeout.map(|t| Instant::now() + t), ticks: 0 }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<(), SolveError> {
        self.ticks = self.ticks.wrapping_add(1);
        if self.ticks.is_multiple_of(4096) {
            if let Some(at) = self.at {
                if Instant::now() >= at {
                    return Err(SolveError::Timeout);
                }
            }
        }
        Ok(())
    }
}

/// A vertex colouring. `palette` bounds every colour index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub colors: Vec<usize>,
    pub palette: usize,
}

impl Coloring {
    /// Palette taken as one more than the largest colour used.
    pub fn from_colors(colors: Vec<usize>) -> Self {
        let palette = colors.iter().max().map_or(0, |&m| m + 1);
        Coloring { colors, palette }
    }

    /// Number of distinct colours actually used.
    pub fn colors_used(&self) -> usize {
        let mut seen = self.colors.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Colour classes indexed by colour (possibly empty ones for unused colours).
    pub fn classes(&self) -> Vec<VertexSet> {
        let n = self.colors.len();
        let mut out = vec![VertexSet::new(n); self.palette];
        for (v, &c) in self.colors.iter().enumerate() {
            out[c].insert(v);
        }
        out
    }

    /// Renumbers colours to `0..colors_used()` preserving their relative order.
    pub fn compacted(&self) -> Coloring {
        let mut used: Vec<usize> = self.colors.clone();
        used.sort_unstable();
        used.dedup();
        let colors = self.colors.iter().map(|c| used.binary_search(c).unwrap()).collect();
        Coloring { colors, palette: used.len() }
    }
}

pub fn is_proper(g: &Graph, c: &Coloring) -> bool {
    c.colors.len() == g.n()
        && c.colors.iter().all(|&x| x < c.palette)
        && g.edges().all(|(u, v)| c.colors[u] != c.colors[v])
}

/// First-fit colouring along `order`.
pub fn greedy_coloring(g: &Graph, order: &[usize]) -> Result<Coloring, GraphError> {
    if !is_permutation(order, g.n()) {
        return Err(GraphError::NotAPermutation(g.n()));
    }
    let mut colors = vec![usize::MAX; g.n()];
    let mut taken = Vec::new();
    for &v in order {
        taken.clear();
        taken.resize(g.n() + 1, false);
        for w in g.neighbors(v).iter() {
            if colors[w] != usize::MAX {
                taken[colors[w]] = true;
            }
        }
        colors[v] = taken.iter().position(|&t| !t).unwrap();
    }
    Ok(Coloring::from_colors(colors))
}

/// DSATUR heuristic; an upper bound for the exact search.
pub fn dsatur_coloring(g: &Graph) -> Coloring {
    let n = g.n();
    let mut colors = vec![usize::MAX; n];
    let mut seen = vec![VertexSet::new(n + 1); n];
    let deg = g.degrees();
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v] == usize::MAX)
            .max_by_key(|&v| (seen[v].len(), deg[v], std::cmp::Reverse(v)))
            .unwrap();
        let c = (0..=n).find(|&c| !seen[v].contains(c)).unwrap();
        colors[v] = c;
        for w in g.neighbors(v).iter() {
            seen[w].insert(c);
        }
    }
    Coloring::from_colors(colors)
}

/// Maximum clique by branch and bound with greedy colouring bounds.
pub fn clique_number(g: &Graph) -> (usize, VertexSet) {
    let mut best = Vec::new();
    let mut current = Vec::new();
    expand_clique(g, VertexSet::full(g.n()), &mut current, &mut best);
    let witness = VertexSet::from_vertices(g.n(), best.iter().copied());
    (best.len(), witness)
}

/// Clique number of the subgraph induced on `within`.
pub fn clique_number_within(g: &Graph, within: &VertexSet) -> (usize, VertexSet) {
    let mut best = Vec::new();
    let mut current = Vec::new();
    expand_clique(g, within.clone(), &mut current, &mut best);
    (best.len(), VertexSet::from_vertices(g.n(), best.iter().copied()))
}

fn expand_clique(g: &Graph, mut cand: VertexSet, current: &mut Vec<usize>, best: &mut Vec<usize>) {
    if cand.is_empty() {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return;
    }
    // Greedy sequential colouring of the candidates: vertex i cannot extend the
    // current clique by more than its colour number.
    let mut order: Vec<(usize, usize)> = Vec::with_capacity(cand.len());
    let mut uncolored = cand.clone();
    let mut color = 0;
    while !uncolored.is_empty() {
        color += 1;
        let mut avail = uncolored.clone();
        while let Some(v) = avail.first() {
            avail.remove(v);
            avail.difference_with(&g.neighbors(v));
            uncolored.remove(v);
            order.push((v, color));
        }
    }
    for &(v, bound) in order.iter().rev() {
        if current.len() + bound <= best.len() {
            return;
        }
        current.push(v);
        let mut next = cand.clone();
        next.intersect_words(g.row(v));
        expand_clique(g, next, current, best);
        current.pop();
        cand.remove(v);
    }
}

/// Every maximum clique, each as a sorted vertex list, in lexicographic order.
pub fn maximum_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let (omega, _) = clique_number(g);
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(
        g: &Graph,
        start: usize,
        cand: &VertexSet,
        target: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == target {
            out.push(current.clone());
            return;
        }
        for v in cand.iter().filter(|&v| v >= start) {
            let mut next = cand.clone();
            next.intersect_words(g.row(v));
            if current.len() + 1 + next.iter().filter(|&w| w > v).count() < target {
                continue;
            }
            current.push(v);
            rec(g, v + 1, &next, target, current, out);
            current.pop();
        }
    }
    if omega > 0 {
        rec(g, 0, &VertexSet::full(g.n()), omega, &mut current, &mut out);
    }
    out
}

pub fn stability_number(g: &Graph) -> (usize, VertexSet) {
    clique_number(&g.complement())
}

/// Exact chromatic number with no time limit.
pub fn chromatic_number(g: &Graph) -> Result<(usize, Coloring), SolveError> {
    chromatic_number_with(g, &Limits::default())
}

/// Iterative deepening from the clique bound: `k = ω, ω+1, ...` until a
/// `k`-colouring exists or `k` reaches the DSATUR upper bound. The maximum
/// clique is precoloured `0..ω`, which breaks the colour symmetry.
pub fn chromatic_number_with(g: &Graph, limits: &Limits) -> Result<(usize, Coloring), SolveError> {
    limits.check_cap(g.n())?;
    let n = g.n();
    if n == 0 {
        return Ok((0, Coloring::from_colors(Vec::new())));
    }
    let (omega, clique) = clique_number(g);
    let upper = dsatur_coloring(g);
    let ub = upper.palette;
    let mut deadline = Deadline::new(limits.timeout);
    let seed: Vec<usize> = clique.to_vec();
    for k in omega..ub {
        if let Some(colors) = k_coloring(g, k, &seed, &mut deadline)? {
            return Ok((k, Coloring { colors, palette: k }));
        }
    }
    Ok((ub, upper))
}

/// Decides `k`-colourability; returns a colouring when one exists.
pub fn is_k_colorable(g: &Graph, k: usize, limits: &Limits) -> Result<Option<Coloring>, SolveError> {
    limits.check_cap(g.n())?;
    let (omega, clique) = clique_number(g);
    if omega > k {
        return Ok(None);
    }
    let mut deadline = Deadline::new(limits.timeout);
    Ok(k_coloring(g, k, &clique.to_vec(), &mut deadline)?.map(|colors| Coloring { colors, palette: k }))
}

struct KColor<'a> {
    g: &'a Graph,
    k: usize,
    colors: Vec<usize>,
    // forbid[v * k + c]: number of neighbours of v coloured c
    forbid: Vec<u32>,
    sat: Vec<usize>,
    deg: Vec<usize>,
}

impl KColor<'_> {
    fn assign(&mut self, v: usize, c: usize) {
        self.colors[v] = c;
        for w in self.g.neighbors(v).iter() {
            let slot = &mut self.forbid[w * self.k + c];
            if *slot == 0 {
                self.sat[w] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.colors[v] = usize::MAX;
        for w in self.g.neighbors(v).iter() {
            let slot = &mut self.forbid[w * self.k + c];
            *slot -= 1;
            if *slot == 0 {
                self.sat[w] -= 1;
            }
        }
    }

    fn pick(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for v in 0..self.colors.len() {
            if self.colors[v] != usize::MAX {
                continue;
            }
            best = match best {
                None => Some(v),
                Some(b) if (self.sat[v], self.deg[v]) > (self.sat[b], self.deg[b]) => Some(v),
                keep => keep,
            };
        }
        best
    }

    fn search(&mut self, max_used: usize, deadline: &mut Deadline) -> Result<bool, SolveError> {
        deadline.tick()?;
        let Some(v) = self.pick() else { return Ok(true) };
        if self.sat[v] >= self.k {
            return Ok(false);
        }
        let limit = self.k.min(max_used + 2);
        for c in 0..limit {
            if self.forbid[v * self.k + c] != 0 {
                continue;
            }
            self.assign(v, c);
            if self.search(max_used.max(c), deadline)? {
                return Ok(true);
            }
            self.unassign(v, c);
        }
        Ok(false)
    }
}

fn k_coloring(g: &Graph, k: usize, seed: &[usize], deadline: &mut Deadline) -> Result<Option<Vec<usize>>, SolveError> {
    let n = g.n();
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    if k == 0 || seed.len() > k {
        return Ok(None);
    }
    let mut st =
        KColor { g, k, colors: vec![usize::MAX; n], forbid: vec![0; n * k], sat: vec![0; n], deg: g.degrees() };
    for (c, &v) in seed.iter().enumerate() {
        st.assign(v, c);
    }
    // Colours 0..seed.len() are in use; a fresh colour is always the next index.
    debug_assert!(!seed.is_empty());
    let found = st.search(seed.len() - 1, deadline)?;
    Ok(found.then_some(st.colors))
}

/// Minimum number of cliques covering the vertices, with the cover.
pub fn clique_cover_number(g: &Graph) -> Result<(usize, Vec<VertexSet>), SolveError> {
    clique_cover_number_with(g, &Limits::default())
}

pub fn clique_cover_number_with(g: &Graph, limits: &Limits) -> Result<(usize, Vec<VertexSet>), SolveError> {
    let (theta, coloring) = chromatic_number_with(&g.complement(), limits)?;
    Ok((theta, coloring.classes()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub n: usize,
    pub m: usize,
    pub omega: usize,
    pub chi: usize,
    pub alpha: usize,
    pub theta: usize,
}

pub fn invariant_report(g: &Graph, limits: &Limits) -> Result<InvariantReport, SolveError> {
    Ok(InvariantReport {
        n: g.n(),
        m: g.edge_count(),
        omega: clique_number(g).0,
        chi: chromatic_number_with(g, limits)?.0,
        alpha: stability_number(g).0,
        theta: clique_cover_number_with(g, limits)?.0,
    })
}
