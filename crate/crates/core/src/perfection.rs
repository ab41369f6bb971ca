//! Perfect chromatic number and nice graphs.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::SolveError;
use crate::generators::{complete, line_graph};
use crate::graph::Graph;
use crate::holes::perfect_verdict;
use crate::invariants::{chromatic_number_with, clique_number, dsatur_coloring, Deadline, Limits};
use crate::masks;

pub const DEFAULT_CHI_P_CAP: usize = 32;
pub const DEFAULT_NICE_CAP: usize = 11;
pub const DEFAULT_LINE_COMPLETE_CAP: usize = 7;

/// A partition of the vertex set into classes that each induce a perfect graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerfectPartition {
    pub classes: Vec<VertexSet>,
}

impl PerfectPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn check_invariants(&self, g: &Graph) -> Result<(), String> {
        let mut seen = VertexSet::new(g.n());
        for (i, class) in self.classes.iter().enumerate() {
            if class.is_empty() {
                return Err(format!("class {i} is empty"));
            }
            if !class.is_disjoint(&seen) {
                return Err(format!("class {i} overlaps an earlier class"));
            }
            if !perfect_verdict(&g.induced(class)).is_perfect() {
                return Err(format!("class {i} induces an imperfect graph"));
            }
            seen.union_with(class);
        }
        if seen.len() != g.n() {
            return Err("classes do not cover every vertex".into());
        }
        Ok(())
    }
}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// `(⌈χ/ω⌉, ⌈χ/2⌉)`, the lower and upper bound on the perfect chromatic number.
pub fn chi_p_bounds(g: &Graph) -> Result<(usize, usize), SolveError> {
    chi_p_bounds_with(g, &Limits::default())
}

pub fn chi_p_bounds_with(g: &Graph, limits: &Limits) -> Result<(usize, usize), SolveError> {
    if g.n() == 0 {
        return Err(SolveError::EmptyGraph);
    }
    let (chi, _) = chromatic_number_with(g, limits)?;
    let omega = clique_number(g).0;
    Ok((ceil_div(chi, omega), ceil_div(chi, 2)))
}

pub fn perfect_chromatic_number(g: &Graph) -> Result<(usize, PerfectPartition), SolveError> {
    perfect_chromatic_number_with(g, &Limits { vertex_cap: DEFAULT_CHI_P_CAP, timeout: None })
}

/// Smallest `t` such that the vertices split into `t` perfect classes. Tries
/// `t` upward from the lower bound; vertices are placed one at a time, a
/// vertex may only open the next unused class, and a branch dies as soon as
/// a class stops being perfect.
pub fn perfect_chromatic_number_with(g: &Graph, limits: &Limits) -> Result<(usize, PerfectPartition), SolveError> {
    let cap = limits.vertex_cap.min(64);
    if g.n() > cap {
        return Err(SolveError::CapExceeded { n: g.n(), cap });
    }
    let (lo, hi) = chi_p_bounds_with(g, limits)?;
    let mut search =
        ChiPSearch { g, order: degree_order(g), cache: HashMap::new(), deadline: Deadline::new(limits.timeout) };
    for t in lo..=hi {
        let mut classes = Vec::with_capacity(t);
        if search.place(0, t, &mut classes)? {
            let classes = classes.into_iter().map(|m| VertexSet::from_mask(g.n(), m)).collect();
            return Ok((t, PerfectPartition { classes }));
        }
    }
    // Two colour classes of a proper colouring are bipartite, so `hi` always succeeds.
    unreachable!("no partition into {hi} perfect classes")
}

fn degree_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    order
}

struct ChiPSearch<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    cache: HashMap<u64, bool>,
    deadline: Deadline,
}

impl ChiPSearch<'_> {
    fn perfect(&mut self, mask: u64) -> bool {
        if mask.count_ones() < 5 {
            return true;
        }
        let g = self.g;
        *self.cache.entry(mask).or_insert_with(|| perfect_verdict(&g.induced_mask(mask)).is_perfect())
    }

    fn place(&mut self, i: usize, t: usize, classes: &mut Vec<u64>) -> Result<bool, SolveError> {
        self.deadline.tick()?;
        if i == self.order.len() {
            return Ok(true);
        }
        let bit = 1u64 << self.order[i];
        for j in 0..classes.len() {
            let grown = classes[j] | bit;
            if self.perfect(grown) {
                classes[j] = grown;
                if self.place(i + 1, t, classes)? {
                    return Ok(true);
                }
                classes[j] &= !bit;
            }
        }
        if classes.len() < t {
            classes.push(bit);
            if self.place(i + 1, t, classes)? {
                return Ok(true);
            }
            classes.pop();
        }
        Ok(false)
    }
}

/// `⌈χ/2⌉` for graphs without triangles.
pub fn chi_p_triangle_free(g: &Graph) -> Result<usize, SolveError> {
    chi_p_triangle_free_with(g, &Limits::default())
}

pub fn chi_p_triangle_free_with(g: &Graph, limits: &Limits) -> Result<usize, SolveError> {
    if clique_number(g).0 > 2 {
        return Err(SolveError::Precondition("input contains a triangle".into()));
    }
    let (chi, _) = chromatic_number_with(g, limits)?;
    Ok(ceil_div(chi, 2))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NiceWitness {
    pub vertices: Vec<usize>,
    pub chi: usize,
    pub omega: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NiceReport {
    pub is_nice: bool,
    pub witness: Option<NiceWitness>,
    pub subgraphs_checked: u64,
}

pub fn is_nice(g: &Graph) -> Result<NiceReport, SolveError> {
    is_nice_capped(g, DEFAULT_NICE_CAP)
}

/// Exhaustive check that `χ(H) − ω(H) ≤ 1` for every induced subgraph `H`.
///
/// Only connected subgraphs are inspected, largest first: a disconnected
/// subgraph has `χ` equal to the maximum over its components and `ω` at
/// least the `ω` of that component. Since `χ(H) ≤ χ(G)`, only subgraphs with
/// `ω(H) ≤ χ(G) − 2` can fail, and a DSATUR colouring settles most of those
/// before the exact solver is called. A subgraph with an edge has `ω ≥ 2`, so
/// nothing fails unless `χ(G) ≥ 4`.
pub fn is_nice_capped(g: &Graph, cap: usize) -> Result<NiceReport, SolveError> {
    let n = g.n();
    if n > cap.min(26) {
        return Err(SolveError::CapExceeded { n, cap: cap.min(26) });
    }
    let mut report = NiceReport { is_nice: true, witness: None, subgraphs_checked: 0 };
    if n == 0 {
        return Ok(report);
    }
    let rows = g.mask_rows();
    let omega = masks::clique_table(&rows);
    let (chi_g, _) = chromatic_number_with(g, &Limits::default())?;
    if chi_g < 4 {
        report.subgraphs_checked = 1;
        return Ok(report);
    }
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); n + 1];
    for mask in 1u64..(1 << n) {
        by_size[mask.count_ones() as usize].push(mask);
    }
    for size in (1..=n).rev() {
        for &mask in &by_size[size] {
            if !masks::is_connected(&rows, mask) {
                continue;
            }
            report.subgraphs_checked += 1;
            let w = omega[mask as usize] as usize;
            if w + 2 > chi_g {
                continue;
            }
            let h = g.induced_mask(mask);
            if dsatur_coloring(&h).colors_used() < w + 2 {
                continue;
            }
            let (chi, _) = chromatic_number_with(&h, &Limits::default())?;
            if chi >= w + 2 {
                report.is_nice = false;
                report.witness = Some(NiceWitness { vertices: masks::vertices(mask), chi, omega: w });
                return Ok(report);
            }
        }
    }
    Ok(report)
}

/// Perfect chromatic number of the line graph of `K_n`.
pub fn chi_p_of_line_complete(n: usize) -> Result<usize, SolveError> {
    chi_p_of_line_complete_capped(n, DEFAULT_LINE_COMPLETE_CAP)
}

pub fn chi_p_of_line_complete_capped(n: usize, cap: usize) -> Result<usize, SolveError> {
    if n > cap {
        return Err(SolveError::CapExceeded { n, cap });
    }
    let l = line_graph(&complete(n));
    Ok(perfect_chromatic_number_with(&l, &Limits { vertex_cap: 64, timeout: None })?.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    #[test]
    fn bounds_examples() {
        assert_eq!(chi_p_bounds(&complete(6)).unwrap(), (1, 3));
        assert_eq!(chi_p_bounds(&cycle(5).unwrap()).unwrap(), (2, 2));
        assert_eq!(chi_p_bounds(&grotzsch()).unwrap(), (2, 2));
        assert_eq!(chi_p_bounds(&Graph::new(0)).unwrap_err(), SolveError::EmptyGraph);
    }

    #[test]
    fn exact_values() {
        let (t, p) = perfect_chromatic_number(&complete(6)).unwrap();
        assert_eq!((t, p.len()), (1, 1));
        for g in [cycle(5).unwrap(), grotzsch(), antihole7()] {
            let (t, p) = perfect_chromatic_number(&g).unwrap();
            assert_eq!(t, 2);
            p.check_invariants(&g).unwrap();
        }
    }

    #[test]
    fn triangle_free_halving() {
        assert_eq!(chi_p_triangle_free(&cycle(7).unwrap()).unwrap(), 2);
        assert_eq!(chi_p_triangle_free(&empty(4)).unwrap(), 1);
        assert_eq!(chi_p_triangle_free(&mycielskian(&grotzsch())).unwrap(), 3);
        assert!(matches!(chi_p_triangle_free(&complete(3)), Err(SolveError::Precondition(_))));
    }

    #[test]
    fn niceness() {
        let r = is_nice(&grotzsch()).unwrap();
        assert!(!r.is_nice);
        let w = r.witness.unwrap();
        assert_eq!((w.vertices.len(), w.chi, w.omega), (11, 4, 2));
        assert!(is_nice(&line_graph(&complete(5))).unwrap().is_nice);
        assert!(is_nice(&antihole7()).unwrap().is_nice);
        assert!(is_nice(&petersen()).unwrap().is_nice);
        assert!(matches!(is_nice(&complete(12)), Err(SolveError::CapExceeded { .. })));
    }

    #[test]
    fn line_graphs_of_complete_graphs() {
        assert_eq!(chi_p_of_line_complete(3).unwrap(), 1);
        assert_eq!(chi_p_of_line_complete(4).unwrap(), 1);
        assert!(chi_p_of_line_complete(8).is_err());
    }
}
