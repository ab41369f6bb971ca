//! Gyárfás slack, anticomplete odd holes and Erdős–Hajnal exponents.

use serde::{Deserialize, Serialize};

use crate::error::SolveError;
use crate::graph::Graph;
use crate::holes::{enumerate_induced_cycles_capped, DEFAULT_CYCLE_CAP};
use crate::invariants::{clique_number, stability_number};
use crate::masks;

pub const DEFAULT_SLACK_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlackReport {
    /// Largest `|V(H)| − α(H)·ω(H)` over induced subgraphs `H`, at least 0.
    pub slack: usize,
    pub witness: Vec<usize>,
    pub alpha: usize,
    pub omega: usize,
}

pub fn gyarfas_slack(g: &Graph) -> Result<SlackReport, SolveError> {
    gyarfas_slack_capped(g, DEFAULT_SLACK_CAP)
}

/// Scans every induced subgraph, connected or not, with `α` and `ω` read
/// from subset tables.
pub fn gyarfas_slack_capped(g: &Graph, cap: usize) -> Result<SlackReport, SolveError> {
    let cap = cap.min(26);
    if g.n() > cap {
        return Err(SolveError::CapExceeded { n: g.n(), cap });
    }
    let rows = g.mask_rows();
    let omega = masks::clique_table(&rows);
    let alpha = masks::clique_table(&masks::complement_rows(&rows));
    let mut best = (0i64, 0u64);
    for mask in 1u64..(1 << g.n()) {
        let value = mask.count_ones() as i64 - alpha[mask as usize] as i64 * omega[mask as usize] as i64;
        if value > best.0 {
            best = (value, mask);
        }
    }
    let (value, mask) = best;
    Ok(SlackReport {
        slack: value as usize,
        witness: masks::vertices(mask),
        alpha: alpha[mask as usize] as usize,
        omega: omega[mask as usize] as usize,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnticompleteHoles {
    pub count: usize,
    pub holes: Vec<Vec<usize>>,
}

/// Largest family of odd holes (length ≥ 5) that are pairwise disjoint
/// with no edges between them: a maximum stable set in the conflict graph
/// of all odd holes.
pub fn max_anticomplete_odd_holes(g: &Graph) -> Result<AnticompleteHoles, SolveError> {
    max_anticomplete_odd_holes_capped(g, DEFAULT_CYCLE_CAP)
}

pub fn max_anticomplete_odd_holes_capped(g: &Graph, cycle_cap: usize) -> Result<AnticompleteHoles, SolveError> {
    let report = enumerate_induced_cycles_capped(g, 5, g.n(), cycle_cap);
    if report.truncated {
        return Err(SolveError::CapExceeded { n: report.cycles.len(), cap: cycle_cap });
    }
    let holes: Vec<Vec<usize>> = report.cycles.into_iter().filter(|c| c.len() % 2 == 1).collect();
    let closed: Vec<_> = holes
        .iter()
        .map(|h| {
            let mut s = crate::bitset::VertexSet::from_vertices(g.n(), h.iter().copied());
            for &v in h {
                s.union_with(&g.neighbors(v));
            }
            s
        })
        .collect();
    let mut conflict = Graph::new(holes.len());
    for (i, around) in closed.iter().enumerate() {
        for (j, other) in holes.iter().enumerate().skip(i + 1) {
            if other.iter().any(|&v| around.contains(v)) {
                conflict.add_edge(i, j);
            }
        }
    }
    let (count, chosen) = stability_number(&conflict);
    Ok(AnticompleteHoles { count, holes: chosen.iter().map(|i| holes[i].clone()).collect() })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EHReport {
    pub n: usize,
    pub alpha: usize,
    pub omega: usize,
    /// `log max(α, ω) / log n`.
    pub exponent: f64,
}

pub fn eh_exponent(g: &Graph) -> Result<EHReport, SolveError> {
    let n = g.n();
    if n < 2 {
        return Err(SolveError::Precondition(format!("need at least 2 vertices, got {n}")));
    }
    let alpha = stability_number(g).0;
    let omega = clique_number(g).0;
    let exponent = (alpha.max(omega) as f64).ln() / (n as f64).ln();
    Ok(EHReport { n, alpha, omega, exponent })
}
