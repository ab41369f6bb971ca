//! Checkers for the conjectures about graphs without long holes, and a
//! budgeted search for large `χ` at fixed `ω`.

use std::time::Duration;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::canon::canonical_code;
use crate::enumerate::enumerate_graphs;
use crate::error::SolveError;
use crate::generators::{antihole7, complete};
use crate::graph::Graph;
use crate::graph6::write_graph6;
use crate::holes::has_long_hole;
use crate::invariants::{chromatic_number_with, clique_number, maximum_cliques, Deadline, Limits};
use crate::lab::corpus::random_long_hole_free;

pub const DEFAULT_BIPARTITION_CAP: usize = 40;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "verdict")]
pub enum BipartitionVerdict {
    /// Neither side contains a maximum clique.
    Partition { left: Vec<usize>, right: Vec<usize> },
    /// Every bipartition puts some maximum clique inside one side.
    Refuted,
    /// `ω ≤ 1`: every vertex is a maximum clique, so no partition can work.
    NotApplicable,
}

pub fn check_bipartition_conjecture(g: &Graph) -> Result<BipartitionVerdict, SolveError> {
    check_bipartition_conjecture_with(g, &Limits { vertex_cap: DEFAULT_BIPARTITION_CAP, timeout: None })
}

/// Searches for a split of `V(G)` into two sides, neither containing a
/// maximum clique. Vertices are placed in order; a branch dies as soon as
/// some maximum clique lies entirely in one side.
pub fn check_bipartition_conjecture_with(g: &Graph, limits: &Limits) -> Result<BipartitionVerdict, SolveError> {
    let cap = limits.vertex_cap.min(64);
    if g.n() > cap {
        return Err(SolveError::CapExceeded { n: g.n(), cap });
    }
    if let Some(hole) = has_long_hole(g) {
        return Err(SolveError::Precondition(format!("input has a hole of length {}: {hole:?}", hole.len())));
    }
    if clique_number(g).0 <= 1 {
        return Ok(BipartitionVerdict::NotApplicable);
    }
    let n = g.n();
    let cliques: Vec<u64> = maximum_cliques(g).iter().map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v)).collect();
    // closing[v]: cliques whose highest vertex is v, fully placed once v is
    let mut closing: Vec<Vec<u64>> = vec![Vec::new(); n];
    for &c in &cliques {
        closing[63 - c.leading_zeros() as usize].push(c);
    }
    let mut deadline = Deadline::new(limits.timeout);
    let mut sides = [0u64; 2];
    if split(0, &closing, &mut sides, &mut deadline)? {
        let to_vec = |m: u64| (0..n).filter(|&v| m >> v & 1 == 1).collect();
        return Ok(BipartitionVerdict::Partition { left: to_vec(sides[0]), right: to_vec(sides[1]) });
    }
    Ok(BipartitionVerdict::Refuted)
}

fn split(v: usize, closing: &[Vec<u64>], sides: &mut [u64; 2], deadline: &mut Deadline) -> Result<bool, SolveError> {
    deadline.tick()?;
    if v == closing.len() {
        return Ok(true);
    }
    // vertex 0 always goes left
    let choices: &[usize] = if v == 0 { &[0] } else { &[0, 1] };
    for &s in choices {
        sides[s] |= 1 << v;
        if closing[v].iter().all(|&c| c & sides[s] != c) && split(v + 1, closing, sides, deadline)? {
            return Ok(true);
        }
        sides[s] &= !(1 << v);
    }
    Ok(false)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiOmegaSquare {
    pub omega: usize,
    pub chi: usize,
    pub omega_sq: usize,
    pub holds: bool,
}

/// Records whether `χ ≤ ω²`.
pub fn check_chi_omega_sq(g: &Graph, limits: &Limits) -> Result<ChiOmegaSquare, SolveError> {
    let (chi, _) = chromatic_number_with(g, limits)?;
    let omega = clique_number(g).0;
    Ok(ChiOmegaSquare { omega, chi, omega_sq: omega * omega, holds: chi <= omega * omega })
}

/// Limits for `f_search`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    pub seed: u64,
    /// Every long-hole-free graph up to this order is tried.
    pub exhaustive_max_n: usize,
    /// Random substitution combinations and random graphs, each.
    pub random_trials: usize,
    pub random_max_n: usize,
    /// Per-graph limit for the exact chromatic number.
    pub timeout: Option<Duration>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            seed: 0,
            exhaustive_max_n: 7,
            random_trials: 200,
            random_max_n: 24,
            timeout: Some(Duration::from_secs(2)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub omega: usize,
    /// Largest exact `χ` seen; a lower bound on `f(omega)`.
    pub best_chi: usize,
    /// graph6 of the first graph attaining `best_chi`.
    pub witness: Option<String>,
    pub examined: usize,
    /// Graphs whose chromatic number timed out; they count as nothing.
    pub unknown: usize,
}

pub fn f4_search(budget: &SearchBudget) -> SearchReport {
    f_search(4, budget)
}

/// Largest `χ` among long-hole-free graphs with clique number `omega` drawn
/// from an exhaustive sweep, random substitution combinations and random
/// long-hole-free graphs.
pub fn f_search(omega: usize, budget: &SearchBudget) -> SearchReport {
    let mut report = SearchReport { omega, best_chi: 0, witness: None, examined: 0, unknown: 0 };
    let limits = Limits { vertex_cap: usize::MAX, timeout: budget.timeout };
    let mut seen = std::collections::HashSet::new();
    let mut consider = |g: &Graph, report: &mut SearchReport| {
        if clique_number(g).0 != omega || !seen.insert(canonical_code(g)) {
            return;
        }
        report.examined += 1;
        match chromatic_number_with(g, &limits) {
            Ok((chi, _)) if chi > report.best_chi => {
                report.best_chi = chi;
                report.witness = Some(write_graph6(g));
            }
            Ok(_) => {}
            Err(_) => report.unknown += 1,
        }
    };

    let mut small: Vec<Graph> = Vec::new();
    for n in 1..=budget.exhaustive_max_n.min(crate::enumerate::DEFAULT_ENUMERATION_CAP) {
        let graphs = enumerate_graphs(n, |g| has_long_hole(g).is_none()).expect("within cap");
        for g in &graphs {
            consider(g, &mut report);
        }
        if n <= 4 {
            small.extend(graphs);
        }
    }
    if small.is_empty() {
        small.push(complete(1));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
    let mut pool = vec![complete(1), complete(2), antihole7()];
    for _ in 0..budget.random_trials {
        let base = small.choose(&mut rng).expect("nonempty");
        let parts: Vec<Graph> = (0..base.n()).map(|_| pool.choose(&mut rng).expect("nonempty").clone()).collect();
        let g = base.substitute(&parts).expect("one part per vertex");
        if g.n() > budget.random_max_n {
            continue;
        }
        let w = clique_number(&g).0;
        if w <= omega {
            consider(&g, &mut report);
            if w < omega && g.n() > 1 {
                pool.push(g);
            }
        }
    }
    for _ in 0..budget.random_trials {
        let n = rng.gen_range(omega.max(1)..=budget.random_max_n.max(omega.max(1)));
        let g = random_long_hole_free(&mut rng, n);
        consider(&g, &mut report);
    }
    report
}
