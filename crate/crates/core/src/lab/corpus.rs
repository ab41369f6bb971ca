//! Seeded graph corpora for sweeps.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::enumerate::enumerate_graphs;
use crate::error::SolveError;
use crate::generators::{antihole7, complete};
use crate::graph::Graph;
use crate::holes::has_long_hole;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CorpusKind {
    RandomChordal,
    RandomLongHoleFree,
    SubstitutionClosure,
    Exhaustive,
}

impl CorpusKind {
    pub const ALL: [CorpusKind; 4] = [
        CorpusKind::RandomChordal,
        CorpusKind::RandomLongHoleFree,
        CorpusKind::SubstitutionClosure,
        CorpusKind::Exhaustive,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CorpusKind::RandomChordal => "random_chordal",
            CorpusKind::RandomLongHoleFree => "random_long_hole_free",
            CorpusKind::SubstitutionClosure => "substitution_closure",
            CorpusKind::Exhaustive => "exhaustive",
        }
    }
}

impl fmt::Display for CorpusKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CorpusKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CorpusKind::ALL
            .into_iter()
            .find(|k| k.name() == s.replace('-', "_"))
            .ok_or_else(|| format!("unknown corpus kind {s:?}"))
    }
}

/// Random kinds draw `count` graphs with orders in `min_n..=max_n`.
/// `Exhaustive` lists every graph with order in that range and ignores
/// `count`; `long_hole_free_only` keeps only graphs without long holes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusParams {
    pub seed: u64,
    pub count: usize,
    pub min_n: usize,
    pub max_n: usize,
    pub long_hole_free_only: bool,
}

impl Default for CorpusParams {
    fn default() -> Self {
        CorpusParams { seed: 0, count: 100, min_n: 1, max_n: 20, long_hole_free_only: false }
    }
}

pub fn corpus(kind: CorpusKind, params: &CorpusParams) -> Result<Vec<Graph>, SolveError> {
    if params.min_n > params.max_n {
        return Err(SolveError::Precondition(format!("min_n {} exceeds max_n {}", params.min_n, params.max_n)));
    }
    if kind == CorpusKind::Exhaustive {
        let mut out = Vec::new();
        for n in params.min_n..=params.max_n {
            out.extend(enumerate_graphs(n, |g| !params.long_hole_free_only || has_long_hole(g).is_none())?);
        }
        return Ok(out);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let min_n = params.min_n.max(1);
    Ok((0..params.count)
        .map(|_| {
            let n = rng.gen_range(min_n..=params.max_n.max(min_n));
            match kind {
                CorpusKind::RandomChordal => random_chordal(&mut rng, n),
                CorpusKind::RandomLongHoleFree => random_long_hole_free(&mut rng, n),
                CorpusKind::SubstitutionClosure => random_substitution(&mut rng, n),
                CorpusKind::Exhaustive => unreachable!(),
            }
        })
        .collect())
}

/// Connected chordal graph: each new vertex is joined to a nonempty subset of
/// a clique among the earlier vertices, so reversing the insertion order
/// gives a perfect elimination ordering.
pub fn random_chordal<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let mut g = Graph::new(n);
    for v in 1..n {
        let mut clique = vec![rng.gen_range(0..v)];
        let mut candidates: Vec<usize> = g.neighbors(clique[0]).iter().filter(|&u| u < v).collect();
        candidates.shuffle(rng);
        for u in candidates {
            if clique.iter().all(|&c| g.has_edge(c, u)) {
                clique.push(u);
            }
        }
        let keep = rng.gen_range(1..=clique.len());
        clique.shuffle(rng);
        for &u in &clique[..keep] {
            g.add_edge(u, v);
        }
    }
    g
}

/// Starts from a random chordal graph and toggles random pairs, undoing
/// every toggle that creates a hole of length at least 5.
pub fn random_long_hole_free<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let mut g = random_chordal(rng, n);
    if n < 2 {
        return g;
    }
    for _ in 0..n {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v {
            continue;
        }
        let had = g.has_edge(u, v);
        if had {
            g.remove_edge(u, v);
        } else {
            g.add_edge(u, v);
        }
        if has_long_hole(&g).is_some() {
            if had {
                g.add_edge(u, v);
            } else {
                g.remove_edge(u, v);
            }
        }
    }
    g
}

/// A member of the closure of `{K_1, K_2, complement(C_7)}` under substitution
/// with exactly `n` vertices. Grows by substituting a seed for a random
/// vertex, or the current graph for a random vertex of a seed.
pub fn random_substitution<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let seeds = [complete(1), complete(2), antihole7()];
    let mut g = complete(1);
    while g.n() < n {
        let room = n - g.n();
        let options: Vec<&Graph> = seeds.iter().filter(|s| s.n() >= 2 && s.n() - 1 <= room).collect();
        let seed = *options.choose(rng).expect("K2 always fits");
        if rng.gen_bool(0.5) {
            let v = rng.gen_range(0..g.n());
            let parts: Vec<Graph> = (0..g.n()).map(|u| if u == v { seed.clone() } else { complete(1) }).collect();
            g = g.substitute(&parts).expect("one part per vertex");
        } else {
            let v = rng.gen_range(0..seed.n());
            let parts: Vec<Graph> = (0..seed.n()).map(|u| if u == v { g.clone() } else { complete(1) }).collect();
            g = seed.substitute(&parts).expect("one part per vertex");
        }
    }
    g
}
