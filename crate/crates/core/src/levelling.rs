//! Colouring graphs with no hole of length at least 5 by levelling.
//!
//! For a connected graph with clique number `ω`, let `n = N(ω−1)` be the
//! palette that suffices one clique size down. Breadth-first layers from a
//! root are coloured independently, even layers from one palette and odd
//! layers from another, each of size `2n²`:
//!
//! * layer 1 is a neighbourhood, so its clique number is at most `ω−1`;
//! * for a component `C` of layer `k ≥ 2`, the ancestors are pruned until
//!   every remaining vertex has a child for which it is the only parent.
//!   Take `x` in layer `k−2` and its exclusive child `y`; the rest of layer
//!   `k−1` splits into `A = N(y)` and `B`, and `B ⊆ N(x)` unless there is a
//!   long hole. `A` and `B ∪ {y}` get disjoint scratch colourings with `≤ n`
//!   colours each; a vertex of `C` goes to class `A_i` where `i` is the least
//!   scratch colour among its parents. Each `A_i` has clique number `≤ ω−1`
//!   and is coloured recursively from its own block of `n` colours.
//!
//! This gives `N(ω) = 4·N(ω−1)²` with `N(1) = 1`, i.e. `N(ω) = 2^(2^ω) / 4`.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::holes::has_long_hole;
use crate::invariants::{chromatic_number_with, clique_number, is_proper, Coloring, Limits};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LevellingError {
    #[error("levelling needs a connected graph")]
    Disconnected,
    #[error("clique bound must be at least 1")]
    OmegaTooSmall,
    #[error("level {k} is not a valid pruning target: {reason}")]
    InvalidTarget { k: usize, reason: String },
    #[error("hole of length {} detected ({cause})", .witness.len())]
    LongHoleDetected { witness: Vec<usize>, cause: String },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// `N(1) = 1`, `N(ω) = 4·N(ω−1)²`, as an exact integer.
pub fn palette_bound(omega: usize) -> Result<BigUint, LevellingError> {
    if omega < 1 {
        return Err(LevellingError::OmegaTooSmall);
    }
    let mut n = BigUint::from(1u32);
    for _ in 1..omega {
        n = BigUint::from(4u32) * &n * &n;
    }
    Ok(n)
}

/// `palette_bound` clamped to `u64::MAX`; exact for `ω ≤ 5`. Counts of
/// colours actually used never reach the clamp, so comparisons stay exact.
pub fn palette_bound_saturating(omega: usize) -> u64 {
    match omega {
        0 => 0,
        _ => palette_bound(omega).ok().and_then(|b| u64::try_from(b).ok()).unwrap_or(u64::MAX),
    }
}

/// Per-layer palette budget `2·N(ω−1)²`, clamped.
fn level_budget(omega: usize) -> u64 {
    if omega <= 1 {
        return 1;
    }
    let n = palette_bound_saturating(omega - 1);
    n.checked_mul(n).and_then(|x| x.checked_mul(2)).unwrap_or(u64::MAX)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PaletteBudget {
    pub omega: usize,
    pub bound: String,
}

impl PaletteBudget {
    pub fn new(omega: usize) -> Result<Self, LevellingError> {
        Ok(PaletteBudget { omega, bound: palette_bound(omega)?.to_string() })
    }
}

/// Breadth-first layers `L_0 = {root}, L_1, ..., L_m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Levelling {
    pub root: usize,
    pub levels: Vec<VertexSet>,
}

impl Levelling {
    pub fn sizes(&self) -> Vec<usize> {
        self.levels.iter().map(VertexSet::len).collect()
    }

    pub fn check_invariants(&self, g: &Graph) -> Result<(), String> {
        if self.levels.first().map(VertexSet::len) != Some(1) {
            return Err("L_0 must be a single vertex".into());
        }
        let mut seen = VertexSet::new(g.n());
        for (i, level) in self.levels.iter().enumerate() {
            if !level.is_disjoint(&seen) {
                return Err(format!("L_{i} overlaps an earlier level"));
            }
            for v in level.iter() {
                let nbrs = g.neighbors(v);
                if i >= 1 && nbrs.is_disjoint(&self.levels[i - 1]) {
                    return Err(format!("{v} in L_{i} has no neighbour in L_{}", i - 1));
                }
                if let Some(j) = (0..i.saturating_sub(1)).find(|&j| !nbrs.is_disjoint(&self.levels[j])) {
                    return Err(format!("{v} in L_{i} has a neighbour in L_{j}"));
                }
            }
            seen.union_with(level);
        }
        let comp = g
            .components_within(&VertexSet::full(g.n()))
            .into_iter()
            .find(|c| c.contains(self.root))
            .unwrap_or_else(|| VertexSet::new(g.n()));
        if seen != comp {
            return Err("levels do not partition the root's component".into());
        }
        Ok(())
    }
}

pub fn build_levelling(g: &Graph, root: usize) -> Result<Levelling, LevellingError> {
    if root >= g.n() || !g.is_connected() {
        return Err(LevellingError::Disconnected);
    }
    let dist = g.distances(root);
    let depth = dist.iter().flatten().copied().max().unwrap_or(0);
    let mut levels = vec![VertexSet::new(g.n()); depth + 1];
    for (v, d) in dist.iter().enumerate() {
        levels[d.expect("connected")].insert(v);
    }
    Ok(Levelling { root, levels })
}

/// Levels `0..k` after exclusive-child pruning, with the chosen component of `L_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrunedLevelling {
    pub k: usize,
    pub levels: Vec<VertexSet>,
    pub top: VertexSet,
}

impl PrunedLevelling {
    fn layer(&self, i: usize) -> &VertexSet {
        if i == self.k {
            &self.top
        } else {
            &self.levels[i]
        }
    }

    pub fn parents(&self, g: &Graph, v: usize, level: usize) -> VertexSet {
        g.neighbors(v).intersection(&self.levels[level - 1])
    }

    pub fn children(&self, g: &Graph, v: usize, level: usize) -> VertexSet {
        g.neighbors(v).intersection(self.layer(level + 1))
    }

    /// Children of `v` whose only remaining parent is `v`, in increasing order.
    pub fn exclusive_children(&self, g: &Graph, v: usize, level: usize) -> Vec<usize> {
        self.children(g, v, level).iter().filter(|&w| self.parents(g, w, level + 1).len() == 1).collect()
    }

    pub fn check_invariants(&self, g: &Graph) -> Result<(), String> {
        for i in 0..self.k {
            for v in self.levels[i].iter() {
                if self.exclusive_children(g, v, i).is_empty() {
                    return Err(format!("{v} in L_{i} has no exclusive child"));
                }
            }
        }
        for i in 1..=self.k {
            for v in self.layer(i).iter() {
                if self.parents(g, v, i).is_empty() {
                    return Err(format!("{v} in L_{i} lost every parent"));
                }
            }
        }
        Ok(())
    }
}

/// Deletes, one at a time and lowest index first, vertices of `L_0..L_{k−1}`
/// without an exclusive child, until none is left. Children of `L_{k−1}`
/// vertices are only counted inside `top`.
pub fn prune_for_component(
    g: &Graph,
    l: &Levelling,
    k: usize,
    top: &VertexSet,
) -> Result<PrunedLevelling, LevellingError> {
    if k < 2 || k >= l.levels.len() {
        return Err(LevellingError::InvalidTarget { k, reason: "need 2 <= k <= depth".into() });
    }
    if top.is_empty() || !top.is_subset(&l.levels[k]) {
        return Err(LevellingError::InvalidTarget { k, reason: "component must be a nonempty subset of L_k".into() });
    }
    let mut p = PrunedLevelling { k, levels: l.levels[..k].to_vec(), top: top.clone() };
    loop {
        let victim = (0..k)
            .flat_map(|i| p.levels[i].iter().map(move |v| (v, i)).collect::<Vec<_>>())
            .filter(|&(v, i)| p.exclusive_children(g, v, i).is_empty())
            .min();
        match victim {
            Some((v, i)) => {
                p.levels[i].remove(v);
            }
            None => break,
        }
    }
    p.check_invariants(g).map_err(LevellingError::Internal)?;
    Ok(p)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelStats {
    pub level: usize,
    pub parity: usize,
    pub colors_used: usize,
    pub budget: u64,
}

/// Palette accounting for one top-level component.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentStats {
    pub root: usize,
    pub omega: usize,
    pub levels: Vec<LevelStats>,
    pub even_palette: usize,
    pub odd_palette: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevellingOutcome {
    /// Compacted colouring: colours `0..colors_used`.
    pub coloring: Coloring,
    pub omega: usize,
    pub stats: Vec<ComponentStats>,
}

impl LevellingOutcome {
    pub fn colors_used(&self) -> usize {
        self.coloring.colors_used()
    }
}

/// Why the recursion stopped; converted to a public error at the top.
#[derive(Debug)]
enum Violation {
    NotDominated { x: usize, z: usize },
    CliqueTooLarge { found: usize, allowed: usize },
    Internal(String),
}

/// Colours `g`, which must have no hole of length ≥ 5, with at most
/// `N(ω(g))` colours. Unless `trust` is set the hypothesis is checked first.
pub fn color_long_hole_free(g: &Graph, trust: bool) -> Result<LevellingOutcome, LevellingError> {
    if !trust {
        if let Some(witness) = has_long_hole(g) {
            return Err(LevellingError::LongHoleDetected { witness, cause: "precondition check".into() });
        }
    }
    let omega = clique_number(g).0;
    let mut stats = Vec::new();
    let result = color_graph(g, omega.max(1), Some(&mut stats));
    let colors = match result {
        Ok(colors) => colors,
        Err(v) => return Err(explain(g, v)),
    };
    let coloring = Coloring::from_colors(colors);
    if !is_proper(g, &coloring) {
        return Err(explain(g, Violation::Internal("output colouring is improper".into())));
    }
    let bound = palette_bound_saturating(omega.max(1));
    if coloring.colors_used() as u64 > bound {
        return Err(explain(g, Violation::Internal(format!("{} colours exceed N({omega})", coloring.colors_used()))));
    }
    Ok(LevellingOutcome { coloring, omega, stats })
}

fn explain(g: &Graph, v: Violation) -> LevellingError {
    let cause = match &v {
        Violation::NotDominated { x, z } => format!("vertex {z} of B is not adjacent to x = {x}"),
        Violation::CliqueTooLarge { found, allowed } => {
            format!("a subproblem has clique number {found}, expected at most {allowed}")
        }
        Violation::Internal(msg) => msg.clone(),
    };
    match has_long_hole(g) {
        Some(witness) => LevellingError::LongHoleDetected { witness, cause },
        None => LevellingError::Internal(cause),
    }
}

/// Colours every component from a shared palette; the result is compacted.
fn color_graph(
    h: &Graph,
    omega_cap: usize,
    mut stats: Option<&mut Vec<ComponentStats>>,
) -> Result<Vec<usize>, Violation> {
    let mut colors = vec![0usize; h.n()];
    for comp in h.components() {
        let verts = comp.to_vec();
        let sub = h.induced_ordered(&verts);
        let (local, comp_stats) = color_component(&sub, omega_cap, stats.is_some())?;
        for (i, &v) in verts.iter().enumerate() {
            colors[v] = local[i];
        }
        if let (Some(all), Some(mut s)) = (stats.as_deref_mut(), comp_stats) {
            s.root = verts[0];
            all.push(s);
        }
    }
    Ok(colors)
}

/// Subgraph of `h` on `set`, coloured recursively with clique bound `omega_cap`;
/// returns `(vertex, colour)` pairs.
fn color_subset(h: &Graph, set: &VertexSet, omega_cap: usize) -> Result<Vec<(usize, usize)>, Violation> {
    let verts = set.to_vec();
    let colors = color_graph(&h.induced_ordered(&verts), omega_cap, None)?;
    Ok(verts.into_iter().zip(colors).collect())
}

fn color_component(
    h: &Graph,
    omega_cap: usize,
    want_stats: bool,
) -> Result<(Vec<usize>, Option<ComponentStats>), Violation> {
    let (omega, _) = clique_number(h);
    if omega > omega_cap {
        return Err(Violation::CliqueTooLarge { found: omega, allowed: omega_cap });
    }
    if omega <= 1 {
        let stats = ComponentStats { root: 0, omega, levels: Vec::new(), even_palette: 1, odd_palette: 0 };
        return Ok((vec![0; h.n()], want_stats.then_some(stats)));
    }
    let sub_cap = omega - 1;
    let levelling = build_levelling(h, 0).map_err(|e| Violation::Internal(e.to_string()))?;
    // local[v] = colour of v within its level's palette
    let mut local = vec![usize::MAX; h.n()];
    local[levelling.root] = 0;
    let mut level_stats = vec![LevelStats { level: 0, parity: 0, colors_used: 1, budget: level_budget(omega) }];

    if levelling.levels.len() > 1 {
        let assigned = color_subset(h, &levelling.levels[1], sub_cap)?;
        for &(v, c) in &assigned {
            local[v] = c;
        }
        let used = distinct(assigned.iter().map(|&(_, c)| c));
        level_stats.push(LevelStats { level: 1, parity: 1, colors_used: used, budget: level_budget(omega) });
    }

    for k in 2..levelling.levels.len() {
        // (scratch colour class, colour inside it) for every vertex of L_k
        let mut pairs: Vec<(usize, (usize, usize))> = Vec::new();
        for top in h.components_within(&levelling.levels[k]) {
            let pruned = prune_for_component(h, &levelling, k, &top).map_err(|e| Violation::Internal(e.to_string()))?;
            pairs.extend(color_top_component(h, &pruned, sub_cap)?);
        }
        let mut index: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for (_, p) in &pairs {
            index.insert(*p, 0);
        }
        for (i, slot) in index.values_mut().enumerate() {
            *slot = i;
        }
        for (v, p) in &pairs {
            local[*v] = index[p];
        }
        level_stats.push(LevelStats { level: k, parity: k % 2, colors_used: index.len(), budget: level_budget(omega) });
    }

    let level_of = {
        let mut lv = vec![0; h.n()];
        for (i, level) in levelling.levels.iter().enumerate() {
            for v in level.iter() {
                lv[v] = i;
            }
        }
        lv
    };
    let even_palette = distinct((0..h.n()).filter(|&v| level_of[v] % 2 == 0).map(|v| local[v]));
    let odd_palette = distinct((0..h.n()).filter(|&v| level_of[v] % 2 == 1).map(|v| local[v]));
    // even levels take colours 0..even_palette, odd levels the next block
    let even_index = compact_map((0..h.n()).filter(|&v| level_of[v] % 2 == 0).map(|v| local[v]));
    let odd_index = compact_map((0..h.n()).filter(|&v| level_of[v] % 2 == 1).map(|v| local[v]));
    let colors: Vec<usize> = (0..h.n())
        .map(|v| if level_of[v] % 2 == 0 { even_index[&local[v]] } else { even_palette + odd_index[&local[v]] })
        .collect();
    let stats = ComponentStats { root: 0, omega, levels: level_stats, even_palette, odd_palette };
    Ok((colors, want_stats.then_some(stats)))
}

fn color_top_component(
    h: &Graph,
    p: &PrunedLevelling,
    sub_cap: usize,
) -> Result<Vec<(usize, (usize, usize))>, Violation> {
    let k = p.k;
    let below = &p.levels[k - 1];
    let x = p.levels[k - 2].first().ok_or_else(|| Violation::Internal(format!("L_{} emptied by pruning", k - 2)))?;
    let y = *p
        .exclusive_children(h, x, k - 2)
        .first()
        .ok_or_else(|| Violation::Internal(format!("{x} has no exclusive child")))?;
    let a = h.neighbors(y).intersection(below);
    let mut b_plus_y = below.difference(&a);
    b_plus_y.remove(y);
    if let Some(z) = b_plus_y.iter().find(|&z| !h.has_edge(x, z)) {
        return Err(Violation::NotDominated { x, z });
    }
    b_plus_y.insert(y);

    // Scratch colouring of the remaining L_{k−1}: A first, then B ∪ {y}.
    let mut scratch = vec![usize::MAX; h.n()];
    let a_colors = color_subset(h, &a, sub_cap)?;
    let a_used = a_colors.iter().map(|&(_, c)| c + 1).max().unwrap_or(0);
    for (v, c) in a_colors {
        scratch[v] = c;
    }
    for (v, c) in color_subset(h, &b_plus_y, sub_cap)? {
        scratch[v] = a_used + c;
    }

    let mut classes: BTreeMap<usize, VertexSet> = BTreeMap::new();
    for z in p.top.iter() {
        let i = h
            .neighbors(z)
            .intersection(below)
            .iter()
            .map(|w| scratch[w])
            .min()
            .ok_or_else(|| Violation::Internal(format!("{z} has no parent after pruning")))?;
        classes.entry(i).or_insert_with(|| VertexSet::new(h.n())).insert(z);
    }
    let mut out = Vec::with_capacity(p.top.len());
    for (i, class) in classes {
        for (v, c) in color_subset(h, &class, sub_cap)? {
            out.push((v, (i, c)));
        }
    }
    Ok(out)
}

fn distinct(it: impl Iterator<Item = usize>) -> usize {
    compact_map(it).len()
}

fn compact_map(it: impl Iterator<Item = usize>) -> BTreeMap<usize, usize> {
    let mut m: BTreeMap<usize, usize> = it.map(|c| (c, 0)).collect();
    for (i, slot) in m.values_mut().enumerate() {
        *slot = i;
    }
    m
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringReport {
    pub colors_used: usize,
    pub palette_bound: String,
    pub omega: usize,
    pub chi_exact: Option<usize>,
}

/// Levelling colour count next to the bound and, when the exact solver
/// finishes within `limits`, the chromatic number.
pub fn coloring_report(g: &Graph, trust: bool, limits: Option<&Limits>) -> Result<ColoringReport, LevellingError> {
    let outcome = color_long_hole_free(g, trust)?;
    let chi_exact = limits.and_then(|l| chromatic_number_with(g, l).ok()).map(|(k, _)| k);
    Ok(ColoringReport {
        colors_used: outcome.colors_used(),
        palette_bound: palette_bound(outcome.omega.max(1))?.to_string(),
        omega: outcome.omega,
        chi_exact,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    #[test]
    fn palette_recursion_and_closed_form() {
        let expect = [1u64, 4, 64, 16384, 1 << 30];
        for (w, &e) in (1..=5).zip(&expect) {
            assert_eq!(palette_bound(w).unwrap(), BigUint::from(e));
            // (1/4)·2^(2^w)
            let closed = BigUint::from(1u32) << ((1usize << w) - 2);
            assert_eq!(palette_bound(w).unwrap(), closed);
        }
        assert!(palette_bound(0).is_err());
        assert_eq!(palette_bound(7).unwrap(), BigUint::from(1u32) << 126);
        assert_eq!(palette_bound_saturating(7), u64::MAX);
        assert_eq!(palette_bound_saturating(5), 1 << 30);
    }

    #[test]
    fn levelling_sizes() {
        let star = complete_bipartite(1, 4);
        assert_eq!(build_levelling(&star, 0).unwrap().sizes(), vec![1, 4]);
        let c6 = cycle(6).unwrap();
        for r in 0..6 {
            let l = build_levelling(&c6, r).unwrap();
            assert_eq!(l.sizes(), vec![1, 2, 2, 1]);
            l.check_invariants(&c6).unwrap();
        }
        assert_eq!(build_levelling(&path(4).unwrap(), 0).unwrap().sizes(), vec![1, 1, 1, 1]);
        assert_eq!(build_levelling(&Graph::new(2), 0).unwrap_err(), LevellingError::Disconnected);
    }

    #[test]
    fn pruning_on_a_path_keeps_everything() {
        let p5 = path(5).unwrap();
        let l = build_levelling(&p5, 0).unwrap();
        let top = VertexSet::from_vertices(5, [2]);
        let p = prune_for_component(&p5, &l, 2, &top).unwrap();
        assert_eq!(p.levels[0].to_vec(), vec![0]);
        assert_eq!(p.levels[1].to_vec(), vec![1]);
    }

    #[test]
    fn pruning_two_parents_sharing_a_child() {
        // root 0 with children 1, 2; both adjacent to the only grandchild 3
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        let l = build_levelling(&g, 0).unwrap();
        let top = VertexSet::from_vertices(4, [3]);
        let p = prune_for_component(&g, &l, 2, &top).unwrap();
        // 1 is deleted first (lowest index), which makes 3 exclusive to 2
        assert_eq!(p.levels[1].to_vec(), vec![2]);
        assert_eq!(p.exclusive_children(&g, 2, 1), vec![3]);
        p.check_invariants(&g).unwrap();
    }

    #[test]
    fn pruning_rejects_bad_targets() {
        let p5 = path(5).unwrap();
        let l = build_levelling(&p5, 0).unwrap();
        assert!(prune_for_component(&p5, &l, 1, &VertexSet::from_vertices(5, [1])).is_err());
        assert!(prune_for_component(&p5, &l, 2, &VertexSet::from_vertices(5, [3])).is_err());
    }

    #[test]
    fn complete_graphs_use_exactly_n_colours() {
        for n in 1..=7 {
            let out = color_long_hole_free(&complete(n), false).unwrap();
            assert_eq!(out.colors_used(), n);
        }
    }

    #[test]
    fn antihole_within_64_colours() {
        let g = antihole7();
        let out = color_long_hole_free(&g, false).unwrap();
        assert!(is_proper(&g, &out.coloring));
        assert!(out.colors_used() <= 64 && out.colors_used() >= 4);
        assert_eq!(out.omega, 3);
    }

    #[test]
    fn long_hole_is_rejected_without_trust() {
        match color_long_hole_free(&cycle(5).unwrap(), false) {
            Err(LevellingError::LongHoleDetected { witness, .. }) => assert_eq!(witness.len(), 5),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn trusted_long_hole_inputs_never_yield_improper_colourings() {
        for g in [cycle(5).unwrap(), cycle(9).unwrap(), grotzsch(), petersen(), mycielskian(&grotzsch())] {
            match color_long_hole_free(&g, true) {
                Ok(out) => assert!(is_proper(&g, &out.coloring)),
                Err(LevellingError::LongHoleDetected { witness, .. }) => {
                    assert!(crate::holes::is_induced_cycle(&g, &witness) && witness.len() >= 5)
                }
                Err(e) => panic!("{e}"),
            }
        }
    }

    #[test]
    fn edgeless_and_empty() {
        let out = color_long_hole_free(&Graph::new(0), false).unwrap();
        assert_eq!(out.colors_used(), 0);
        let out = color_long_hole_free(&Graph::new(4), false).unwrap();
        assert_eq!(out.colors_used(), 1);
    }

    #[test]
    fn tower_of_antiholes() {
        let g = scott_seymour(2);
        let out = color_long_hole_free(&g, true).unwrap();
        assert!(is_proper(&g, &out.coloring));
        assert_eq!(out.omega, 9);
        assert!(out.colors_used() as u64 <= palette_bound_saturating(9));
    }

    #[test]
    fn report_for_antihole() {
        let r = coloring_report(&antihole7(), false, Some(&Limits::default())).unwrap();
        assert_eq!((r.omega, r.chi_exact, r.palette_bound.as_str()), (3, Some(4), "64"));
        assert!(r.colors_used >= 4);
    }

    #[test]
    fn per_level_budgets_hold() {
        let g = antihole7().join(&path(3).unwrap());
        let out = color_long_hole_free(&g, false).unwrap();
        for comp in &out.stats {
            for l in &comp.levels {
                assert!(l.colors_used as u64 <= l.budget);
            }
        }
    }
}
