//! Isomorph-free generation of all graphs of a given order.
//!
//! Graphs of order `n` are grown from the representatives of order `n-1` by
//! adding one vertex with every possible neighbourhood. A child is kept only
//! when the added vertex could be the canonical deletion vertex: the vertex
//! of maximum degree appearing first in the child's canonical labelling.
//! Every isomorphism class then has exactly one parent class; duplicates
//! among siblings of one parent are removed by canonical form.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::canon::{canonical_form, canonical_labeling};
use crate::error::SolveError;
use crate::graph::Graph;

pub const DEFAULT_ENUMERATION_CAP: usize = 9;

/// One representative (in canonical form) per isomorphism class on `n`
/// vertices passing `filter`, in a fixed order. Refuses `n` above the default cap.
pub fn enumerate_graphs<F>(n: usize, filter: F) -> Result<Vec<Graph>, SolveError>
where
    F: Fn(&Graph) -> bool + Sync,
{
    enumerate_graphs_capped(n, DEFAULT_ENUMERATION_CAP, filter)
}

pub fn enumerate_graphs_capped<F>(n: usize, cap: usize, filter: F) -> Result<Vec<Graph>, SolveError>
where
    F: Fn(&Graph) -> bool + Sync,
{
    if n > cap {
        return Err(SolveError::CapExceeded { n, cap });
    }
    if n == 0 {
        let g = Graph::new(0);
        return Ok(if filter(&g) { vec![g] } else { vec![] });
    }
    let mut level = vec![Graph::new(1)];
    for order in 2..=n {
        let last = order == n;
        let shards: Vec<Vec<Graph>> = level
            .par_iter()
            .map(|parent| {
                let mut kids = children(parent);
                if last {
                    kids.retain(|g| filter(g));
                }
                kids
            })
            .collect();
        level = shards.into_iter().flatten().collect();
    }
    if n == 1 {
        level.retain(|g| filter(g));
    }
    Ok(level)
}

/// All orders `0..=max_n`, unfiltered; `result[k]` holds the graphs on `k` vertices.
pub fn graphs_up_to(max_n: usize) -> Result<Vec<Vec<Graph>>, SolveError> {
    if max_n > DEFAULT_ENUMERATION_CAP {
        return Err(SolveError::CapExceeded { n: max_n, cap: DEFAULT_ENUMERATION_CAP });
    }
    let mut out = vec![vec![Graph::new(0)]];
    if max_n == 0 {
        return Ok(out);
    }
    out.push(vec![Graph::new(1)]);
    for _ in 2..=max_n {
        let shards: Vec<Vec<Graph>> = out.last().unwrap().par_iter().map(children).collect();
        out.push(shards.into_iter().flatten().collect());
    }
    Ok(out)
}

/// Canonically accepted one-vertex extensions of `parent`, which must itself
/// be in canonical form.
fn children(parent: &Graph) -> Vec<Graph> {
    let m = parent.n();
    assert!(m < 64, "augmentation works on single-word rows");
    let rows = parent.mask_rows();
    let parent_deg: Vec<u32> = rows.iter().map(|r| r.count_ones()).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for s in 0u64..(1 << m) {
        let new_deg = s.count_ones();
        let max_old = (0..m).map(|v| parent_deg[v] + (s >> v & 1) as u32).max().unwrap_or(0);
        if new_deg < max_old {
            continue;
        }
        let mut child_rows = rows.clone();
        for (v, row) in child_rows.iter_mut().enumerate() {
            if s >> v & 1 == 1 {
                *row |= 1 << m;
            }
        }
        child_rows.push(s);
        let child = Graph::from_mask_rows(&child_rows);
        let order = canonical_labeling(&child);
        let max_deg = new_deg;
        let w =
            *order.iter().find(|&&v| child_rows[v].count_ones() == max_deg).expect("the new vertex has maximum degree");
        if w != m {
            let keep: Vec<usize> = (0..=m).filter(|&v| v != w).collect();
            if canonical_form(&child.induced_ordered(&keep)) != *parent {
                continue;
            }
        }
        let form = child.induced_ordered(&order);
        if seen.insert(form.clone()) {
            out.push(form);
        }
    }
    out
}
