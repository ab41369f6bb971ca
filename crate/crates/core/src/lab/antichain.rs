//! Antichains under the induced-subgraph order and the hereditary classes
//! they define.

use serde::{Deserialize, Serialize};

use crate::embed::is_induced_subgraph;
use crate::enumerate::{enumerate_graphs, DEFAULT_ENUMERATION_CAP};
use crate::error::SolveError;
use crate::graph::Graph;
use crate::graph6::write_graph6;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AntichainReport {
    pub graphs: Vec<Graph>,
    pub is_antichain: bool,
    /// `(i, j)` with `graphs[i]` an induced subgraph of `graphs[j]`.
    pub offending: Option<(usize, usize)>,
}

pub fn verify_antichain(graphs: &[Graph]) -> AntichainReport {
    let mut offending = None;
    'outer: for i in 0..graphs.len() {
        for j in 0..graphs.len() {
            if i != j && is_induced_subgraph(&graphs[i], &graphs[j]).is_some() {
                offending = Some((i, j));
                break 'outer;
            }
        }
    }
    AntichainReport { graphs: graphs.to_vec(), is_antichain: offending.is_none(), offending }
}

/// One graph per isomorphism class of connected 4-regular graphs on `n`
/// vertices, ordered by graph6 code.
pub fn enumerate_connected_4_regular(n: usize) -> Result<Vec<Graph>, SolveError> {
    if n < 5 {
        return Err(SolveError::Precondition(format!("no 4-regular graph has {n} vertices")));
    }
    let mut out = enumerate_graphs(n, |g| g.degrees().iter().all(|&d| d == 4) && g.is_connected())?;
    out.sort_by_cached_key(write_graph6);
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeStatus {
    pub n: usize,
    pub requested: usize,
    /// `None` when `n` is above the enumeration cap.
    pub available: Option<usize>,
    pub feasible: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForbiddenSequenceRealization {
    /// `requested[i]` is the count wanted on `i + 1` vertices.
    pub requested: Vec<usize>,
    pub selected: Vec<Graph>,
    pub per_size: Vec<SizeStatus>,
}

impl ForbiddenSequenceRealization {
    /// Membership in the class of graphs containing none of the selected graphs.
    pub fn contains(&self, g: &Graph) -> bool {
        class_membership(g, &self.selected)
    }
}

/// Picks the first `f[n-1]` connected 4-regular graphs on `n` vertices for
/// every `n`. Sizes without enough such graphs are flagged, not failed.
pub fn realize_forbidden_sequence(f: &[usize]) -> ForbiddenSequenceRealization {
    let mut selected = Vec::new();
    let mut per_size = Vec::new();
    for (i, &requested) in f.iter().enumerate() {
        let n = i + 1;
        if requested == 0 {
            per_size.push(SizeStatus { n, requested, available: None, feasible: true });
            continue;
        }
        let available = if n < 5 {
            Some(Vec::new())
        } else if n <= DEFAULT_ENUMERATION_CAP {
            enumerate_connected_4_regular(n).ok()
        } else {
            None
        };
        let feasible = available.as_ref().is_some_and(|a| a.len() >= requested);
        if let Some(a) = &available {
            selected.extend(a.iter().take(requested).cloned());
        }
        per_size.push(SizeStatus { n, requested, available: available.map(|a| a.len()), feasible });
    }
    ForbiddenSequenceRealization { requested: f.to_vec(), selected, per_size }
}

/// True when no graph of `forbidden` is an induced subgraph of `g`.
pub fn class_membership(g: &Graph, forbidden: &[Graph]) -> bool {
    forbidden.iter().all(|h| is_induced_subgraph(h, g).is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    #[test]
    fn antichain_examples() {
        let cycles: Vec<Graph> = (3..=5).map(|n| cycle(n).unwrap()).collect();
        assert!(verify_antichain(&cycles).is_antichain);
        let trees: Vec<Graph> = (1..=3).map(|k| tree_t(k).unwrap()).collect();
        assert!(verify_antichain(&trees).is_antichain);
        let paths = [path(3).unwrap(), path(4).unwrap()];
        let r = verify_antichain(&paths);
        assert!(!r.is_antichain);
        assert_eq!(r.offending, Some((0, 1)));
    }

    #[test]
    fn four_regular_small() {
        assert_eq!(enumerate_connected_4_regular(5).unwrap(), vec![complete(5)]);
        assert_eq!(enumerate_connected_4_regular(6).unwrap().len(), 1);
        assert_eq!(enumerate_connected_4_regular(7).unwrap().len(), 2);
        assert!(enumerate_connected_4_regular(4).is_err());
    }

    #[test]
    fn realization() {
        let r = realize_forbidden_sequence(&[0, 0, 0, 0, 1]);
        assert_eq!(r.selected, vec![complete(5)]);
        assert!(r.per_size[4].feasible);
        assert!(!r.contains(&complete(6)));
        assert!(r.contains(&cycle(6).unwrap()));
        let r = realize_forbidden_sequence(&[0, 0, 0, 0, 2]);
        assert!(!r.per_size[4].feasible);
        assert_eq!(r.per_size[4].available, Some(1));
        let r = realize_forbidden_sequence(&[1]);
        assert!(!r.per_size[0].feasible);
        let r = realize_forbidden_sequence(&[0; 9].iter().copied().chain([1]).collect::<Vec<_>>());
        assert_eq!(r.per_size[9].available, None);
    }

    #[test]
    fn membership() {
        assert!(class_membership(&cycle(4).unwrap(), &[complete(3)]));
        assert!(!class_membership(&complete(5), &[complete(5)]));
        assert!(class_membership(&complete(5), &[]));
    }
}
