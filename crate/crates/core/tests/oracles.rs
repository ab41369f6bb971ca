mod common;

use std::collections::BTreeSet;
use std::sync::OnceLock;

use holeforge_core::canon::canonical_code;
use holeforge_core::embed::is_induced_subgraph;
use holeforge_core::enumerate::graphs_up_to;
use holeforge_core::holes::{enumerate_induced_cycles, has_long_hole, is_chordal, is_perfect, parity_class, Parity};
use holeforge_core::invariants::{chromatic_number, clique_cover_number, clique_number, is_proper, stability_number};
use holeforge_core::lab::{enumerate_connected_4_regular, is_planar, verify_antichain};
use holeforge_core::perfection::perfect_chromatic_number;
use holeforge_core::Graph;

fn small() -> &'static [Vec<Graph>] {
    static CACHE: OnceLock<Vec<Vec<Graph>>> = OnceLock::new();
    CACHE.get_or_init(|| graphs_up_to(7).unwrap())
}

#[test]
fn invariants_match_definitions() {
    for level in &small()[1..] {
        for g in level {
            let t = common::tables(g);
            let full = (1usize << g.n()) - 1;
            assert_eq!(clique_number(g).0, t.omega[full]);
            assert_eq!(stability_number(g).0, t.alpha[full]);
            let (chi, coloring) = chromatic_number(g).unwrap();
            assert_eq!(chi, t.chi[full], "{g:?}");
            assert!(is_proper(g, &coloring));
            assert_eq!(clique_cover_number(g).unwrap().0, common::tables(&g.complement()).chi[full]);
            assert_eq!(is_perfect(g).unwrap().is_perfect(), t.perfect[full], "{g:?}");
        }
    }
}

#[test]
fn perfect_chromatic_number_matches_cover_oracle() {
    for level in &small()[1..=6] {
        for g in level {
            let t = common::tables(g);
            let (k, partition) = perfect_chromatic_number(g).unwrap();
            assert_eq!(k, common::chi_p(&t, g.n()), "{g:?}");
            partition.check_invariants(g).unwrap();
        }
    }
}

#[test]
fn induced_cycles_match_subset_scan() {
    for level in small() {
        for g in level {
            let found: BTreeSet<Vec<usize>> = enumerate_induced_cycles(g, 4, g.n())
                .cycles
                .into_iter()
                .map(|mut c| {
                    c.sort_unstable();
                    c
                })
                .collect();
            let expect: BTreeSet<Vec<usize>> = common::induced_cycle_sets(g, 4).into_iter().collect();
            assert_eq!(found, expect, "{g:?}");
            assert_eq!(is_chordal(g).is_chordal(), expect.is_empty());
            assert_eq!(has_long_hole(g).is_some(), expect.iter().any(|c| c.len() >= 5));
            let all = common::induced_cycle_sets(g, 3);
            let odd = all.iter().any(|c| c.len() % 2 == 1);
            let even = all.iter().any(|c| c.len() % 2 == 0);
            let parity = match (odd, even) {
                (false, false) => Parity::Acyclic,
                (true, false) => Parity::AllOdd,
                (false, true) => Parity::AllEven,
                (true, true) => Parity::Mixed,
            };
            assert_eq!(parity_class(g), parity);
        }
    }
}

#[test]
fn planarity_matches_minor_oracle() {
    for level in &small()[..=6] {
        for g in level {
            assert_eq!(is_planar(g), common::planar_by_minors(g), "{g:?}");
        }
    }
    let counts: Vec<usize> = small().iter().map(|l| l.iter().filter(|g| is_planar(g)).count()).collect();
    assert_eq!(counts, vec![1, 1, 2, 4, 11, 33, 142, 822]);
}

#[test]
fn four_regular_counts_match_labelled_oracle() {
    for n in 5..=8 {
        let graphs = enumerate_connected_4_regular(n).unwrap();
        assert_eq!(graphs.len(), common::labelled_4_regular_classes(n), "n = {n}");
        assert!(verify_antichain(&graphs).is_antichain);
    }
}

#[test]
fn induced_embedding_matches_brute_force() {
    let patterns: Vec<&Graph> = small()[..=4].iter().flatten().collect();
    for host in &small()[6] {
        for p in &patterns {
            let code = canonical_code(p);
            let mut brute = false;
            for mask in 0u64..(1 << host.n()) {
                if mask.count_ones() as usize == p.n() {
                    let vs: Vec<usize> = (0..host.n()).filter(|&v| mask >> v & 1 == 1).collect();
                    if canonical_code(&host.induced_ordered(&vs)) == code {
                        brute = true;
                        break;
                    }
                }
            }
            let found = is_induced_subgraph(p, host);
            assert_eq!(found.is_some(), brute);
            if let Some(e) = found {
                assert!(e.is_induced(p, host));
            }
        }
    }
}
