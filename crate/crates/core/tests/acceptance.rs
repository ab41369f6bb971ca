//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any failed.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use holeforge_core::enumerate::graphs_up_to;
use holeforge_core::generators::{
    antihole7, complete, cycle, disjoint_cycles, grotzsch, line_graph, scott_seymour, tree_t,
};
use holeforge_core::holes::{bisimplicial_elimination_coloring, has_long_hole, is_perfect, parity_class, Parity};
use holeforge_core::invariants::{
    chromatic_number, chromatic_number_with, clique_number, is_proper, stability_number, Limits,
};
use holeforge_core::lab::{
    check_bipartition_conjecture, check_chi_omega_sq, corpus, enumerate_connected_4_regular, gyarfas_slack, is_planar,
    max_anticomplete_odd_holes, verify_antichain, BipartitionVerdict, CorpusKind, CorpusParams,
};
use holeforge_core::levelling::{color_long_hole_free, palette_bound, palette_bound_saturating};
use holeforge_core::perfection::{
    chi_p_bounds, chi_p_triangle_free, is_nice, is_nice_capped, perfect_chromatic_number,
};
use holeforge_core::{Graph, SolveError};
use num_bigint::BigUint;
use rayon::prelude::*;

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

/// All graphs up to nine vertices, one per isomorphism class, indexed by order.
fn catalog() -> &'static [Vec<Graph>] {
    static CACHE: OnceLock<Vec<Vec<Graph>>> = OnceLock::new();
    CACHE.get_or_init(|| graphs_up_to(9).expect("nine vertices is within the enumeration cap"))
}

fn up_to(n: usize) -> impl ParallelIterator<Item = &'static Graph> {
    catalog()[..=n].par_iter().flat_map(|level| level.par_iter())
}

fn first_failure<F>(graphs: impl ParallelIterator<Item = &'static Graph>, check: F) -> Result<(), String>
where
    F: Fn(&Graph) -> Result<(), String> + Sync + Send,
{
    match graphs.find_map_any(|g| check(g).err().map(|e| format!("{}: {e}", g.to_edge_list().replace('\n', " ")))) {
        Some(e) => Err(e),
        None => Ok(()),
    }
}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

fn antihole_constants() -> Check {
    let start = Instant::now();
    let g = antihole7();
    ensure!(has_long_hole(&g).is_none(), "antihole reported a long hole");
    let omega = clique_number(&g).0;
    let chi = chromatic_number(&g).map_err(|e| e.to_string())?.0;
    let perfect = is_perfect(&g).map_err(|e| e.to_string())?.is_perfect();
    let chi_p = perfect_chromatic_number(&g).map_err(|e| e.to_string())?.0;
    let nice = is_nice(&g).map_err(|e| e.to_string())?.is_nice;
    let elapsed = start.elapsed();
    ensure!(omega == 3 && chi == 4, "omega={omega} chi={chi}");
    ensure!(!perfect, "antihole reported perfect");
    ensure!(chi_p == 2, "chi_p={chi_p}");
    ensure!(nice, "antihole reported not nice");
    ensure!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    Ok(format!("omega=3 chi=4 imperfect chi_p=2 nice in {:.0} ms", elapsed.as_secs_f64() * 1e3))
}

fn levelling_contract() -> Check {
    let bounds: Vec<BigUint> = (1..=3).map(|w| palette_bound(w).unwrap()).collect();
    ensure!(bounds == [1u32, 4, 64].map(BigUint::from), "palette bounds {bounds:?}");
    let check = |g: &Graph| -> Result<(), String> {
        let out = color_long_hole_free(g, false).map_err(|e| e.to_string())?;
        ensure!(is_proper(g, &out.coloring), "improper colouring");
        ensure!(
            out.colors_used() as u64 <= palette_bound_saturating(out.omega),
            "{} colours with omega {}",
            out.colors_used(),
            out.omega
        );
        Ok(())
    };
    let exhaustive: Vec<&Graph> =
        up_to(9).filter(|g| g.n() > 0 && g.is_connected() && has_long_hole(g).is_none()).collect();
    first_failure(exhaustive.par_iter().copied(), check)?;

    let mut random = Vec::new();
    for (kind, seed) in [(CorpusKind::RandomChordal, 11), (CorpusKind::SubstitutionClosure, 12)] {
        let params = CorpusParams { seed, count: 500, min_n: 1, max_n: 60, long_hole_free_only: false };
        random.extend(corpus(kind, &params).map_err(|e| e.to_string())?);
    }
    ensure!(random.len() == 1000, "corpus size {}", random.len());
    let largest = random.iter().map(Graph::n).max().unwrap_or(0);
    let random: &'static [Graph] = Vec::leak(random);
    first_failure(random.par_iter(), check)?;
    Ok(format!(
        "{} connected catalog graphs and 1000 random graphs (n <= {largest}) coloured within the palette",
        exhaustive.len()
    ))
}

fn chi_p_sandwich() -> Check {
    let at_seven = catalog()[7].len();
    ensure!(at_seven == 1044, "{at_seven} graphs on seven vertices");
    first_failure(up_to(7).filter(|g| g.n() > 0), |g| {
        let t = common::tables(g);
        let full = (1usize << g.n()) - 1;
        let (chi, omega) = (t.chi[full], t.omega[full]);
        let expect = common::chi_p(&t, g.n());
        let (chi_p, partition) = perfect_chromatic_number(g).map_err(|e| e.to_string())?;
        partition.check_invariants(g)?;
        ensure!(chi_p == expect, "chi_p {chi_p}, oracle {expect}");
        ensure!(
            chi_p * omega >= chi && chi_p <= ceil_div(chi, 2),
            "chi_p {chi_p} outside [{chi}/{omega}, ceil({chi}/2)]"
        );
        ensure!(chi_p_bounds(g).map_err(|e| e.to_string())? == (ceil_div(chi, omega), ceil_div(chi, 2)), "bounds");
        Ok(())
    })?;
    let total: usize = catalog()[1..=7].iter().map(Vec::len).sum();
    Ok(format!("{total} graphs with 1 <= n <= 7, zero violations"))
}

fn triangle_free_equality() -> Check {
    let graphs: Vec<&Graph> = up_to(8).filter(|g| g.n() > 0 && clique_number(g).0 <= 2).collect();
    first_failure(graphs.par_iter().copied(), |g| {
        let t = common::tables(g);
        let chi = t.chi[(1usize << g.n()) - 1];
        let chi_p = common::chi_p(&t, g.n());
        ensure!(chi_p == ceil_div(chi, 2), "oracle chi_p {chi_p} with chi {chi}");
        let got = chi_p_triangle_free(g).map_err(|e| e.to_string())?;
        ensure!(got == chi_p, "library {got}, oracle {chi_p}");
        Ok(())
    })?;
    let g = grotzsch();
    let chi = chromatic_number(&g).map_err(|e| e.to_string())?.0;
    let chi_p = perfect_chromatic_number(&g).map_err(|e| e.to_string())?.0;
    ensure!(chi == 4 && chi_p == 2, "Grotzsch chi={chi} chi_p={chi_p}");
    ensure!(chi_p_triangle_free(&g).map_err(|e| e.to_string())? == 2, "triangle-free formula on Grotzsch");
    Ok(format!("{} triangle-free graphs with n <= 8, Grotzsch chi=4 chi_p=2", graphs.len()))
}

fn complement_line_complete() -> Check {
    let mut seen = Vec::new();
    for n in 5..=7 {
        let h = line_graph(&complete(n)).complement();
        let omega = clique_number(&h).0;
        let chi = chromatic_number(&h).map_err(|e| e.to_string())?.0;
        ensure!(chi == n - 2 && omega == n / 2, "n={n}: chi={chi} omega={omega}");
        seen.push(format!("n={n}: chi={chi} omega={omega}"));
    }
    Ok(seen.join(", "))
}

fn niceness() -> Check {
    let k5 = is_nice(&line_graph(&complete(5))).map_err(|e| e.to_string())?;
    ensure!(k5.is_nice, "L(K5) not nice: {:?}", k5.witness);
    let k6 = is_nice_capped(&line_graph(&complete(6)), 15).map_err(|e| e.to_string())?;
    ensure!(k6.is_nice, "L(K6) not nice: {:?}", k6.witness);

    let g = grotzsch();
    let r = is_nice(&g).map_err(|e| e.to_string())?;
    let w = r.witness.ok_or("Grotzsch reported nice")?;
    ensure!(!r.is_nice && w.vertices == (0..11).collect::<Vec<_>>(), "witness {:?}", w.vertices);
    ensure!(w.chi == 4 && w.omega == 2, "witness chi={} omega={}", w.chi, w.omega);

    let planar: Vec<usize> = catalog().iter().map(|l| l.par_iter().filter(|g| is_planar(g)).count()).collect();
    ensure!(planar == [1, 1, 2, 4, 11, 33, 142, 822, 6966, 79853], "planar counts {planar:?}");
    first_failure(up_to(9).filter(|g| is_planar(g)), |g| {
        let r = is_nice(g).map_err(|e| e.to_string())?;
        ensure!(r.is_nice, "planar graph not nice, witness {:?}", r.witness);
        Ok(())
    })?;
    let total: usize = planar.iter().sum();
    Ok(format!("L(K5), L(K6) nice; Grotzsch witness is itself; {total} planar graphs with n <= 9 nice"))
}

fn slack() -> Check {
    first_failure(up_to(7), |g| {
        let s = gyarfas_slack(g).map_err(|e| e.to_string())?.slack;
        let t = common::tables(g);
        let perfect = t.perfect[(1usize << g.n()) - 1];
        ensure!((s == 0) == perfect, "slack {s}, perfect {perfect}");
        ensure!(is_perfect(g).map_err(|e| e.to_string())?.is_perfect() == perfect, "library perfectness");
        Ok(())
    })?;
    let c5 = gyarfas_slack(&cycle(5).unwrap()).map_err(|e| e.to_string())?.slack;
    ensure!(c5 == 1, "slack(C5) = {c5}");

    first_failure(up_to(9), |g| {
        let holes = max_anticomplete_odd_holes(g).map_err(|e| e.to_string())?.count;
        let s = gyarfas_slack(g).map_err(|e| e.to_string())?.slack;
        ensure!(holes <= s, "{holes} anticomplete odd holes, slack {s}");
        Ok(())
    })?;

    let mut tuples = Vec::new();
    odd_tuples(14, 5, &mut Vec::new(), &mut tuples);
    for lengths in &tuples {
        let g = disjoint_cycles(lengths).unwrap();
        let c1 = lengths.len();
        let alpha: usize = lengths.iter().map(|l| (l - 1) / 2).sum();
        ensure!(stability_number(&g).0 == alpha, "{lengths:?}: alpha {}", stability_number(&g).0);
        ensure!(clique_number(&g).0 == 2, "{lengths:?}: omega");
        ensure!(g.n() - alpha * 2 == c1, "{lengths:?}: n - alpha*omega");
        ensure!(gyarfas_slack(&g).map_err(|e| e.to_string())?.slack == c1, "{lengths:?}: slack");
        ensure!(max_anticomplete_odd_holes(&g).map_err(|e| e.to_string())?.count == c1, "{lengths:?}: holes");
    }
    let tested: usize = catalog().iter().map(Vec::len).sum();
    Ok(format!(
        "slack=0 iff perfect for n <= 7, slack(C5)=1, holes <= slack on {tested} graphs, {} odd-hole tuples",
        tuples.len()
    ))
}

/// Non-decreasing tuples of odd lengths at least `min` with total at most `budget`.
fn odd_tuples(budget: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let mut l = min;
    while l <= budget {
        cur.push(l);
        out.push(cur.clone());
        odd_tuples(budget - l, l, cur, out);
        cur.pop();
        l += 2;
    }
}

fn antichains() -> Check {
    let mut counts = Vec::new();
    for n in 5..=8 {
        let graphs = enumerate_connected_4_regular(n).map_err(|e| e.to_string())?;
        let r = verify_antichain(&graphs);
        ensure!(r.is_antichain, "4-regular n={n}: {:?}", r.offending);
        let oracle = common::labelled_4_regular_classes(n);
        ensure!(graphs.len() == oracle, "4-regular n={n}: {} graphs, oracle {oracle}", graphs.len());
        counts.push(graphs.len());
    }
    ensure!(counts == [1, 1, 2, 6], "counts {counts:?}");
    let trees: Vec<Graph> = (1..=5).map(|k| tree_t(k).unwrap()).collect();
    let r = verify_antichain(&trees);
    ensure!(r.is_antichain, "trees: {:?}", r.offending);
    let cycles: Vec<Graph> = (3..=8).map(|k| cycle(k).unwrap()).collect();
    let r = verify_antichain(&cycles);
    ensure!(r.is_antichain, "cycles: {:?}", r.offending);
    Ok(format!("4-regular counts {counts:?} match the oracle; T_1..T_5 and C_3..C_8 are antichains"))
}

fn scott_seymour_tower() -> Check {
    let g = scott_seymour(2);
    ensure!(g.n() == 49, "n = {}", g.n());
    let omega = clique_number(&g).0;
    let alpha = stability_number(&g).0;
    ensure!(omega == 9 && alpha == 4, "omega={omega} alpha={alpha}");
    let lower = ceil_div(g.n(), alpha);
    ensure!(lower == 13 && lower as f64 >= 3.5f64.powi(2), "lower bound {lower}");
    ensure!(has_long_hole(&g).is_none(), "long hole {:?}", has_long_hole(&g));
    let exact = match chromatic_number_with(&g, &Limits::with_timeout(Duration::from_secs(20))) {
        Ok((chi, c)) => {
            ensure!(is_proper(&g, &c) && chi >= lower, "exact chi {chi}");
            format!("exact chi={chi}")
        }
        Err(SolveError::Timeout) => "exact chi timed out".to_string(),
        Err(e) => return Err(e.to_string()),
    };
    Ok(format!("n=49 omega=9 alpha=4 chi >= 13 >= 12.25, no long hole, {exact}"))
}

fn parity() -> Check {
    let graphs: Vec<(&Graph, Parity)> = up_to(8).map(|g| (g, parity_class(g))).collect();
    let odd: Vec<&Graph> = graphs.iter().filter(|(_, p)| *p == Parity::AllOdd).map(|(g, _)| *g).collect();
    let even: Vec<&Graph> = graphs.iter().filter(|(_, p)| *p == Parity::AllEven).map(|(g, _)| *g).collect();
    first_failure(odd.par_iter().copied(), |g| {
        let c = bisimplicial_elimination_coloring(g).map_err(|e| e.to_string())?;
        let omega = clique_number(g).0;
        ensure!(is_proper(g, &c), "improper");
        ensure!(c.colors_used() < 2 * omega, "{} colours with omega {omega}", c.colors_used());
        Ok(())
    })?;
    first_failure(even.par_iter().copied(), |g| {
        ensure!(g.is_bipartite(), "all-even graph not bipartite");
        Ok(())
    })?;
    Ok(format!("{} all-odd graphs within 2w-1 colours, {} all-even graphs bipartite", odd.len(), even.len()))
}

fn conjecture_evidence() -> Check {
    let graphs: Vec<&Graph> = up_to(8).filter(|g| has_long_hole(g).is_none()).collect();
    let not_applicable = graphs
        .par_iter()
        .map(|g| match check_bipartition_conjecture(g) {
            Ok(BipartitionVerdict::Partition { left, right }) => {
                let omega = clique_number(g).0;
                for side in [&left, &right] {
                    let s = holeforge_core::VertexSet::from_vertices(g.n(), side.iter().copied());
                    ensure!(clique_number(&g.induced(&s)).0 < omega, "side {side:?} holds a maximum clique");
                }
                Ok(0)
            }
            Ok(BipartitionVerdict::NotApplicable) if clique_number(g).0 <= 1 => Ok(1),
            Ok(v) => Err(format!("COUNTEREXAMPLE {}: {v:?}", g.to_edge_list().replace('\n', " "))),
            Err(e) => Err(e.to_string()),
        })
        .collect::<Result<Vec<usize>, String>>()?
        .into_iter()
        .sum::<usize>();

    let limits = Limits::with_timeout(Duration::from_secs(10));
    let mut pool: Vec<Graph> = graphs.iter().map(|g| (*g).clone()).collect();
    for kind in [CorpusKind::RandomChordal, CorpusKind::RandomLongHoleFree, CorpusKind::SubstitutionClosure] {
        pool.extend(corpus(kind, &CorpusParams { seed: 7, ..CorpusParams::default() }).map_err(|e| e.to_string())?);
    }
    let verdicts: Vec<Result<Option<bool>, String>> = pool
        .par_iter()
        .map(|g| match check_chi_omega_sq(g, &limits) {
            Ok(r) => Ok(Some(r.holds)),
            Err(SolveError::Timeout) => Ok(None),
            Err(e) => Err(e.to_string()),
        })
        .collect();
    let mut skipped = 0;
    for (g, v) in pool.iter().zip(verdicts) {
        match v? {
            Some(true) => {}
            Some(false) => {
                return Err(format!("COUNTEREXAMPLE chi > omega^2: {}", g.to_edge_list().replace('\n', " ")))
            }
            None => skipped += 1,
        }
    }
    Ok(format!(
        "{} long-hole-free graphs partitioned ({not_applicable} with omega <= 1 not applicable), chi <= omega^2 on {} graphs ({skipped} timed out)",
        graphs.len() - not_applicable,
        pool.len() - skipped
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 11] = [
        ("antihole constants", antihole_constants),
        ("levelling colouring contract", levelling_contract),
        ("perfect chromatic number sandwich", chi_p_sandwich),
        ("triangle-free perfect chromatic number", triangle_free_equality),
        ("complement of line graph of K_n", complement_line_complete),
        ("niceness", niceness),
        ("Gyarfas slack", slack),
        ("induced antichains", antichains),
        ("Scott-Seymour tower", scott_seymour_tower),
        ("same-parity holes", parity),
        ("conjecture evidence", conjecture_evidence),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("[PASS] criterion {:>2} {name} ({secs:.1}s): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] criterion {:>2} {name} ({secs:.1}s): {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
