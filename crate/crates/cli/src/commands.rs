use std::time::Duration;

use holeforge_core::canon::canonical_code;
use holeforge_core::graph6::write_graph6;
use holeforge_core::holes::{classify as class_flags, has_long_hole};
use holeforge_core::invariants::{chromatic_number_with, clique_number, invariant_report, is_proper, Limits};
use holeforge_core::lab::{self, BipartitionVerdict, CorpusKind, CorpusParams, SearchBudget};
use holeforge_core::levelling::{color_long_hole_free, palette_bound, palette_bound_saturating, LevellingError};
use holeforge_core::perfection::{
    chi_p_bounds_with, is_nice_capped, perfect_chromatic_number_with, DEFAULT_CHI_P_CAP, DEFAULT_NICE_CAP,
};
use holeforge_core::{Graph, SolveError};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::io::{read_graphs, Emitter, Failure, Format, InputArgs};
use crate::{ConvertTo, RunArgs};

const DEFAULT_VERTEX_CAP: usize = 128;

impl RunArgs {
    fn cap_or(&self, default: usize) -> usize {
        self.vcap.map_or(default, |v| v as usize)
    }

    fn limits(&self, default_cap: usize) -> Limits {
        Limits { vertex_cap: self.cap_or(default_cap), timeout: self.timeout.map(Duration::from_secs_f64) }
    }
}

fn solve(e: SolveError) -> Failure {
    match e {
        SolveError::CapExceeded { .. } | SolveError::Timeout => Failure::Limit(e.to_string()),
        SolveError::EmptyGraph | SolveError::Precondition(_) => Failure::Input(e.to_string()),
    }
}

fn check_cap(g: &Graph, cap: usize) -> Result<(), Failure> {
    if g.n() > cap {
        return Err(solve(SolveError::CapExceeded { n: g.n(), cap }));
    }
    Ok(())
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialise")
}

/// Applies `f` to every input graph on `run.jobs` threads and emits rows in input order.
fn per_graph<F>(input: &InputArgs, run: &RunArgs, command: &'static str, f: F) -> u8
where
    F: Fn(&Graph) -> Result<Value, Failure> + Sync,
{
    let mut emitter = Emitter::new(run.format, command);
    let graphs = match read_graphs(input) {
        Ok(gs) => gs,
        Err(e) => {
            emitter.row(0, None, Err(e));
            return emitter.finish();
        }
    };
    let jobs = run.jobs as usize;
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().expect("thread pool");
    let chunk = jobs * 8;
    for (c, batch) in graphs.chunks(chunk).enumerate() {
        let results: Vec<Result<Value, Failure>> = pool.install(|| batch.par_iter().map(&f).collect());
        for (i, (g, r)) in batch.iter().zip(results).enumerate() {
            emitter.row(c * chunk + i, Some(g), r);
        }
    }
    emitter.finish()
}

pub fn analyze(input: &InputArgs, run: &RunArgs) -> u8 {
    let limits = run.limits(DEFAULT_VERTEX_CAP);
    per_graph(input, run, "analyze", |g| invariant_report(g, &limits).map(|r| to_value(&r)).map_err(solve))
}

pub fn classify(input: &InputArgs, run: &RunArgs) -> u8 {
    let cap = run.cap_or(DEFAULT_VERTEX_CAP);
    per_graph(input, run, "classify", |g| {
        check_cap(g, cap)?;
        let flags = to_value(&class_flags(g));
        let mut out = serde_json::Map::new();
        let mut witnesses = serde_json::Map::new();
        for (name, flag) in flags.as_object().expect("struct") {
            match flag.get("holds") {
                Some(holds) => {
                    out.insert(name.clone(), holds.clone());
                    if !flag["witness"].is_null() {
                        witnesses.insert(name.clone(), flag["witness"].clone());
                    }
                }
                None => {
                    out.insert(name.clone(), flag.clone());
                }
            }
        }
        out.insert("witnesses".into(), Value::Object(witnesses));
        Ok(Value::Object(out))
    })
}

pub fn color(input: &InputArgs, run: &RunArgs, trust: bool, verify: bool) -> u8 {
    let limits = run.limits(DEFAULT_VERTEX_CAP);
    per_graph(input, run, "color", |g| {
        check_cap(g, limits.vertex_cap)?;
        let out = match color_long_hole_free(g, trust) {
            Ok(out) => out,
            Err(LevellingError::LongHoleDetected { witness, cause }) if !trust => {
                return Err(Failure::Input(format!(
                    "input has a hole of length {} {witness:?} ({cause})",
                    witness.len()
                )))
            }
            Err(e) => return Err(Failure::Violation(e.to_string())),
        };
        let bound = palette_bound(out.omega.max(1)).expect("omega at least 1");
        let mut value = json!({
            "omega": out.omega,
            "colors_used": out.colors_used(),
            "palette_bound": bound.to_string(),
            "colors": out.coloring.colors,
        });
        if verify {
            let proper = is_proper(g, &out.coloring);
            let within = (out.colors_used() as u64) <= palette_bound_saturating(out.omega.max(1));
            if !proper || !within {
                return Err(Failure::Violation(format!("verification failed: proper={proper} within_bound={within}")));
            }
            let chi = chromatic_number_with(g, &limits).ok().map(|(k, _)| k);
            value["verified"] = json!(true);
            value["chi_exact"] = json!(chi);
        }
        Ok(value)
    })
}

pub fn chip(input: &InputArgs, run: &RunArgs) -> u8 {
    let limits = run.limits(DEFAULT_CHI_P_CAP);
    per_graph(input, run, "chip", |g| {
        let (chi_p, partition) = perfect_chromatic_number_with(g, &limits).map_err(solve)?;
        let (lo, hi) = chi_p_bounds_with(g, &limits).map_err(solve)?;
        partition.check_invariants(g).map_err(Failure::Violation)?;
        let classes: Vec<Vec<usize>> = partition.classes.iter().map(|c| c.to_vec()).collect();
        Ok(json!({ "chi_p": chi_p, "lo": lo, "hi": hi, "partition": classes }))
    })
}

pub fn nice(input: &InputArgs, run: &RunArgs) -> u8 {
    let cap = run.cap_or(DEFAULT_NICE_CAP);
    per_graph(input, run, "nice", |g| is_nice_capped(g, cap).map(|r| to_value(&r)).map_err(solve))
}

pub fn slack(input: &InputArgs, run: &RunArgs) -> u8 {
    let cap = run.cap_or(lab::slack::DEFAULT_SLACK_CAP);
    let cycle_cap = run.cycle_cap as usize;
    per_graph(input, run, "slack", |g| {
        let s = lab::gyarfas_slack_capped(g, cap).map_err(solve)?;
        let holes = lab::slack::max_anticomplete_odd_holes_capped(g, cycle_cap).map_err(solve)?;
        Ok(json!({
            "slack": s.slack,
            "witness": s.witness,
            "alpha": s.alpha,
            "omega": s.omega,
            "anticomplete_odd_holes": holes.count,
            "holes": holes.holes,
        }))
    })
}

pub fn conjectures(input: &InputArgs, run: &RunArgs) -> u8 {
    let limits = run.limits(lab::conjectures::DEFAULT_BIPARTITION_CAP);
    per_graph(input, run, "search-conjectures", |g| {
        check_cap(g, limits.vertex_cap)?;
        let omega = clique_number(g).0;
        let chi = chromatic_number_with(g, &limits).ok().map(|(k, _)| k);
        let long_hole = has_long_hole(g);
        let bipartition = match &long_hole {
            Some(_) => Value::Null,
            None => match lab::check_bipartition_conjecture_with(g, &limits).map_err(solve)? {
                BipartitionVerdict::Partition { .. } => json!("partition"),
                BipartitionVerdict::Refuted => json!("refuted"),
                BipartitionVerdict::NotApplicable => json!("not_applicable"),
            },
        };
        let chi_le_omega_sq = chi.map(|c| c <= omega * omega);
        let counterexample = long_hole.is_none() && (bipartition == json!("refuted") || chi_le_omega_sq == Some(false));
        if counterexample {
            eprintln!("COUNTEREXAMPLE CANDIDATE: {} (canonical {})", write_graph6(g), canonical_code(g));
        }
        let eh = lab::eh_exponent(g).ok().map(|r| r.exponent);
        Ok(json!({
            "canonical": canonical_code(g).to_string(),
            "omega": omega,
            "chi": chi,
            "long_hole_free": long_hole.is_none(),
            "bipartition": bipartition,
            "chi_le_omega_sq": chi_le_omega_sq,
            "eh_exponent": eh,
            "counterexample": counterexample,
        }))
    })
}

pub fn f_search(run: &RunArgs, omega: usize, exhaustive_max_n: usize, trials: usize, max_n: usize) -> u8 {
    let mut emitter = Emitter::new(run.format, "search-f");
    let budget = SearchBudget {
        seed: run.seed,
        exhaustive_max_n,
        random_trials: trials,
        random_max_n: max_n,
        timeout: Some(run.timeout.map_or(Duration::from_secs(2), Duration::from_secs_f64)),
    };
    emitter.row(0, None, Ok(to_value(&lab::f_search(omega, &budget))));
    emitter.finish()
}

pub fn antichain(input: &InputArgs, run: &RunArgs, four_regular: Option<usize>) -> u8 {
    let mut emitter = Emitter::new(run.format, "antichain");
    let graphs = match four_regular {
        Some(n) => lab::enumerate_connected_4_regular(n).map_err(solve),
        None => read_graphs(input),
    };
    let result = graphs.map(|gs| {
        let r = lab::verify_antichain(&gs);
        json!({
            "is_antichain": r.is_antichain,
            "size": gs.len(),
            "offending": r.offending,
            "graphs": gs.iter().map(write_graph6).collect::<Vec<_>>(),
        })
    });
    emitter.row(0, None, result);
    emitter.finish()
}

pub fn corpus(run: &RunArgs, kind: CorpusKind, count: usize, min_n: usize, max_n: usize, long_hole_free: bool) -> u8 {
    let mut emitter = Emitter::new(run.format, "corpus");
    let params = CorpusParams { seed: run.seed, count, min_n, max_n, long_hole_free_only: long_hole_free };
    let graphs = match lab::corpus(kind, &params) {
        Ok(gs) => gs,
        Err(e) => {
            emitter.row(0, None, Err(solve(e)));
            return emitter.finish();
        }
    };
    for (i, g) in graphs.iter().enumerate() {
        match run.format {
            Format::Human => emitter.line(&write_graph6(g)),
            _ => emitter.row(i, Some(g), Ok(json!({ "n": g.n(), "m": g.edge_count() }))),
        }
    }
    emitter.finish()
}

pub fn convert(input: &InputArgs, to: ConvertTo) -> u8 {
    let mut emitter = Emitter::new(Format::Human, "convert");
    let graphs = match read_graphs(input) {
        Ok(gs) => gs,
        Err(e) => {
            emitter.row(0, None, Err(e));
            return emitter.finish();
        }
    };
    for g in &graphs {
        match to {
            ConvertTo::Graph6 => emitter.line(&write_graph6(g)),
            ConvertTo::Edges => emitter.line(&g.to_edge_list()),
            ConvertTo::Json => emitter.line(&to_value(g).to_string()),
        }
    }
    emitter.finish()
}
