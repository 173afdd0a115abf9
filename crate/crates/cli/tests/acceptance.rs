//! Exit criteria for the construction, verifier and oracle.
//!
//! Run with `cargo test -p rainbow-ears-cli --test acceptance -- --nocapture`
//! to see one PASS/FAIL line per criterion.

#[path = "../../core/tests/support/mod.rs"]
mod support;

use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rainbow_ears::generators::{standard_corpus, FamilySpec};
use rainbow_ears::graph::induced_subgraph;
use rainbow_ears::*;

const CORPUS_SECONDS: u64 = 120;
const ORACLE_SECONDS: u64 = 60;
const ORACLE_MAX_EDGES: usize = 9;
const VERIFIER_MAX_EDGES: usize = 12;
const COLORINGS_PER_GRAPH: usize = 50;

struct Entry {
    label: String,
    spec: FamilySpec,
    graph: Graph,
    result: RcResult,
}

struct Outcome {
    id: u32,
    name: &'static str,
    problems: Vec<String>,
    note: String,
}

impl Outcome {
    fn new(id: u32, name: &'static str) -> Self {
        Outcome { id, name, problems: Vec::new(), note: String::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.problems.push(what());
        }
    }
}

fn is_tree(g: &Graph) -> bool {
    g.m() + 1 == g.n()
}

/// Criterion 1: colors_used <= bound and the verifier accepts, on every corpus graph.
fn bound_soundness() -> (Outcome, Vec<Entry>) {
    let mut out = Outcome::new(1, "bound soundness end-to-end");
    let start = Instant::now();
    let mut corpus = Vec::new();
    for (label, spec) in standard_corpus() {
        let graph = generate(&spec).unwrap();
        let result = build(&graph).unwrap_or_else(|e| panic!("{label}: {e}"));
        let bound = theorem2_bound(&graph).unwrap().bound;
        out.check(result.colors_used <= bound, || format!("{label}: {} colors > bound {bound}", result.colors_used));
        out.check(result.bound == bound, || format!("{label}: stage bound {} != {bound}", result.bound));
        let report = is_rainbow_connected(&graph, &result.coloring).unwrap();
        out.check(report.ok, || format!("{label}: not rainbow connected, e.g. {:?}", report.failures.first()));
        corpus.push(Entry { label, spec, graph, result });
    }
    let elapsed = start.elapsed();
    out.check(corpus.len() >= 200, || format!("corpus has only {} graphs", corpus.len()));
    out.check(elapsed < Duration::from_secs(CORPUS_SECONDS), || format!("took {elapsed:?}"));
    out.note = format!("{} graphs, {:.2?}", corpus.len(), elapsed);
    (out, corpus)
}

/// Criterion 2: bridgeless graphs stay within r(r+2).
fn bridgeless_regime(corpus: &[Entry]) -> Outcome {
    let mut out = Outcome::new(2, "bridgeless regime within r(r+2)");
    let mut count = 0;
    for e in corpus.iter().filter(|e| find_bridges(&e.graph).is_empty()) {
        count += 1;
        let r = e.result.radius;
        out.check(e.result.colors_used <= r * (r + 2), || format!("{}: {} > r(r+2)", e.label, e.result.colors_used));
        out.check(e.result.bound == r * (r + 2), || format!("{}: bound {} != r(r+2)", e.label, e.result.bound));
    }
    out.note = format!("{count} bridgeless graphs");
    out
}

/// Criterion 3: trees with m <= 9 and stars K_{1,q}, q <= 9, are colored optimally.
fn bridge_regime_equality(corpus: &[Entry]) -> Outcome {
    let mut out = Outcome::new(3, "bridge regime equality at oracle scale");
    let mut count = 0;
    for e in corpus.iter().filter(|e| is_tree(&e.graph) && e.graph.m() <= ORACLE_MAX_EDGES) {
        count += 1;
        let m = e.graph.m();
        let exact = exact_rc(&e.graph, OracleLimits::default()).unwrap();
        let sum_b: usize = e.result.b_sequence().iter().sum();
        out.check(exact == m && sum_b == m && e.result.colors_used == m, || {
            format!("{}: exact {exact}, m {m}, sum b {sum_b}, used {}", e.label, e.result.colors_used)
        });
    }
    for q in 1..=9 {
        let g = generate(&FamilySpec::Star { leaves: q }).unwrap();
        let r = build(&g).unwrap();
        let exact = exact_rc(&g, OracleLimits::default()).unwrap();
        let sum_b: usize = r.b_sequence().iter().sum();
        out.check(exact == q && sum_b == q && r.colors_used == q, || format!("K_1,{q}: exact {exact}, sum b {sum_b}"));
        count += 1;
    }
    out.note = format!("{count} trees and stars");
    out
}

/// Criterion 4: the stage bridge counts add up to all bridges, and the
/// low-link bridge finder agrees with edge removal.
fn corollary_one(corpus: &[Entry]) -> Outcome {
    let mut out = Outcome::new(4, "sum of b_i equals the bridge count");
    for e in corpus {
        let bridges = find_bridges(&e.graph);
        out.check(bridges == support::bridges_by_removal(&e.graph), || format!("{}: bridge finder disagrees", e.label));
        let sum_b: usize = e.result.b_sequence().iter().sum();
        out.check(sum_b == bridges.len(), || format!("{}: sum b {sum_b} != {}", e.label, bridges.len()));
        out.check(corollary1_check(&e.graph, &e.result.stages), || format!("{}: corollary check false", e.label));
    }
    out.note = format!("{} graphs", corpus.len());
    out
}

/// Criterion 5: ear lengths, pendant degrees and bridgelessness of the new
/// part, re-derived from the stage reports.
fn claim_invariants(corpus: &[Entry]) -> Outcome {
    let mut out = Outcome::new(5, "claim invariants on every stage");
    let (mut ears, mut pendants, mut stages) = (0, 0, 0);
    for e in corpus {
        let g = &e.graph;
        for s in &e.result.stages {
            stages += 1;
            for ear in &s.ears {
                ears += 1;
                out.check(ear.ear.len() <= 2 * s.k + 1, || {
                    format!("{} k={}: ear {:?} longer than 2k+1", e.label, s.k, ear.ear.vertices)
                });
            }
            let closed = support::closed_neighborhood(g, &s.core_in);
            let mut in_core = vec![false; g.n()];
            for &v in &s.core_in {
                in_core[v] = true;
            }
            for b in &s.bridges {
                pendants += 1;
                let x = if in_core[b.u] { b.v } else { b.u };
                let degree = g.neighbors(x).iter().filter(|&&w| closed[w]).count();
                out.check(degree == 1, || format!("{} k={}: pendant {x} has degree {degree}", e.label, s.k));
            }
            let sub = induced_subgraph(g, &s.core_out).unwrap();
            for local in support::bridges_by_removal(&sub.graph) {
                let edge = sub.lift(local);
                out.check(in_core[edge.u] || in_core[edge.v], || {
                    format!("{} k={}: absorbed edge {edge} is a bridge of the grown core", e.label, s.k)
                });
            }
        }
    }
    out.note = format!("{stages} stages, {ears} ears, {pendants} pendant bridges");
    out
}

/// Criterion 6: lower bound <= exact <= constructed <= bound, plus spot values.
fn oracle_sandwich(corpus: &[Entry]) -> Outcome {
    let mut out = Outcome::new(6, "oracle sandwich");
    let start = Instant::now();
    let mut count = 0;
    for e in corpus.iter().filter(|e| e.graph.m() <= ORACLE_MAX_EDGES) {
        count += 1;
        let lower = rc_lower_bound(&e.graph).unwrap();
        let exact = exact_rc(&e.graph, OracleLimits::default()).unwrap();
        let (used, bound) = (e.result.colors_used, e.result.bound);
        out.check(lower <= exact && exact <= used && used <= bound, || {
            format!("{}: {lower} <= {exact} <= {used} <= {bound} fails", e.label)
        });
    }
    let complete4 = Graph::from_edges(4, (0..4).flat_map(|a| (a + 1..4).map(move |b| (a, b)))).unwrap();
    let spots = [
        ("C_4", generate(&FamilySpec::Cycle { n: 4 }).unwrap(), 2),
        ("C_5", generate(&FamilySpec::Cycle { n: 5 }).unwrap(), 3),
        ("C_6", generate(&FamilySpec::Cycle { n: 6 }).unwrap(), 3),
        ("K_4", complete4, 1),
        ("P_4", generate(&FamilySpec::Path { n: 4 }).unwrap(), 3),
    ];
    for (name, g, expected) in spots {
        let exact = exact_rc(&g, OracleLimits::default()).unwrap();
        out.check(exact == expected, || format!("exact_rc({name}) = {exact}, expected {expected}"));
        out.check(support::some_t_coloring_by_enumeration(&g, exact), || format!("{name}: no {exact}-coloring by enumeration"));
        out.check(!support::some_t_coloring_by_enumeration(&g, exact - 1), || {
            format!("{name}: enumeration finds a {}-coloring", exact - 1)
        });
    }
    let elapsed = start.elapsed();
    out.check(elapsed < Duration::from_secs(ORACLE_SECONDS), || format!("oracle took {elapsed:?}"));
    out.note = format!("{count} graphs with m <= {ORACLE_MAX_EDGES}, 5 spot values, {elapsed:.2?}");
    out
}

/// Criterion 7: state search agrees with simple-path enumeration on random colorings.
fn verifier_completeness(corpus: &[Entry]) -> Outcome {
    let mut out = Outcome::new(7, "verifier completeness at desk scale");
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let (mut graphs, mut pairs, mut failing) = (0, 0, 0);
    for e in corpus.iter().filter(|e| e.graph.m() <= VERIFIER_MAX_EDGES) {
        graphs += 1;
        let g = &e.graph;
        for _ in 0..COLORINGS_PER_GRAPH {
            let palette = rng.random_range(1..=g.m() as u32);
            let coloring = Coloring::from_assignment(g.edges().iter().map(|&edge| (edge, rng.random_range(1..=palette))));
            let expected = support::failures_by_enumeration(g, &coloring);
            let report = is_rainbow_connected(g, &coloring).unwrap();
            pairs += report.checked_pairs;
            failing += expected.len();
            out.check(report.failures == expected, || format!("{}: disagreement under {coloring:?}", e.label));
        }
    }
    out.note = format!("{graphs} graphs x {COLORINGS_PER_GRAPH} colorings, {pairs} pairs, {failing} without rainbow paths");
    out
}

/// Criterion 8: two `color` runs produce identical files.
fn determinism(corpus: &[Entry]) -> Outcome {
    let mut out = Outcome::new(8, "byte-identical repeated color runs");
    let dir = tempfile::tempdir().unwrap();
    let picks: Vec<&Entry> = corpus
        .iter()
        .filter(|e| {
            matches!(
                e.spec,
                FamilySpec::RandomConnected { n: 40, .. }
                    | FamilySpec::CycleWithPendants { n: 20, .. }
                    | FamilySpec::Theta { .. }
                    | FamilySpec::RandomTree { n: 25, .. }
            )
        })
        .collect();
    for (i, e) in picks.iter().enumerate() {
        let input = dir.path().join(format!("g{i}.txt"));
        std::fs::write(&input, e.graph.to_edge_list()).unwrap();
        let mut outputs = Vec::new();
        for run in 0..2 {
            let coloring = dir.path().join(format!("g{i}.{run}.col"));
            let report = dir.path().join(format!("g{i}.{run}.toml"));
            let status = Command::new(env!("CARGO_BIN_EXE_rainbow-ears"))
                .args(["color", "--verify", "--input"])
                .arg(&input)
                .arg("--output")
                .arg(&coloring)
                .arg("--report")
                .arg(&report)
                .status()
                .unwrap();
            out.check(status.success(), || format!("{}: exit {status}", e.label));
            outputs.push((std::fs::read(&coloring).unwrap(), std::fs::read(&report).unwrap()));
        }
        out.check(outputs[0] == outputs[1], || format!("{}: outputs differ between runs", e.label));
        let lines = String::from_utf8(outputs[0].0.clone()).unwrap().lines().count();
        out.check(lines == e.graph.m(), || format!("{}: {lines} coloring lines for {} edges", e.label, e.graph.m()));
    }
    out.note = format!("{} inputs, 2 runs each", picks.len());
    out
}

#[test]
fn acceptance() {
    let (first, corpus) = bound_soundness();
    let outcomes = vec![
        first,
        bridgeless_regime(&corpus),
        bridge_regime_equality(&corpus),
        corollary_one(&corpus),
        claim_invariants(&corpus),
        oracle_sandwich(&corpus),
        verifier_completeness(&corpus),
        determinism(&corpus),
    ];
    let mut failed = Vec::new();
    for o in &outcomes {
        let verdict = if o.problems.is_empty() { "PASS" } else { "FAIL" };
        println!("[{verdict}] criterion {}: {} ({})", o.id, o.name, o.note);
        for p in o.problems.iter().take(5) {
            println!("        {p}");
        }
        if !o.problems.is_empty() {
            failed.push(o.id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
